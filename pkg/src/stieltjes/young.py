"""Young-type functionals and their two-sided bounds.

The central object is

    T(f, g; I, J) = int_I f dg + int_J g df,      J a subinterval of I,

with the classical Young expression as the special case g(x) = x,
I = [a, t], J = [a, s].  Every function here returns exact rationals;
bounds are packaged in a :class:`BoundReport`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import (Interval, InvalidArgument, MonotoneFn, as_rational, compose,
                   fmt_rational, identity_on, inf_sup_over)
from .integral import a_term, common_discontinuities, ls_integral
from .inverse import inverse_fn
from .measure import interval_image

__all__ = [
    "BoundReport", "t_functional", "t_functional_substituted", "t_lower_bound",
    "t_upper_bound", "t_upper_bound_dual", "t_bounds", "closed_interval_bounds",
    "s_functional", "s_functional_bounds", "s_upper_from_swapped_lower", "classical_value", "classical_bounds",
]


@dataclass(frozen=True)
class BoundReport:
    value: Fraction
    lower: Fraction
    upper: Fraction
    context: dict = field(default_factory=dict)
    extras: dict = field(default_factory=dict)

    @property
    def lower_tight(self) -> bool:
        return self.lower == self.value

    @property
    def upper_tight(self) -> bool:
        return self.upper == self.value

    @property
    def holds(self) -> bool:
        return self.lower <= self.value <= self.upper

    def to_json(self) -> dict:
        out = {
            "value": fmt_rational(self.value),
            "lower": fmt_rational(self.lower),
            "upper": fmt_rational(self.upper),
            "lower_tight": self.lower_tight,
            "upper_tight": self.upper_tight,
            "holds": self.holds,
        }
        out.update({k: fmt_rational(v) for k, v in self.extras.items()})
        out["context"] = self.context
        return out


def _check_nested(interval: Interval, sub: Interval, need_nonempty: bool = False):
    if not sub.issubset(interval):
        raise InvalidArgument(f"J = {sub} is not contained in I = {interval}")
    if need_nonempty and sub.empty:
        raise InvalidArgument("the bounds need a nonempty J")


def _check_order(a: Fraction, s: Fraction, t: Fraction):
    if not a <= s <= t:
        raise InvalidArgument(f"need a <= s <= t, got a={a}, s={s}, t={t}")


def t_functional(f: MonotoneFn, g: MonotoneFn, interval: Interval, sub: Interval) -> Fraction:
    _check_nested(interval, sub)
    return ls_integral(f, g, interval) + ls_integral(g, f, sub)


def t_functional_substituted(f: MonotoneFn, g: MonotoneFn, interval: Interval,
                             sub: Interval) -> Fraction:
    """Same value, with the second integral taken as int over J_f of g(f^{-1}(u)) du."""
    _check_nested(interval, sub)
    img = interval_image(f, sub)
    second = Fraction(0)
    if img.lee < img.ree:
        second = ls_integral(compose(g, inverse_fn(f)), identity_on(img.lee, img.ree),
                             Interval.closed(img.lee, img.ree))
    return ls_integral(f, g, interval) + second


def t_lower_bound(f: MonotoneFn, g: MonotoneFn, interval: Interval, sub: Interval) -> Fraction:
    _check_nested(interval, sub, need_nonempty=True)
    gi, gj = interval_image(g, interval), interval_image(g, sub)
    return (t_functional(f, g, sub, sub)
            + inf_sup_over(f, interval, "f_min") * (gj.lee - gi.lee)
            + inf_sup_over(f, sub, "f_bar") * (gi.ree - gj.ree))


def t_upper_bound(f: MonotoneFn, g: MonotoneFn, interval: Interval, sub: Interval) -> Fraction:
    _check_nested(interval, sub, need_nonempty=True)
    fi, fj = interval_image(f, interval), interval_image(f, sub)
    return (t_functional(f, g, interval, interval)
            - inf_sup_over(g, interval, "f_min") * (fj.lee - fi.lee)
            - inf_sup_over(g, sub, "f_bar") * (fi.ree - fj.ree))


def t_upper_bound_dual(f: MonotoneFn, g: MonotoneFn, interval: Interval, sub: Interval) -> Fraction:
    """Upper bound obtained from the lower bound for (g, f).

    Uses T(f,g;I,J) + T(g,f;I,J) = T(f,g;I,I) + T(f,g;J,J).
    """
    return (t_functional(f, g, interval, interval) + t_functional(f, g, sub, sub)
            - t_lower_bound(g, f, interval, sub))


def t_bounds(f: MonotoneFn, g: MonotoneFn, interval: Interval, sub: Interval) -> BoundReport:
    return BoundReport(
        value=t_functional(f, g, interval, sub),
        lower=t_lower_bound(f, g, interval, sub),
        upper=t_upper_bound(f, g, interval, sub),
        context={"I": str(interval), "J": str(sub)},
    )


def closed_interval_bounds(f: MonotoneFn, g: MonotoneFn, a, s, t) -> BoundReport:
    """Bounds for T(f, g; [a, t], [a, s]) written through endpoint limits."""
    a, s, t = as_rational(a), as_rational(s), as_rational(t)
    _check_order(a, s, t)
    big, small = Interval.closed(a, t), Interval.closed(a, s)
    fa, ga = f.left_limit(a), g.left_limit(a)
    fs, gs = f.right_limit(s), g.right_limit(s)
    ft, gt = f.right_limit(t), g.right_limit(t)
    jumps_s = sum((a_term(f, g, d) for d in common_discontinuities(f, g, small)), Fraction(0))
    jumps_t = sum((a_term(f, g, d) for d in common_discontinuities(f, g, big)), Fraction(0))
    return BoundReport(
        value=t_functional(f, g, big, small),
        lower=fs * gt - fa * ga + jumps_s,
        upper=ft * gt + fs * gs - fa * ga - ft * gs + jumps_t,
        context={"a": fmt_rational(a), "s": fmt_rational(s), "t": fmt_rational(t)},
    )


def _require_continuous(fn: MonotoneFn, lo: Fraction, hi: Fraction, name: str):
    for d in fn.jump_locations:
        if lo <= d <= hi:
            raise InvalidArgument(f"{name} jumps at {d} inside [{lo}, {hi}]")


def s_functional(f: MonotoneFn, g: MonotoneFn, a, s, t) -> Fraction:
    a, s, t = as_rational(a), as_rational(s), as_rational(t)
    return ls_integral(f, g, Interval.closed(a, t)) + ls_integral(g, f, Interval.closed(a, s))


def s_functional_bounds(f: MonotoneFn, g: MonotoneFn, a, s, t) -> BoundReport:
    """Two-sided bound for S(f, g; a, s, t) with continuous f and g."""
    a, s, t = as_rational(a), as_rational(s), as_rational(t)
    _check_order(a, s, t)
    _require_continuous(f, a, t, "f")
    _require_continuous(g, a, t, "g")
    fa, fs, ft = f(a), f(s), f(t)
    ga, gs, gt = g(a), g(s), g(t)
    return BoundReport(
        value=s_functional(f, g, a, s, t),
        lower=gt * fs - ga * fa,
        upper=gt * ft + gs * fs - ga * fa - gs * ft,
        context={"a": fmt_rational(a), "s": fmt_rational(s), "t": fmt_rational(t)},
    )


def s_upper_from_swapped_lower(f: MonotoneFn, g: MonotoneFn, a, s, t) -> Fraction:
    """Upper bound for S(f,g) derived from the lower bound applied to S(g,f)."""
    a, s, t = as_rational(a), as_rational(s), as_rational(t)
    swapped_lower = s_functional_bounds(g, f, a, s, t).lower
    return f(t) * g(t) + f(s) * g(s) - 2 * f(a) * g(a) - swapped_lower


def classical_value(f: MonotoneFn, a, s, t) -> Fraction:
    """int_a^t f(x) dx + int_{f(a)}^{f(s)} f^{-1}(y) dy."""
    a, s, t = as_rational(a), as_rational(s), as_rational(t)
    first = ls_integral(f, identity_on(a, t), Interval.closed(a, t))
    lo, hi = f(a), f(s)
    second = Fraction(0)
    if lo < hi:
        second = ls_integral(inverse_fn(f), identity_on(lo, hi), Interval.closed(lo, hi))
    return first + second


def classical_bounds(f: MonotoneFn, a, s, t) -> BoundReport:
    """Classical Young functional with the Merkle and Minguzzi upper bounds.

    ``upper`` holds the Minguzzi bound, the tighter of the two; both are
    also reported in ``extras``.
    """
    a, s, t = as_rational(a), as_rational(s), as_rational(t)
    if not (s > a and t > a):
        raise InvalidArgument("need s > a and t > a")
    _check_order(a, s, t)
    _require_continuous(f, a, t, "f")
    xs = f.breakpoints
    if xs[0] > a or xs[-1] < t:
        raise InvalidArgument("f must be strictly increasing on [a, t]; extend its breakpoints")
    for i, slope in enumerate(f.slopes):
        if xs[i] < t and xs[i + 1] > a and slope <= 0:
            raise InvalidArgument(f"f is not strictly increasing on [{xs[i]}, {xs[i + 1]}]")
    fa, fs, ft = f(a), f(s), f(t)
    minguzzi = t * ft + s * fs - a * fa - s * ft
    merkle = fa * (t - a) + a * (fs - fa) + max((t - a) * (ft - fa), (s - a) * (fs - fa))
    return BoundReport(
        value=classical_value(f, a, s, t),
        lower=t * fs - a * fa,
        upper=minguzzi,
        context={"a": fmt_rational(a), "s": fmt_rational(s), "t": fmt_rational(t)},
        extras={"minguzzi": minguzzi, "merkle": merkle},
    )

