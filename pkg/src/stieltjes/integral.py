"""Closed-form Lebesgue-Stieltjes integrals on the piecewise-linear class.

``ls_integral(f, g, I)`` splits the measure of ``g`` on ``I`` into an
absolutely continuous part (slope times Lebesgue measure on each linear
piece) and atoms at the jumps of ``g``.  On every sub-piece where both
functions are linear the integral is an exact trapezoid; an atom at ``d``
contributes ``f(d) * (g(d+) - g(d-))`` with the *point* value of ``f``.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction

from .core import Interval, InvalidArgument, MonotoneFn, as_rational, compose, identity_on
from .inverse import InverseVersion, inverse_fn
from .measure import interval_image

__all__ = [
    "ls_integral", "change_of_variables", "a_term", "common_discontinuities",
    "boundary_term", "PartsReport", "parts",
]


def ls_integral(f: MonotoneFn, g: MonotoneFn, interval: Interval) -> Fraction:
    """Exact value of the integral of ``f`` against ``dg`` over ``interval``."""
    if interval.empty:
        return Fraction(0)
    total = Fraction(0)
    for j in g.jumps:
        if j.location in interval:
            total += f(j.location) * j.mass
    if interval.is_singleton:
        return total

    gx, fx = g.breakpoints, f.breakpoints
    first = max(bisect_right(gx, interval.left) - 1, 0)
    last = min(bisect_left(gx, interval.right), len(gx) - 1)
    for i in range(first, last):
        slope = g.slopes[i]
        if slope == 0:
            continue
        a = max(gx[i], interval.left)
        b = min(gx[i + 1], interval.right)
        if a >= b:
            continue
        pts = [a, *fx[bisect_right(fx, a):bisect_left(fx, b)], b]
        acc = Fraction(0)
        for p, q in zip(pts, pts[1:]):
            acc += (q - p) * (f.right_limit(p) + f.left_limit(q))
        total += slope * acc / 2
    return total


def change_of_variables(f: MonotoneFn, g: MonotoneFn, interval: Interval,
                        version=InverseVersion.SMALLEST) -> tuple[Fraction, Fraction]:
    """Both sides of the substitution y = g(x).

    Left: the integral of ``f dg`` over ``interval``.  Right: the Lebesgue
    integral of ``f(g^{-1}(y))`` over the image interval of ``interval``.
    """
    lhs = ls_integral(f, g, interval)
    img = interval_image(g, interval)
    if img.lee == img.ree:
        return lhs, Fraction(0)
    composite = compose(f, inverse_fn(g, version))
    rhs = ls_integral(composite, identity_on(img.lee, img.ree), Interval.closed(img.lee, img.ree))
    return lhs, rhs


def a_term(f: MonotoneFn, g: MonotoneFn, d) -> Fraction:
    """Jump correction at ``d``; zero unless both functions jump there."""
    d = as_rational(d)
    fl, fa, fr = f.left_limit(d), f(d), f.right_limit(d)
    gl, ga, gr = g.left_limit(d), g(d), g.right_limit(d)
    return fa * (gr - gl) + ga * (fr - fl) - fr * gr + fl * gl


def common_discontinuities(f: MonotoneFn, g: MonotoneFn, interval: Interval) -> list[Fraction]:
    shared = set(f.jump_locations) & set(g.jump_locations)
    return sorted(d for d in shared if d in interval)


def boundary_term(f: MonotoneFn, g: MonotoneFn, interval: Interval) -> Fraction:
    """The fg-measure of ``interval`` written through endpoint limits.

    Closed endpoints use the outer limit, open endpoints the inner one,
    exactly as for the image interval.
    """
    if interval.empty:
        return Fraction(0)
    lside = "left" if interval.left_closed else "right"
    rside = "right" if interval.right_closed else "left"
    lower = f.limit(interval.left, lside) * g.limit(interval.left, lside)
    upper = f.limit(interval.right, rside) * g.limit(interval.right, rside)
    return upper - lower


@dataclass(frozen=True)
class PartsReport:
    lhs: Fraction
    boundary: Fraction
    jump_sum: Fraction
    common_discontinuities: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.lhs == self.boundary + self.jump_sum


def parts(f: MonotoneFn, g: MonotoneFn, interval: Interval) -> PartsReport:
    """Integration by parts with the jump corrections at shared jumps."""
    if interval.empty:
        raise InvalidArgument("integration by parts needs a nonempty interval")
    lhs = ls_integral(f, g, interval) + ls_integral(g, f, interval)
    ds = common_discontinuities(f, g, interval)
    jump_sum = sum((a_term(f, g, d) for d in ds), Fraction(0))
    return PartsReport(lhs, boundary_term(f, g, interval), jump_sum, ds)
