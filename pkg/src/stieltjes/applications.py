"""Probabilistic and number-theoretic consequences.

Distributions are finite mixtures of atoms and piecewise-constant
densities, so their CDFs live in the same exact function class as
everything else.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .core import (NEG_INF, Interval, InvalidArgument, MonotoneFn, ParseError, as_rational,
                   fmt_ext, fmt_rational)
from .integral import common_discontinuities, ls_integral
from .inverse import InverseVersion, gen_inverse
from .young import BoundReport, t_functional

__all__ = [
    "DistSpec", "MedianSet", "cdf", "expected_cdf", "expected_cdf_closed_form",
    "median_set", "median_bound_check", "measure_young", "floor_left_limit",
    "summation_identity", "gupta_sum",
]


@dataclass(frozen=True)
class DistSpec:
    """A probability distribution: atoms plus a piecewise-constant density.

    ``atoms`` is a sequence of ``(location, probability)``; ``pieces`` a
    sequence of ``(start, end, density)`` with pairwise disjoint interiors.
    """
    atoms: tuple = ()
    pieces: tuple = ()

    def __post_init__(self):
        atoms = tuple(sorted((as_rational(x), as_rational(p)) for x, p in self.atoms))
        pieces = tuple(sorted((as_rational(a), as_rational(b), as_rational(d))
                              for a, b, d in self.pieces))
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "pieces", pieces)
        locs = [x for x, _ in atoms]
        if len(set(locs)) != len(locs):
            raise InvalidArgument("atom locations must be distinct")
        if any(p <= 0 for _, p in atoms):
            raise InvalidArgument("atom probabilities must be positive")
        for a, b, d in pieces:
            if not a < b:
                raise InvalidArgument(f"density piece [{a}, {b}] is degenerate")
            if d < 0:
                raise InvalidArgument("densities must be non-negative")
        for (_, b0, _), (a1, _, _) in zip(pieces, pieces[1:]):
            if a1 < b0:
                raise InvalidArgument("density pieces overlap")
        if self.total_mass != 1:
            raise InvalidArgument(f"total mass is {self.total_mass}, not 1")

    @property
    def total_mass(self) -> Fraction:
        return sum((p for _, p in self.atoms), Fraction(0)) + sum(
            ((b - a) * d for a, b, d in self.pieces), Fraction(0))

    def to_json(self) -> dict:
        return {
            "atoms": [[fmt_rational(x), fmt_rational(p)] for x, p in self.atoms],
            "pieces": [{"from": fmt_rational(a), "to": fmt_rational(b), "density": fmt_rational(d)}
                       for a, b, d in self.pieces],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DistSpec":
        if not isinstance(data, dict):
            raise ParseError("distribution JSON must be an object")
        try:
            atoms = [(as_rational(x), as_rational(p)) for x, p in data.get("atoms", [])]
        except (TypeError, ValueError) as exc:
            raise ParseError(f"field 'atoms': {exc}") from None
        pieces = []
        for n, piece in enumerate(data.get("pieces", [])):
            try:
                pieces.append((as_rational(piece["from"]), as_rational(piece["to"]),
                               as_rational(piece["density"])))
            except KeyError as exc:
                raise ParseError(f"field 'pieces[{n}]': missing {exc}") from None
            except ParseError as exc:
                raise ParseError(f"field 'pieces[{n}]': {exc}") from None
        try:
            return cls(tuple(atoms), tuple(pieces))
        except InvalidArgument as exc:
            raise ParseError(str(exc)) from None


@dataclass(frozen=True)
class MedianSet:
    lo: Fraction
    hi: Fraction

    def __contains__(self, m) -> bool:
        return self.lo <= m <= self.hi


def cdf(dist: DistSpec) -> MonotoneFn:
    """Right-continuous distribution function G(x) = P(Y <= x)."""
    atom_at = dict(dist.atoms)
    xs = sorted(set(atom_at) | {a for a, _, _ in dist.pieces} | {b for _, b, _ in dist.pieces})
    density = {}
    for a, b, d in dist.pieces:
        for x in xs:
            if a <= x < b:
                density[x] = d
    knots = []
    level = Fraction(0)
    for i, x in enumerate(xs):
        if i > 0:
            level += density.get(xs[i - 1], Fraction(0)) * (x - xs[i - 1])
        after = level + atom_at.get(x, Fraction(0))
        knots.append((x, level, after, after))
        level = after
    return MonotoneFn.from_knots(knots)


def expected_cdf(dist: DistSpec) -> Fraction:
    """E F(X) for X ~ dist, as the integral of F against dF over the line."""
    F = cdf(dist)
    return ls_integral(F, F, Interval.real_line())


def expected_cdf_closed_form(dist: DistSpec) -> Fraction:
    return Fraction(1, 2) + sum((p * p for _, p in dist.atoms), Fraction(0)) / 2


def median_set(dist: DistSpec) -> MedianSet:
    F = cdf(dist)
    half = Fraction(1, 2)
    return MedianSet(gen_inverse(F, half, InverseVersion.SMALLEST),
                     gen_inverse(F, half, InverseVersion.LARGEST))


@dataclass(frozen=True)
class MedianBound:
    m_hi: Fraction
    bound: Fraction | float
    holds: bool
    expected_cdf: Fraction

    def to_json(self) -> dict:
        return {"m_hi": fmt_rational(self.m_hi), "bound": fmt_ext(self.bound),
                "holds": self.holds, "expected_cdf": fmt_rational(self.expected_cdf)}


def median_bound_check(dist: DistSpec) -> MedianBound:
    """Check that every median is at most the largest inverse of F at E F(X).

    When the distribution is a single atom, E F(X) = 1 is the top of the
    range and the largest inverse there is +inf.
    """
    F = cdf(dist)
    ef = expected_cdf(dist)
    med = median_set(dist)
    bound = gen_inverse(F, ef, InverseVersion.LARGEST)
    return MedianBound(med.hi, bound, med.hi <= bound, ef)


def measure_young(dist: DistSpec, f: MonotoneFn, s, t) -> BoundReport:
    """Young bounds for T(f, G; (-inf, t], (-inf, s]) with G the CDF of ``dist``."""
    s, t = as_rational(s), as_rational(t)
    if s > t:
        raise InvalidArgument(f"need s <= t, got s={s}, t={t}")
    G = cdf(dist)
    big = Interval.make(NEG_INF, t, False, True)
    small = Interval.make(NEG_INF, s, False, True)

    def atom_sum(interval):
        return sum(((f(d) - f.left_limit(d)) * G.jump_at(d).mass
                    for d in common_discontinuities(f, G, interval)), Fraction(0))

    fs, ft = f.right_limit(s), f.right_limit(t)
    return BoundReport(
        value=t_functional(f, G, big, small),
        lower=fs * G(t) + atom_sum(small),
        upper=ft * (G(t) - G(s)) + fs * G(s) + atom_sum(big),
        context={"s": fmt_rational(s), "t": fmt_rational(t)},
    )


# --------------------------------------------------------------------------
# Floor sums
# --------------------------------------------------------------------------

def _floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def floor_left_limit(f: MonotoneFn, x) -> int:
    """lim of floor(f(y)) as y increases to x.

    Differs from floor(f(x-)) exactly when f(x-) is an integer approached
    strictly from below.
    """
    x = as_rational(x)
    v = f.left_limit(x)
    fl = _floor(v)
    if v.denominator == 1 and f.slope_left_of(x) > 0:
        return fl - 1
    return fl


def _affine(offset: Fraction, scale: Fraction) -> tuple[int, int, int]:
    """Integers (P, Q, D) with offset + scale * k == (P * k + Q) / D."""
    D = offset.denominator * scale.denominator
    return scale.numerator * offset.denominator, offset.numerator * scale.denominator, D


def _floor_run(P: int, Q: int, D: int, k0: int, k1: int) -> tuple[int, int]:
    """Sum of floor((P k + Q) / D) over k0 <= k <= k1, and how many are exact."""
    total = exact = 0
    for k in range(k0, k1 + 1):
        q, r = divmod(P * k + Q, D)
        total += q
        exact += r == 0
    return total, exact


def _sum_floor_values(f: MonotoneFn, m: int, n: int) -> tuple[int, int]:
    """Sum of floor f(j) over integers m <= j <= n, one linear piece at a time.

    Also returns the total jump of floor(f) at those integers.
    """
    xs = f.breakpoints
    below = min(n, math.ceil(xs[0]) - 1) - m + 1
    above = n - max(m, math.floor(xs[-1]) + 1) + 1
    total = max(below, 0) * _floor(f.lower_limit) + max(above, 0) * _floor(f.upper_limit)
    jumps = 0
    for i, x in enumerate(xs):
        if x.denominator == 1 and m <= x <= n:
            total += _floor(f._at[i])
            jumps += _floor(f._at[i]) - floor_left_limit(f, x)
        if i == len(xs) - 1:
            break
        lo, hi = max(m, math.floor(x) + 1), min(n, math.ceil(xs[i + 1]) - 1)
        if lo <= hi:
            slope = f.slopes[i]
            P, Q, D = _affine(f._right[i] - slope * x, slope)
            run, exact = _floor_run(P, Q, D, lo, hi)
            total += run
            if slope > 0:
                jumps += exact
    return total, jumps


def _inverse_floors(f: MonotoneFn, k_lo: int, k_hi: int) -> tuple[int, int]:
    """Sum of floor f^{-1}(k) with the smallest inverse, and how many are integers."""
    total = count = 0
    xs = f.breakpoints
    k = k_lo
    for i, x in enumerate(xs):
        if k > k_hi:
            break
        # levels in (left_i, right_i] all invert to x_i
        top = min(k_hi, math.floor(f._right[i]))
        if top >= k and f._left[i] < k:
            n_hit = top - k + 1
            total += _floor(x) * n_hit
            count += n_hit if x.denominator == 1 else 0
            k = top + 1
        if i == len(xs) - 1 or f.slopes[i] == 0:
            continue
        # levels in (right_i, left_{i+1}] on the increasing piece
        top = min(k_hi, math.floor(f._left[i + 1]))
        if top >= k:
            slope = f.slopes[i]
            P, Q, D = _affine(x - f._right[i] / slope, 1 / slope)
            s, e = _floor_run(P, Q, D, k, top)
            total += s
            count += e
            k = top + 1
    if k <= k_hi:
        raise InvalidArgument(f"level {k} is outside the range of f")
    return total, count


@dataclass(frozen=True)
class SummationReport:
    lhs_sum: int
    rhs: int
    K: int
    K_from_jumps: int

    @property
    def holds(self) -> bool:
        return self.lhs_sum == self.rhs and self.K == self.K_from_jumps

    def to_json(self) -> dict:
        return {"lhs": self.lhs_sum, "rhs": self.rhs, "K": self.K,
                "K_from_jumps": self.K_from_jumps, "holds": self.holds}


def summation_identity(f: MonotoneFn, m: int, n: int) -> SummationReport:
    """Both sides of the floor-sum identity for a right-continuous f on [m, n].

    Left side: sum_{j=m}^{n} floor f(j) + sum over k in ([f](m-), [f](n+)]
    of floor f^{-1}(k), with the smallest inverse.  Right side:
    n [f](n+) - (m-1) [f](m-) + K, where K counts the k whose inverse is an
    integer.  ``K_from_jumps`` recounts K as the total jump of floor(f) at
    the integers m..n.
    """
    if not (isinstance(m, int) and isinstance(n, int)):
        raise InvalidArgument("m and n must be integers")
    if m > n:
        raise InvalidArgument(f"need m <= n, got m={m}, n={n}")
    if not f.is_right_continuous():
        raise InvalidArgument("f must be right-continuous")
    top = _floor(f.right_limit(n))
    bottom = floor_left_limit(f, m)
    first, k_jumps = _sum_floor_values(f, m, n)
    second, K = _inverse_floors(f, bottom + 1, top)
    rhs = n * top - (m - 1) * bottom + K
    return SummationReport(first + second, rhs, K, k_jumps)


def gupta_sum(f: MonotoneFn, n: int) -> tuple[int, int]:
    """The m = 1 case for continuous strictly increasing f with 0 < f(1) <= 1.

    Here K counts the j in [1, n] with f(j) an integer.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidArgument("n must be a positive integer")
    xs = f.breakpoints
    if xs[0] > 0 or xs[-1] < n:
        raise InvalidArgument(f"f must be strictly increasing on [0, {n}]; extend its breakpoints")
    if any(0 <= d <= n for d in f.jump_locations):
        raise InvalidArgument("f must be continuous")
    for i, slope in enumerate(f.slopes):
        if xs[i] < n and xs[i + 1] > 0 and slope <= 0:
            raise InvalidArgument(f"f is not strictly increasing on [{xs[i]}, {xs[i + 1]}]")
    if f(0) < 0 or not 0 < f(1) <= 1:
        raise InvalidArgument("need f >= 0 on [0, inf) and 0 < f(1) <= 1")
    top = _floor(f(n))
    lhs = sum(_floor(f(j)) for j in range(1, n + 1))
    lhs += sum(_floor(gen_inverse(f, k)) for k in range(1, top + 1))
    K = sum(1 for j in range(1, n + 1) if f(j).denominator == 1)
    return lhs, n * top + K
