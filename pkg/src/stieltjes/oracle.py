"""Brute-force checks that share no code with the closed-form engine.

``partition_sum`` evaluates the dyadic simple-function approximation of a
Lebesgue integral: the y-axis is cut into bins [(k-1)/2^n, k/2^n), the
preimage of each bin under ``f`` is an interval (f is monotone), and its
mass is read off the image interval of ``g``.  Level sets are computed by
a plain scan over the knots of ``f`` rather than through the inverse module.

``lemleb_check`` estimates Leb{y : g^{-1}(y) in I} on a midpoint grid.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import EMPTY, INF, NEG_INF, Interval, InvalidArgument, MonotoneFn
from .inverse import InverseVersion, gen_inverse
from .measure import interval_image, ls_measure

__all__ = ["PartitionScheme", "level_set", "partition_sum", "lemleb_check", "lemleb_bound"]


@dataclass(frozen=True)
class PartitionScheme:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidArgument("refinement level must be >= 1")

    @property
    def width(self) -> Fraction:
        return Fraction(1, 2 ** self.n)

    @property
    def bins(self) -> int:
        return self.n * 2 ** self.n

    def bin(self, k: int) -> tuple[Fraction, Fraction]:
        return Fraction(k - 1, 2 ** self.n), Fraction(k, 2 ** self.n)


def level_set(f: MonotoneFn, c: Fraction, strict: bool = False) -> Interval:
    """{x : f(x) >= c}, or {x : f(x) > c} when ``strict``; always a right ray."""
    def above(v):
        return v > c if strict else v >= c

    knots = f.knots()
    if above(knots[0][1]):
        return Interval.real_line()
    for i, (x, left, at, right) in enumerate(knots):
        if above(at):
            return Interval.make(x, INF, True, False)
        if above(right):
            return Interval.make(x, INF, False, False)
        if i + 1 < len(knots):
            x1, left1 = knots[i + 1][0], knots[i + 1][1]
            if above(left1) and left1 != c:
                # crossing inside the open piece (x, x1)
                slope = (left1 - right) / (x1 - x)
                p = x + (c - right) / slope
                if p > x:
                    return Interval.make(p, INF, not strict, False)
                return Interval.make(x, INF, False, False)
    return EMPTY


def _complement_ray(ray: Interval) -> Interval:
    """Complement of a right ray, a left ray."""
    if ray.empty:
        return Interval.real_line()
    if ray.left == NEG_INF:
        return EMPTY
    return Interval.make(NEG_INF, ray.left, False, not ray.left_closed)


def _preimage(f: MonotoneFn, lo: Fraction, hi: Fraction, closed_low: bool = True) -> Interval:
    """{x : lo <= f(x) < hi}, or {x : lo < f(x) <= hi} when not ``closed_low``."""
    if closed_low:
        return level_set(f, lo).intersect(_complement_ray(level_set(f, hi)))
    return level_set(f, lo, strict=True).intersect(_complement_ray(level_set(f, hi, strict=True)))


def _range_on(f: MonotoneFn, interval: Interval) -> tuple[Fraction, Fraction]:
    img = interval_image(f, interval)
    return img.lee, img.ree


def _positive_part_sum(f, g, interval, n, sign):
    scheme = PartitionScheme(n)
    lo_v, hi_v = _range_on(f, interval)
    if sign < 0:
        lo_v, hi_v = -hi_v, -lo_v
    if hi_v <= 0:
        return Fraction(0)
    scale = 2 ** n
    k_first = max(2, math.floor(max(lo_v, 0) * scale) + 1)
    k_last = min(scheme.bins, math.floor(hi_v * scale) + 1)
    total = Fraction(0)
    for k in range(k_first, k_last + 1):
        y0, y1 = scheme.bin(k)
        if sign > 0:
            pre = _preimage(f, y0, y1)
        else:
            pre = _preimage(f, -y1, -y0, closed_low=False)
        piece = pre.intersect(interval)
        if not piece.empty:
            total += y0 * ls_measure(g, piece)
    return total


def partition_sum(f: MonotoneFn, g: MonotoneFn, interval: Interval, n: int) -> Fraction:
    """Dyadic simple-function sum at level ``n`` for the integral of f dg over I.

    Negative values of ``f`` are handled through f = f+ - f-.
    """
    if interval.empty:
        return Fraction(0)
    return _positive_part_sum(f, g, interval, n, 1) - _positive_part_sum(f, g, interval, n, -1)


def lemleb_check(g: MonotoneFn, interval: Interval, version=InverseVersion.SMALLEST,
                 grid: int = 1024) -> tuple[Fraction, Fraction]:
    """Grid estimate of Leb{y : g^{-1}(y) in I} against the measure of I.

    Samples the cell midpoints of a uniform grid over [g(-inf), g(+inf)].
    """
    if grid < 1:
        raise InvalidArgument("grid must be positive")
    target = ls_measure(g, interval)
    lo, hi = g.lower_limit, g.upper_limit
    if interval.empty or lo == hi:
        return Fraction(0), target
    h = (hi - lo) / grid
    hits = 0
    for k in range(grid):
        y = lo + (2 * k + 1) * h / 2
        if gen_inverse(g, y, version) in interval:
            hits += 1
    return hits * h, target


def lemleb_bound(g: MonotoneFn, grid: int) -> Fraction:
    """Predicted worst-case discrepancy of :func:`lemleb_check`."""
    step = (g.upper_limit - g.lower_limit) / grid
    flats = sum(1 for s in g.slopes if s == 0)
    return step + (flats + len(g.jumps)) * step
