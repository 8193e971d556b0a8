"""Lebesgue-Stieltjes measure of intervals through their image under g."""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .core import Interval, MonotoneFn

__all__ = ["IntervalImage", "interval_image", "ls_measure", "atoms_in", "continuous_mass"]


@dataclass(frozen=True)
class IntervalImage:
    """Closed interval ``[lee, ree]`` of g-values attached to an interval."""
    lee: Fraction
    ree: Fraction

    @property
    def length(self) -> Fraction:
        return self.ree - self.lee


def interval_image(g: MonotoneFn, interval: Interval) -> IntervalImage:
    """Endpoints of I_g.

    A closed endpoint takes the outer one-sided limit of ``g``, an open
    endpoint the inner one; infinite endpoints take g(-inf) / g(+inf).
    The empty interval maps to [0, 0].
    """
    if interval.empty:
        return IntervalImage(Fraction(0), Fraction(0))
    lee = g.limit(interval.left, "left" if interval.left_closed else "right")
    ree = g.limit(interval.right, "right" if interval.right_closed else "left")
    return IntervalImage(lee, ree)


def ls_measure(g: MonotoneFn, interval: Interval) -> Fraction:
    return interval_image(g, interval).length


def atoms_in(g: MonotoneFn, interval: Interval) -> list[tuple[Fraction, Fraction]]:
    """Jumps of ``g`` inside ``interval`` as ``(location, mass)``, ascending."""
    return [(j.location, j.mass) for j in g.jumps if j.location in interval]


def continuous_mass(g: MonotoneFn, interval: Interval) -> Fraction:
    """Mass that the continuous part of ``g`` puts on ``interval``."""
    if interval.empty or interval.is_singleton:
        return Fraction(0)
    xs = g.breakpoints
    total = Fraction(0)
    lo_i = max(bisect_right(xs, interval.left) - 1, 0)
    hi_i = min(bisect_left(xs, interval.right), len(xs) - 1)
    for i in range(lo_i, hi_i):
        a = max(xs[i], interval.left)
        b = min(xs[i + 1], interval.right)
        if a < b:
            total += g.slopes[i] * (b - a)
    return total
