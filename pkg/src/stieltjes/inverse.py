"""Generalized inverses of non-decreasing functions.

For a non-decreasing ``g`` and a level ``y`` every point of the bracket

    sup{t : g(t) < y}  <=  x  <=  inf{t : g(t) > y}

is an admissible inverse value.  The bracket is a single point unless
``g`` is constant equal to ``y`` on an interval, in which case a *version*
picks a point from its closure.
"""
from __future__ import annotations

import enum
from bisect import bisect_left, bisect_right

from .core import INF, NEG_INF, ExtReal, MonotoneFn, OutOfRange, as_rational

__all__ = ["InverseVersion", "bracket", "gen_inverse", "inverse_fn"]


class InverseVersion(str, enum.Enum):
    SMALLEST = "smallest"
    LARGEST = "largest"
    MIDPOINT = "midpoint"


def _version(v) -> InverseVersion:
    return v if isinstance(v, InverseVersion) else InverseVersion(v)


def _lower_end(g: MonotoneFn, y: Fraction) -> ExtReal:
    # sup{t : g(t) < y}, equivalently inf{t : g(t) >= y}
    vals = g._values
    k = bisect_left(vals, y)
    if k == 0:
        return NEG_INF
    if k == len(vals):
        return INF
    i = k // 2
    if k % 2:
        return g.breakpoints[i]
    return g.breakpoints[i - 1] + (y - g._right[i - 1]) / g.slopes[i - 1]


def _upper_end(g: MonotoneFn, y: Fraction) -> ExtReal:
    # inf{t : g(t) > y}, equivalently sup{t : g(t) <= y}
    vals = g._values
    k = bisect_right(vals, y)
    if k == len(vals):
        return INF
    if k == 0:
        return NEG_INF
    i = k // 2
    if k % 2:
        return g.breakpoints[i]
    return g.breakpoints[i - 1] + (y - g._right[i - 1]) / g.slopes[i - 1]


def bracket(g: MonotoneFn, y) -> tuple[ExtReal, ExtReal]:
    """The closed bracket of admissible inverse values at ``y``."""
    y = as_rational(y)
    return _lower_end(g, y), _upper_end(g, y)


def gen_inverse(g: MonotoneFn, y, version=InverseVersion.SMALLEST) -> ExtReal:
    """A generalized inverse of ``g`` at ``y``.

    Raises OutOfRange when ``y`` lies outside ``[g(-inf), g(+inf)]``.  At the
    two range ends the bracket is unbounded on one side, so the smallest
    version returns ``-inf`` at ``g(-inf)`` and the largest ``+inf`` at
    ``g(+inf)``.
    """
    y = as_rational(y)
    if y < g.lower_limit or y > g.upper_limit:
        raise OutOfRange(f"{y} is outside the range [{g.lower_limit}, {g.upper_limit}]")
    lo, hi = bracket(g, y)
    v = _version(version)
    if v is InverseVersion.SMALLEST:
        return lo
    if v is InverseVersion.LARGEST:
        return hi
    if lo == NEG_INF or hi == INF:
        return lo if lo == NEG_INF else hi
    return (lo + hi) / 2


def inverse_fn(g: MonotoneFn, version=InverseVersion.SMALLEST) -> MonotoneFn:
    """Materialise a version of g^{-1} as a MonotoneFn on ``[g(-inf), g(+inf)]``.

    Flats of ``g`` become jumps of the inverse and jumps of ``g`` become
    flats.  At a jump height the left limit is the smallest version and the
    right limit the largest; the point value follows ``version``.  The two
    range ends are clamped to finite values, which affects nothing measured
    against Lebesgue measure.
    """
    v = _version(version)
    levels = sorted(set(g._values))
    if len(levels) == 1:
        return MonotoneFn([levels[0]], [], g.breakpoints[0])
    knots = []
    last = len(levels) - 1
    for n, y in enumerate(levels):
        lo, hi = _lower_end(g, y), _upper_end(g, y)
        if n == 0:
            lo = hi
        elif n == last:
            hi = lo
        if v is InverseVersion.SMALLEST:
            at = lo
        elif v is InverseVersion.LARGEST:
            at = hi
        else:
            at = (lo + hi) / 2
        knots.append((y, lo, at, hi))
    return MonotoneFn.from_knots(knots)

