"""Seeded generators of random functions, intervals and distributions."""
from __future__ import annotations

import os
import random
from fractions import Fraction

from .applications import DistSpec
from .core import EMPTY, INF, NEG_INF, Interval, MonotoneFn

__all__ = [
    "seed_from_env", "random_rational", "random_monotone", "random_continuous",
    "random_interval", "random_subinterval", "random_dist", "random_integer_fn",
]


def seed_from_env(default: int = 0) -> int:
    try:
        return int(os.environ.get("STIELTJES_SEED", default))
    except ValueError:
        return default


def random_rational(rng: random.Random, lo: int = -4, hi: int = 4, den: int = 4) -> Fraction:
    d = rng.randint(1, den)
    return Fraction(rng.randint(lo * d, hi * d), d)


def _distinct_points(rng, count, lo, hi, den):
    pts = set()
    while len(pts) < count:
        pts.add(random_rational(rng, lo, hi, den))
    return sorted(pts)


def random_monotone(rng: random.Random, max_breakpoints: int = 8, max_jumps: int = 3,
                    lo: int = -4, hi: int = 4, den: int = 4, flat_prob: float = 0.2,
                    point_choices=("left", "right", "mid", "inner")) -> MonotoneFn:
    """Random function with up to ``max_breakpoints`` breakpoints and ``max_jumps`` jumps."""
    xs = _distinct_points(rng, rng.randint(1, max_breakpoints), lo, hi, den)
    jump_at = set(rng.sample(xs, rng.randint(0, min(max_jumps, len(xs)))))
    value = random_rational(rng, -3, 3, den)
    knots = []
    for i, x in enumerate(xs):
        if i > 0:
            slope = Fraction(0) if rng.random() < flat_prob else Fraction(rng.randint(1, 8), rng.randint(1, 4))
            value += slope * (x - xs[i - 1])
        if x in jump_at:
            size = Fraction(rng.randint(1, 8), rng.randint(1, 4))
            right = value + size
            choice = rng.choice(point_choices)
            if choice == "left":
                at = value
            elif choice == "right":
                at = right
            elif choice == "mid":
                at = value + size / 2
            else:
                at = value + size * Fraction(rng.randint(1, 3), 4)
            knots.append((x, value, at, right))
            value = right
        else:
            knots.append((x, value, value, value))
    return MonotoneFn.from_knots(knots)


def random_continuous(rng: random.Random, **kwargs) -> MonotoneFn:
    kwargs["max_jumps"] = 0
    return random_monotone(rng, **kwargs)


def random_interval(rng: random.Random, anchors=(), lo: int = -5, hi: int = 5, den: int = 4,
                    allow_empty: bool = True, allow_unbounded: bool = True) -> Interval:
    """Random interval whose finite endpoints often land on ``anchors``."""
    anchors = list(anchors)

    def point():
        if anchors and rng.random() < 0.5:
            return rng.choice(anchors)
        return random_rational(rng, lo, hi, den)

    kinds = ["closed", "open", "closed_open", "open_closed", "point"]
    if allow_empty:
        kinds.append("empty")
    kind = rng.choice(kinds)
    if kind == "empty":
        return EMPTY
    if kind == "point":
        return Interval.point(point())
    a, b = sorted((point(), point()))
    if a == b:
        b = a + Fraction(1, den)
    if allow_unbounded:
        if rng.random() < 0.15:
            a = NEG_INF
        if rng.random() < 0.15:
            b = INF
    lc = kind in ("closed", "closed_open")
    rc = kind in ("closed", "open_closed")
    return Interval.make(a, b, lc, rc)


def random_subinterval(rng: random.Random, interval: Interval, anchors=(),
                       den: int = 4) -> Interval:
    """Random nonempty J contained in a nonempty ``interval``."""
    if interval.is_singleton or rng.random() < 0.1:
        return interval
    inside = [x for x in anchors if x in interval]
    for _ in range(20):
        cand = [x for x in (random_rational(rng, -6, 6, den) for _ in range(4)) if x in interval]
        pts = cand + inside
        if not pts:
            continue
        a, b = sorted(rng.sample(pts, 2) if len(pts) > 1 else pts * 2)
        left = a
        right = b
        lc, rc = rng.random() < 0.5, rng.random() < 0.5
        if rng.random() < 0.25:
            left, lc = interval.left, interval.left_closed
        if rng.random() < 0.25:
            right, rc = interval.right, interval.right_closed
        sub = Interval.make(left, right, lc, rc)
        if not sub.empty and sub.issubset(interval):
            return sub
    return interval


def random_dist(rng: random.Random, max_atoms: int = 4, max_pieces: int = 3,
                den: int = 4) -> DistSpec:
    """Random finite distribution; sometimes purely discrete or purely continuous."""
    mode = rng.choice(["atoms", "density", "mixed"])
    n_atoms = 0 if mode == "density" else rng.randint(1, max_atoms)
    n_pieces = 0 if mode == "atoms" else rng.randint(1, max_pieces)
    weights = [Fraction(rng.randint(1, 6)) for _ in range(n_atoms + n_pieces)]
    total = sum(weights)
    weights = [w / total for w in weights]
    atom_locs = _distinct_points(rng, n_atoms, -6, 6, den)
    ends = _distinct_points(rng, 2 * n_pieces, -6, 6, den)
    atoms = tuple(zip(atom_locs, weights[:n_atoms]))
    pieces = []
    for k in range(n_pieces):
        a, b = ends[2 * k], ends[2 * k + 1]
        pieces.append((a, b, weights[n_atoms + k] / (b - a)))
    return DistSpec(atoms, tuple(pieces))


def random_integer_fn(rng: random.Random, lo: int, hi: int, max_breakpoints: int = 8,
                      max_jumps: int = 3) -> MonotoneFn:
    """Right-continuous function with integer breakpoints spanning [lo, hi]."""
    inner = rng.sample(range(lo + 1, hi), min(max(hi - lo - 1, 0), rng.randint(0, max_breakpoints - 2)))
    xs = sorted({lo, hi, *inner})
    jump_at = set(rng.sample(xs, rng.randint(0, min(max_jumps, len(xs)))))
    value = random_rational(rng, -5, 5, 3)
    knots = []
    for i, x in enumerate(xs):
        if i > 0:
            slope = Fraction(0) if rng.random() < 0.15 else Fraction(rng.randint(1, 9), rng.randint(1, 4))
            value += slope * (x - xs[i - 1])
        if x in jump_at:
            size = Fraction(rng.randint(1, 12), rng.randint(1, 3))
            knots.append((x, value, value + size, value + size))
            value += size
        else:
            knots.append((x, value))
    return MonotoneFn.from_knots(knots)
