"""Exact value types: extended reals, intervals and non-decreasing functions.

Every coordinate is a :class:`fractions.Fraction`.  The only non-rational
values that ever appear are the two infinities, represented by
``math.inf`` / ``-math.inf`` and used strictly as interval endpoints or
as sentinel results; no arithmetic is ever performed on them.

A :class:`MonotoneFn` is a continuous piecewise-linear function plus a
finite set of jumps, extended as a constant below its first and above its
last breakpoint.  Each jump stores its left limit, point value and right
limit explicitly, so one-sided limits are always exact.
"""
from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "INF", "NEG_INF", "ExtReal", "StieltjesError", "InvalidArgument",
    "OutOfRange", "ParseError", "as_rational", "as_ext", "fmt_rational",
    "fmt_ext", "Interval", "EMPTY", "Jump", "MonotoneFn", "identity_on",
    "constant", "step", "sgn_shift", "piecewise_linear", "compose",
    "inf_sup_over",
]

INF = math.inf
NEG_INF = -math.inf

ExtReal = Union[Fraction, float]

Side = str  # "left" | "at" | "right"
_SIDES = ("left", "at", "right")


class StieltjesError(ValueError):
    pass


class InvalidArgument(StieltjesError):
    """A mathematical precondition of an operation is violated."""


class OutOfRange(InvalidArgument):
    """A value lies outside the range where an inverse is defined."""


class ParseError(StieltjesError):
    """Malformed textual or JSON input."""


def as_rational(value) -> Fraction:
    """Convert ``value`` to an exact Fraction.

    Accepts ints, Fractions and strings such as ``"3"``, ``"-7/4"``.
    Floats are rejected so that nothing inexact sneaks into a computation.
    """
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                return Fraction(int(num), int(den))
            return Fraction(int(text))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a rational: {value!r}") from None
    raise ParseError(f"not a rational: {value!r}")


def as_ext(value) -> ExtReal:
    if isinstance(value, float) and math.isinf(value):
        return value
    if isinstance(value, str) and value.strip() in ("inf", "+inf", "-inf"):
        return NEG_INF if value.strip() == "-inf" else INF
    return as_rational(value)


def fmt_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def fmt_ext(x: ExtReal) -> str:
    if x == INF:
        return "inf"
    if x == NEG_INF:
        return "-inf"
    return fmt_rational(x)


def _is_finite(x: ExtReal) -> bool:
    return not (isinstance(x, float) and math.isinf(x))


# --------------------------------------------------------------------------
# Intervals
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Interval:
    """A possibly unbounded real interval, or the empty set.

    Use the classmethod constructors (``closed``, ``open``, ``make``, ...)
    rather than calling this directly; they normalise degenerate input.
    """
    left: ExtReal = Fraction(0)
    right: ExtReal = Fraction(0)
    left_closed: bool = True
    right_closed: bool = True
    empty: bool = False

    def __post_init__(self):
        if self.empty:
            return
        if self.left > self.right:
            raise InvalidArgument(f"interval endpoints out of order: {self.left} > {self.right}")
        if (self.left_closed and not _is_finite(self.left)) or (
                self.right_closed and not _is_finite(self.right)):
            raise InvalidArgument("infinite endpoints cannot be closed")
        if self.left == self.right and not (self.left_closed and self.right_closed):
            raise InvalidArgument("a degenerate interval must be a closed singleton")

    # constructors ---------------------------------------------------------
    @classmethod
    def make(cls, left, right, left_closed: bool = True, right_closed: bool = True) -> "Interval":
        """Build an interval, returning EMPTY when the described set is empty."""
        left, right = as_ext(left), as_ext(right)
        if not _is_finite(left):
            left_closed = False
        if not _is_finite(right):
            right_closed = False
        if left > right or (left == right and not (left_closed and right_closed)):
            return EMPTY
        return cls(left, right, left_closed, right_closed)

    @classmethod
    def closed(cls, a, b) -> "Interval":
        return cls.make(a, b, True, True)

    @classmethod
    def open(cls, a, b) -> "Interval":
        return cls.make(a, b, False, False)

    @classmethod
    def closed_open(cls, a, b) -> "Interval":
        return cls.make(a, b, True, False)

    @classmethod
    def open_closed(cls, a, b) -> "Interval":
        return cls.make(a, b, False, True)

    @classmethod
    def point(cls, a) -> "Interval":
        return cls.make(a, a, True, True)

    @classmethod
    def real_line(cls) -> "Interval":
        return cls(NEG_INF, INF, False, False)

    @classmethod
    def parse(cls, text: str) -> "Interval":
        """Parse ``[a,b]``, ``(a,b]``, ``[a,b)``, ``(a,b)``, ``{a}`` or ``empty``."""
        s = text.strip().replace(" ", "")
        if s in ("empty", "{}", "∅"):
            return EMPTY
        if len(s) >= 3 and s[0] == "{" and s[-1] == "}":
            a = as_rational(s[1:-1])
            return cls.point(a)
        if len(s) < 5 or s[0] not in "[(" or s[-1] not in "])" or s.count(",") != 1:
            raise ParseError(f"bad interval literal: {text!r}")
        a_txt, b_txt = s[1:-1].split(",")
        a, b = as_ext(a_txt), as_ext(b_txt)
        lc, rc = s[0] == "[", s[-1] == "]"
        if (lc and not _is_finite(a)) or (rc and not _is_finite(b)):
            raise ParseError(f"infinite endpoint cannot be closed: {text!r}")
        if a > b or (a == b and not (lc and rc)):
            raise ParseError(f"interval literal describes the empty set, write 'empty': {text!r}")
        return cls(a, b, lc, rc)

    # predicates -----------------------------------------------------------
    @property
    def is_singleton(self) -> bool:
        return not self.empty and self.left == self.right

    @property
    def bounded(self) -> bool:
        return self.empty or (_is_finite(self.left) and _is_finite(self.right))

    def __contains__(self, x) -> bool:
        if self.empty:
            return False
        if x < self.left or (x == self.left and not self.left_closed):
            return False
        if x > self.right or (x == self.right and not self.right_closed):
            return False
        return True

    def issubset(self, other: "Interval") -> bool:
        if self.empty:
            return True
        if other.empty:
            return False
        left_ok = other.left < self.left or (
            other.left == self.left and (other.left_closed or not self.left_closed))
        right_ok = other.right > self.right or (
            other.right == self.right and (other.right_closed or not self.right_closed))
        return left_ok and right_ok

    def intersect(self, other: "Interval") -> "Interval":
        if self.empty or other.empty:
            return EMPTY
        if self.left > other.left:
            left, lc = self.left, self.left_closed
        elif self.left < other.left:
            left, lc = other.left, other.left_closed
        else:
            left, lc = self.left, self.left_closed and other.left_closed
        if self.right < other.right:
            right, rc = self.right, self.right_closed
        elif self.right > other.right:
            right, rc = other.right, other.right_closed
        else:
            right, rc = self.right, self.right_closed and other.right_closed
        return Interval.make(left, right, lc, rc)

    def split(self, c) -> tuple["Interval", "Interval", "Interval"]:
        """Return ``(I ∩ (-inf, c), I ∩ {c}, I ∩ (c, inf))``."""
        c = as_rational(c)
        return (self.intersect(Interval(NEG_INF, c, False, False)),
                self.intersect(Interval.point(c)),
                self.intersect(Interval(c, INF, False, False)))

    def __str__(self) -> str:
        if self.empty:
            return "empty"
        if self.is_singleton:
            return "{" + fmt_rational(self.left) + "}"
        return "{}{},{}{}".format("[" if self.left_closed else "(", fmt_ext(self.left),
                                  fmt_ext(self.right), "]" if self.right_closed else ")")


EMPTY = Interval(empty=True)


# --------------------------------------------------------------------------
# Monotone functions
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Jump:
    location: Fraction
    left_value: Fraction
    point_value: Fraction
    right_value: Fraction

    def __post_init__(self):
        if not (self.left_value <= self.point_value <= self.right_value):
            raise InvalidArgument(f"jump at {self.location}: values must satisfy left <= at <= right")
        if not self.left_value < self.right_value:
            raise InvalidArgument(f"jump at {self.location} has zero size")

    @property
    def mass(self) -> Fraction:
        return self.right_value - self.left_value


class MonotoneFn:
    """Non-decreasing piecewise-linear function with finitely many jumps.

    Parameters
    ----------
    breakpoints
        Strictly increasing rationals; at least one.
    slopes
        One non-negative slope per consecutive pair of breakpoints.
    anchor
        The value of the function below the first breakpoint, i.e. the
        left limit ``f(x0-)``.
    jumps
        Jump records located at breakpoints.  Each jump's left value must
        equal the left limit implied by the anchor, slopes and earlier jumps.

    Instances are immutable.  Evaluation, left limits and right limits at
    any rational point are exact.
    """

    __slots__ = ("breakpoints", "slopes", "anchor", "jumps",
                 "_left", "_at", "_right", "_values", "_jump_index")

    def __init__(self, breakpoints: Sequence, slopes: Sequence, anchor, jumps: Iterable[Jump] = ()):
        xs = tuple(as_rational(x) for x in breakpoints)
        ss = tuple(as_rational(s) for s in slopes)
        anchor = as_rational(anchor)
        js = tuple(jumps)
        if not xs:
            raise InvalidArgument("a function needs at least one breakpoint")
        if any(a >= b for a, b in zip(xs, xs[1:])):
            raise InvalidArgument("breakpoints must be strictly increasing")
        if len(ss) != len(xs) - 1:
            raise InvalidArgument(f"expected {len(xs) - 1} slopes, got {len(ss)}")
        if any(s < 0 for s in ss):
            raise InvalidArgument("slopes must be non-negative")
        by_loc = {}
        for j in js:
            if j.location in by_loc:
                raise InvalidArgument(f"duplicate jump at {j.location}")
            by_loc[j.location] = j
        if any(loc not in set(xs) for loc in by_loc):
            raise InvalidArgument("every jump location must be a breakpoint")

        left, at, right = [], [], []
        current = anchor
        for i, x in enumerate(xs):
            if i > 0:
                current = current + ss[i - 1] * (x - xs[i - 1])
            j = by_loc.get(x)
            if j is None:
                left.append(current), at.append(current), right.append(current)
            else:
                if j.left_value != current:
                    raise InvalidArgument(
                        f"jump at {x}: left value {j.left_value} disagrees with left limit {current}")
                left.append(j.left_value), at.append(j.point_value), right.append(j.right_value)
                current = j.right_value

        self.breakpoints = xs
        self.slopes = ss
        self.anchor = anchor
        self.jumps = tuple(by_loc[x] for x in xs if x in by_loc)
        self._left = tuple(left)
        self._at = tuple(at)
        self._right = tuple(right)
        vals = []
        for lv, rv in zip(left, right):
            vals.append(lv)
            vals.append(rv)
        self._values = tuple(vals)
        self._jump_index = {j.location: j for j in self.jumps}

    # construction helpers -------------------------------------------------
    @classmethod
    def from_knots(cls, knots: Iterable[Sequence]) -> "MonotoneFn":
        """Build from knots ``(x, y)`` or ``(x, left, at, right)``.

        Between consecutive knots the function is linear from the right
        value of one knot to the left value of the next.
        """
        pts = []
        for k in knots:
            if len(k) == 2:
                x, y = as_rational(k[0]), as_rational(k[1])
                pts.append((x, y, y, y))
            elif len(k) == 4:
                pts.append(tuple(as_rational(v) for v in k))
            else:
                raise InvalidArgument(f"bad knot {k!r}")
        pts.sort(key=lambda p: p[0])
        if not pts:
            raise InvalidArgument("no knots given")
        xs = [p[0] for p in pts]
        slopes = []
        for (x0, _, _, r0), (x1, l1, _, _) in zip(pts, pts[1:]):
            if x1 == x0:
                raise InvalidArgument(f"duplicate knot at {x0}")
            slopes.append((l1 - r0) / (x1 - x0))
        jumps = [Jump(x, lv, av, rv) for x, lv, av, rv in pts if lv != rv or av != lv]
        return cls(xs, slopes, pts[0][1], jumps)

    def shifted(self, c) -> "MonotoneFn":
        """The function x -> f(x) + c."""
        c = as_rational(c)
        return MonotoneFn.from_knots(
            [(x, lv + c, av + c, rv + c) for x, lv, av, rv in self.knots()])

    def knots(self) -> list[tuple[Fraction, Fraction, Fraction, Fraction]]:
        return list(zip(self.breakpoints, self._left, self._at, self._right))

    def refine(self, points: Iterable) -> "MonotoneFn":
        """Same function, with extra breakpoints inserted."""
        xs = sorted(set(self.breakpoints) | {as_rational(p) for p in points})
        return MonotoneFn.from_knots(
            [(x, self.left_limit(x), self(x), self.right_limit(x)) for x in xs])

    # evaluation -----------------------------------------------------------
    def evaluate(self, x, side: Side = "at") -> Fraction:
        if side not in _SIDES:
            raise InvalidArgument(f"side must be one of {_SIDES}")
        x = as_rational(x)
        xs = self.breakpoints
        i = bisect_left(xs, x)
        if i < len(xs) and xs[i] == x:
            return (self._left if side == "left" else self._at if side == "at" else self._right)[i]
        if i == 0:
            return self._left[0]
        if i == len(xs):
            return self._right[-1]
        return self._right[i - 1] + self.slopes[i - 1] * (x - xs[i - 1])

    def __call__(self, x) -> Fraction:
        return self.evaluate(x, "at")

    def left_limit(self, x) -> Fraction:
        return self.evaluate(x, "left")

    def right_limit(self, x) -> Fraction:
        return self.evaluate(x, "right")

    def limit(self, x: ExtReal, side: Side) -> Fraction:
        """One-sided limit that also accepts ``-inf`` / ``inf``."""
        if x == NEG_INF:
            return self.lower_limit
        if x == INF:
            return self.upper_limit
        return self.evaluate(x, side)

    @property
    def lower_limit(self) -> Fraction:
        """f(-inf)."""
        return self._left[0]

    @property
    def upper_limit(self) -> Fraction:
        """f(+inf)."""
        return self._right[-1]

    def jump_at(self, x) -> Jump | None:
        return self._jump_index.get(as_rational(x))

    @property
    def jump_locations(self) -> tuple[Fraction, ...]:
        return tuple(j.location for j in self.jumps)

    def is_right_continuous(self) -> bool:
        return all(j.point_value == j.right_value for j in self.jumps)

    def slope_left_of(self, x) -> Fraction:
        """Slope of the linear piece immediately to the left of ``x``."""
        x = as_rational(x)
        i = bisect_left(self.breakpoints, x)
        if i == 0 or i > len(self.slopes):
            return Fraction(0)
        return self.slopes[i - 1]

    def slope_right_of(self, x) -> Fraction:
        x = as_rational(x)
        i = bisect_right(self.breakpoints, x)
        if i == 0 or i > len(self.slopes):
            return Fraction(0)
        return self.slopes[i - 1]

    def to_float(self, x) -> float:
        return float(self(x))

    # value-type plumbing --------------------------------------------------
    def _key(self):
        return (self.breakpoints, self.slopes, self.anchor, self.jumps)

    def __eq__(self, other):
        if not isinstance(other, MonotoneFn):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __setattr__(self, name, value):
        if hasattr(self, "_jump_index"):
            raise AttributeError("MonotoneFn is immutable")
        object.__setattr__(self, name, value)

    def __repr__(self):
        return (f"MonotoneFn(breakpoints={[fmt_rational(x) for x in self.breakpoints]}, "
                f"slopes={[fmt_rational(s) for s in self.slopes]}, anchor={fmt_rational(self.anchor)}, "
                f"jumps={len(self.jumps)})")

    # JSON -----------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "breakpoints": [fmt_rational(x) for x in self.breakpoints],
            "anchor": fmt_rational(self.anchor),
            "slopes": [fmt_rational(s) for s in self.slopes],
            "jumps": [{"x": fmt_rational(j.location), "left": fmt_rational(j.left_value),
                       "at": fmt_rational(j.point_value), "right": fmt_rational(j.right_value)}
                      for j in self.jumps],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MonotoneFn":
        if not isinstance(data, dict):
            raise ParseError("function JSON must be an object")
        for key in ("breakpoints", "anchor"):
            if key not in data:
                raise ParseError(f"missing field {key!r}")
        try:
            xs = [as_rational(v) for v in data["breakpoints"]]
        except ParseError as exc:
            raise ParseError(f"field 'breakpoints': {exc}") from None
        try:
            slopes = [as_rational(v) for v in data.get("slopes", [])]
        except ParseError as exc:
            raise ParseError(f"field 'slopes': {exc}") from None
        try:
            anchor = as_rational(data["anchor"])
        except ParseError as exc:
            raise ParseError(f"field 'anchor': {exc}") from None
        jumps = []
        for n, j in enumerate(data.get("jumps", [])):
            try:
                jumps.append(Jump(as_rational(j["x"]), as_rational(j["left"]),
                                  as_rational(j["at"]), as_rational(j["right"])))
            except KeyError as exc:
                raise ParseError(f"field 'jumps[{n}]': missing {exc}") from None
            except StieltjesError as exc:
                raise ParseError(f"field 'jumps[{n}]': {exc}") from None
        try:
            return cls(xs, slopes, anchor, jumps)
        except InvalidArgument as exc:
            raise ParseError(str(exc)) from None


# --------------------------------------------------------------------------
# Common functions
# --------------------------------------------------------------------------

def identity_on(a, b) -> MonotoneFn:
    """x on [a, b], constant outside."""
    a, b = as_rational(a), as_rational(b)
    if a == b:
        return MonotoneFn([a], [], a)
    return MonotoneFn([a, b], [1], a)


def constant(c, at=0) -> MonotoneFn:
    return MonotoneFn([as_rational(at)], [], as_rational(c))


def step(x, left=0, at=None, right=1) -> MonotoneFn:
    """Heaviside-type step at ``x``; point value defaults to the right value."""
    left, right = as_rational(left), as_rational(right)
    at = right if at is None else as_rational(at)
    return MonotoneFn([x], [], left, [Jump(as_rational(x), left, at, right)])


def sgn_shift(c) -> MonotoneFn:
    """sgn(x - c): -1 below c, 0 at c, 1 above."""
    return step(c, -1, 0, 1)


def piecewise_linear(points: Iterable[Sequence]) -> MonotoneFn:
    return MonotoneFn.from_knots(points)


def compose(f: MonotoneFn, h: MonotoneFn) -> MonotoneFn:
    """The composite y -> f(h(y)) as a MonotoneFn.

    Breakpoints are those of ``h`` plus every point where ``h`` crosses a
    breakpoint of ``f`` on an increasing piece.  One-sided limits follow
    the local behaviour of ``h``: where ``h`` is flat the composite sees the
    point value of ``f``, where ``h`` increases it sees a one-sided limit.
    """
    ys = set(h.breakpoints)
    fx = f.breakpoints
    for i, s in enumerate(h.slopes):
        if s == 0:
            continue
        y0, y1 = h.breakpoints[i], h.breakpoints[i + 1]
        v0, v1 = h.right_limit(y0), h.left_limit(y1)
        lo, hi = bisect_right(fx, v0), bisect_left(fx, v1)
        for x in fx[lo:hi]:
            ys.add(y0 + (x - v0) / s)
    knots = []
    for y in sorted(ys):
        hl, ha, hr = h.left_limit(y), h(y), h.right_limit(y)
        fl = f(hl) if h.slope_left_of(y) == 0 else f.left_limit(hl)
        fr = f(hr) if h.slope_right_of(y) == 0 else f.right_limit(hr)
        knots.append((y, fl, f(ha), fr))
    return MonotoneFn.from_knots(knots)


def inf_sup_over(f: MonotoneFn, interval: Interval, which: str) -> Fraction:
    """Infimum/supremum of ``f`` over, or beyond, an interval.

    ``which`` is one of

    * ``"f_min"``: inf of f over I
    * ``"f_max"``: sup of f over I
    * ``"f_bar"``: inf of f(x) over points x lying to the right of all of I
    * ``"f_under"``: sup of f(x) over points x lying to the left of all of I

    For an I unbounded on the relevant side the limit f(+inf) resp. f(-inf)
    is returned, which keeps every quantity finite.
    """
    if interval.empty:
        raise InvalidArgument(f"{which} of the empty interval is undefined")
    a, b = interval.left, interval.right
    if which == "f_min":
        return f.limit(a, "at" if interval.left_closed else "right")
    if which == "f_max":
        return f.limit(b, "at" if interval.right_closed else "left")
    if which == "f_bar":
        return f.limit(b, "right" if interval.right_closed else "at")
    if which == "f_under":
        return f.limit(a, "left" if interval.left_closed else "at")
    raise InvalidArgument(f"unknown selector {which!r}")
