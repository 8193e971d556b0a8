"""Shared fixtures and hypothesis strategies."""
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from stieltjes import identity_on, sgn_shift, step
from stieltjes.randomgen import (random_continuous, random_dist, random_interval,
                                 random_monotone, random_subinterval)

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.large_base_example,
                                                 HealthCheck.data_too_large])
settings.load_profile("default")

Q = Fraction
rngs = st.randoms(use_true_random=False)
monotone_fns = rngs.map(random_monotone)
continuous_fns = rngs.map(random_continuous)
rationals = st.fractions(min_value=-6, max_value=6, max_denominator=8)


@st.composite
def fn_and_interval(draw, allow_empty=True):
    rng = draw(rngs)
    f = random_monotone(rng)
    return f, random_interval(rng, f.breakpoints, allow_empty=allow_empty)


@st.composite
def pair_and_interval(draw, allow_empty=True):
    rng = draw(rngs)
    f, g = random_monotone(rng), random_monotone(rng)
    anchors = f.breakpoints + g.breakpoints
    return f, g, random_interval(rng, anchors, allow_empty=allow_empty)


@st.composite
def nested_pair(draw):
    rng = draw(rngs)
    f, g = random_monotone(rng), random_monotone(rng)
    anchors = f.breakpoints + g.breakpoints
    big = random_interval(rng, anchors, allow_empty=False)
    return f, g, big, random_subinterval(rng, big, anchors)


dists = rngs.map(random_dist)


@pytest.fixture
def ident():
    return identity_on(0, 1)


@pytest.fixture
def heaviside():
    return step(0, 0, Q(1, 2), 1)


@pytest.fixture
def heaviside_rc():
    return step(0, 0, 1, 1)


@pytest.fixture
def sgn():
    return sgn_shift


def square_surrogate(level: int, lo: int = 0, hi: int = 2):
    """Piecewise-linear interpolant of x**2 on a dyadic grid of width 2**-level."""
    from stieltjes import piecewise_linear
    n = (hi - lo) * 2 ** level
    xs = [lo + Q(k, 2 ** level) for k in range(n + 1)]
    return piecewise_linear([(x, x * x) for x in xs])


def sgn_family_instance(rng, arrangement):
    """Random continuous f and points a, s, c, t in the requested order."""
    from stieltjes.randomgen import random_rational
    pts = set()
    while len(pts) < 4:
        pts.add(random_rational(rng, -4, 4, 4))
    a, p, q, t = sorted(pts)
    c, s = (p, q) if arrangement == "c<s" else (q, p)
    f = random_continuous(rng, lo=-5, hi=5, flat_prob=0.4)
    return f.refine([a, s, c, t]), a, s, c, t


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
