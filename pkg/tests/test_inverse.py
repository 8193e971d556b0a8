from fractions import Fraction as Q

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from stieltjes import (InverseVersion, MonotoneFn, OutOfRange, gen_inverse, identity_on,
                       inverse_fn, piecewise_linear)
from stieltjes.inverse import bracket

from conftest import monotone_fns, rationals

versions = st.sampled_from(list(InverseVersion))


def flat_example():
    # x-1 below 0, 0 on [0,1], x-1 above 1 (inside [-2, 3])
    return piecewise_linear([(-2, -3), (0, -1, 0, 0), (1, 0), (3, 2)])


def brute_bracket(g, y, grid):
    below = [t for t in grid if g(t) < y]
    above = [t for t in grid if g(t) > y]
    return max(below), min(above)


class TestExamples:
    @pytest.mark.parametrize("v", list(InverseVersion))
    def test_heaviside(self, heaviside, v):
        assert gen_inverse(heaviside, Q(1, 2), v) == 0

    @pytest.mark.parametrize("v", list(InverseVersion))
    def test_identity(self, ident, v):
        assert gen_inverse(ident, Q(1, 3), v) == Q(1, 3)

    def test_flat_versions(self):
        g = flat_example()
        assert gen_inverse(g, 0, "smallest") == 0
        assert gen_inverse(g, 0, "largest") == 1
        assert gen_inverse(g, 0, "midpoint") == Q(1, 2)

    def test_flat_brute_force(self):
        g = flat_example()
        grid = [Q(k, 64) for k in range(-128, 193)]
        assert brute_bracket(g, 0, grid) == (Q(-1, 64), Q(65, 64))
        assert bracket(g, 0) == (0, 1)

    def test_out_of_range(self, ident):
        with pytest.raises(OutOfRange):
            gen_inverse(ident, 2)
        with pytest.raises(OutOfRange):
            gen_inverse(ident, Q(-1, 10))

    def test_materialized_identity(self):
        assert inverse_fn(identity_on(0, 1)) == identity_on(0, 1)

    def test_materialized_heaviside(self, heaviside):
        inv = inverse_fn(heaviside)
        assert inv.breakpoints == (0, 1) and inv.slopes == (0,)
        for k in range(1, 16):
            assert inv(Q(k, 16)) == gen_inverse(heaviside, Q(k, 16)) == 0

    def test_flat_becomes_jump(self):
        g = flat_example()
        inv = inverse_fn(g)
        j = inv.jump_at(0)
        assert j is not None and j.mass == 1
        assert len(inv.jumps) == 1


@given(monotone_fns, rationals, rationals, versions)
def test_strict_comparisons_order_inverse(g, x, y, v):
    assume(g.lower_limit <= y <= g.upper_limit)
    inv = gen_inverse(g, y, v)
    if g(x) < y:
        assert x <= inv
    if g(x) > y:
        assert x >= inv


@given(monotone_fns, rationals, rationals, versions)
def test_inverse_pins_jump_locations(g, x, y, v):
    assume(g.lower_limit <= y <= g.upper_limit)
    inv = gen_inverse(g, y, v)
    if g.left_limit(x) < y < g.right_limit(x):
        assert inv == x
    if inv == x:
        assert g.left_limit(x) <= y <= g.right_limit(x)


@given(monotone_fns, rationals, rationals, versions)
def test_inverse_against_one_sided_limits(g, x, y, v):
    assume(g.lower_limit <= y <= g.upper_limit)
    inv = gen_inverse(g, y, v)
    if inv < x:
        assert y <= g.left_limit(x)
    if inv > x:
        assert y >= g.right_limit(x)
    if inv <= x:
        assert y <= g.right_limit(x)
    if inv >= x:
        assert y >= g.left_limit(x)


@given(monotone_fns, st.fractions(0, 1, max_denominator=16), versions)
def test_inverse_fn_agrees_off_jump_heights(g, u, v):
    lo, hi = g.lower_limit, g.upper_limit
    assume(lo < hi)
    y = lo + u * (hi - lo)
    assume(lo < y < hi)
    inv = inverse_fn(g, v)
    assert inv.left_limit(y) <= gen_inverse(g, y, v) <= inv.right_limit(y)
    heights = {k for knot in g.knots() for k in knot[1:]}
    if y not in heights:
        assert inv(y) == gen_inverse(g, y, v)


@given(monotone_fns, rationals)
def test_versions_ordered(g, y):
    assume(g.lower_limit <= y <= g.upper_limit)
    lo = gen_inverse(g, y, "smallest")
    mid = gen_inverse(g, y, "midpoint")
    hi = gen_inverse(g, y, "largest")
    assert lo <= mid <= hi
