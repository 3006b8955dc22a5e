from math import factorial

import pytest
from hypothesis import given, strategies as st

from ellmaps.curvecohom import (
    InapplicableBound,
    SpinorDatum,
    UndeterminedCase,
    cone_bound,
    h0_genus1,
    h1_spinor,
    h1_vanishes_genus_g,
    h1_wedge_twist,
    spinor_caveat,
)


def _binom(n, k):
    if k < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


def test_wedge_examples():
    assert h1_wedge_twist(6, 5, 3) == 3
    assert h1_wedge_twist(6, 2, 3) == 0
    assert h1_wedge_twist(4, 1, 4) == 4
    with pytest.raises(ValueError):
        h1_wedge_twist(3, 4, 0)
    with pytest.raises(ValueError):
        h1_wedge_twist(3, 1, 4)


def test_wedge_against_factorials():
    for r in range(11):
        for k in range(r + 1):
            for a in range(r + 1):
                assert h1_wedge_twist(r, k, a) == _binom(a, r - k)
                if a < r - k:
                    assert h1_wedge_twist(r, k, a) == 0


def test_vanishing_examples():
    assert h1_vanishes_genus_g(1, 6, 5)
    assert not h1_vanishes_genus_g(2, 6, 5)
    assert all(h1_vanishes_genus_g(0, r, r) for r in range(8))


def test_spinor_examples():
    assert h1_spinor(SpinorDatum(8, 0)) == 1
    assert h1_spinor(SpinorDatum(8, 2)) == 2
    assert h1_spinor(SpinorDatum(7, 0)) == 1
    with pytest.raises(ValueError):
        SpinorDatum(8, 5)


def test_spinor_modes_disagree_only_at_alpha_one():
    for n in (4, 6, 8, 10, 12):
        for alpha in range(n // 2 + 1):
            datum = SpinorDatum(n, alpha)
            if alpha == 1:
                with pytest.raises(UndeterminedCase):
                    h1_spinor(datum, "corollary")
                assert h1_spinor(datum) == 1
            else:
                assert h1_spinor(datum, "corollary") == h1_spinor(datum)


def test_spinor_caveat():
    assert spinor_caveat(SpinorDatum(8, 0)) is not None
    assert spinor_caveat(SpinorDatum(7, 0)) is None
    assert spinor_caveat(SpinorDatum(8, 1)) is None


def test_cone_examples():
    assert cone_bound(1, 3, 5) == 10
    for m in range(1, 8):
        assert cone_bound(0, m + 2, 4) == 4 * m
    with pytest.raises(InapplicableBound):
        cone_bound(2, 2, 3)


@given(st.integers(0, 10), st.integers(3, 12), st.integers(1, 40))
def test_cone_monotone(k, r, d):
    v = cone_bound(k, r, d)
    assert cone_bound(k + 1, r, d) > v
    assert cone_bound(k, r + 1, d) > v
    assert cone_bound(k, r, d + 1) >= v


def test_h0_examples():
    assert h0_genus1(4 * 3, 1) == 13
    assert h0_genus1(0, 0) == 0
    assert h0_genus1(7, 3) == 10
