import pytest
from hypothesis import given, strategies as st

from ellmaps.rootsys import (
    LIE_ALGEBRA_DIM,
    ClassificationError,
    RootSystemId,
    build_root_system,
    coroot_pairing,
    is_positive,
    reflect,
    root_system,
    weyl_involution,
)

SUPPORTED = [
    RootSystemId(L, n)
    for L, ranks in (("A", range(1, 9)), ("B", range(2, 9)), ("C", range(2, 9)),
                     ("D", range(4, 9)), ("E", range(6, 9)), ("F", [4]), ("G", [2]))
    for n in ranks
]


def test_a2_positive_roots():
    _, pos = build_root_system(RootSystemId("A", 2))
    assert set(pos) == {(1, 0), (0, 1), (1, 1)}


def test_e8_has_120_positive_roots():
    assert len(build_root_system(RootSystemId("E", 8))[1]) == 120


def test_g2_roots_and_highest_root():
    rs = root_system("G2")
    assert len(rs.positive_roots) == 6
    assert rs.highest_root == (3, 2)


@pytest.mark.parametrize("bad", [("A", 0), ("B", 1), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("H", 3)])
def test_classification_errors(bad):
    with pytest.raises(ClassificationError):
        RootSystemId(*bad)


def test_parse():
    assert RootSystemId.parse("e_6") == RootSystemId("E", 6)
    with pytest.raises(ClassificationError):
        RootSystemId.parse("E six")


def test_reflect_examples():
    a2 = root_system("A2").cartan
    assert reflect((1, 0), 1, a2) == (-1, 0)
    assert reflect((0, 1), 1, a2) == (1, 1)
    assert reflect((0, 1), 1, root_system("G2").cartan) == (3, 1)
    with pytest.raises((IndexError, ValueError)):
        reflect((1, 0), 3, a2)


def test_pairing_examples():
    a2 = root_system("A2").cartan
    assert coroot_pairing((1, 0), 1, a2) == 2
    assert coroot_pairing((1, 1), 1, a2) == 1
    e6 = root_system("E6")
    assert e6.pairing(e6.highest_root, 2) == 1


def test_involution_examples():
    assert weyl_involution(RootSystemId("D", 5)) == (1, 2, 3, 5, 4)
    assert root_system("E6").iota(6) == 1
    assert weyl_involution(RootSystemId("B", 3)) == (1, 2, 3)


@pytest.mark.parametrize("sid", SUPPORTED, ids=str)
def test_positive_root_count_matches_lie_algebra_dim(sid):
    _, pos = build_root_system(sid)
    assert 2 * len(pos) == LIE_ALGEBRA_DIM[sid.letter](sid.rank) - sid.rank


@pytest.mark.parametrize("sid", SUPPORTED, ids=str)
def test_roots_are_sign_coherent(sid):
    for beta in root_system(sid).positive_roots:
        assert all(c >= 0 for c in beta) and any(beta)


@pytest.mark.parametrize("sid", SUPPORTED, ids=str)
def test_involution_is_diagram_automorphism(sid):
    rs = root_system(sid)
    iota = rs.involution
    n = rs.rank
    assert all(iota[iota[i] - 1] == i + 1 for i in range(n))
    A = rs.cartan
    for i in range(n):
        for j in range(n):
            assert A[iota[i] - 1][iota[j] - 1] == A[i][j]


@pytest.mark.parametrize("sid", SUPPORTED, ids=str)
def test_minus_w0_maps_positive_roots_to_positive_roots(sid):
    rs = root_system(sid)
    assert len(rs.longest_word) == len(rs.positive_roots)
    pos = set(rs.positive_roots)
    for beta in pos:
        image = tuple(-c for c in rs.apply_w0(beta))
        assert image in pos


@given(st.sampled_from(SUPPORTED), st.data())
def test_reflections_permute_roots(sid, data):
    rs = root_system(sid)
    roots = set(rs.positive_roots) | {tuple(-c for c in b) for b in rs.positive_roots}
    beta = data.draw(st.sampled_from(sorted(roots)))
    i = data.draw(st.integers(1, rs.rank))
    image = reflect(beta, i, rs.cartan)
    assert image in roots
    assert reflect(image, i, rs.cartan) == beta
    assert is_positive(image) or is_positive(tuple(-c for c in image))
