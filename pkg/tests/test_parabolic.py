import pytest
from hypothesis import given, strategies as st

from ellmaps import oracle
from ellmaps.parabolic import (
    ParabolicMarking,
    UnsupportedMarking,
    adjoint_nodes,
    descriptor,
    space_descriptor,
    unipotent_radical_roots,
)
from ellmaps.rootsys import RootSystemId, root_system


def test_unipotent_radical_examples():
    assert len(unipotent_radical_roots(ParabolicMarking.of("A4", 2))) == 6
    assert len(unipotent_radical_roots(ParabolicMarking.of("B3", 1))) == 5
    assert len(unipotent_radical_roots(ParabolicMarking.of("E8", 8))) == 57


@pytest.mark.parametrize("sid,node,dim,index", [
    ("E6", 1, 16, 12),
    ("E7", 1, 33, 17),  # the adjoint node of E7 in Bourbaki numbering
    ("F4", 1, 15, 8),
    ("E7", 7, 27, 18),
])
def test_descriptor_examples(sid, node, dim, index):
    s = descriptor(sid, node)
    assert (s.dimension, s.index) == (dim, index)


def test_e7_node_2_is_not_the_adjoint_variety():
    s = descriptor("E7", 2)
    assert (s.dimension, s.index) == (42, 14)
    assert adjoint_nodes("E7") == (1,)


def test_multi_node_marking_rejected():
    with pytest.raises(UnsupportedMarking):
        space_descriptor(ParabolicMarking.of("A4", 1, 2))


def test_node_out_of_range():
    with pytest.raises(ValueError):
        ParabolicMarking.of("A2", 3)


@pytest.mark.parametrize("row", oracle.table_rows(), ids=lambda r: r.row_id)
def test_table_rows_dimension_and_index(row):
    s = descriptor(row.system, row.node)
    assert (s.dimension, s.index) == (row.dimension, row.index)


@pytest.mark.parametrize("row", oracle.table_rows(), ids=lambda r: r.row_id)
def test_index_envelope(row):
    s = descriptor(row.system, row.node)
    assert 2 <= s.index <= s.dimension + 1
    if s.index == s.dimension + 1:
        assert s.family is not None and s.family[0] == "P"


@pytest.mark.parametrize("key,node_label", [("C.adjoint", "P^5"), ("B.quadric", "Q_5"), ("E6.cayley", "OP^2")])
def test_labels(key, node_label):
    row = next(r for r in oracle.table_rows((3, 3)) if r.key == key)
    assert node_label in descriptor(row.system, row.node).names()


@given(st.sampled_from(["A5", "B4", "C4", "D5", "E6", "F4", "G2"]), st.data())
def test_dimension_is_positive_roots_minus_levi(sid, data):
    rs = root_system(sid)
    node = data.draw(st.integers(1, rs.rank))
    roots = unipotent_radical_roots(ParabolicMarking.of(sid, node))
    assert all(b[node - 1] > 0 for b in roots)
    levi = [b for b in rs.positive_roots if b[node - 1] == 0]
    assert len(roots) + len(levi) == len(rs.positive_roots)
    # index is the pairing of the root sum with the marked coroot
    total = tuple(map(sum, zip(*roots)))
    assert descriptor(sid, node).index == rs.pairing(total, node)
