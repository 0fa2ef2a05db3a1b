import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import TYPES, ade_types
from quiversing.diagrams import (
    ADEType,
    Diagram,
    all_types,
    build_diagram,
    cartan_matrix,
    check_mckay_table,
    extended,
    full_subgraph,
    identify_type,
    mckay_group,
    orient,
    type_multiset,
    vertex_subsets,
)

A, D, E = (lambda n: ADEType("A", n)), (lambda n: ADEType("D", n)), (lambda n: ADEType("E", n))


def test_type_labels():
    assert [str(t) for t in all_types(8)][:3] == ["A1", "A2", "A3"]
    assert len(all_types(8)) == 8 + 5 + 3
    assert ADEType.parse("e8") == E(8)
    for bad in ["D3", "E9", "A0", "F4", "A"]:
        with pytest.raises(ValueError):
            ADEType.parse(bad)


def test_small_diagrams():
    assert build_diagram(A(1)).bonds == ()
    assert build_diagram(A(3)).bonds == ((1, 2), (2, 3))
    d4 = cartan_matrix(build_diagram(D(4)))
    assert [row.count(-1) for row in d4] == [1, 3, 1, 1]
    assert cartan_matrix(build_diagram(A(2))) == ((2, -1), (-1, 2))


@given(ade_types)
def test_diagrams_are_trees_with_rank_vertices(t):
    g = nx.Graph(build_diagram(t).graph())
    assert g.number_of_nodes() == t.rank and nx.is_tree(g)


def test_extended_examples():
    a1 = extended(A(1))
    assert cartan_matrix(a1) == ((2, -2), (-2, 2)) and a1.delta == (1, 1)
    a2 = extended(A(2))
    assert a2.delta == (1, 1, 1)
    assert nx.is_isomorphic(nx.Graph(a2.as_diagram().graph()), nx.cycle_graph(3))
    assert extended(D(4)).delta == (1, 1, 2, 1, 1)
    # the affine E8 node hangs off the end of the long arm
    assert extended(E(8)).delta == (1, 2, 4, 6, 5, 4, 3, 2, 3)


@given(ade_types)
def test_delta_spans_radical(t):
    ed = extended(t)
    c = cartan_matrix(ed)
    assert all(sum(row[j] * ed.delta[j] for j in range(len(row))) == 0 for row in c)
    assert ed.delta[0] == 1


def test_mckay():
    assert mckay_group(A(1)).to_json() == {"name": "cyclic", "order": 2}
    assert mckay_group(D(4)).to_json() == {"name": "binary dihedral", "order": 8}
    assert (mckay_group(E(6)).order, mckay_group(E(7)).order, mckay_group(E(8)).order) == (24, 48, 120)
    assert mckay_group(E(8)).name == "binary icosahedral"
    check_mckay_table(8)


def test_orient_doubles_edges():
    q = orient(build_diagram(A(2)))
    (h,) = q.arrows()
    assert (h.source, h.target, h.sign) == (1, 2, 1)
    hb = q.opposite(h)
    assert (hb.source, hb.target, hb.sign) == (2, 1, -1)
    q1 = orient(extended(A(1)))
    assert len(q1.edges) == 4 and all((e.source, e.target) == (0, 1) for e in q1.arrows())


@given(ade_types, st.data())
def test_form_ignores_orientation(t, data):
    ed = extended(t)
    flips = data.draw(st.lists(st.booleans(), min_size=len(ed.bonds), max_size=len(ed.bonds)))
    q = orient(ed, flips)
    c = cartan_matrix(ed)
    n = len(ed.vertices)
    v = data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))
    w = data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))
    assert q.form(v, w) == sum(v[i] * c[i][j] * w[j] for i in range(n) for j in range(n))
    assert q.underlying().bonds == ed.bonds


def _relabel(g, seed):
    nodes = list(g.nodes())
    random.Random(seed).shuffle(nodes)
    return nx.relabel_nodes(g, dict(zip(g.nodes(), [f"v{k}" for k in nodes])))


@given(ade_types, st.integers(0, 10**6))
def test_identify_type_recovers_label(t, seed):
    g = _relabel(nx.Graph(build_diagram(t).graph()), seed)
    found, order = identify_type(g)
    assert found == t
    # canonical order reproduces the diagram's bonds
    pos = {v: k + 1 for k, v in enumerate(order)}
    bonds = sorted(tuple(sorted((pos[a], pos[b]))) for a, b in g.edges())
    assert tuple(bonds) == build_diagram(t).bonds


def test_identify_type_shapes():
    assert identify_type(nx.path_graph(5))[0] == A(5)
    assert identify_type(nx.star_graph(3))[0] == D(4)
    # arms of lengths 1, 2 and 4 around node 0
    e8 = nx.Graph([(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7)])
    assert identify_type(e8)[0] == E(8)
    with pytest.raises(ValueError):
        identify_type(nx.cycle_graph(4))
    with pytest.raises(ValueError):
        identify_type(nx.star_graph(4))


def test_full_subgraph_examples():
    assert type_multiset(c.adtype for c in full_subgraph(build_diagram(A(3)), [1, 3])) == (A(1), A(1))
    assert [c.adtype for c in full_subgraph(build_diagram(E(8)), [2, 3, 4, 8])] == [D(4)]
    assert full_subgraph(build_diagram(E(8)), []) == []


def test_vertex_subsets_order():
    assert list(vertex_subsets(2)) == [(), (1,), (2,), (1, 2)]
    assert sum(1 for _ in vertex_subsets(8)) == 256


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_subgraph_of_everything_is_the_type(t):
    assert [c.adtype for c in full_subgraph(build_diagram(t), range(1, t.rank + 1))] == [t]


def test_diagram_validation():
    with pytest.raises(ValueError):
        Diagram((1, 2), ((1, 3),))
