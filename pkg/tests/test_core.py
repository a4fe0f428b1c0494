"""Canonical graph type, induced subgraphs, complement, covers."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pgl import (
    DanglingEdgeError,
    NotSubsetError,
    SelfLoopError,
    complement,
    induced_subgraph,
    is_induced_subgraph,
    make_graph,
    union_over,
    vertex_set,
)

from conftest import complete, cycle, edgeless, house, path


@st.composite
def graphs(draw, max_n: int = 8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    nodes = draw(st.sets(st.integers(min_value=0, max_value=30), min_size=n, max_size=n))
    nodes = sorted(nodes)
    pairs = [(u, v) for i, u in enumerate(nodes) for v in nodes[i + 1 :]]
    picked = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs))) if pairs else set()
    return make_graph(nodes, picked)


def test_make_graph_canonicalizes_duplicates_and_order():
    g = make_graph([3, 1, 2, 2], [(3, 1), (1, 3), (2, 3)])
    assert g.nodes == (1, 2, 3)
    assert g.edges == ((1, 3), (2, 3))


def test_make_graph_pentagon_edge_count():
    assert cycle(5).m == 5


def test_make_graph_edgeless():
    assert edgeless(3).m == 0


def test_make_graph_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        make_graph([1, 2], [(1, 1)])


def test_make_graph_rejects_dangling_endpoint():
    with pytest.raises(DanglingEdgeError):
        make_graph([1, 2], [(1, 3)])


def test_vertex_set_rejects_negative_ids():
    with pytest.raises(ValueError):
        vertex_set([1, -2])


def test_adjacency_queries():
    g = house()
    assert g.adjacent(2, 4) and g.adjacent(4, 2)
    assert not g.adjacent(1, 3)
    assert not g.adjacent(1, 1)
    assert g.neighbors(2) == (1, 3, 4)
    assert g.degree(2) == 3


def test_induced_subgraph_of_cycle_is_path():
    assert induced_subgraph(cycle(5), [1, 2, 3]) == path(3)


def test_induced_subgraph_identity():
    g = house()
    assert induced_subgraph(g, g.nodes) == g


def test_induced_subgraph_house_triangle():
    got = induced_subgraph(house(), [2, 3, 4])
    assert got.edges == ((2, 3), (2, 4), (3, 4))


def test_induced_subgraph_rejects_foreign_vertices():
    with pytest.raises(NotSubsetError):
        induced_subgraph(cycle(4), [1, 9])


def test_complement_of_house_is_open_chain():
    comp = complement(house())
    assert comp.edges == ((1, 3), (1, 4), (2, 5), (3, 5))
    # That edge set is the path 4-1-3-5-2.
    assert sorted(comp.degree(v) for v in comp.nodes) == [1, 1, 2, 2, 2]


def test_complement_of_pentagon_edges():
    assert complement(cycle(5)).edges == ((1, 3), (1, 4), (2, 4), (2, 5), (3, 5))


def test_union_over():
    assert union_over([(1, 3), (2, 4)]) == (1, 2, 3, 4)
    assert union_over([]) == ()
    assert union_over([(1, 3), (3, 5), (2, 5), (2, 4), (1, 4)]) == (1, 2, 3, 4, 5)


def test_is_induced_subgraph():
    assert is_induced_subgraph(path(3), cycle(5))
    assert is_induced_subgraph(induced_subgraph(house(), [2, 3, 4]), house())
    assert not is_induced_subgraph(edgeless(2), complete(2))


@given(graphs())
def test_canonicalization_is_idempotent(g):
    assert make_graph(g.nodes, g.edges) == g


@given(graphs())
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g


@given(graphs())
def test_edge_count_identity(g):
    n = g.n
    assert g.m + complement(g).m == n * (n - 1) // 2


@given(graphs(), st.data())
def test_induced_subgraphs_are_accepted(g, data):
    sub = data.draw(st.sets(st.sampled_from(g.nodes), max_size=g.n)) if g.n else set()
    assert is_induced_subgraph(induced_subgraph(g, sub), g)
