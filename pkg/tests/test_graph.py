from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from denseminor import (Graph, GraphError, avg_degree, complete_graph, contract, cycle_graph,
                        disjoint_union, empty_graph, induced, path_graph, petersen_graph)

from strategies import graphs, graphs_with_edge


def test_avg_degree_examples():
    assert avg_degree(complete_graph(4)) == 3
    assert avg_degree(cycle_graph(4)) == 2
    assert avg_degree(path_graph(5)) == Fraction(8, 5)
    assert isinstance(avg_degree(path_graph(5)), Fraction)


def test_avg_degree_null_and_edgeless():
    assert avg_degree(Graph()) == 0
    assert avg_degree(empty_graph(7)) == 0


def test_simple_graph_invariants():
    g = Graph([0, 1, 2], [(0, 1), (1, 0), (2, 1)])
    assert g.num_edges() == 2
    with pytest.raises(GraphError):
        Graph([0, 1], [(0, 0)])
    with pytest.raises(GraphError):
        Graph([0, 1], [(0, 5)])


def test_ids_stable_under_deletion():
    g = path_graph(5).delete([1])
    assert g.vertices == (0, 2, 3, 4)
    assert g.edges == [(2, 3), (3, 4)]


def test_contract_complete_and_cycle():
    k3 = contract(complete_graph(4), 1, 2)
    assert k3.num_vertices() == 3 and k3.num_edges() == 3
    assert k3.vertices == (0, 1, 3)
    c = contract(cycle_graph(4), 2, 3)
    assert c.num_vertices() == 3 and c.num_edges() == 3


def test_contract_survivor_keeps_smaller_id():
    g = contract(path_graph(4), 2, 1)
    assert g.vertices == (0, 1, 3)
    assert g.has_edge(1, 3) and g.has_edge(0, 1)


def test_contract_non_edge_rejected():
    with pytest.raises(GraphError):
        contract(path_graph(4), 0, 2)


def test_induced_examples():
    k5 = complete_graph(5)
    assert induced(k5, k5.vertices) == k5
    k3 = induced(k5, [0, 2, 4])
    assert k3.num_edges() == 3
    outer = induced(petersen_graph(), range(5))
    assert outer == cycle_graph(5)
    inner = induced(petersen_graph(), range(5, 10))
    assert inner.num_edges() == 5 and all(inner.degree(v) == 2 for v in inner)


def test_induced_unknown_vertex():
    with pytest.raises(GraphError):
        induced(path_graph(3), [0, 7])


def test_petersen_is_petersen():
    ref = nx.petersen_graph()
    g = nx.Graph(petersen_graph().edges)
    assert nx.is_isomorphic(g, ref)


def test_components_and_union():
    g = disjoint_union(complete_graph(3), path_graph(2), empty_graph(1))
    assert g.num_vertices() == 6
    assert [sorted(c) for c in g.components()] == [[0, 1, 2], [3, 4], [5]]
    assert not g.is_connected()
    assert complete_graph(3).is_connected()


def test_common_neighbors():
    g = complete_graph(5)
    assert g.common_neighbors(0, 1) == 3


@settings(max_examples=300, deadline=None)
@given(graphs_with_edge())
def test_contraction_edge_law(case):
    g, (u, v) = case
    h = contract(g, u, v)
    assert h.num_vertices() == g.num_vertices() - 1
    common = len(g.neighbors(u) & g.neighbors(v))
    assert h.num_edges() == g.num_edges() - 1 - common
    assert g.common_neighbors(u, v) == common


@settings(max_examples=200, deadline=None)
@given(graphs(), st.data())
def test_induced_edge_count(g, data):
    xs = data.draw(st.sets(st.sampled_from(g.vertices)) if g.vertices else st.just(set()))
    h = induced(g, xs)
    assert h.num_edges() == sum(1 for a, b in g.edges if a in xs and b in xs)
    assert set(h.vertices) == set(xs)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1), st.randoms())
def test_avg_degree_relabel_invariant(g, rnd):
    ids = list(range(100, 100 + g.num_vertices()))
    rnd.shuffle(ids)
    h = g.relabel(dict(zip(g.vertices, ids)))
    assert avg_degree(h) == avg_degree(g)
    assert h.num_edges() == g.num_edges()


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_components_match_networkx(g):
    ref = nx.Graph()
    ref.add_nodes_from(g.vertices)
    ref.add_edges_from(g.edges)
    mine = sorted(sorted(c) for c in g.components())
    theirs = sorted(sorted(c) for c in nx.connected_components(ref))
    assert mine == theirs
