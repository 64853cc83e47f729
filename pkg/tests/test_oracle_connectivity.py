import networkx as nx
import pytest
from hypothesis import given, settings

from denseminor import complete_graph, cycle_graph, path_graph, petersen_graph
from denseminor.oracle import Separation, is_k_connected, min_separation

from strategies import graphs


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edges)
    return G


def test_examples():
    assert is_k_connected(petersen_graph(), 3) == (True, None)
    ok, sep = is_k_connected(petersen_graph(), 4)
    assert not ok and sep.order == 3 and sep.is_valid(petersen_graph())
    assert is_k_connected(complete_graph(4), 3)[0]
    assert not is_k_connected(complete_graph(4), 4)[0]
    ok, sep = is_k_connected(path_graph(3), 2)
    assert not ok and sep.A & sep.B == {1}
    assert is_k_connected(cycle_graph(5), 2)[0]


def test_complete_graph_has_no_separation():
    assert min_separation(complete_graph(5)) is None


def test_negative_k():
    with pytest.raises(ValueError):
        is_k_connected(path_graph(2), -1)


def test_separation_validity():
    g = path_graph(3)
    assert Separation(frozenset({0, 1}), frozenset({1, 2})).is_valid(g)
    assert not Separation(frozenset({0}), frozenset({1, 2})).is_valid(g)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1, max_n=9))
def test_connectivity_matches_networkx(g):
    G = to_nx(g)
    n = g.num_vertices()
    kappa = nx.node_connectivity(G) if n > 1 else 0
    for k in range(0, 5):
        ok, sep = is_k_connected(g, k)
        assert ok == (n >= k + 1 and kappa >= k), (k, kappa)
        if sep is not None:
            assert sep.is_valid(g) and sep.order < k
