import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from himena_mdim.core import (
    DisconnectedGraphError,
    Edge,
    EdgeElem,
    Graph,
    GraphError,
    Vertex,
    distance_matrix,
    element_distance_table,
    is_connected,
    mixed_distance,
    mixed_elements,
    reference_distance_matrix,
)
from himena_mdim.constructions import complete, cycle, path

from ._strategies import connected_graphs, to_networkx


def test_from_edge_list():
    k2 = Graph.from_edge_list(2, [(0, 1)])
    assert k2.n_edges == 1
    assert k2.edges() == [Edge(0, 1)]
    p4 = Graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    assert p4 == path(4)
    assert p4.degrees() == (1, 2, 2, 1)


def test_g6_degrees(g6_graph: Graph):
    assert g6_graph.n == 6
    assert g6_graph.n_edges == 10
    assert sorted(g6_graph.degrees(), reverse=True) == [4, 4, 4, 4, 2, 2]
    assert g6_graph.max_degree == 4
    assert g6_graph.min_degree == 2


def test_edges_are_canonical():
    g = Graph.from_edge_list(3, [(2, 0), (1, 0), (0, 2)])
    assert g.edge_list() == [(0, 1), (0, 2)]
    assert Edge.of(2, 0) == Edge(0, 2)
    assert str(Edge(0, 2)) == "0-2"


@pytest.mark.parametrize(
    "n,edges",
    [
        (3, [(0, 3)]),
        (3, [(1, 1)]),
        (0, []),
        (63, []),
        (2, [(-1, 0)]),
    ],
)
def test_from_edge_list_errors(n, edges):
    with pytest.raises(GraphError):
        Graph.from_edge_list(n, edges)


def test_asymmetric_rows_rejected():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))
    with pytest.raises(GraphError):
        Graph(2, (0b01, 0b00))


def test_is_connected(g6_graph: Graph):
    assert is_connected(complete(2))
    assert not is_connected(Graph.from_edge_list(4, [(0, 1), (2, 3)]))
    assert is_connected(g6_graph)
    assert is_connected(Graph.from_edge_list(1, []))


def test_distance_matrix_examples():
    assert distance_matrix(path(3))[0, 2] == 2
    d = distance_matrix(complete(4)).dist
    assert np.all(d[~np.eye(4, dtype=bool)] == 1)
    c5 = distance_matrix(cycle(5))
    assert c5[0, 2] == 2
    assert c5[0, 3] == 2


def test_distance_matrix_is_read_only():
    d = distance_matrix(path(4))
    assert d.dist.dtype == np.uint8
    with pytest.raises(ValueError):
        d.dist[0, 1] = 5


def test_distance_matrix_disconnected():
    with pytest.raises(DisconnectedGraphError):
        distance_matrix(Graph.from_edge_list(4, [(0, 1), (2, 3)]))


def test_mixed_distance():
    d3 = distance_matrix(path(3))
    assert mixed_distance(d3, EdgeElem(Edge(0, 1)), 0) == 0
    assert mixed_distance(d3, EdgeElem(Edge(0, 1)), 2) == 1
    assert mixed_distance(d3, Vertex(0), 2) == 2
    assert mixed_distance(distance_matrix(path(4)), EdgeElem(Edge(1, 2)), 3) == 1
    with pytest.raises(TypeError):
        mixed_distance(d3, (0, 1), 0)


def test_mixed_elements_order():
    elems = mixed_elements(cycle(4))
    assert [str(e) for e in elems] == [
        "v0", "v1", "v2", "v3", "e0-1", "e0-3", "e1-2", "e2-3"
    ]
    assert elems == sorted(elems, key=lambda e: e.sort_key)


def test_element_distance_table():
    g = path(4)
    table = element_distance_table(g)
    assert table.shape == (g.n + g.n_edges, g.n)
    d = distance_matrix(g)
    for row, elem in zip(table, mixed_elements(g)):
        assert list(row) == [mixed_distance(d, elem, v) for v in range(g.n)]


def test_relabel_and_adjacency_matrix(g6_graph: Graph):
    arr = g6_graph.to_adjacency_matrix()
    assert Graph.from_adjacency_matrix(arr) == g6_graph
    perm = [5, 4, 3, 2, 1, 0]
    relabeled = g6_graph.relabel(perm)
    assert relabeled.degrees() == tuple(g6_graph.degree(5 - w) for w in range(6))
    with pytest.raises(GraphError):
        g6_graph.relabel([0, 0, 1, 2, 3, 4])


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=10))
def test_distance_matrix_matches_oracles(g: Graph):
    d = distance_matrix(g).dist
    np.testing.assert_array_equal(d, reference_distance_matrix(g))
    lengths = dict(nx.all_pairs_shortest_path_length(to_networkx(g)))
    for u in range(g.n):
        for v in range(g.n):
            assert d[u, v] == lengths[u][v]


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=10))
def test_distance_is_a_metric(g: Graph):
    d = distance_matrix(g).dist.astype(int)
    assert np.all(d == d.T)
    assert np.all(np.diag(d) == 0)
    assert np.all(d[:, None, :] <= d[:, :, None] + d[None, :, :])
    for u, v in g.edge_list():
        assert d[u, v] == 1
