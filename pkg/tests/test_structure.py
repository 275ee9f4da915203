import networkx as nx
import pytest
from hypothesis import given, settings

from himena_mdim.core import (
    DisconnectedGraphError,
    Graph,
    all_have_maximal_neighbor,
    analyze,
    cut_vertices,
    cut_vertices_and_blocks,
    equality_condition_holds,
    is_block_graph,
    is_chemical,
    is_simplicial,
    is_tree,
    leaves,
    maximal_neighbor_witness,
    universal_vertices,
)
from himena_mdim.constructions import complete, cycle, path, star, strong_product

from ._strategies import connected_graphs, to_networkx

TWO_TRIANGLES = Graph.from_edge_list(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def test_maximal_neighbor_witness(p4: Graph, k3: Graph):
    assert maximal_neighbor_witness(k3, 0) == 1
    assert maximal_neighbor_witness(p4, 0) == 1
    assert maximal_neighbor_witness(p4, 1) is None
    assert maximal_neighbor_witness(p4, 3) == 2


def test_all_have_maximal_neighbor(g6_graph: Graph):
    assert all_have_maximal_neighbor(complete(5))
    assert all_have_maximal_neighbor(g6_graph)
    assert not all_have_maximal_neighbor(cycle(6))
    assert not all_have_maximal_neighbor(path(4))


def test_universal_vertices(p4: Graph):
    assert universal_vertices(star(4)) == {0}
    assert universal_vertices(complete(4)) == {0, 1, 2, 3}
    assert universal_vertices(p4) == frozenset()


def test_cut_vertices_and_blocks(p4: Graph, c5: Graph):
    assert cut_vertices_and_blocks(p4) == (
        frozenset({1, 2}), [(0, 1), (1, 2), (2, 3)]
    )
    assert cut_vertices_and_blocks(c5) == (frozenset(), [(0, 1, 2, 3, 4)])
    assert cut_vertices_and_blocks(TWO_TRIANGLES) == (
        frozenset({2}), [(0, 1, 2), (2, 3, 4)]
    )
    assert cut_vertices_and_blocks(complete(2)) == (frozenset(), [(0, 1)])


def test_cut_vertices_disconnected():
    with pytest.raises(DisconnectedGraphError):
        cut_vertices_and_blocks(Graph.from_edge_list(4, [(0, 1), (2, 3)]))


@settings(max_examples=100, deadline=None)
@given(connected_graphs(max_n=12))
def test_cut_vertices_match_networkx(g: Graph):
    cut, blocks = cut_vertices_and_blocks(g)
    nxg = to_networkx(g)
    assert cut == set(nx.articulation_points(nxg))
    assert sorted(blocks) == sorted(
        tuple(sorted(c)) for c in nx.biconnected_components(nxg)
    )
    shared = set()
    for i, a in enumerate(blocks):
        assert len(a) >= 2
        for b in blocks[i + 1:]:
            common = set(a) & set(b)
            assert len(common) <= 1
            shared |= common
    assert shared == cut


def test_is_block_graph():
    assert is_block_graph(path(5))
    assert is_block_graph(star(4))
    assert is_block_graph(TWO_TRIANGLES)
    assert not is_block_graph(cycle(4))


def test_is_chemical():
    assert not is_chemical(strong_product(path(4), complete(2)))
    assert is_chemical(cycle(6))
    assert is_chemical(complete(5))
    assert not is_chemical(complete(6))


def test_tree_helpers(p4: Graph):
    assert is_tree(p4)
    assert not is_tree(cycle(4))
    assert leaves(p4) == {0, 3}
    assert leaves(star(3)) == {1, 2, 3}


def test_is_simplicial(p4: Graph):
    assert is_simplicial(p4, 0)
    assert not is_simplicial(p4, 1)
    assert is_simplicial(TWO_TRIANGLES, 0)
    assert not is_simplicial(TWO_TRIANGLES, 2)


def test_equality_condition():
    assert equality_condition_holds(path(5))
    assert equality_condition_holds(TWO_TRIANGLES)
    assert not equality_condition_holds(cycle(5))


def test_analyze(g6_graph: Graph):
    report = analyze(TWO_TRIANGLES)
    assert report.zeta == 1
    assert report.cut_vertices == {2}
    assert report.universal == {2}
    assert report.is_block_graph
    assert report.is_chemical
    assert report.maximal_neighbor_of[0] == 1
    doc = analyze(g6_graph).to_dict()
    assert doc["max_degree"] == 4
    assert doc["zeta"] == 0
    assert None not in doc["maximal_neighbor_of"]


@settings(max_examples=100, deadline=None)
@given(connected_graphs(max_n=9))
def test_maximal_neighbor_definition(g: Graph):
    for v in range(g.n):
        y = maximal_neighbor_witness(g, v)
        closed_v = set(g.neighbors(v)) | {v}
        holders = [
            u for u in g.neighbors(v) if closed_v <= set(g.neighbors(u)) | {u}
        ]
        assert y == (min(holders) if holders else None)


@settings(max_examples=150, deadline=None)
@given(connected_graphs(max_n=8))
def test_cut_vertices_have_no_maximal_neighbor(g: Graph):
    for v in cut_vertices(g):
        assert maximal_neighbor_witness(g, v) is None


@settings(max_examples=150, deadline=None)
@given(connected_graphs(max_n=8))
def test_simplicial_vertices_have_maximal_neighbor(g: Graph):
    for v in range(g.n):
        if is_simplicial(g, v):
            assert maximal_neighbor_witness(g, v) is not None
