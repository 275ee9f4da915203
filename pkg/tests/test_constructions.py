import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from himena_mdim.core import (
    Edge,
    Graph,
    GraphError,
    GraphFormatError,
    all_have_maximal_neighbor,
    is_block_graph,
    is_connected,
    is_tree,
    universal_vertices,
)
from himena_mdim.constructions import (
    FAMILY_KINDS,
    FamilySpec,
    amalgamate,
    build_family,
    complete,
    complete_minus_matching,
    cycle,
    family_recipe,
    p3k2,
    g6,
    h_graph,
    h_minus,
    labeled_trees,
    lambda_graph,
    lambda_minus,
    mutually_maximal_edges,
    path,
    prufer_decode,
    random_block_graph,
    random_connected_gnp,
    random_tree,
    random_unicyclic,
    remove_vertex,
    strong_product,
    wheel,
)
from himena_mdim.harness import are_isomorphic_small

from ._strategies import connected_graphs, to_networkx


def test_strong_product_examples():
    assert strong_product(path(2), complete(2)) == complete(4)
    prod = strong_product(path(3), complete(2))
    assert prod.n == 6
    assert prod.n_edges == 11
    assert prod == p3k2()
    assert all_have_maximal_neighbor(prod)


def test_strong_product_too_large():
    with pytest.raises(GraphError):
        strong_product(path(8), path(8))


@settings(max_examples=100, deadline=None)
@given(connected_graphs(1, 6), connected_graphs(1, 6))
def test_strong_product_edge_count(g: Graph, h: Graph):
    prod = strong_product(g, h)
    m_g, m_h = g.n_edges, h.n_edges
    assert prod.n_edges == g.n * m_h + h.n * m_g + 2 * m_g * m_h
    expected = nx.strong_product(to_networkx(g), to_networkx(h))
    assert prod.n_edges == expected.number_of_edges()


def test_amalgamate_triangles():
    a = amalgamate(complete(3), Edge(0, 1), complete(3), Edge(1, 2))
    assert a.n == 4
    assert a.n_edges == 5
    assert sorted(a.degrees()) == [2, 2, 3, 3]


def test_amalgamate_missing_edge():
    with pytest.raises(GraphError):
        amalgamate(path(3), Edge(0, 2), complete(3), Edge(0, 1))


@settings(max_examples=60, deadline=None)
@given(connected_graphs(2, 7), connected_graphs(2, 7), st.booleans())
def test_amalgamate_order(g: Graph, h: Graph, flip: bool):
    a = amalgamate(g, g.edges()[0], h, h.edges()[-1], flip=flip)
    assert a.n == g.n + h.n - 2
    assert a.n_edges == g.n_edges + h.n_edges - 1
    assert is_connected(a)


def test_lambda_5_5():
    lam = lambda_graph(5, 5)
    assert lam.n == 13 == 5 + 2 * (5 - 1)
    assert lam.max_degree == 6
    assert all_have_maximal_neighbor(lam)
    assert lam == amalgamate(h_graph(5), Edge(0, 1), complete(5), Edge(3, 4))


@pytest.mark.parametrize("k", [4, 5, 6])
@pytest.mark.parametrize("r", [4, 5, 6])
def test_lambda_minus_orders(k: int, r: int):
    g = lambda_minus(k, r)
    assert g.n == k + 2 * (r - 1) - 1
    assert g.max_degree == k + 1
    assert all_have_maximal_neighbor(g)


def test_h_graphs():
    h4 = h_graph(4)
    assert h4.n == 8
    assert mutually_maximal_edges(h4) == [Edge(0, 1), Edge(2, 3), Edge(4, 5), Edge(6, 7)]
    assert h4.degree(6) == 3
    h4m = h_minus(4)
    assert h4m == remove_vertex(h4, 6)
    assert h4m.n == 7
    assert h_graph(2) == complete(4)
    assert h_minus(2) == complete(3)


@pytest.mark.parametrize("r", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("end_vertex", ["near0", "near1", "far1"])
def test_h_minus_orientation(r: int, end_vertex: str):
    # every degree-3 end vertex of H_r gives the same graph up to isomorphism
    h = h_graph(r)
    v = {"near0": 0, "near1": 1, "far1": 2 * r - 1}[end_vertex]
    other = remove_vertex(h, v)
    if other.n <= 8:
        assert are_isomorphic_small(h_minus(r), other)
    else:
        assert nx.is_isomorphic(to_networkx(h_minus(r)), to_networkx(other))


def test_g6():
    g = g6()
    assert (g.n, g.n_edges) == (6, 10)
    assert g.degrees() == (2, 4, 4, 4, 4, 2)
    assert all_have_maximal_neighbor(g)


def test_complete_minus_matching():
    g = complete_minus_matching(6, 2)
    assert g.n_edges == 15 - 2
    assert universal_vertices(g) == {4, 5}
    assert all_have_maximal_neighbor(g)
    with pytest.raises(GraphError):
        complete_minus_matching(5, 3)


def test_remove_vertex():
    assert remove_vertex(complete(3), 2) == complete(2)
    p3 = remove_vertex(path(3), 1)
    assert not is_connected(p3)
    with pytest.raises(GraphError):
        remove_vertex(path(3), 3)


def test_mutually_maximal_edges():
    assert len(mutually_maximal_edges(complete(4))) == 6
    assert mutually_maximal_edges(cycle(5)) == []


@pytest.mark.parametrize(
    "text,kind,params,seed",
    [
        ("lambda:5,5", "lambda", (5, 5), None),
        ("g6", "g6", (), None),
        ("random_tree:8:seed=3", "random_tree", (8,), 3),
        ("complete_minus_matching:6,2", "complete_minus_matching", (6, 2), None),
    ],
)
def test_family_spec_parse(text, kind, params, seed):
    spec = FamilySpec.parse(text)
    assert (spec.kind, spec.parameters, spec.seed) == (kind, params, seed)
    assert str(spec) == text


@pytest.mark.parametrize("text", ["", "lambda:", "unknown:3", "path:a", "path:3:seed=x"])
def test_family_spec_parse_errors(text):
    with pytest.raises(GraphFormatError):
        FamilySpec.parse(text)


@pytest.mark.parametrize(
    "spec",
    [
        FamilySpec("lambda", (5,)),
        FamilySpec("path", (4,), seed=1),
        FamilySpec("cycle", (2,)),
        FamilySpec("wheel", (3,)),
        FamilySpec("random_tree", ()),
        FamilySpec("random_tree", (10**9,)),
        FamilySpec("random_block_graph", (1,)),
        FamilySpec("complete", (10**9,)),
    ],
)
def test_build_family_errors(spec):
    with pytest.raises(GraphError):
        build_family(spec)


def test_build_family_kinds():
    assert set(FAMILY_KINDS) >= {"path", "lambda", "lambda_minus", "g6", "wheel"}
    assert build_family(FamilySpec.parse("wheel:6")) == wheel(6)
    t1 = build_family(FamilySpec.parse("random_tree:9:seed=4"))
    t2 = build_family(FamilySpec.parse("random_tree:9:seed=4"))
    assert t1 == t2
    assert is_tree(t1)
    b = build_family(FamilySpec.parse("random_block_graph:9:seed=2"))
    assert b.n == 9
    assert is_block_graph(b)


@pytest.mark.parametrize(
    "n,t,kind",
    [(10, 5, "lambda"), (11, 5, "lambda_minus"), (6, 5, "lambda"), (13, 12, "lambda")],
)
def test_family_recipe(n: int, t: int, kind: str):
    spec = family_recipe(n, t)
    assert spec.kind == kind
    g = build_family(spec)
    assert g.n == n
    assert g.max_degree == t
    assert all_have_maximal_neighbor(g)


def test_family_recipe_errors():
    with pytest.raises(GraphError):
        family_recipe(10, 4)
    with pytest.raises(GraphError):
        family_recipe(7, 7)


def test_labeled_trees():
    trees = list(labeled_trees(5))
    assert len(trees) == 5 ** 3
    assert len(set(trees)) == len(trees)
    assert all(is_tree(t) for t in trees)
    assert list(labeled_trees(2)) == [complete(2)]
    assert [t for head in range(5) for t in labeled_trees(5, head)] == trees
    assert len(list(labeled_trees(6, 0))) == 6 ** 3
    assert prufer_decode([3, 3, 3], 5).degree(3) == 4


@pytest.mark.parametrize("seed", range(5))
def test_random_generators(seed: int):
    rng = np.random.default_rng(seed)
    t = random_tree(8, rng)
    assert is_tree(t)
    u = random_unicyclic(8, rng)
    assert is_connected(u) and u.n_edges == 8
    b = random_block_graph(9, rng)
    assert is_connected(b) and is_block_graph(b)
    g = random_connected_gnp(7, rng)
    assert is_connected(g)
