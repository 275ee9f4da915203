from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

import numpy as np

from himena_mdim.consts import GNP_EDGE_PROBABILITY, RandomModel
from himena_mdim.core import Graph, GraphError, is_connected


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    """Labeled tree on ``n`` vertices encoded by a Prüfer sequence of length n-2."""
    if n < 1:
        raise GraphError(f"A tree needs at least one vertex, got {n}.")
    if n == 1:
        return Graph.from_edge_list(1, [])
    if len(seq) != n - 2:
        raise GraphError(f"Prüfer sequence for n={n} must have length {n - 2}.")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges: list[tuple[int, int]] = []
    for x in seq:
        leaf = degree.index(1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return Graph.from_edge_list(n, edges)


def labeled_trees(n: int, first: int | None = None) -> Iterator[Graph]:
    """Every labeled tree on ``n`` vertices exactly once (n^(n-2) of them).

    With ``first``, only the trees whose Prüfer sequence starts with ``first``.
    """
    if n <= 2:
        if first is None:
            yield prufer_decode((), n)
        return
    heads = range(n) if first is None else (first,)
    for head in heads:
        for rest in product(range(n), repeat=n - 3):
            yield prufer_decode((head,) + rest, n)


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """Uniform labeled tree via a random Prüfer sequence."""
    if n <= 2:
        return prufer_decode((), n)
    return prufer_decode([int(x) for x in rng.integers(0, n, size=n - 2)], n)


def random_block_graph(n: int, rng: np.random.Generator) -> Graph:
    """Tree of cliques: a clique of size 2..4, then cliques attached at random vertices."""
    if n < 2:
        raise GraphError(f"A random block graph needs n >= 2, got {n}.")
    size = min(int(rng.integers(2, 5)), n)
    edges = [(i, j) for i in range(size) for j in range(i + 1, size)]
    count = size
    while count < n:
        anchor = int(rng.integers(0, count))
        added = min(int(rng.integers(1, 4)), n - count)
        clique = [anchor] + list(range(count, count + added))
        edges.extend(
            (clique[i], clique[j])
            for i in range(len(clique))
            for j in range(i + 1, len(clique))
        )
        count += added
    return Graph.from_edge_list(n, edges)


def random_unicyclic(n: int, rng: np.random.Generator) -> Graph:
    """Random tree plus one random non-edge, so exactly one cycle."""
    if n < 3:
        raise GraphError(f"A unicyclic graph needs n >= 3, got {n}.")
    tree = random_tree(n, rng)
    non_edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if not tree.has_edge(i, j)
    ]
    extra = non_edges[int(rng.integers(0, len(non_edges)))]
    return Graph.from_edge_list(n, tree.edge_list() + [extra])


def random_connected_gnp(
    n: int,
    rng: np.random.Generator,
    p: float = GNP_EDGE_PROBABILITY,
    max_tries: int = 10_000,
) -> Graph:
    """Erdős–Rényi G(n, p) conditioned on connectivity by rejection."""
    iu, ju = np.triu_indices(n, 1)
    for _ in range(max_tries):
        keep = rng.random(iu.size) < p
        g = Graph.from_edge_list(n, zip(iu[keep].tolist(), ju[keep].tolist()))
        if is_connected(g):
            return g
    raise RuntimeError(f"No connected G({n}, {p}) sample in {max_tries} tries.")


def random_connected(model: RandomModel, n: int, rng: np.random.Generator) -> Graph:
    if model == "tree":
        return random_tree(n, rng)
    elif model == "unicyclic":
        return random_unicyclic(n, rng)
    elif model == "block":
        return random_block_graph(n, rng)
    elif model == "gnp":
        return random_connected_gnp(n, rng)
    raise ValueError(f"Unknown random graph model {model!r}.")
