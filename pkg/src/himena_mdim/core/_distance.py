from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from himena_mdim._lazy_import import csgraph, sparse
from himena_mdim.core._bits import iter_bits
from himena_mdim.core._errors import DisconnectedGraphError
from himena_mdim.core._graph import EdgeElem, Graph, MixedElement, Vertex, component_mask


@dataclass(frozen=True, eq=False)
class DistanceData:
    """All-pairs hop distances of a connected graph (read-only ``uint8`` table)."""

    dist: NDArray[np.uint8]

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    def __getitem__(self, key):
        return self.dist[key]


def require_connected(g: Graph) -> None:
    if component_mask(g) != g.full_mask:
        raise DisconnectedGraphError(f"{g!r} is not connected.")


def distance_matrix(g: Graph) -> DistanceData:
    """Breadth-first search from every vertex, one frontier bitmask per level."""
    n = g.n
    dist = np.zeros((n, n), dtype=np.uint8)
    full = g.full_mask
    adj = g.adj
    for s in range(n):
        seen = frontier = 1 << s
        level = 0
        row = dist[s]
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                row[v] = level
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            level += 1
        if seen != full:
            raise DisconnectedGraphError(f"{g!r} is not connected.")
    dist.flags.writeable = False
    return DistanceData(dist)


def reference_distance_matrix(g: Graph) -> NDArray[np.uint8]:
    """Floyd-Warshall distances from ``scipy.sparse.csgraph``, independent of the BFS kernel."""
    mat = sparse.csr_matrix(g.to_adjacency_matrix().astype(np.int8))
    out = csgraph.shortest_path(mat, method="FW", directed=False, unweighted=True)
    if not np.all(np.isfinite(out)):
        raise DisconnectedGraphError(f"{g!r} is not connected.")
    return out.astype(np.uint8)


def mixed_distance(d: DistanceData, x: MixedElement, v: int) -> int:
    """Distance between a vertex or an edge ``x`` and the vertex ``v``."""
    if isinstance(x, Vertex):
        return int(d.dist[x.index, v])
    elif isinstance(x, EdgeElem):
        return int(min(d.dist[x.edge.u, v], d.dist[x.edge.v, v]))
    raise TypeError(f"Expected a Vertex or an EdgeElem, got {type(x)}.")


def element_distance_table(g: Graph, d: DistanceData | None = None) -> NDArray[np.uint8]:
    """Mixed distances of every element (rows, canonical order) to every vertex."""
    if d is None:
        d = distance_matrix(g)
    edges = g.edges()
    if not edges:
        return d.dist.copy()
    us = np.fromiter((e.u for e in edges), dtype=np.intp, count=len(edges))
    vs = np.fromiter((e.v for e in edges), dtype=np.intp, count=len(edges))
    edge_rows = np.minimum(d.dist[us], d.dist[vs])
    return np.concatenate([d.dist, edge_rows], axis=0)
