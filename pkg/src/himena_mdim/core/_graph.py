from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np
from numpy.typing import NDArray

from himena_mdim.consts import MAX_ORDER
from himena_mdim.core._bits import iter_bits
from himena_mdim.core._errors import GraphError


class Edge(NamedTuple):
    """An edge stored canonically with ``u < v``."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> Edge:
        if a == b:
            raise GraphError(f"Self-loop at vertex {a} is not an edge.")
        return cls(a, b) if a < b else cls(b, a)

    def __str__(self) -> str:
        return f"{self.u}-{self.v}"


@dataclass(frozen=True)
class Vertex:
    index: int

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (0, self.index, -1)

    def __str__(self) -> str:
        return f"v{self.index}"


@dataclass(frozen=True)
class EdgeElem:
    edge: Edge

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (1, self.edge.u, self.edge.v)

    def __str__(self) -> str:
        return f"e{self.edge}"


MixedElement = Union[Vertex, EdgeElem]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Row ``v`` of ``adj`` is a bitmask whose bit ``u`` is set iff ``uv`` is an edge.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        if not 1 <= n <= MAX_ORDER:
            raise GraphError(f"Graph order must be in [1, {MAX_ORDER}], got {n}.")
        if len(self.adj) != n:
            raise GraphError(f"Expected {n} adjacency rows, got {len(self.adj)}.")
        full = (1 << n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"Row {v} refers to a vertex out of range.")
            if row >> v & 1:
                raise GraphError(f"Self-loop at vertex {v}.")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"Adjacency is not symmetric at ({v}, {u}).")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        """Build a graph from rows already known to be valid."""
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        return self

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from vertex pairs; duplicate edges are collapsed."""
        if not 1 <= n <= MAX_ORDER:
            raise GraphError(f"Graph order must be in [1, {MAX_ORDER}], got {n}.")
        rows = [0] * n
        for a, b in edges:
            a, b = int(a), int(b)
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"Edge ({a}, {b}) has an endpoint out of range 0..{n - 1}.")
            if a == b:
                raise GraphError(f"Self-loop at vertex {a}.")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls._trusted(n, tuple(rows))

    @classmethod
    def from_adjacency_matrix(cls, matrix: NDArray[np.generic] | Sequence[Sequence[int]]) -> Graph:
        arr = np.asarray(matrix)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise GraphError(f"Adjacency matrix must be square, got shape {arr.shape}.")
        rows = tuple(
            sum(1 << int(u) for u in np.flatnonzero(arr[v])) for v in range(arr.shape[0])
        )
        return cls(arr.shape[0], rows)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def n_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[Edge]:
        """Edges in lexicographic order."""
        out: list[Edge] = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                out.append(Edge(u, u + 1 + v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    @property
    def min_degree(self) -> int:
        return min(self.degrees())

    @property
    def max_degree(self) -> int:
        return max(self.degrees())

    def to_adjacency_matrix(self) -> NDArray[np.bool_]:
        arr = np.zeros((self.n, self.n), dtype=np.bool_)
        for u, v in self.edges():
            arr[u, v] = arr[v, u] = True
        return arr

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("Relabeling must be a permutation of the vertices.")
        return Graph.from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def edge_list(self) -> list[tuple[int, int]]:
        return [(e.u, e.v) for e in self.edges()]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_list()!r})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edge_list(n, edges)


def mixed_elements(g: Graph) -> list[MixedElement]:
    """All elements of V(G) and E(G) in canonical order: vertices, then edges."""
    elems: list[MixedElement] = [Vertex(v) for v in range(g.n)]
    elems.extend(EdgeElem(e) for e in g.edges())
    return elems


def component_mask(g: Graph, start: int = 0) -> int:
    """Bitmask of the vertices reachable from ``start``."""
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return component_mask(g) == g.full_mask
