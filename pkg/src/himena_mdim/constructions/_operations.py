from __future__ import annotations

from himena_mdim.consts import MAX_ORDER
from himena_mdim.core import Edge, Graph, GraphError


def strong_product(g: Graph, h: Graph) -> Graph:
    """Strong product; vertex ``(a, b)`` gets index ``a * n(h) + b``.

    Two pairs are adjacent iff in each coordinate they are equal or adjacent, and
    they are not equal in both.
    """
    if g.n * h.n > MAX_ORDER:
        raise GraphError(
            f"Strong product of orders {g.n} and {h.n} exceeds {MAX_ORDER} vertices."
        )
    nh = h.n
    rows: list[int] = []
    for a in range(g.n):
        closed_a = g.closed_neighborhood(a)
        for b in range(nh):
            row = 0
            block = h.closed_neighborhood(b)
            for c in range(g.n):
                if closed_a >> c & 1:
                    row |= block << (c * nh)
            rows.append(row & ~(1 << (a * nh + b)))
    return Graph(g.n * nh, tuple(rows))


def amalgamate(g: Graph, e_g: Edge, h: Graph, e_h: Edge, flip: bool = False) -> Graph:
    """Disjoint union of ``g`` and ``h`` with the edges ``e_g`` and ``e_h`` identified.

    The lower endpoint of ``e_h`` is glued to the lower endpoint of ``e_g`` (upper to
    lower if ``flip``). Vertices of ``g`` keep their indices, the remaining vertices
    of ``h`` follow in index order.
    """
    e_g, e_h = Edge.of(*e_g), Edge.of(*e_h)
    if not g.has_edge(*e_g):
        raise GraphError(f"Edge {e_g} is not an edge of the first graph.")
    if not h.has_edge(*e_h):
        raise GraphError(f"Edge {e_h} is not an edge of the second graph.")
    n = g.n + h.n - 2
    if n > MAX_ORDER:
        raise GraphError(f"Amalgamation would have {n} > {MAX_ORDER} vertices.")
    mapping: dict[int, int] = {}
    if flip:
        mapping[e_h.u], mapping[e_h.v] = e_g.v, e_g.u
    else:
        mapping[e_h.u], mapping[e_h.v] = e_g.u, e_g.v
    next_index = g.n
    for v in range(h.n):
        if v not in mapping:
            mapping[v] = next_index
            next_index += 1
    edges = g.edge_list() + [(mapping[u], mapping[v]) for u, v in h.edge_list()]
    return Graph.from_edge_list(n, edges)


def remove_vertex(g: Graph, v: int) -> Graph:
    """Delete ``v``; higher indices shift down by one. Connectivity is not checked."""
    if not 0 <= v < g.n:
        raise GraphError(f"Vertex {v} is out of range 0..{g.n - 1}.")
    if g.n == 1:
        raise GraphError("Cannot remove the only vertex of a graph.")

    def _shift(x: int) -> int:
        return x - 1 if x > v else x

    edges = [(_shift(a), _shift(b)) for a, b in g.edge_list() if v not in (a, b)]
    return Graph.from_edge_list(g.n - 1, edges)


def mutually_maximal_edges(g: Graph) -> list[Edge]:
    """Edges whose endpoints are maximal neighbors of each other (closed twins)."""
    return [
        e
        for e in g.edges()
        if g.closed_neighborhood(e.u) == g.closed_neighborhood(e.v)
    ]
