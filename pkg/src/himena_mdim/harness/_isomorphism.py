from __future__ import annotations

from himena_mdim.consts import ISOMORPHISM_MAX_ORDER
from himena_mdim.core import Graph, GraphError


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A vertex map ``perm`` with ``uv ∈ E(g) ⟺ perm[u]perm[v] ∈ E(h)``, or None.

    Degree sequences are compared first; the permutation search then only pairs
    vertices of equal degree and checks adjacency against already placed vertices.
    """
    if max(g.n, h.n) > ISOMORPHISM_MAX_ORDER:
        raise GraphError(
            f"Isomorphism check is limited to n <= {ISOMORPHISM_MAX_ORDER}."
        )
    if g.n != h.n or g.n_edges != h.n_edges:
        return None
    deg_g, deg_h = g.degrees(), h.degrees()
    if sorted(deg_g) != sorted(deg_h):
        return None
    n = g.n
    order = sorted(range(n), key=lambda v: (-deg_g[v], v))
    perm = [-1] * n
    used = [False] * n

    def _place(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for cand in range(n):
            if used[cand] or deg_h[cand] != deg_g[v]:
                continue
            if any(
                g.has_edge(v, order[j]) != h.has_edge(cand, perm[order[j]])
                for j in range(i)
            ):
                continue
            perm[v] = cand
            used[cand] = True
            if _place(i + 1):
                return True
            used[cand] = False
        perm[v] = -1
        return False

    return perm if _place(0) else None


def are_isomorphic_small(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None
