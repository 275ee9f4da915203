from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from himena_mdim.consts import CHEMICAL_MAX_DEGREE
from himena_mdim.core._bits import iter_bits, mask_of
from himena_mdim.core._distance import require_connected
from himena_mdim.core._graph import Graph


def maximal_neighbor_witness(g: Graph, v: int) -> int | None:
    """Smallest neighbor ``y`` of ``v`` with ``N[v] ⊆ N[y]``, or None."""
    closed_v = g.adj[v] | (1 << v)
    for y in iter_bits(g.adj[v]):
        if closed_v & ~(g.adj[y] | (1 << y)) == 0:
            return y
    return None


def all_have_maximal_neighbor(g: Graph) -> bool:
    """True iff every vertex has a maximal neighbor, i.e. the graph is max-mdim."""
    return all(maximal_neighbor_witness(g, v) is not None for v in range(g.n))


def universal_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.degree(v) == g.n - 1)


def is_chemical(g: Graph) -> bool:
    return g.max_degree <= CHEMICAL_MAX_DEGREE


def is_simplicial(g: Graph, v: int) -> bool:
    """True if the neighborhood of ``v`` induces a clique."""
    nbrs = g.adj[v]
    return all(nbrs & ~g.adj[u] == 1 << u for u in iter_bits(nbrs))


def is_tree(g: Graph) -> bool:
    require_connected(g)
    return g.n_edges == g.n - 1


def leaves(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.degree(v) == 1)


def cut_vertices_and_blocks(g: Graph) -> tuple[frozenset[int], list[tuple[int, ...]]]:
    """Cut vertices and blocks from one iterative depth-first lowpoint pass.

    Blocks are listed in discovery order (by their first traversed edge), each as a
    sorted tuple.
    """
    require_connected(g)
    n = g.n
    discovery = [-1] * n
    low = [0] * n
    discovery[0] = 0
    counter = 1
    cut: set[int] = set()
    found: list[tuple[int, tuple[int, ...]]] = []
    edge_stack: list[tuple[int, int, int]] = []
    edge_index: dict[tuple[int, int], int] = {}
    root_children = 0
    stack = [(0, 0, iter(g.neighbors(0)))]
    while stack:
        grandparent, parent, children = stack[-1]
        child = next(children, None)
        if child is not None:
            if child == grandparent:
                continue
            if discovery[child] >= 0:
                if discovery[child] <= discovery[parent]:  # back edge
                    low[parent] = min(low[parent], discovery[child])
                    edge_index[parent, child] = len(edge_stack)
                    edge_stack.append((parent, child, len(edge_index)))
            else:
                discovery[child] = low[child] = counter
                counter += 1
                stack.append((parent, child, iter(g.neighbors(child))))
                edge_index[parent, child] = len(edge_stack)
                edge_stack.append((parent, child, len(edge_index)))
            continue
        stack.pop()
        if len(stack) > 1:
            if low[parent] >= discovery[grandparent]:
                found.append(_pop_block(edge_stack, edge_index[grandparent, parent]))
                cut.add(grandparent)
            low[grandparent] = min(low[parent], low[grandparent])
        elif stack:
            root_children += 1
            found.append(_pop_block(edge_stack, edge_index[grandparent, parent]))
    if root_children > 1:
        cut.add(0)
    found.sort()
    return frozenset(cut), [block for _, block in found]


def _pop_block(
    edge_stack: list[tuple[int, int, int]], start: int
) -> tuple[int, tuple[int, ...]]:
    popped = edge_stack[start:]
    del edge_stack[start:]
    first = min(serial for _, _, serial in popped)
    vertices = {v for a, b, _ in popped for v in (a, b)}
    return first, tuple(sorted(vertices))


def cut_vertices(g: Graph) -> frozenset[int]:
    return cut_vertices_and_blocks(g)[0]


def is_block_graph(g: Graph) -> bool:
    """True iff every block induces a complete subgraph."""
    _, blocks = cut_vertices_and_blocks(g)
    for block in blocks:
        bmask = mask_of(block)
        for v in block:
            if g.adj[v] & bmask != bmask & ~(1 << v):
                return False
    return True


def equality_condition_holds(g: Graph) -> bool:
    """Every vertex that is not a cut vertex has a maximal neighbor."""
    cut = cut_vertices(g)
    return all(
        maximal_neighbor_witness(g, v) is not None for v in range(g.n) if v not in cut
    )


@dataclass(frozen=True)
class StructureReport:
    min_degree: int
    max_degree: int
    universal: frozenset[int]
    cut_vertices: frozenset[int]
    zeta: int
    blocks: list[tuple[int, ...]] = field(default_factory=list)
    is_block_graph: bool = False
    is_chemical: bool = False
    maximal_neighbor_of: tuple[int | None, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "universal": sorted(self.universal),
            "cut_vertices": sorted(self.cut_vertices),
            "zeta": self.zeta,
            "blocks": [list(b) for b in self.blocks],
            "is_block_graph": self.is_block_graph,
            "is_chemical": self.is_chemical,
            "maximal_neighbor_of": list(self.maximal_neighbor_of),
        }


def analyze(g: Graph) -> StructureReport:
    cut, blocks = cut_vertices_and_blocks(g)
    return StructureReport(
        min_degree=g.min_degree,
        max_degree=g.max_degree,
        universal=universal_vertices(g),
        cut_vertices=cut,
        zeta=len(cut),
        blocks=blocks,
        is_block_graph=is_block_graph(g),
        is_chemical=is_chemical(g),
        maximal_neighbor_of=tuple(maximal_neighbor_witness(g, v) for v in range(g.n)),
    )
