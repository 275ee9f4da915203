from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
import logging
from typing import Any

from himena_mdim.consts import SOLVER_MAX_ORDER, FormulaTag
from himena_mdim.core import (
    Graph,
    GraphError,
    cut_vertices,
    element_distance_table,
    maximal_neighbor_witness,
    require_connected,
)
from himena_mdim.solver._resolving import element_vectors, separation_masks

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MdimResult:
    """Mixed metric dimension with a basis and the data that certified it."""

    dimension: int
    basis: tuple[int, ...]
    forced: frozenset[int]
    excluded: frozenset[int] = frozenset()
    nodes_searched: int = 0
    formula_used: FormulaTag | None = None
    pruned: bool = True
    vectors: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    def to_dict(self, certificate: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {
            "dimension": self.dimension,
            "basis": list(self.basis),
            "forced": sorted(self.forced),
            "excluded": sorted(self.excluded),
            "nodes_searched": self.nodes_searched,
            "formula_used": self.formula_used,
            "pruned": self.pruned,
        }
        if certificate:
            out["vectors"] = [
                {"element": name, "vector": list(vec)} for name, vec in self.vectors
            ]
        return out


def forced_vertices(g: Graph) -> frozenset[int]:
    """Vertices with a maximal neighbor; every mixed resolving set contains them."""
    _check_solvable(g, guard=False)
    return frozenset(v for v in range(g.n) if maximal_neighbor_witness(g, v) is not None)


def mixed_resolving_lower_bound(g: Graph) -> int:
    return len(forced_vertices(g))


def _check_solvable(g: Graph, guard: bool = True) -> None:
    if g.n < 2:
        raise GraphError("The mixed metric dimension needs a graph with n >= 2.")
    if guard and g.n > SOLVER_MAX_ORDER:
        raise GraphError(
            f"Exact search is limited to n <= {SOLVER_MAX_ORDER}, got n = {g.n}."
        )
    require_connected(g)


def mdim_exact(
    g: Graph, use_pruning: bool = True, *, certificate: bool = False
) -> MdimResult:
    """Minimum mixed resolving set by search in increasing cardinality.

    With pruning, candidates contain every forced vertex and no cut vertex.
    Within a cardinality, sets are tried in lexicographic order, so the first hit
    is the lexicographically smallest basis of the searched space. With
    ``certificate`` the element-vector table of the basis is attached.
    """
    _check_solvable(g)
    forced = forced_vertices(g)
    table = element_distance_table(g)
    masks, full = separation_masks(table)
    if use_pruning:
        excluded = cut_vertices(g)
        fixed = sorted(forced)
        free = [v for v in range(g.n) if v not in forced and v not in excluded]
    else:
        excluded = frozenset()
        fixed = []
        free = list(range(g.n))
    base_cover = 0
    for v in fixed:
        base_cover |= masks[v]

    nodes = 0
    start = max(len(fixed), 1)
    for size in range(start, len(fixed) + len(free) + 1):
        for extra in combinations(free, size - len(fixed)):
            nodes += 1
            cover = base_cover
            for v in extra:
                cover |= masks[v]
            if cover == full:
                basis = tuple(sorted(fixed + list(extra)))
                logger.debug(
                    "mdim=%d for %r after %d candidate sets", size, g, nodes
                )
                return MdimResult(
                    dimension=size,
                    basis=basis,
                    forced=forced,
                    excluded=excluded,
                    nodes_searched=nodes,
                    pruned=use_pruning,
                    vectors=_vectors(g, basis) if certificate else [],
                )
    raise RuntimeError(f"No mixed resolving set found for {g!r} within the search space.")


def mdim_upper_greedy(g: Graph) -> tuple[int, frozenset[int]]:
    """Greedy mixed resolving set: repeatedly add the vertex separating most open pairs."""
    _check_solvable(g, guard=False)
    masks, unresolved = separation_masks(element_distance_table(g))
    chosen: list[int] = []
    while unresolved:
        best, best_gain = -1, 0
        for v in range(g.n):
            if v in chosen:
                continue
            gain = (masks[v] & unresolved).bit_count()
            if gain > best_gain:
                best, best_gain = v, gain
        if best < 0:
            raise RuntimeError(f"Vertex set of {g!r} does not resolve all elements.")
        chosen.append(best)
        unresolved &= ~masks[best]
    return len(chosen), frozenset(chosen)


def _vectors(g: Graph, basis: tuple[int, ...]) -> list[tuple[str, tuple[int, ...]]]:
    return [(str(elem), vec) for elem, vec in element_vectors(g, basis)]
