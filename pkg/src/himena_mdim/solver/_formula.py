from __future__ import annotations

from himena_mdim.consts import FormulaTag
from himena_mdim.core import (
    Graph,
    all_have_maximal_neighbor,
    cut_vertices,
    is_block_graph,
    is_tree,
    leaves,
    universal_vertices,
)
from himena_mdim.solver._search import (
    MdimResult,
    _check_solvable,
    _vectors,
    forced_vertices,
    mdim_exact,
)


def _formula_basis(g: Graph) -> tuple[int, FormulaTag, tuple[int, ...]] | None:
    n = g.n
    if all_have_maximal_neighbor(g):
        return n, "max-mdim", tuple(range(n))
    universal = universal_vertices(g)
    if len(universal) == 1:
        (hub,) = universal
        return n - 1, "one-universal", tuple(v for v in range(n) if v != hub)
    if is_tree(g):
        leaf_set = leaves(g)
        return len(leaf_set), "tree", tuple(sorted(leaf_set))
    if is_block_graph(g):
        cut = cut_vertices(g)
        return n - len(cut), "block-graph", tuple(v for v in range(n) if v not in cut)
    return None


def mdim_by_formula(g: Graph) -> tuple[int, FormulaTag] | None:
    """Closed-form mdim for the graph classes where it is known.

    Checked in order: every vertex has a maximal neighbor (n), exactly one universal
    vertex (n - 1), tree (number of leaves), block graph (n - number of cut vertices).
    """
    _check_solvable(g, guard=False)
    found = _formula_basis(g)
    if found is None:
        return None
    dim, tag, _ = found
    return dim, tag


def solve_mdim(
    g: Graph,
    use_pruning: bool = True,
    use_formula: bool = False,
    certificate: bool = False,
) -> MdimResult:
    """Use the closed form when allowed and applicable, exact search otherwise."""
    _check_solvable(g, guard=not use_formula)
    if use_formula and (found := _formula_basis(g)) is not None:
        dim, tag, basis = found
        return MdimResult(
            dimension=dim,
            basis=basis,
            forced=forced_vertices(g),
            excluded=cut_vertices(g),
            formula_used=tag,
            pruned=use_pruning,
            vectors=_vectors(g, basis) if certificate else [],
        )
    return mdim_exact(g, use_pruning, certificate=certificate)
