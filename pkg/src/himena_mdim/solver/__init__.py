from himena_mdim.solver._resolving import (
    WitnessPair,
    element_vectors,
    is_mixed_resolving_set,
    separation_masks,
    witness_failure,
)
from himena_mdim.solver._search import (
    MdimResult,
    forced_vertices,
    mdim_exact,
    mdim_upper_greedy,
    mixed_resolving_lower_bound,
)
from himena_mdim.solver._formula import mdim_by_formula, solve_mdim

__all__ = [
    "WitnessPair",
    "element_vectors",
    "is_mixed_resolving_set",
    "separation_masks",
    "witness_failure",
    "MdimResult",
    "forced_vertices",
    "mdim_exact",
    "mdim_upper_greedy",
    "mixed_resolving_lower_bound",
    "mdim_by_formula",
    "solve_mdim",
]
