from himena_mdim.harness._enumerate import (
    enumerate_labeled_connected,
    mask_chunks,
    n_masks,
    rows_from_mask,
)
from himena_mdim.harness._isomorphism import are_isomorphic_small, find_isomorphism
from himena_mdim.harness._parallel import map_ordered, resolve_jobs
from himena_mdim.harness._report import (
    Counterexample,
    VerificationReport,
    replay_counterexample,
)
from himena_mdim.harness._suites import (
    SUITES,
    SuiteOptions,
    run_suites,
    verify_characterization,
    verify_class_formulas,
    verify_cut_bound,
    verify_delta_theorem,
    verify_g6_uniqueness,
    verify_infrastructure,
    verify_products_and_amalgams,
    verify_solver_consistency,
)

__all__ = [
    "enumerate_labeled_connected",
    "mask_chunks",
    "n_masks",
    "rows_from_mask",
    "are_isomorphic_small",
    "find_isomorphism",
    "map_ordered",
    "resolve_jobs",
    "Counterexample",
    "VerificationReport",
    "replay_counterexample",
    "SUITES",
    "SuiteOptions",
    "run_suites",
    "verify_characterization",
    "verify_class_formulas",
    "verify_cut_bound",
    "verify_delta_theorem",
    "verify_g6_uniqueness",
    "verify_infrastructure",
    "verify_products_and_amalgams",
    "verify_solver_consistency",
]
