from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
import logging
import time
from typing import Any, Callable, Iterable

import numpy as np

from himena_mdim.consts import (
    DEFAULT_BLOCK_GRAPH_TRIALS,
    DEFAULT_CONSISTENCY_TRIALS,
    DEFAULT_CUT_BOUND_TRIALS,
    DEFAULT_DELTA_SAMPLES,
    DEFAULT_DISTANCE_TRIALS,
    DEFAULT_GRAPH6_CORPUS,
    DEFAULT_SEED,
    DISTANCE_ORACLE_MAX_ORDER,
    ENUMERATION_MIN_ORDER,
    FAMILY_THEOREM_MAX_ORDER,
    FAMILY_THEOREM_MIN_DEGREE,
    MAX_ORDER,
    RANDOM_MAX_ORDER,
    RANDOM_MIN_ORDER,
    RANDOM_MODELS,
)
from himena_mdim.constructions import (
    amalgamate,
    build_family,
    complete,
    family_recipe,
    g6,
    h_graph,
    h_minus,
    labeled_trees,
    lambda_graph,
    lambda_minus,
    mutually_maximal_edges,
    random_block_graph,
    random_connected,
    strong_product,
)
from himena_mdim.core import (
    Graph,
    all_have_maximal_neighbor,
    cut_vertices,
    distance_matrix,
    element_distance_table,
    equality_condition_holds,
    is_block_graph,
    leaves,
    reference_distance_matrix,
    universal_vertices,
)
from himena_mdim.formats import emit_graph6, parse_graph6
from himena_mdim.harness._enumerate import (
    enumerate_labeled_connected,
    mask_chunks,
    rows_connected,
    rows_from_mask,
)
from himena_mdim.harness._isomorphism import are_isomorphic_small
from himena_mdim.harness._parallel import map_ordered
from himena_mdim.harness._report import Counterexample, VerificationReport
from himena_mdim.solver import (
    is_mixed_resolving_set,
    mdim_by_formula,
    mdim_exact,
    mdim_upper_greedy,
)

logger = logging.getLogger(__name__)

# work items per exhaustive pass, independent of the job count
_CHUNKS = 64
_DELTA_ORDER = 7
_DELTA_MAX_DEGREE = 4
_G6_ORDER = 6
_G6_DEGREE = 4
_EXHAUSTIVE_MAX_ORDER = 6
_TREE_MAX_ORDER = 7
_PRODUCT_MAX_ORDER = 5
_PRODUCT_EXACT_MAX_ORDER = 4
_AMALGAM_BASE_ORDERS = (4, 5, 6)
_FAMILY_SWEEP = range(4, 9)


@dataclass
class _Tally:
    """Partial result of one work item; merged in item order."""

    checked: int = 0
    counterexample: Counterexample | None = None
    counts: Counter[str] = field(default_factory=Counter)

    def fail(self, g: Graph, witness: str) -> None:
        if self.counterexample is None:
            self.counterexample = Counterexample.of(g, witness)

    def update(self, other: _Tally) -> _Tally:
        self.checked += other.checked
        if self.counterexample is None:
            self.counterexample = other.counterexample
        self.counts.update(other.counts)
        return self

    @classmethod
    def combine(cls, parts: Iterable[_Tally]) -> _Tally:
        out = cls()
        for part in parts:
            out.update(part)
        return out


def _finish(
    suite: str,
    tally: _Tally,
    start: float,
    notes: str,
    parameters: dict[str, Any] | None = None,
) -> VerificationReport:
    report = VerificationReport(
        suite=suite,
        instances_checked=tally.checked,
        passed=tally.counterexample is None,
        counterexample=tally.counterexample,
        elapsed=time.perf_counter() - start,
        notes=notes,
        parameters=parameters or {},
    )
    logger.info(
        "%s finished: %s after %d instances",
        suite,
        "passed" if report.passed else "FAILED",
        report.instances_checked,
    )
    return report


def _trial_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, index])


def _trial_chunks(trials: int) -> list[tuple[int, int]]:
    step = max(1, -(-trials // _CHUNKS))
    return [(a, min(a + step, trials)) for a in range(0, trials, step)]


def _check_trials(trials: int) -> None:
    if trials < 1:
        raise ValueError(f"Number of trials must be at least 1, got {trials}.")


def _random_instance(seed: int, index: int) -> tuple[Graph, np.random.Generator]:
    rng = _trial_rng(seed, index)
    model = RANDOM_MODELS[index % len(RANDOM_MODELS)]
    n = int(rng.integers(RANDOM_MIN_ORDER, RANDOM_MAX_ORDER + 1))
    return random_connected(model, n, rng), rng


###############################################################################
#   characterization
###############################################################################


def _characterization_chunk(n: int, start: int, stop: int) -> _Tally:
    tally = _Tally()
    for g in enumerate_labeled_connected(n, start, stop):
        tally.checked += 1
        dim = mdim_exact(g).dimension
        predicate = all_have_maximal_neighbor(g)
        if predicate:
            tally.counts["max_mdim"] += 1
        if (dim == n) != predicate:
            tally.fail(
                g, f"mdim = {dim} but every-vertex-has-a-maximal-neighbor is {predicate}"
            )
    return tally


def verify_characterization(n: int, jobs: int | None = None) -> VerificationReport:
    """mdim(G) = n(G) exactly when every vertex has a maximal neighbor, for all
    connected labeled graphs on ``n`` vertices."""
    if not ENUMERATION_MIN_ORDER <= n <= _EXHAUSTIVE_MAX_ORDER:
        raise ValueError(
            f"Characterization is checked for {ENUMERATION_MIN_ORDER} <= n <= "
            f"{_EXHAUSTIVE_MAX_ORDER}, got {n}."
        )
    start = time.perf_counter()
    logger.info("characterization: n=%d", n)
    items = [(n, a, b) for a, b in mask_chunks(n, _CHUNKS)]
    tally = _Tally.combine(map_ordered(_characterization_chunk, items, jobs))
    notes = (
        f"{tally.counts['max_mdim']} of {tally.checked} connected labeled graphs "
        f"on {n} vertices are max-mdim"
    )
    return _finish("characterization", tally, start, notes, {"n": n})


###############################################################################
#   maximum degree of max-mdim graphs
###############################################################################


def _chemical_rows(mask: int) -> tuple[int, ...] | None:
    rows = rows_from_mask(_DELTA_ORDER, mask)
    if max(row.bit_count() for row in rows) > _DELTA_MAX_DEGREE:
        return None
    if not rows_connected(rows):
        return None
    return rows


def _delta_chunk(start: int, stop: int) -> _Tally:
    tally = _Tally()
    for mask in range(start, stop):
        rows = _chemical_rows(mask)
        if rows is None:
            continue
        tally.checked += 1
        g = Graph._trusted(_DELTA_ORDER, rows)
        if all_have_maximal_neighbor(g):
            tally.fail(g, "every vertex has a maximal neighbor although Δ <= 4")
    return tally


def _delta_sample_chunk(masks: tuple[int, ...]) -> _Tally:
    tally = _Tally()
    for mask in masks:
        g = Graph._trusted(_DELTA_ORDER, rows_from_mask(_DELTA_ORDER, mask))
        tally.checked += 1
        dim = mdim_exact(g).dimension
        tally.counts[f"mdim={dim}"] += 1
        if dim >= _DELTA_ORDER:
            tally.fail(g, f"sampled graph has mdim = {dim}")
    return tally


def verify_delta_theorem(
    samples: int = DEFAULT_DELTA_SAMPLES,
    seed: int = DEFAULT_SEED,
    jobs: int | None = None,
) -> VerificationReport:
    """No connected graph on 7 vertices with maximum degree at most 4 is max-mdim.

    The exhaustive pass checks the maximal-neighbor predicate only; ``samples``
    graphs drawn from the same set are solved exactly as a cross-check.
    """
    _check_trials(samples)
    start = time.perf_counter()
    logger.info("delta theorem: exhaustive pass over n=%d", _DELTA_ORDER)
    items = list(mask_chunks(_DELTA_ORDER, _CHUNKS))
    exhaustive = _Tally.combine(map_ordered(_delta_chunk, items, jobs))

    rng = np.random.default_rng(seed)
    total = 1 << (_DELTA_ORDER * (_DELTA_ORDER - 1) // 2)
    picked: list[int] = []
    while len(picked) < samples:
        mask = int(rng.integers(0, total))
        if _chemical_rows(mask) is not None:
            picked.append(mask)
    logger.info("delta theorem: solving %d sampled graphs", samples)
    sample_items = [(tuple(picked[a:b]),) for a, b in _trial_chunks(samples)]
    sampled = _Tally.combine(map_ordered(_delta_sample_chunk, sample_items, jobs))

    # samples are a subset of the exhaustive pass, so only their verdict is merged
    tally = exhaustive.update(_Tally(counterexample=sampled.counterexample))
    max_dim = max(int(key.split("=")[1]) for key in sampled.counts)
    notes = (
        f"{exhaustive.checked} connected graphs on {_DELTA_ORDER} vertices with "
        f"Δ <= {_DELTA_MAX_DEGREE}, none max-mdim; {samples} sampled graphs solved "
        f"exactly, largest mdim {max_dim}"
    )
    params = {"samples": samples, "seed": seed}
    return _finish("delta", tally, start, notes, params)


###############################################################################
#   uniqueness of G6
###############################################################################


def _g6_chunk(start: int, stop: int) -> _Tally:
    tally = _Tally()
    reference = g6()
    for g in enumerate_labeled_connected(_G6_ORDER, start, stop):
        if g.max_degree != _G6_DEGREE or not all_have_maximal_neighbor(g):
            continue
        tally.checked += 1
        if not are_isomorphic_small(g, reference):
            tally.fail(g, "max-mdim graph with Δ = 4 not isomorphic to G6")
    return tally


def verify_g6_uniqueness(jobs: int | None = None) -> VerificationReport:
    """Every max-mdim graph on 6 vertices with maximum degree 4 is isomorphic to G6."""
    start = time.perf_counter()
    reference = g6()
    tally = _Tally()
    if not all_have_maximal_neighbor(reference):
        tally.fail(reference, "G6 itself does not satisfy the max-mdim predicate")
    items = list(mask_chunks(_G6_ORDER, _CHUNKS))
    tally.update(_Tally.combine(map_ordered(_g6_chunk, items, jobs)))
    if tally.checked == 0:
        tally.fail(reference, "no labeled copy of G6 found by the enumeration")
    notes = f"{tally.checked} labeled max-mdim graphs with n = 6 and Δ = 4, all ≅ G6"
    return _finish("g6-uniqueness", tally, start, notes)


###############################################################################
#   cut-vertex bound
###############################################################################


def _cut_bound_chunk(seed: int, start: int, stop: int) -> _Tally:
    tally = _Tally()
    for index in range(start, stop):
        g, rng = _random_instance(seed, index)
        tally.checked += 1
        n = g.n
        cut = cut_vertices(g)
        bound = n - len(cut)
        result = mdim_exact(g)
        if result.dimension > bound:
            tally.fail(g, f"mdim = {result.dimension} exceeds n - ζ = {bound}")
            continue
        equality = result.dimension == bound
        condition = equality_condition_holds(g)
        if equality != condition:
            tally.fail(
                g,
                f"mdim = n - ζ is {equality} but the non-cut maximal-neighbor "
                f"condition is {condition}",
            )
            continue
        tally.counts["equality"] += int(equality)

        table = element_distance_table(g)
        extras = np.flatnonzero(rng.random(n) < 0.5).tolist()
        superset = set(result.basis) | set(cut) | set(extras)
        for v in sorted(cut):
            tally.counts["removals"] += 1
            if not is_mixed_resolving_set(g, superset - {v}, table=table):
                tally.fail(
                    g,
                    f"removing cut vertex {v} from the resolving set "
                    f"{sorted(superset)} breaks resolution",
                )
                break
    return tally


def verify_cut_bound(
    trials: int = DEFAULT_CUT_BOUND_TRIALS,
    seed: int = DEFAULT_SEED,
    jobs: int | None = None,
) -> VerificationReport:
    """mdim(G) <= n - ζ(G) with the equality condition, and cut vertices are
    removable from any mixed resolving set, on seeded random connected graphs."""
    _check_trials(trials)
    start = time.perf_counter()
    logger.info("cut bound: %d trials, seed %d", trials, seed)
    items = [(seed, a, b) for a, b in _trial_chunks(trials)]
    tally = _Tally.combine(map_ordered(_cut_bound_chunk, items, jobs))
    notes = (
        f"equality in {tally.counts['equality']} of {tally.checked} graphs; "
        f"{tally.counts['removals']} cut-vertex removals checked"
    )
    return _finish("cut-bound", tally, start, notes, {"trials": trials, "seed": seed})


###############################################################################
#   closed formulas for trees, block graphs and universal vertices
###############################################################################


def _formula_agrees(tally: _Tally, g: Graph, dim: int) -> bool:
    found = mdim_by_formula(g)
    if found is None or found[0] != dim:
        tally.fail(g, f"closed form {found} disagrees with exact mdim = {dim}")
        return False
    return True


def _trees_chunk(n: int, first: int | None) -> _Tally:
    tally = _Tally()
    for tree in labeled_trees(n, first):
        tally.checked += 1
        tally.counts["trees"] += 1
        dim = mdim_exact(tree).dimension
        n_leaves = len(leaves(tree))
        if dim != n_leaves:
            tally.fail(tree, f"tree with {n_leaves} leaves has mdim = {dim}")
            continue
        _formula_agrees(tally, tree, dim)
    return tally


def _block_graph_chunk(seed: int, start: int, stop: int) -> _Tally:
    tally = _Tally()
    for index in range(start, stop):
        rng = _trial_rng(seed, index)
        n = int(rng.integers(RANDOM_MIN_ORDER, RANDOM_MAX_ORDER + 1))
        g = random_block_graph(n, rng)
        tally.checked += 1
        tally.counts["block_graphs"] += 1
        if not is_block_graph(g):
            tally.fail(g, "generated graph is not a block graph")
            continue
        dim = mdim_exact(g).dimension
        expected = n - len(cut_vertices(g))
        if dim != expected:
            tally.fail(g, f"block graph has mdim = {dim}, expected n - ζ = {expected}")
            continue
        _formula_agrees(tally, g, dim)
    return tally


def _universal_chunk(n: int, start: int, stop: int) -> _Tally:
    tally = _Tally()
    for g in enumerate_labeled_connected(n, start, stop):
        n_universal = len(universal_vertices(g))
        if n_universal == 0:
            continue
        tally.checked += 1
        dim = mdim_exact(g).dimension
        if n_universal >= 2:
            tally.counts["two_universal"] += 1
            if dim != n:
                tally.fail(g, f"{n_universal} universal vertices but mdim = {dim}")
        else:
            tally.counts["one_universal"] += 1
            if dim != n - 1:
                tally.fail(g, f"one universal vertex but mdim = {dim}")
    return tally


def verify_class_formulas(
    trials: int = DEFAULT_BLOCK_GRAPH_TRIALS,
    seed: int = DEFAULT_SEED,
    jobs: int | None = None,
) -> VerificationReport:
    """Leaf count for all labeled trees, n - ζ on random block graphs, and n or
    n - 1 for every small graph with universal vertices."""
    _check_trials(trials)
    start = time.perf_counter()
    logger.info("class formulas: trees, %d block graphs, universal vertices", trials)
    tree_items: list[tuple[int, int | None]] = []
    for n in range(ENUMERATION_MIN_ORDER, _TREE_MAX_ORDER + 1):
        if n < 3:
            tree_items.append((n, None))
        else:
            tree_items.extend((n, first) for first in range(n))
    universal_items = [
        (n, a, b)
        for n in range(ENUMERATION_MIN_ORDER, _EXHAUSTIVE_MAX_ORDER + 1)
        for a, b in mask_chunks(n, _CHUNKS)
    ]
    block_items = [(seed, a, b) for a, b in _trial_chunks(trials)]
    tally = _Tally.combine(
        [
            *map_ordered(_trees_chunk, tree_items, jobs),
            *map_ordered(_block_graph_chunk, block_items, jobs),
            *map_ordered(_universal_chunk, universal_items, jobs),
        ]
    )
    c = tally.counts
    notes = (
        f"{c['trees']} labeled trees, {c['block_graphs']} random block graphs, "
        f"{c['two_universal']} graphs with >= 2 and {c['one_universal']} with "
        "exactly 1 universal vertex"
    )
    return _finish(
        "class-formulas", tally, start, notes, {"trials": trials, "seed": seed}
    )


###############################################################################
#   strong products, amalgamations and the max-mdim family
###############################################################################


def _strong_products(tally: _Tally) -> None:
    k2 = complete(2)
    graphs: list[Graph] = [Graph.from_edge_list(1, [])]
    for n in range(ENUMERATION_MIN_ORDER, _PRODUCT_MAX_ORDER + 1):
        graphs.extend(enumerate_labeled_connected(n))
    for g in graphs:
        tally.checked += 1
        tally.counts["products"] += 1
        prod = strong_product(g, k2)
        if not all_have_maximal_neighbor(prod):
            tally.fail(prod, f"G ⊠ K2 is not max-mdim for G = {g!r}")
            continue
        if g.n <= _PRODUCT_EXACT_MAX_ORDER:
            dim = mdim_exact(prod).dimension
            if dim != 2 * g.n:
                tally.fail(prod, f"mdim(G ⊠ K2) = {dim}, expected {2 * g.n}")


def _amalgams(tally: _Tally) -> None:
    bases: list[Graph] = [complete(k) for k in _AMALGAM_BASE_ORDERS]
    bases.extend(h_graph(r) for r in _AMALGAM_BASE_ORDERS)
    for g, h in product(bases, bases):
        edges_g, edges_h = mutually_maximal_edges(g), mutually_maximal_edges(h)
        if not edges_g or not edges_h:
            tally.fail(g if not edges_g else h, "no mutually maximal edge")
            continue
        for flip in (False, True):
            tally.checked += 1
            tally.counts["amalgams"] += 1
            amalgam = amalgamate(g, edges_g[0], h, edges_h[0], flip=flip)
            if amalgam.n != g.n + h.n - 2:
                tally.fail(amalgam, f"amalgam has order {amalgam.n}")
            elif not all_have_maximal_neighbor(amalgam):
                tally.fail(amalgam, "amalgam along mutually maximal edges is not max-mdim")


def _family_recipes(tally: _Tally) -> None:
    for t in range(FAMILY_THEOREM_MIN_DEGREE, FAMILY_THEOREM_MAX_ORDER + 1):
        for n in range(t + 1, FAMILY_THEOREM_MAX_ORDER + 1):
            tally.checked += 1
            tally.counts["recipes"] += 1
            spec = family_recipe(n, t)
            g = build_family(spec)
            if g.n != n or g.max_degree != t:
                tally.fail(
                    g, f"{spec} has n = {g.n}, Δ = {g.max_degree}; wanted n = {n}, Δ = {t}"
                )
            elif not all_have_maximal_neighbor(g):
                tally.fail(g, f"{spec} is not max-mdim")
            elif (dim := mdim_exact(g).dimension) != n:
                tally.fail(g, f"{spec} has mdim = {dim}")


def _family_sweep(tally: _Tally) -> None:
    for r in _FAMILY_SWEEP:
        for g, name in ((h_graph(r), f"H_{r}"), (h_minus(r), f"H-_{r}")):
            tally.checked += 1
            if not all_have_maximal_neighbor(g):
                tally.fail(g, f"{name} is not max-mdim")
        for k in _FAMILY_SWEEP:
            for g, name, order in (
                (lambda_graph(k, r), f"Λ_{k},{r}", k + 2 * (r - 1)),
                (lambda_minus(k, r), f"Λ-_{k},{r}", k + 2 * (r - 1) - 1),
            ):
                tally.checked += 1
                tally.counts["lambda"] += 1
                if g.n != order:
                    tally.fail(g, f"{name} has order {g.n}, expected {order}")
                elif g.max_degree != k + 1:
                    tally.fail(g, f"{name} has Δ = {g.max_degree}, expected {k + 1}")
                elif not all_have_maximal_neighbor(g):
                    tally.fail(g, f"{name} is not max-mdim")


def verify_products_and_amalgams() -> VerificationReport:
    """Strong products with K2, amalgamations along mutually maximal edges and
    the Λ-type family are all max-mdim."""
    start = time.perf_counter()
    tally = _Tally()
    _strong_products(tally)
    _amalgams(tally)
    _family_recipes(tally)
    _family_sweep(tally)
    c = tally.counts
    notes = (
        f"{c['products']} strong products, {c['amalgams']} amalgams, "
        f"{c['recipes']} (n, Δ) recipes with {FAMILY_THEOREM_MIN_DEGREE} <= Δ < n <= "
        f"{FAMILY_THEOREM_MAX_ORDER}, {c['lambda']} Λ graphs; n = Δ is infeasible "
        "for simple graphs and skipped"
    )
    return _finish("products", tally, start, notes)


###############################################################################
#   solver self-consistency
###############################################################################


def _consistency_failure(g: Graph) -> str | None:
    pruned = mdim_exact(g)
    unpruned = mdim_exact(g, use_pruning=False)
    if pruned.dimension != unpruned.dimension:
        return f"pruned mdim {pruned.dimension} != unpruned mdim {unpruned.dimension}"
    table = element_distance_table(g)
    for result in (pruned, unpruned):
        if not result.forced <= set(result.basis):
            return f"basis {result.basis} misses forced vertices {sorted(result.forced)}"
        if not is_mixed_resolving_set(g, result.basis, table=table):
            return f"basis {result.basis} does not resolve"
    size, chosen = mdim_upper_greedy(g)
    if size < pruned.dimension:
        return f"greedy size {size} below mdim {pruned.dimension}"
    if not is_mixed_resolving_set(g, chosen, table=table):
        return f"greedy set {sorted(chosen)} does not resolve"
    found = mdim_by_formula(g)
    if found is not None and found[0] != pruned.dimension:
        return f"closed form {found} disagrees with mdim {pruned.dimension}"
    return None


def _consistency_exhaustive_chunk(n: int, start: int, stop: int) -> _Tally:
    tally = _Tally()
    for g in enumerate_labeled_connected(n, start, stop):
        tally.checked += 1
        if (witness := _consistency_failure(g)) is not None:
            tally.fail(g, witness)
    return tally


def _consistency_random_chunk(seed: int, start: int, stop: int) -> _Tally:
    tally = _Tally()
    for index in range(start, stop):
        g, _ = _random_instance(seed, index)
        tally.checked += 1
        tally.counts["random"] += 1
        if (witness := _consistency_failure(g)) is not None:
            tally.fail(g, witness)
    return tally


def verify_solver_consistency(
    trials: int = DEFAULT_CONSISTENCY_TRIALS,
    seed: int = DEFAULT_SEED,
    jobs: int | None = None,
) -> VerificationReport:
    """Pruned and unpruned search agree, bases contain the forced vertices, and the
    greedy set resolves with at least mdim vertices."""
    _check_trials(trials)
    start = time.perf_counter()
    logger.info("solver consistency: exhaustive n <= %d, %d trials", _EXHAUSTIVE_MAX_ORDER, trials)
    exhaustive_items = [
        (n, a, b)
        for n in range(ENUMERATION_MIN_ORDER, _EXHAUSTIVE_MAX_ORDER + 1)
        for a, b in mask_chunks(n, _CHUNKS)
    ]
    random_items = [(seed, a, b) for a, b in _trial_chunks(trials)]
    tally = _Tally.combine(
        [
            *map_ordered(_consistency_exhaustive_chunk, exhaustive_items, jobs),
            *map_ordered(_consistency_random_chunk, random_items, jobs),
        ]
    )
    notes = (
        f"{tally.checked - tally.counts['random']} exhaustive and "
        f"{tally.counts['random']} random graphs"
    )
    return _finish(
        "solver-consistency", tally, start, notes, {"trials": trials, "seed": seed}
    )


###############################################################################
#   graph6 and distance infrastructure
###############################################################################


def _random_simple_graph(rng: np.random.Generator) -> Graph:
    n = int(rng.integers(1, MAX_ORDER + 1))
    p = float(rng.random())
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(iu.size) < p
    return Graph.from_edge_list(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def verify_infrastructure(
    trials: int = DEFAULT_GRAPH6_CORPUS,
    distance_trials: int = DEFAULT_DISTANCE_TRIALS,
    seed: int = DEFAULT_SEED,
) -> VerificationReport:
    """graph6 round trips on a generated corpus, and BFS distances against the
    scipy Floyd-Warshall oracle."""
    _check_trials(trials)
    _check_trials(distance_trials)
    start = time.perf_counter()
    tally = _Tally()
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        g = _random_simple_graph(rng)
        tally.checked += 1
        line = emit_graph6(g)
        decoded = parse_graph6(line)
        if decoded != g:
            tally.fail(g, f"graph6 line {line!r} decodes to a different graph")
        elif emit_graph6(decoded) != line:
            tally.fail(g, f"graph6 line {line!r} does not re-encode identically")
    for index in range(distance_trials):
        rng_i = _trial_rng(seed, index)
        model = RANDOM_MODELS[index % len(RANDOM_MODELS)]
        n = int(rng_i.integers(RANDOM_MIN_ORDER, DISTANCE_ORACLE_MAX_ORDER + 1))
        g = random_connected(model, n, rng_i)
        tally.checked += 1
        if not np.array_equal(distance_matrix(g).dist, reference_distance_matrix(g)):
            tally.fail(g, "BFS distances disagree with the Floyd-Warshall oracle")
    notes = f"{trials} graph6 round trips, {distance_trials} distance matrices"
    params = {"trials": trials, "distance_trials": distance_trials, "seed": seed}
    return _finish("infrastructure", tally, start, notes, params)


###############################################################################
#   registry
###############################################################################


@dataclass(frozen=True)
class SuiteOptions:
    """Options shared by every suite; None means the suite default."""

    n: int | None = None
    trials: int | None = None
    seed: int = DEFAULT_SEED
    jobs: int | None = None


def _run_characterization(opts: SuiteOptions) -> list[VerificationReport]:
    orders = (
        [opts.n]
        if opts.n is not None
        else range(ENUMERATION_MIN_ORDER, _EXHAUSTIVE_MAX_ORDER + 1)
    )
    return [verify_characterization(n, jobs=opts.jobs) for n in orders]


def _with_trials(
    func: Callable[..., VerificationReport], default: int
) -> Callable[[SuiteOptions], list[VerificationReport]]:
    def _run(opts: SuiteOptions) -> list[VerificationReport]:
        trials = default if opts.trials is None else opts.trials
        return [func(trials, seed=opts.seed, jobs=opts.jobs)]

    return _run


SUITES: dict[str, Callable[[SuiteOptions], list[VerificationReport]]] = {
    "characterization": _run_characterization,
    "delta": _with_trials(verify_delta_theorem, DEFAULT_DELTA_SAMPLES),
    "g6-uniqueness": lambda opts: [verify_g6_uniqueness(jobs=opts.jobs)],
    "cut-bound": _with_trials(verify_cut_bound, DEFAULT_CUT_BOUND_TRIALS),
    "class-formulas": _with_trials(verify_class_formulas, DEFAULT_BLOCK_GRAPH_TRIALS),
    "products": lambda opts: [verify_products_and_amalgams()],
    "solver-consistency": _with_trials(
        verify_solver_consistency, DEFAULT_CONSISTENCY_TRIALS
    ),
    "infrastructure": lambda opts: [
        verify_infrastructure(
            DEFAULT_GRAPH6_CORPUS if opts.trials is None else opts.trials,
            seed=opts.seed,
        )
    ],
}


def run_suites(
    names: Iterable[str], options: SuiteOptions | None = None
) -> list[VerificationReport]:
    """Run the named suites (``"all"`` for every suite) in registry order."""
    options = options or SuiteOptions()
    names = list(names)
    if "all" in names:
        names = list(SUITES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(
            f"Unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITES)}."
        )
    reports: list[VerificationReport] = []
    for name in names:
        reports.extend(SUITES[name](options))
    return reports
