from itertools import combinations

import pytest

from himena_mdim.core import Graph, GraphError, cut_vertices, equality_condition_holds
from himena_mdim.constructions import (
    complete,
    cycle,
    g6,
    path,
    star,
    strong_product,
    wheel,
)
from himena_mdim.harness import (
    Counterexample,
    SuiteOptions,
    VerificationReport,
    are_isomorphic_small,
    enumerate_labeled_connected,
    find_isomorphism,
    map_ordered,
    mask_chunks,
    n_masks,
    replay_counterexample,
    resolve_jobs,
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
from himena_mdim.harness import _suites
from himena_mdim.solver import mdim_exact


def _union_find_connected_count(n: int) -> int:
    pairs = list(combinations(range(n), 2))
    count = 0
    for mask in range(1 << len(pairs)):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for k, (u, v) in enumerate(pairs):
            if mask >> k & 1:
                parent[find(u)] = find(v)
        count += len({find(v) for v in range(n)}) == 1
    return count


@pytest.mark.parametrize("n,count", [(2, 1), (3, 4), (4, 38)])
def test_enumeration_counts(n: int, count: int):
    assert sum(1 for _ in enumerate_labeled_connected(n)) == count


def test_enumeration_matches_union_find():
    assert sum(1 for _ in enumerate_labeled_connected(5)) == _union_find_connected_count(5)


def test_enumeration_is_chunkable():
    whole = list(enumerate_labeled_connected(5))
    chunked = [
        g for a, b in mask_chunks(5, 7) for g in enumerate_labeled_connected(5, a, b)
    ]
    assert chunked == whole
    assert len(set(whole)) == len(whole)
    assert mask_chunks(4, 3)[-1][1] == n_masks(4) == 64


def test_enumeration_order_range():
    with pytest.raises(GraphError):
        list(enumerate_labeled_connected(8))
    with pytest.raises(GraphError):
        list(enumerate_labeled_connected(1))


def test_isomorphism_examples():
    p4 = path(4)
    assert are_isomorphic_small(p4, p4.relabel([2, 0, 3, 1]))
    assert not are_isomorphic_small(cycle(4), path(4))
    assert not are_isomorphic_small(star(3), path(4))
    perm = [3, 5, 0, 1, 4, 2]
    relabeled = g6().relabel(perm)
    assert are_isomorphic_small(g6(), relabeled)
    iso = find_isomorphism(g6(), relabeled)
    assert all(relabeled.has_edge(iso[u], iso[v]) for u, v in g6().edge_list())
    with pytest.raises(GraphError):
        are_isomorphic_small(path(9), path(9))


def test_report_invariants():
    ce = Counterexample.of(cycle(6), "not max-mdim")
    report = VerificationReport("demo", 1, passed=False, counterexample=ce)
    assert replay_counterexample(report) == cycle(6)
    assert report.to_dict()["counterexample"] == {
        "n": 6,
        "edges": [[0, 1], [0, 5], [1, 2], [2, 3], [3, 4], [4, 5]],
        "witness": "not max-mdim",
    }
    assert "FAILED" in report.to_text()
    with pytest.raises(ValueError):
        VerificationReport("demo", 1, passed=True, counterexample=ce)
    with pytest.raises(ValueError):
        VerificationReport("demo", 1, passed=False)


def test_suite_counterexample_replays(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setattr(_suites, "all_have_maximal_neighbor", lambda g: True)
    report = verify_characterization(4, jobs=1)
    assert not report.passed
    replayed = replay_counterexample(report)
    assert replayed.n == 4
    assert mdim_exact(replayed).dimension != replayed.n
    assert "every-vertex-has-a-maximal-neighbor is True" in report.counterexample.witness


def test_report_timing_is_opt_in():
    report = VerificationReport("demo", 3, passed=True, elapsed=1.25)
    assert "elapsed" not in report.to_dict()
    assert report.to_dict(timing=True)["elapsed"] == 1.25
    assert "elapsed" not in report.to_text()
    assert report.to_text().endswith("\n")


def test_resolve_jobs(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.delenv("MDIM_JOBS", raising=False)
    assert resolve_jobs(3) == 3
    assert resolve_jobs(None) >= 1
    monkeypatch.setenv("MDIM_JOBS", "2")
    assert resolve_jobs(5) == 2
    monkeypatch.setenv("MDIM_JOBS", "many")
    with pytest.raises(ValueError):
        resolve_jobs(1)


def test_map_ordered(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.delenv("MDIM_JOBS", raising=False)
    items = [(2, k) for k in range(8)]
    assert map_ordered(pow, items, jobs=1) == [2**k for k in range(8)]
    assert map_ordered(pow, items, jobs=2) == [2**k for k in range(8)]


@pytest.mark.parametrize("n,count", [(2, 1), (3, 4), (4, 38)])
def test_verify_characterization(n: int, count: int):
    report = verify_characterization(n, jobs=1)
    assert report.passed
    assert report.instances_checked == count
    assert report.parameters == {"n": n}


def test_verify_characterization_range():
    with pytest.raises(ValueError):
        verify_characterization(7)


def test_cut_bound_examples():
    p5 = path(5)
    assert mdim_exact(p5).dimension == 2 == p5.n - len(cut_vertices(p5))
    assert equality_condition_holds(p5)
    c6_pendant = Graph.from_edge_list(7, cycle(6).edge_list() + [(0, 6)])
    assert len(cut_vertices(c6_pendant)) == 1
    assert mdim_exact(c6_pendant).dimension <= 6


def test_verify_cut_bound():
    report = verify_cut_bound(40, seed=1, jobs=1)
    assert report.passed
    assert report.instances_checked == 40
    assert report.parameters == {"trials": 40, "seed": 1}
    with pytest.raises(ValueError):
        verify_cut_bound(0)


def test_class_formula_examples():
    assert mdim_exact(star(5)).dimension == 5
    two_k4 = Graph.from_edge_list(
        7,
        [(i, j) for i in range(4) for j in range(i + 1, 4)]
        + [(i, j) for i in (3, 4, 5, 6) for j in (3, 4, 5, 6) if i < j],
    )
    assert len(cut_vertices(two_k4)) == 1
    assert mdim_exact(two_k4).dimension == 6
    assert mdim_exact(wheel(6)).dimension == 5


def test_products_examples():
    assert mdim_exact(strong_product(path(4), complete(2))).dimension == 8


def test_verify_products_and_amalgams():
    report = verify_products_and_amalgams()
    assert report.passed
    assert "n = Δ is infeasible" in report.notes


def test_verify_g6_uniqueness():
    report = verify_g6_uniqueness(jobs=1)
    assert report.passed
    assert report.instances_checked >= 1


def test_verify_infrastructure():
    report = verify_infrastructure(100, distance_trials=20, seed=3)
    assert report.passed
    assert report.instances_checked == 120


def test_reports_are_deterministic():
    a = verify_cut_bound(12, seed=7, jobs=1).to_dict()
    b = verify_cut_bound(12, seed=7, jobs=2).to_dict()
    assert a == b


def test_run_suites():
    reports = run_suites(["characterization"], SuiteOptions(n=3, jobs=1))
    assert [r.suite for r in reports] == ["characterization"]
    with pytest.raises(ValueError):
        run_suites(["nope"])


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6])
def test_verify_characterization_full(n: int):
    assert verify_characterization(n).passed


@pytest.mark.slow
def test_verify_delta_theorem():
    report = verify_delta_theorem(samples=50, seed=1)
    assert report.passed
    assert "none max-mdim" in report.notes


@pytest.mark.slow
def test_verify_class_formulas():
    assert verify_class_formulas(50, seed=1).passed


@pytest.mark.slow
def test_verify_solver_consistency():
    assert verify_solver_consistency(50, seed=1).passed

