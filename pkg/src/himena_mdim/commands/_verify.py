from himena import Parametric
from himena.plugins import register_function, configure_gui

from himena_mdim.commands._utils import MENUS_GRAPH, rows_to_table
from himena_mdim.consts import DEFAULT_SEED
from himena_mdim.harness import SUITES, SuiteOptions, run_suites


@register_function(
    menus=MENUS_GRAPH,
    title="Run Verification Suite ...",
    command_id="himena-mdim:verify",
)
def run_verification() -> Parametric:
    """Run one of the theorem verification suites and tabulate the reports."""

    @configure_gui(suite={"choices": list(SUITES)})
    def run_suite(
        suite: str = "characterization",
        n: int = 4,
        trials: int = 100,
        seed: int = DEFAULT_SEED,
        jobs: int = 1,
    ):
        """
        Parameters
        ----------
        suite : str
            Name of the suite.
        n : int, default 4
            Order for the characterization suite.
        trials : int, default 100
            Number of random instances for the randomized suites.
        """
        opts = SuiteOptions(n=n, trials=trials, seed=seed, jobs=jobs)
        reports = run_suites([suite], opts)
        rows = [["suite", "passed", "instances", "counterexample", "notes"]]
        for report in reports:
            ce = report.counterexample
            rows.append(
                [
                    report.suite,
                    report.passed,
                    report.instances_checked,
                    "" if ce is None else f"{ce.edges}: {ce.witness}",
                    report.notes,
                ]
            )
        return rows_to_table(rows, title=f"Verification of {suite}")

    return run_suite
