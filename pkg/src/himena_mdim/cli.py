"""Command-line front end: ``himena-mdim <subcommand> ...``."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
import logging
from pathlib import Path
import sys
from typing import Any, Literal, Sequence, TextIO, get_args

from himena_mdim import __version__
from himena_mdim.consts import DEFAULT_SEED
from himena_mdim.constructions import FamilySpec, build_family
from himena_mdim.core import Graph, analyze
from himena_mdim.formats import (
    dump_document,
    emit_dot,
    emit_edgelist,
    emit_graph6,
    parse_edgelist,
    parse_graph6_lines,
    serialize_graph,
)
from himena_mdim.harness import SUITES, SuiteOptions, map_ordered, run_suites
from himena_mdim.solver import MdimResult, solve_mdim

logger = logging.getLogger(__name__)

Subcommand = Literal["mdim", "analyze", "construct", "verify", "convert"]
InputFormat = Literal["graph6", "edgelist"]
OutputFormat = Literal["text", "json", "dot", "graph6", "edgelist"]

_ALLOWED_OUTPUTS: dict[str, tuple[str, ...]] = {
    "mdim": ("text", "json"),
    "analyze": ("text", "json"),
    "construct": ("text", "json", "dot", "graph6", "edgelist"),
    "verify": ("text", "json"),
    "convert": ("json", "dot", "graph6", "edgelist"),
}
_DEFAULT_OUTPUTS: dict[str, str] = {
    "mdim": "text",
    "analyze": "text",
    "construct": "graph6",
    "verify": "text",
    "convert": "graph6",
}
_EDGELIST_SUFFIXES = (".edgelist", ".txt")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT_ERROR = 2


@dataclass(frozen=True)
class CliConfig:
    subcommand: Subcommand
    input_path: str | None = None
    family: str | None = None
    input_format: InputFormat | None = None
    output_format: OutputFormat | None = None
    no_prune: bool = False
    certificate: bool = False
    formula: bool = False
    suites: tuple[str, ...] = ()
    n: int | None = None
    trials: int | None = None
    seed: int = DEFAULT_SEED
    jobs: int | None = None
    timing: bool = False

    @property
    def resolved_output(self) -> str:
        return self.output_format or _DEFAULT_OUTPUTS[self.subcommand]

    def validate(self) -> None:
        """Raise ValueError on an inconsistent configuration, before any work."""
        if self.subcommand not in _ALLOWED_OUTPUTS:
            raise ValueError(f"Unknown subcommand {self.subcommand!r}.")
        if self.resolved_output not in _ALLOWED_OUTPUTS[self.subcommand]:
            raise ValueError(
                f"{self.subcommand} cannot write {self.resolved_output!r}; choose from "
                f"{', '.join(_ALLOWED_OUTPUTS[self.subcommand])}."
            )
        if self.input_format is not None and self.input_format not in get_args(InputFormat):
            raise ValueError(f"Unknown input format {self.input_format!r}.")
        if self.jobs is not None and self.jobs < 1:
            raise ValueError(f"--jobs must be at least 1, got {self.jobs}.")
        if self.subcommand == "verify":
            if not self.suites:
                raise ValueError("Name at least one suite to verify.")
            if self.input_path is not None or self.family is not None:
                raise ValueError("verify takes no graph input.")
            unknown = [s for s in self.suites if s != "all" and s not in SUITES]
            if unknown:
                raise ValueError(
                    f"Unknown suite(s) {', '.join(unknown)}; choose from "
                    f"{', '.join(SUITES)} or 'all'."
                )
            return
        if (self.input_path is None) == (self.family is None):
            raise ValueError("Give exactly one input: a path ('-' for stdin) or --family.")
        if self.subcommand == "construct" and self.family is None:
            raise ValueError("construct needs --family.")
        if self.family is not None:
            FamilySpec.parse(self.family)


def _input_format(config: CliConfig) -> InputFormat:
    if config.input_format is not None:
        return config.input_format
    if config.input_path and config.input_path.endswith(_EDGELIST_SUFFIXES):
        return "edgelist"
    return "graph6"


def read_graphs(config: CliConfig, stdin: TextIO | None = None) -> list[Graph]:
    """Graphs of the configured input source, in input order."""
    if config.family is not None:
        return [build_family(FamilySpec.parse(config.family))]
    if config.input_path == "-":
        text = (stdin or sys.stdin).read()
    else:
        text = Path(config.input_path).read_text()
    if _input_format(config) == "edgelist":
        return [parse_edgelist(text)]
    graphs = parse_graph6_lines(text)
    if not graphs:
        raise ValueError("No graph in the input.")
    return graphs


def format_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return emit_graph6(g) + "\n"
    elif fmt == "edgelist":
        return emit_edgelist(g)
    elif fmt == "dot":
        return emit_dot(g)
    elif fmt == "json":
        return dump_document(serialize_graph(g))
    elif fmt == "text":
        return f"{g!r}\n"
    raise ValueError(f"Unknown graph output format {fmt!r}.")


def format_result(result: MdimResult, certificate: bool = False) -> str:
    lines = [
        f"mdim = {result.dimension}",
        f"basis: {' '.join(map(str, result.basis))}",
        f"forced: {' '.join(map(str, sorted(result.forced)))}",
    ]
    if result.formula_used is not None:
        lines.append(f"formula: {result.formula_used}")
    else:
        lines.append(f"candidate sets searched: {result.nodes_searched}")
    if certificate:
        lines.extend(f"  {name}: {vec}" for name, vec in result.vectors)
    return "\n".join(lines) + "\n"


def _format_mapping(doc: dict[str, Any]) -> str:
    return "".join(f"{key}: {value}\n" for key, value in doc.items())


def _solve_one(g: Graph, use_pruning: bool, use_formula: bool, certificate: bool) -> MdimResult:
    return solve_mdim(
        g, use_pruning=use_pruning, use_formula=use_formula, certificate=certificate
    )


def _run_mdim(config: CliConfig, graphs: list[Graph], out: TextIO) -> int:
    items = [
        (g, not config.no_prune, config.formula, config.certificate) for g in graphs
    ]
    results = map_ordered(_solve_one, items, config.jobs if len(graphs) > 1 else 1)
    for g, result in zip(graphs, results):
        if config.resolved_output == "json":
            doc = {"graph6": emit_graph6(g), **result.to_dict(config.certificate)}
            out.write(dump_document(doc))
        else:
            if len(graphs) > 1:
                out.write(f"# {emit_graph6(g)}\n")
            out.write(format_result(result, config.certificate))
    return EXIT_OK


def _run_analyze(config: CliConfig, graphs: list[Graph], out: TextIO) -> int:
    for g in graphs:
        doc = {"n": g.n, "m": g.n_edges, **analyze(g).to_dict()}
        if config.resolved_output == "json":
            out.write(dump_document(doc))
        else:
            out.write(_format_mapping(doc))
    return EXIT_OK


def _run_verify(config: CliConfig, out: TextIO) -> int:
    options = SuiteOptions(
        n=config.n, trials=config.trials, seed=config.seed, jobs=config.jobs
    )
    reports = run_suites(config.suites, options)
    for report in reports:
        if config.resolved_output == "json":
            out.write(dump_document(report.to_dict(timing=config.timing)))
        else:
            out.write(report.to_text(timing=config.timing))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def run(
    config: CliConfig,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    """Execute one configured command; returns the exit status."""
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        config.validate()
        if config.subcommand == "verify":
            return _run_verify(config, out)
        graphs = read_graphs(config, stdin)
        logger.info("read %d graph(s)", len(graphs))
        if config.subcommand == "mdim":
            return _run_mdim(config, graphs, out)
        elif config.subcommand == "analyze":
            return _run_analyze(config, graphs, out)
        for g in graphs:
            out.write(format_graph(g, config.resolved_output))
        return EXIT_OK
    except (ValueError, OSError) as e:
        err.write(f"error: {e}\n")
        return EXIT_INPUT_ERROR


def _add_input_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", nargs="?", help="graph file, '-' for stdin")
    parser.add_argument("--family", help="named family, e.g. lambda:5,5 or random_tree:8:seed=3")
    parser.add_argument("--input-format", choices=get_args(InputFormat))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="himena-mdim", description="Exact mixed metric dimension toolkit."
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_mdim = sub.add_parser("mdim", help="compute the mixed metric dimension")
    _add_input_arguments(p_mdim)
    p_mdim.add_argument("--no-prune", action="store_true", help="search every vertex subset")
    p_mdim.add_argument("--certificate", action="store_true", help="print element vectors")
    p_mdim.add_argument("--formula", action="store_true", help="use closed forms when known")

    p_analyze = sub.add_parser("analyze", help="structural report")
    _add_input_arguments(p_analyze)

    p_construct = sub.add_parser("construct", help="build a named family")
    p_construct.add_argument("--family", required=True)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("suites", nargs="+", help=f"{', '.join(SUITES)} or all")
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--trials", type=int)
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.add_argument("--timing", action="store_true", help="report elapsed time")

    p_convert = sub.add_parser("convert", help="transcode a graph")
    _add_input_arguments(p_convert)

    for p in (p_mdim, p_analyze, p_construct, p_verify, p_convert):
        p.add_argument("--output-format", choices=_ALLOWED_OUTPUTS[p.prog.split()[-1]])
        p.add_argument("--jobs", type=int)
    return parser


def config_from_args(ns: argparse.Namespace) -> CliConfig:
    return CliConfig(
        subcommand=ns.subcommand,
        input_path=getattr(ns, "input", None),
        family=getattr(ns, "family", None),
        input_format=getattr(ns, "input_format", None),
        output_format=ns.output_format,
        no_prune=getattr(ns, "no_prune", False),
        certificate=getattr(ns, "certificate", False),
        formula=getattr(ns, "formula", False),
        suites=tuple(getattr(ns, "suites", ())),
        n=getattr(ns, "n", None),
        trials=getattr(ns, "trials", None),
        seed=getattr(ns, "seed", DEFAULT_SEED),
        jobs=ns.jobs,
        timing=getattr(ns, "timing", False),
    )


def configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: Sequence[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    configure_logging(ns.verbose)
    return run(config_from_args(ns))
