from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from himena_mdim.core import Graph


@dataclass(frozen=True)
class Counterexample:
    """A graph that violates a checked statement, with a description of why."""

    n: int
    edges: tuple[tuple[int, int], ...]
    witness: str

    @classmethod
    def of(cls, g: Graph, witness: str) -> Counterexample:
        return cls(g.n, tuple(g.edge_list()), witness)

    def graph(self) -> Graph:
        return Graph.from_edge_list(self.n, self.edges)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.edges],
            "witness": self.witness,
        }


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    instances_checked: int
    passed: bool
    counterexample: Counterexample | None = None
    elapsed: float = 0.0
    notes: str = ""
    parameters: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.passed != (self.counterexample is None):
            raise ValueError("A report passes exactly when it has no counterexample.")

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {
            "suite": self.suite,
            "parameters": self.parameters,
            "instances_checked": self.instances_checked,
            "passed": self.passed,
            "counterexample": (
                None if self.counterexample is None else self.counterexample.to_dict()
            ),
            "notes": self.notes,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def to_text(self, timing: bool = False) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.parameters.items())
        status = "PASSED" if self.passed else "FAILED"
        lines = [f"[{status}] {self.suite}" + (f" ({params})" if params else "")]
        lines.append(f"  instances checked: {self.instances_checked}")
        if self.notes:
            lines.append(f"  notes: {self.notes}")
        if self.counterexample is not None:
            ce = self.counterexample
            lines.append(f"  counterexample: n={ce.n} edges={list(ce.edges)}")
            lines.append(f"  witness: {ce.witness}")
        if timing:
            lines.append(f"  elapsed: {self.elapsed:.3f} s")
        return "\n".join(lines) + "\n"


def replay_counterexample(report: VerificationReport) -> Graph | None:
    """The counterexample graph of a failed report, rebuilt from its edge list."""
    if report.counterexample is None:
        return None
    return report.counterexample.graph()
