from __future__ import annotations

from dataclasses import dataclass
import re
from typing import Callable, Literal, get_args

import numpy as np

from himena_mdim.consts import DEFAULT_SEED, FAMILY_THEOREM_MIN_DEGREE, MAX_ORDER
from himena_mdim.core import Edge, Graph, GraphError, GraphFormatError
from himena_mdim.constructions._operations import (
    amalgamate,
    remove_vertex,
    strong_product,
)
from himena_mdim.constructions._random import random_block_graph, random_tree

FamilyKind = Literal[
    "path",
    "cycle",
    "complete",
    "complete_minus_matching",
    "star",
    "wheel",
    "h_graph",
    "h_minus",
    "lambda",
    "lambda_minus",
    "g6",
    "p3k2",
    "random_tree",
    "random_block_graph",
]
FAMILY_KINDS: tuple[str, ...] = get_args(FamilyKind)
RANDOM_KINDS = frozenset({"random_tree", "random_block_graph"})

# edges of the graph G6 (unique max-mdim graph with n = 6 and maximum degree 4)
G6_EDGES = [(0, 1), (1, 3), (3, 5), (4, 5), (2, 4), (0, 2), (1, 2), (1, 4), (3, 4), (2, 3)]


def path(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"A cycle needs at least 3 vertices, got {n}.")
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the hub at vertex 0."""
    if leaves < 1:
        raise GraphError(f"A star needs at least one leaf, got {leaves}.")
    return Graph.from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def wheel(n: int) -> Graph:
    """Cycle on vertices 1..n-1 plus the hub 0 adjacent to all of them."""
    if n < 4:
        raise GraphError(f"A wheel needs at least 4 vertices, got {n}.")
    rim = [(i, i % (n - 1) + 1) for i in range(1, n)]
    return Graph.from_edge_list(n, rim + [(0, i) for i in range(1, n)])


def complete_minus_matching(n: int, k: int) -> Graph:
    """K_n without the disjoint edges (0,1), (2,3), ..., (2k-2, 2k-1)."""
    if not 0 <= 2 * k <= n:
        raise GraphError(f"K_{n} has no matching of size {k}.")
    removed = {(2 * i, 2 * i + 1) for i in range(k)}
    return Graph.from_edge_list(
        n, [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in removed]
    )


def h_graph(r: int) -> Graph:
    """H_r = P_r ⊠ K_2; vertex (i, b) is ``2 * i + b``."""
    if r < 2:
        raise GraphError(f"H_r needs r >= 2, got {r}.")
    return strong_product(path(r), complete(2))


def h_minus(r: int) -> Graph:
    """H_r without the far-end degree-3 vertex (r-1, 0), keeping the rung (0, 1)."""
    return remove_vertex(h_graph(r), 2 * (r - 1))


def lambda_graph(k: int, r: int) -> Graph:
    """Λ_{k,r}: H_r and K_k glued along the rung (0, 1) and the edge (0, 1)."""
    if k < 3:
        raise GraphError(f"Λ_(k,r) needs k >= 3, got {k}.")
    return amalgamate(h_graph(r), Edge(0, 1), complete(k), Edge(0, 1))


def lambda_minus(k: int, r: int) -> Graph:
    if k < 3:
        raise GraphError(f"Λ-_(k,r) needs k >= 3, got {k}.")
    return amalgamate(h_minus(r), Edge(0, 1), complete(k), Edge(0, 1))


def g6() -> Graph:
    return Graph.from_edge_list(6, G6_EDGES)


def p3k2() -> Graph:
    """P_3 ⊠ K_2, the six-vertex max-mdim graph with eleven edges."""
    return strong_product(path(3), complete(2))


_BUILDERS: dict[str, tuple[int, Callable[..., Graph]]] = {
    "path": (1, path),
    "cycle": (1, cycle),
    "complete": (1, complete),
    "complete_minus_matching": (2, complete_minus_matching),
    "star": (1, star),
    "wheel": (1, wheel),
    "h_graph": (1, h_graph),
    "h_minus": (1, h_minus),
    "lambda": (2, lambda_graph),
    "lambda_minus": (2, lambda_minus),
    "g6": (0, g6),
    "p3k2": (0, p3k2),
}

_FAMILY_PATTERN = re.compile(
    r"^(?P<kind>[a-z_0-9]+)(?::(?P<params>-?\d+(?:,-?\d+)*))?(?::seed=(?P<seed>\d+))?$"
)


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family with integer parameters, e.g. ``lambda:5,5``."""

    kind: str
    parameters: tuple[int, ...] = ()
    seed: int | None = None

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``kind[:p1,p2,...][:seed=S]``."""
        match = _FAMILY_PATTERN.match(text.strip())
        if match is None:
            raise GraphFormatError(f"Cannot parse family spec {text!r}.")
        kind = match.group("kind")
        if kind not in FAMILY_KINDS:
            raise GraphFormatError(
                f"Unknown family {kind!r}; choose from {', '.join(FAMILY_KINDS)}."
            )
        params = match.group("params")
        parameters = tuple(int(p) for p in params.split(",")) if params else ()
        seed = match.group("seed")
        return cls(kind, parameters, None if seed is None else int(seed))

    def __str__(self) -> str:
        out = self.kind
        if self.parameters:
            out += ":" + ",".join(str(p) for p in self.parameters)
        if self.seed is not None:
            out += f":seed={self.seed}"
        return out


def build_family(spec: FamilySpec) -> Graph:
    """Build the graph described by ``spec``; random kinds use ``spec.seed``."""
    # builders allocate edge lists before Graph checks the order
    for p in spec.parameters:
        if abs(p) > MAX_ORDER:
            raise GraphError(f"{spec.kind} parameter {p} exceeds the order limit {MAX_ORDER}.")
    if spec.kind in RANDOM_KINDS:
        if len(spec.parameters) != 1:
            raise GraphError(f"{spec.kind} takes one parameter (the order).")
        if spec.parameters[0] < 2:
            raise GraphError(f"{spec.kind} needs at least 2 vertices, got {spec.parameters[0]}.")
        seed = DEFAULT_SEED if spec.seed is None else spec.seed
        rng = np.random.default_rng(seed)
        if spec.kind == "random_tree":
            return random_tree(spec.parameters[0], rng)
        return random_block_graph(spec.parameters[0], rng)
    if spec.kind not in _BUILDERS:
        raise GraphError(f"Unknown family {spec.kind!r}.")
    if spec.seed is not None:
        raise GraphError(f"{spec.kind} is deterministic and takes no seed.")
    arity, builder = _BUILDERS[spec.kind]
    if len(spec.parameters) != arity:
        raise GraphError(
            f"{spec.kind} takes {arity} parameter(s), got {len(spec.parameters)}."
        )
    return builder(*spec.parameters)


def family_recipe(n: int, t: int) -> FamilySpec:
    """Λ-type graph of order ``n`` and maximum degree ``t`` that is max-mdim.

    Uses Λ_{t-1,(n-t+3)/2} when ``n - t + 1`` is even and Λ-_{t-1,(n-t+4)/2}
    otherwise. ``t < n`` is required since no simple graph has maximum degree ``n``.
    """
    if t < FAMILY_THEOREM_MIN_DEGREE:
        raise GraphError(f"Maximum degree must be at least {FAMILY_THEOREM_MIN_DEGREE}.")
    if n <= t:
        raise GraphError(f"No graph of order {n} has maximum degree {t}.")
    if (n - t + 1) % 2 == 0:
        return FamilySpec("lambda", (t - 1, (n - t + 3) // 2))
    return FamilySpec("lambda_minus", (t - 1, (n - t + 4) // 2))
