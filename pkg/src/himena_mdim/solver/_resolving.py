from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterable

import numpy as np
from numpy.typing import NDArray

from himena_mdim.core import (
    Graph,
    GraphError,
    MixedElement,
    element_distance_table,
    mixed_elements,
    require_connected,
)


@dataclass(frozen=True)
class WitnessPair:
    """Two distinct elements with equal distance vectors to a vertex set."""

    x: MixedElement
    y: MixedElement

    def __str__(self) -> str:
        return f"{self.x} and {self.y} are not resolved"


def check_vertex_set(g: Graph, w: Iterable[int]) -> list[int]:
    """Validate the graph and the vertex set, returning the set sorted."""
    if g.n < 2:
        raise GraphError("Mixed resolving sets are defined for graphs with n >= 2.")
    require_connected(g)
    cols = sorted(set(int(v) for v in w))
    if cols and not (0 <= cols[0] and cols[-1] < g.n):
        raise GraphError(f"Vertex set {cols} is not contained in 0..{g.n - 1}.")
    return cols


def is_mixed_resolving_set(
    g: Graph,
    w: Iterable[int],
    table: NDArray[np.uint8] | None = None,
) -> bool:
    """True iff the vertex set ``w`` gives every vertex and edge a distinct vector."""
    cols = check_vertex_set(g, w)
    if not cols:
        return False
    if table is None:
        table = element_distance_table(g)
    sub = np.ascontiguousarray(table[:, cols])
    seen: set[bytes] = set()
    for row in sub:
        key = row.tobytes()
        if key in seen:
            return False
        seen.add(key)
    return True


def witness_failure(g: Graph, w: Iterable[int]) -> WitnessPair | None:
    """The lexicographically first pair of elements that ``w`` does not resolve."""
    cols = check_vertex_set(g, w)
    table = element_distance_table(g)
    sub = np.ascontiguousarray(table[:, cols])
    groups: dict[bytes, list[int]] = {}
    first: tuple[int, int] | None = None
    for i, row in enumerate(sub):
        members = groups.setdefault(row.tobytes(), [])
        members.append(i)
        if len(members) == 2 and (first is None or members[0] < first[0]):
            first = (members[0], members[1])
    if first is None:
        return None
    elems = mixed_elements(g)
    return WitnessPair(elems[first[0]], elems[first[1]])


def element_vectors(
    g: Graph, w: Iterable[int]
) -> list[tuple[MixedElement, tuple[int, ...]]]:
    """Distance vector of every element with respect to ``w`` (in index order)."""
    cols = check_vertex_set(g, w)
    table = element_distance_table(g)
    return [
        (elem, tuple(int(x) for x in table[i, cols]))
        for i, elem in enumerate(mixed_elements(g))
    ]


@cache
def _pair_indices(n_elements: int) -> tuple[NDArray[np.intp], NDArray[np.intp]]:
    return np.triu_indices(n_elements, 1)


def separation_masks(table: NDArray[np.uint8]) -> tuple[list[int], int]:
    """Per-vertex bitmask over element pairs the vertex resolves, and the full mask.

    Pairs are numbered in row-major upper-triangle order of the element table.
    """
    n_elements, n = table.shape
    iu, ju = _pair_indices(n_elements)
    masks: list[int] = []
    for v in range(n):
        col = table[:, v]
        separated = col[iu] != col[ju]
        packed = np.packbits(separated, bitorder="little")
        masks.append(int.from_bytes(packed.tobytes(), "little"))
    return masks, (1 << iu.size) - 1
