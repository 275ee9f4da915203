from __future__ import annotations

from functools import cache
from typing import Iterator

from himena_mdim.consts import ENUMERATION_MAX_ORDER, ENUMERATION_MIN_ORDER
from himena_mdim.core import Graph, GraphError
from himena_mdim.core._bits import iter_bits


def n_masks(n: int) -> int:
    """Number of labeled simple graphs on ``n`` vertices."""
    return 1 << (n * (n - 1) // 2)


@cache
def _row_offsets(n: int) -> tuple[int, ...]:
    # bit k of a mask is the k-th pair (u, v), u < v, in lexicographic order
    offsets = []
    offset = 0
    for u in range(n):
        offsets.append(offset)
        offset += n - 1 - u
    return tuple(offsets)


def rows_from_mask(n: int, mask: int) -> tuple[int, ...]:
    offsets = _row_offsets(n)
    rows = [0] * n
    for u in range(n - 1):
        upper = (mask >> offsets[u]) & ((1 << (n - 1 - u)) - 1)
        if not upper:
            continue
        upper <<= u + 1
        rows[u] |= upper
        for v in iter_bits(upper):
            rows[v] |= 1 << u
    return tuple(rows)


def rows_connected(rows: tuple[int, ...]) -> bool:
    full = (1 << len(rows)) - 1
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def _check_order(n: int) -> None:
    if not ENUMERATION_MIN_ORDER <= n <= ENUMERATION_MAX_ORDER:
        raise GraphError(
            f"Enumeration supports {ENUMERATION_MIN_ORDER} <= n <= "
            f"{ENUMERATION_MAX_ORDER}, got {n}."
        )


def enumerate_labeled_connected(
    n: int, start: int = 0, stop: int | None = None
) -> Iterator[Graph]:
    """Every connected labeled graph on ``n`` vertices whose edge mask lies in
    ``[start, stop)``, in ascending mask order.

    Disjoint mask ranges give disjoint streams, so the enumeration can be split
    into chunks and merged back in order.
    """
    _check_order(n)
    total = n_masks(n)
    stop = total if stop is None else min(stop, total)
    for mask in range(max(start, 0), stop):
        rows = rows_from_mask(n, mask)
        if rows_connected(rows):
            yield Graph._trusted(n, rows)


def mask_chunks(n: int, parts: int) -> list[tuple[int, int]]:
    """Split the mask space of order ``n`` into at most ``parts`` contiguous ranges."""
    _check_order(n)
    total = n_masks(n)
    parts = max(1, min(parts, total))
    step = -(-total // parts)
    return [(a, min(a + step, total)) for a in range(0, total, step)]
