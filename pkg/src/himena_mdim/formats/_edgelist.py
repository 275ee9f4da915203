from __future__ import annotations

from himena_mdim.consts import MAX_ORDER
from himena_mdim.core import Graph, GraphError, GraphFormatError


def _ints(line: str, lineno: int, count: int, what: str) -> list[int]:
    fields = line.split()
    if len(fields) != count:
        raise GraphFormatError(f"Expected {what}, got {line.strip()!r}.", lineno)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise GraphFormatError(f"Expected integers for {what}, got {line.strip()!r}.", lineno) from None


def parse_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based).

    Blank lines and ``#`` comments are ignored; line numbers in errors count every line.
    """
    lines = [
        (lineno, line.split("#", 1)[0])
        for lineno, line in enumerate(text.splitlines(), start=1)
    ]
    lines = [(lineno, line) for lineno, line in lines if line.strip()]
    if not lines:
        raise GraphFormatError("Edge list is empty.")
    header_no, header = lines[0]
    n, m = _ints(header, header_no, 2, "'n m' header")
    if not 1 <= n <= MAX_ORDER:
        raise GraphFormatError(f"Order {n} is out of range 1..{MAX_ORDER}.", header_no)
    if m < 0:
        raise GraphFormatError(f"Negative edge count {m}.", header_no)
    body = lines[1:]
    if len(body) != m:
        last = body[-1][0] if body else header_no
        raise GraphFormatError(f"Header declares {m} edges, found {len(body)}.", last)
    edges: list[tuple[int, int]] = []
    for lineno, line in body:
        u, v = _ints(line, lineno, 2, "'u v' edge")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"Edge ({u}, {v}) is out of range 0..{n - 1}.", lineno)
        if u == v:
            raise GraphFormatError(f"Self-loop at vertex {u}.", lineno)
        edges.append((u, v))
    try:
        return Graph.from_edge_list(n, edges)
    except GraphError as e:
        raise GraphFormatError(str(e)) from e


def emit_edgelist(g: Graph) -> str:
    edges = g.edge_list()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"
