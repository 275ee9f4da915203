from __future__ import annotations

from himena_mdim.consts import MAX_ORDER
from himena_mdim.core import Graph, GraphFormatError

_HEADER = ">>graph6<<"


def _n_chars(n: int) -> int:
    return -(-(n * (n - 1) // 2) // 6)


def emit_graph6(g: Graph) -> str:
    """graph6 line (without newline): upper triangle column by column, 6 bits a byte."""
    n = g.n
    bits = [g.adj[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def parse_graph6(line: str, lineno: int | None = None) -> Graph:
    """Decode a single graph6 line into a graph."""
    text = line.strip()
    if text.startswith(_HEADER):
        text = text[len(_HEADER) :]
    if not text:
        raise GraphFormatError("Empty graph6 line.", lineno)
    codes = [ord(c) - 63 for c in text]
    if any(not 0 <= c <= 63 for c in codes):
        raise GraphFormatError(f"Invalid graph6 character in {text!r}.", lineno)
    n = codes[0]
    if n == 63:
        raise GraphFormatError(f"graph6 order above {MAX_ORDER} is not supported.", lineno)
    if n == 0:
        raise GraphFormatError("graph6 line encodes the empty graph.", lineno)
    body = codes[1:]
    if len(body) != _n_chars(n):
        raise GraphFormatError(
            f"graph6 body for n={n} needs {_n_chars(n)} characters, got {len(body)}.",
            lineno,
        )
    n_bits = n * (n - 1) // 2
    pad = len(body) * 6 - n_bits
    if pad and body[-1] & ((1 << pad) - 1):
        raise GraphFormatError("graph6 padding bits are not zero.", lineno)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def parse_graph6_lines(text: str) -> list[Graph]:
    """One graph per non-empty line."""
    return [
        parse_graph6(line, lineno)
        for lineno, line in enumerate(text.splitlines(), start=1)
        if line.strip()
    ]
