from __future__ import annotations

import json
from typing import Any

from himena_mdim.core import Graph, GraphFormatError


def serialize_graph(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "edges": [list(e) for e in g.edge_list()]}


def deserialize_graph(js: dict[str, Any]) -> Graph:
    try:
        n = int(js["n"])
        edges = [(int(u), int(v)) for u, v in js["edges"]]
    except (KeyError, TypeError, ValueError) as e:
        raise GraphFormatError(f"Invalid graph document: {e}") from e
    return Graph.from_edge_list(n, edges)


def dump_document(doc: Any, indent: int | None = None) -> str:
    """Strict JSON text (no NaN) terminated by a newline."""
    return json.dumps(doc, indent=indent, allow_nan=False) + "\n"


def emit_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edge_list())
    lines.append("}")
    return "\n".join(lines) + "\n"
