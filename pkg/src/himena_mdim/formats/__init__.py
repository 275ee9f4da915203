from himena_mdim.formats._graph6 import emit_graph6, parse_graph6, parse_graph6_lines
from himena_mdim.formats._edgelist import emit_edgelist, parse_edgelist
from himena_mdim.formats._serialize import (
    deserialize_graph,
    dump_document,
    emit_dot,
    serialize_graph,
)

__all__ = [
    "emit_graph6",
    "parse_graph6",
    "parse_graph6_lines",
    "emit_edgelist",
    "parse_edgelist",
    "deserialize_graph",
    "dump_document",
    "emit_dot",
    "serialize_graph",
]
