from __future__ import annotations

import json
from pathlib import Path

from himena import WidgetDataModel
from himena.plugins import register_reader_plugin, register_writer_plugin

from himena_mdim.consts import GRAPH_TYPE
from himena_mdim.core import Graph
from himena_mdim.formats import (
    deserialize_graph,
    emit_edgelist,
    emit_graph6,
    parse_edgelist,
    parse_graph6_lines,
    serialize_graph,
)

GRAPH6_SUFFIXES = (".g6", ".graph6")
EDGELIST_SUFFIX = ".edgelist"


def _read_graph(path: Path) -> Graph:
    text = path.read_text()
    if path.suffix == EDGELIST_SUFFIX:
        return parse_edgelist(text)
    elif path.suffix in GRAPH6_SUFFIXES:
        graphs = parse_graph6_lines(text)
        if len(graphs) != 1:
            raise ValueError(f"{path.name} holds {len(graphs)} graphs; expected one.")
        return graphs[0]
    return deserialize_graph(json.loads(text))


@register_reader_plugin
def read_graph(path: Path) -> WidgetDataModel:
    return WidgetDataModel(
        value=_read_graph(path),
        type=GRAPH_TYPE,
        title=path.name,
    )


@read_graph.define_matcher
def _(path: Path):
    if path.suffix in GRAPH6_SUFFIXES or path.suffix == EDGELIST_SUFFIX:
        return GRAPH_TYPE
    if path.suffixes[-2:] == [".graph", ".json"]:
        return GRAPH_TYPE
    return None


def _graph_text(g: Graph, path: Path) -> str:
    if path.suffix in GRAPH6_SUFFIXES:
        return emit_graph6(g) + "\n"
    elif path.suffix == EDGELIST_SUFFIX:
        return emit_edgelist(g)
    return json.dumps(serialize_graph(g))


@register_writer_plugin
def write_graph(model: WidgetDataModel, path: Path):
    path.write_text(_graph_text(model.value, path))


@write_graph.define_matcher
def _(model: WidgetDataModel, path: Path):
    return isinstance(model.value, Graph)
