from __future__ import annotations

from typing import Any

from himena import StandardType, WidgetDataModel
from himena.plugins import configure_submenu

from himena_mdim.consts import GRAPH_TYPE
from himena_mdim.core import Graph

MENUS_GRAPH = ["tools/mdim", "/model_menu/mdim"]
MENUS_CONSTRUCT = ["tools/mdim/construct"]
configure_submenu(MENUS_GRAPH, title="Mixed Metric Dimension")
configure_submenu(MENUS_CONSTRUCT, title="Construct Graph")


def graph_to_model(g: Graph, title: str) -> WidgetDataModel:
    return WidgetDataModel(value=g, type=GRAPH_TYPE, title=title)


def model_to_graph(model: WidgetDataModel) -> Graph:
    if not isinstance(g := model.value, Graph):
        raise TypeError(f"Expected a Graph, got {type(g)}.")
    return g


def rows_to_table(rows: list[list[Any]], title: str) -> WidgetDataModel:
    return WidgetDataModel(
        value=[[str(cell) for cell in row] for row in rows],
        type=StandardType.TABLE,
        title=title,
    )


def parse_vertex_list(text: str) -> list[int]:
    """``"0, 2 5"`` -> ``[0, 2, 5]``."""
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise ValueError(f"Vertices must be integers, got {text!r}.") from None


def join_ints(values) -> str:
    return " ".join(str(v) for v in sorted(values))
