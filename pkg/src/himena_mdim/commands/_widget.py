from __future__ import annotations

import numpy as np
from qtpy import QtWidgets as QtW, QtCore, QtGui
from himena import WidgetDataModel
from himena.plugins import validate_protocol

from himena_mdim.consts import GRAPH_TYPE
from himena_mdim.core import Graph, all_have_maximal_neighbor, cut_vertices, is_connected

_RADIUS = 100.0
_NODE_SIZE = 14.0


def circular_layout(n: int) -> np.ndarray:
    """(n, 2) positions on a circle, vertex 0 at the top, counter-clockwise."""
    theta = np.pi / 2 + 2 * np.pi * np.arange(n) / max(n, 1)
    return _RADIUS * np.stack([np.cos(theta), -np.sin(theta)], axis=1)


class QGraphGraphics(QtW.QGraphicsView):
    """Graphics view drawing a graph on a circle; cut vertices are highlighted."""

    def __init__(self):
        scene = QtW.QGraphicsScene()
        super().__init__(scene)
        self.setVerticalScrollBarPolicy(QtCore.Qt.ScrollBarPolicy.ScrollBarAlwaysOff)
        self.setHorizontalScrollBarPolicy(QtCore.Qt.ScrollBarPolicy.ScrollBarAlwaysOff)
        self.setRenderHint(QtGui.QPainter.RenderHint.Antialiasing)
        self._edge_pen = QtGui.QPen(QtGui.QColor(128, 128, 128), 1.5)
        self._node_brush = QtGui.QBrush(QtGui.QColor(70, 130, 180))
        self._cut_brush = QtGui.QBrush(QtGui.QColor(220, 80, 60))

    def set_graph(self, g: Graph):
        scene = self.scene()
        scene.clear()
        pos = circular_layout(g.n)
        for u, v in g.edge_list():
            scene.addLine(*pos[u], *pos[v], self._edge_pen)
        connected = g.n > 1 and is_connected(g)
        cut = cut_vertices(g) if connected else frozenset()
        half = _NODE_SIZE / 2
        for v, (x, y) in enumerate(pos):
            brush = self._cut_brush if v in cut else self._node_brush
            scene.addEllipse(x - half, y - half, _NODE_SIZE, _NODE_SIZE, QtGui.QPen(), brush)
            label = scene.addSimpleText(str(v))
            label.setPos(x + half, y + half)
        self.fit_item()

    def resizeEvent(self, event):
        self.fit_item()
        super().resizeEvent(event)

    def fit_item(self):
        self.fitInView(
            self.scene().itemsBoundingRect(), QtCore.Qt.AspectRatioMode.KeepAspectRatio
        )


class QGraphSummary(QtW.QPlainTextEdit):
    def __init__(self):
        super().__init__()
        self.setWordWrapMode(QtGui.QTextOption.WrapMode.NoWrap)
        self.setReadOnly(True)

    def set_graph(self, g: Graph):
        lines = [
            f"n = {g.n}, m = {g.n_edges}",
            f"degree {g.min_degree}..{g.max_degree}",
        ]
        if g.n > 1 and not is_connected(g):
            lines.append("disconnected")
        elif g.n > 1:
            lines.append(f"max-mdim predicate: {all_have_maximal_neighbor(g)}")
        self.setPlainText("\n".join(lines))


class QGraphView(QtW.QSplitter):
    def __init__(self):
        super().__init__(QtCore.Qt.Orientation.Vertical)
        self._img_view = QGraphGraphics()
        self._summary = QGraphSummary()
        self._graph: Graph | None = None
        self.addWidget(self._img_view)
        self.addWidget(self._summary)
        self.setSizes([160, 50])

    @validate_protocol
    def update_model(self, model: WidgetDataModel):
        g = model.value
        if not isinstance(g, Graph):
            raise TypeError(f"Expected a Graph, got {type(g)}.")
        self._img_view.set_graph(g)
        self._summary.set_graph(g)
        self._graph = g

    @validate_protocol
    def to_model(self) -> WidgetDataModel:
        if self._graph is None:
            raise ValueError("No graph is set.")
        return WidgetDataModel(value=self._graph, type=self.model_type())

    @validate_protocol
    def model_type(self) -> str:
        return GRAPH_TYPE

    @validate_protocol
    def size_hint(self) -> tuple[int, int]:
        return 240, 280
