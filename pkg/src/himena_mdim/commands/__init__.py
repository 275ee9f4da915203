from himena.plugins import register_widget_class
from himena_mdim.consts import GRAPH_TYPE
from himena_mdim.commands import _construct, _methods, _verify
from himena_mdim.commands._widget import QGraphView


def _register_widgets():
    register_widget_class(GRAPH_TYPE, QGraphView)


_register_widgets()

del _construct, _methods, _verify, _register_widgets
