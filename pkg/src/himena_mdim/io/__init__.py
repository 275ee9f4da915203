from himena_mdim.io.core import read_graph, write_graph

__all__ = ["read_graph", "write_graph"]
