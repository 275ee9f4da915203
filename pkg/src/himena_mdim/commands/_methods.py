from himena import Parametric, StandardType, WidgetDataModel
from himena.plugins import register_function, configure_gui

from himena_mdim.commands._utils import (
    MENUS_GRAPH,
    graph_to_model,
    join_ints,
    model_to_graph,
    parse_vertex_list,
    rows_to_table,
)
from himena_mdim.consts import GRAPH_TYPE
from himena_mdim.constructions import (
    amalgamate,
    complete,
    mutually_maximal_edges,
    remove_vertex,
    strong_product,
)
from himena_mdim.core import analyze, distance_matrix
from himena_mdim.solver import (
    is_mixed_resolving_set,
    mdim_upper_greedy,
    solve_mdim,
    witness_failure,
)


@register_function(
    menus=MENUS_GRAPH,
    title="Mixed Metric Dimension ...",
    types=GRAPH_TYPE,
    command_id="himena-mdim:solve:mdim",
)
def compute_mdim(model: WidgetDataModel) -> Parametric:
    """Compute the mixed metric dimension and a basis of the graph."""

    @configure_gui
    def run_mdim(use_pruning: bool = True, use_formula: bool = False, certificate: bool = False):
        """
        Parameters
        ----------
        use_pruning : bool, default True
            Restrict the search to sets containing every forced vertex and no cut vertex.
        use_formula : bool, default False
            Use the closed form for max-mdim graphs, graphs with one universal
            vertex, trees and block graphs when it applies.
        certificate : bool, default False
            Append the distance vector of every vertex and edge to the basis.
        """
        g = model_to_graph(model)
        result = solve_mdim(
            g, use_pruning=use_pruning, use_formula=use_formula, certificate=certificate
        )
        rows = [
            ["mdim", result.dimension],
            ["basis", join_ints(result.basis)],
            ["forced", join_ints(result.forced)],
            ["excluded", join_ints(result.excluded)],
            ["formula", result.formula_used or ""],
            ["candidate sets", result.nodes_searched],
        ]
        rows.extend([name, " ".join(map(str, vec))] for name, vec in result.vectors)
        return rows_to_table(rows, title=f"mdim of {model.title}")

    return run_mdim


@register_function(
    menus=MENUS_GRAPH,
    title="Greedy Upper Bound",
    types=GRAPH_TYPE,
    command_id="himena-mdim:solve:greedy",
)
def greedy_bound(model: WidgetDataModel) -> WidgetDataModel:
    size, chosen = mdim_upper_greedy(model_to_graph(model))
    rows = [["upper bound", size], ["set", join_ints(chosen)]]
    return rows_to_table(rows, title=f"Greedy bound of {model.title}")


@register_function(
    menus=MENUS_GRAPH,
    title="Check Mixed Resolving Set ...",
    types=GRAPH_TYPE,
    command_id="himena-mdim:solve:check-set",
)
def check_resolving_set(model: WidgetDataModel) -> Parametric:
    """Check whether a vertex set resolves every vertex and edge."""

    @configure_gui
    def run_check(vertices: str = "0, 1"):
        g = model_to_graph(model)
        w = parse_vertex_list(vertices)
        resolving = is_mixed_resolving_set(g, w)
        rows = [["vertices", join_ints(w)], ["mixed resolving", resolving]]
        if not resolving and w:
            rows.append(["unresolved", str(witness_failure(g, w))])
        return rows_to_table(rows, title=f"Check of {model.title}")

    return run_check


@register_function(
    menus=MENUS_GRAPH,
    title="Analyze Structure",
    types=GRAPH_TYPE,
    command_id="himena-mdim:analyze",
)
def analyze_structure(model: WidgetDataModel) -> WidgetDataModel:
    """Degrees, universal vertices, cut vertices, blocks and maximal neighbors."""
    g = model_to_graph(model)
    report = analyze(g).to_dict()
    rows = [["n", g.n], ["m", g.n_edges]]
    for key, value in report.items():
        if isinstance(value, list) and key != "blocks":
            value = " ".join("-" if v is None else str(v) for v in value)
        elif key == "blocks":
            value = "; ".join(join_ints(b) for b in value)
        rows.append([key, value])
    return rows_to_table(rows, title=f"Structure of {model.title}")


@register_function(
    menus=MENUS_GRAPH,
    title="Distance Matrix",
    types=GRAPH_TYPE,
    command_id="himena-mdim:distance-matrix",
)
def show_distance_matrix(model: WidgetDataModel) -> WidgetDataModel:
    d = distance_matrix(model_to_graph(model))
    return WidgetDataModel(
        value=d.dist.copy(),
        type=StandardType.ARRAY,
        title=f"Distances of {model.title}",
    )


@register_function(
    menus=MENUS_GRAPH,
    title="Strong Product with K2",
    types=GRAPH_TYPE,
    command_id="himena-mdim:op:strong-product-k2",
)
def strong_product_k2(model: WidgetDataModel) -> WidgetDataModel:
    g = strong_product(model_to_graph(model), complete(2))
    return graph_to_model(g, title=f"{model.title} ⊠ K2")


@register_function(
    menus=MENUS_GRAPH,
    title="Amalgamate ...",
    types=GRAPH_TYPE,
    command_id="himena-mdim:op:amalgamate",
)
def amalgamate_graphs(model: WidgetDataModel) -> Parametric:
    """Glue another graph onto this one along mutually maximal edges."""

    @configure_gui(other={"types": [GRAPH_TYPE], "label": "other graph"})
    def run_amalgamate(other: WidgetDataModel, flip: bool = False):
        """
        Parameters
        ----------
        other : WidgetDataModel
            Graph to glue. The first mutually maximal edge of each graph is used.
        flip : bool, default False
            Glue the lower endpoint of the other edge to the upper endpoint.
        """
        g, h = model_to_graph(model), model_to_graph(other)
        edges_g, edges_h = mutually_maximal_edges(g), mutually_maximal_edges(h)
        if not edges_g or not edges_h:
            raise ValueError("Both graphs need an edge with closed-twin endpoints.")
        out = amalgamate(g, edges_g[0], h, edges_h[0], flip=flip)
        return graph_to_model(out, title=f"Amalgam of {model.title} and {other.title}")

    return run_amalgamate


@register_function(
    menus=MENUS_GRAPH,
    title="Remove Vertex ...",
    types=GRAPH_TYPE,
    command_id="himena-mdim:op:remove-vertex",
)
def remove_vertex_command(model: WidgetDataModel) -> Parametric:
    @configure_gui
    def run_remove(vertex: int = 0):
        g = remove_vertex(model_to_graph(model), vertex)
        return graph_to_model(g, title=f"{model.title} - v{vertex}")

    return run_remove
