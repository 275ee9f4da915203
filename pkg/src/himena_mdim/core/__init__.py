from himena_mdim.core._errors import DisconnectedGraphError, GraphError, GraphFormatError
from himena_mdim.core._graph import (
    Edge,
    EdgeElem,
    Graph,
    MixedElement,
    Vertex,
    component_mask,
    from_edge_list,
    is_connected,
    mixed_elements,
)
from himena_mdim.core._distance import (
    DistanceData,
    distance_matrix,
    element_distance_table,
    mixed_distance,
    reference_distance_matrix,
    require_connected,
)
from himena_mdim.core._structure import (
    StructureReport,
    all_have_maximal_neighbor,
    analyze,
    cut_vertices,
    cut_vertices_and_blocks,
    equality_condition_holds,
    is_block_graph,
    is_chemical,
    is_simplicial,
    is_tree,
    leaves,
    maximal_neighbor_witness,
    universal_vertices,
)

__all__ = [
    "DisconnectedGraphError",
    "GraphError",
    "GraphFormatError",
    "Edge",
    "EdgeElem",
    "Graph",
    "MixedElement",
    "Vertex",
    "component_mask",
    "from_edge_list",
    "is_connected",
    "mixed_elements",
    "DistanceData",
    "distance_matrix",
    "element_distance_table",
    "mixed_distance",
    "reference_distance_matrix",
    "require_connected",
    "StructureReport",
    "all_have_maximal_neighbor",
    "analyze",
    "cut_vertices",
    "cut_vertices_and_blocks",
    "equality_condition_holds",
    "is_block_graph",
    "is_chemical",
    "is_simplicial",
    "is_tree",
    "leaves",
    "maximal_neighbor_witness",
    "universal_vertices",
]
