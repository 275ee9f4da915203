from himena_mdim.constructions._operations import (
    amalgamate,
    mutually_maximal_edges,
    remove_vertex,
    strong_product,
)
from himena_mdim.constructions._random import (
    labeled_trees,
    prufer_decode,
    random_block_graph,
    random_connected,
    random_connected_gnp,
    random_tree,
    random_unicyclic,
)
from himena_mdim.constructions._families import (
    FAMILY_KINDS,
    G6_EDGES,
    FamilySpec,
    build_family,
    complete,
    complete_minus_matching,
    cycle,
    family_recipe,
    p3k2,
    g6,
    h_graph,
    h_minus,
    lambda_graph,
    lambda_minus,
    path,
    star,
    wheel,
)

__all__ = [
    "amalgamate",
    "mutually_maximal_edges",
    "remove_vertex",
    "strong_product",
    "labeled_trees",
    "prufer_decode",
    "random_block_graph",
    "random_connected",
    "random_connected_gnp",
    "random_tree",
    "random_unicyclic",
    "FAMILY_KINDS",
    "G6_EDGES",
    "FamilySpec",
    "build_family",
    "complete",
    "complete_minus_matching",
    "cycle",
    "family_recipe",
    "p3k2",
    "g6",
    "h_graph",
    "h_minus",
    "lambda_graph",
    "lambda_minus",
    "path",
    "star",
    "wheel",
]
