from himena import Parametric
from himena.plugins import register_function, configure_gui

from himena_mdim.commands._utils import MENUS_CONSTRUCT, graph_to_model
from himena_mdim.constructions import FamilySpec, build_family, family_recipe


def _construct(spec: FamilySpec):
    return graph_to_model(build_family(spec), title=str(spec))


@register_function(
    menus=MENUS_CONSTRUCT,
    title="Path ...",
    command_id="himena-mdim:construct:path",
)
def construct_path() -> Parametric:
    """Construct the path P_n."""

    @configure_gui
    def run_construct(n: int = 5):
        return _construct(FamilySpec("path", (n,)))

    return run_construct


@register_function(
    menus=MENUS_CONSTRUCT,
    title="Cycle ...",
    command_id="himena-mdim:construct:cycle",
)
def construct_cycle() -> Parametric:
    """Construct the cycle C_n."""

    @configure_gui
    def run_construct(n: int = 6):
        return _construct(FamilySpec("cycle", (n,)))

    return run_construct


@register_function(
    menus=MENUS_CONSTRUCT,
    title="Complete Graph ...",
    command_id="himena-mdim:construct:complete",
)
def construct_complete() -> Parametric:
    """Construct the complete graph K_n."""

    @configure_gui
    def run_construct(n: int = 4):
        return _construct(FamilySpec("complete", (n,)))

    return run_construct


@register_function(
    menus=MENUS_CONSTRUCT,
    title="Complete Graph Minus Matching ...",
    command_id="himena-mdim:construct:complete-minus-matching",
)
def construct_complete_minus_matching() -> Parametric:
    """Construct K_n with k disjoint edges removed."""

    @configure_gui
    def run_construct(n: int = 6, k: int = 1):
        return _construct(FamilySpec("complete_minus_matching", (n, k)))

    return run_construct


@register_function(
    menus=MENUS_CONSTRUCT,
    title="Star ...",
    command_id="himena-mdim:construct:star",
)
def construct_star() -> Parametric:
    """Construct the star K_{1,leaves}; the hub is vertex 0."""

    @configure_gui
    def run_construct(leaves: int = 5):
        return _construct(FamilySpec("star", (leaves,)))

    return run_construct


@register_function(
    menus=MENUS_CONSTRUCT,
    title="Wheel ...",
    command_id="himena-mdim:construct:wheel",
)
def construct_wheel() -> Parametric:
    @configure_gui
    def run_construct(n: int = 6):
        return _construct(FamilySpec("wheel", (n,)))

    return run_construct


@register_function(
    menus=MENUS_CONSTRUCT,
    title="Ladder H_r ...",
    command_id="himena-mdim:construct:h-graph",
)
def construct_h_graph() -> Parametric:
    """Construct H_r = P_r ⊠ K_2, optionally without one end vertex."""

    @configure_gui
    def run_construct(r: int = 4, minus: bool = False):
        return _construct(FamilySpec("h_minus" if minus else "h_graph", (r,)))

    return run_construct


@register_function(
    menus=MENUS_CONSTRUCT,
    title="Lambda Graph ...",
    command_id="himena-mdim:construct:lambda",
)
def construct_lambda() -> Parametric:
    """Construct Λ_{k,r}, the amalgam of H_r (or H_r minus a vertex) and K_k."""

    @configure_gui
    def run_construct(k: int = 5, r: int = 5, minus: bool = False):
        return _construct(FamilySpec("lambda_minus" if minus else "lambda", (k, r)))

    return run_construct


@register_function(
    menus=MENUS_CONSTRUCT,
    title="Max-mdim Graph of Given Order and Degree ...",
    command_id="himena-mdim:construct:recipe",
)
def construct_recipe() -> Parametric:
    """Construct a max-mdim graph with n vertices and maximum degree t."""

    @configure_gui
    def run_construct(n: int = 10, t: int = 5):
        return _construct(family_recipe(n, t))

    return run_construct


@register_function(
    menus=MENUS_CONSTRUCT,
    title="G6",
    command_id="himena-mdim:construct:g6",
)
def construct_g6():
    """The six-vertex max-mdim graph with maximum degree 4."""
    return _construct(FamilySpec("g6"))


@register_function(
    menus=MENUS_CONSTRUCT,
    title="P3 ⊠ K2",
    command_id="himena-mdim:construct:p3k2",
)
def construct_p3k2():
    return _construct(FamilySpec("p3k2"))


@register_function(
    menus=MENUS_CONSTRUCT,
    title="Random Tree ...",
    command_id="himena-mdim:construct:random-tree",
)
def construct_random_tree() -> Parametric:
    @configure_gui
    def run_construct(n: int = 8, seed: int = 1, block_graph: bool = False):
        """Construct a seeded random tree, or a random block graph if checked."""
        kind = "random_block_graph" if block_graph else "random_tree"
        return _construct(FamilySpec(kind, (n,), seed))

    return run_construct
