from typing import Literal

# a vertex subset must fit one machine word
MAX_ORDER = 62
SOLVER_MAX_ORDER = 16
ENUMERATION_MIN_ORDER = 2
ENUMERATION_MAX_ORDER = 7
ISOMORPHISM_MAX_ORDER = 8
CHEMICAL_MAX_DEGREE = 4

GRAPH_TYPE = "graph"

FormulaTag = Literal["max-mdim", "one-universal", "tree", "block-graph"]
RandomModel = Literal["tree", "unicyclic", "block", "gnp"]

RANDOM_MODELS: tuple[RandomModel, ...] = ("tree", "unicyclic", "block", "gnp")
RANDOM_MIN_ORDER = 4
RANDOM_MAX_ORDER = 9
GNP_EDGE_PROBABILITY = 0.45

DEFAULT_SEED = 1
DEFAULT_CUT_BOUND_TRIALS = 500
DEFAULT_BLOCK_GRAPH_TRIALS = 200
DEFAULT_CONSISTENCY_TRIALS = 500
DEFAULT_DELTA_SAMPLES = 1000
DEFAULT_GRAPH6_CORPUS = 1000
DEFAULT_DISTANCE_TRIALS = 200
DISTANCE_ORACLE_MAX_ORDER = 10

FAMILY_THEOREM_MAX_ORDER = 13
FAMILY_THEOREM_MIN_DEGREE = 5

JOBS_ENV_VAR = "MDIM_JOBS"
