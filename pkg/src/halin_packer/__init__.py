"""S-packing colorings of cubic Halin graphs.

Constructive (1,1,2,3) and (1,2,2,2,2,2) colorings, a verifier, an exact
backtracking solver and generators of cubic Halin graphs.
"""

__version__ = "0.1.0"

from ._jit import USE_JIT
from .constructive import (
    ColoringDiagnostics,
    ConflictRecord,
    color_1123,
    color_122222,
    lemma1_tree_coloring,
    two_color_tree,
)
from .exact_solver import (
    SearchConfig,
    SolveResult,
    SurveyRow,
    decide,
    naive_decide,
    packing_chromatic_number,
    survey,
    write_survey_csv,
)
from .generators import (
    PlaneCubicTree,
    canonical_code,
    enumerate_cubic_halin,
    named_instance,
    random_cubic_halin,
)
from .graph_core import (
    DistanceOracle,
    GenericGraph,
    HalinGraph,
    SPacking,
    VerificationReport,
    all_pairs_distances,
    build_halin,
    cycle_distance,
    full_graph,
    lift_coloring,
    subdivide,
    verify_packing,
)
