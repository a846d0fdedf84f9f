"""Toolkit for triangulations of products of simplices, fine mixed
subdivisions, and tropical oriented matroids."""

from .types import (
    MAX_D,
    ComparabilityGraph,
    CyclicTypeError,
    DegreeVector,
    MissingElementError,
    OrderedPartition,
    ShapeMismatchError,
    TooLargeError,
    TropicalType,
    comparability_graph,
    delta,
    directed_cycle,
    dual,
    is_acyclic,
    is_acyclic_type,
    is_spanning_tree,
    left_degree_vector,
    ordered_partitions,
    partition,
    rank,
    refine,
    right_degree_vector,
    single_deletion_refinements,
    ttype,
)
from .subdivision import (
    BijectionReport,
    CellCollection,
    InvalidSubdivisionError,
    TypeSystem,
    UnitSimplexReport,
    ValidationReport,
    cell_contains_point,
    face_types,
    ldv_bijection_check,
    topes,
    transpose,
    unit_simplex_check,
    unit_simplex_locations,
    validate_subdivision,
    weak_compositions,
)
from .axioms import (
    AxiomReport,
    TOMVerdict,
    check_boundary,
    check_comparability,
    check_elimination,
    check_surrounding,
    check_tom,
    elimination_witnesses,
)
from .paths import (
    ConnectivityReport,
    NoStrongPathError,
    TypePath,
    adjacent,
    eliminate_via_path,
    q_alpha,
    q_alpha_connected,
    strong_path,
)
from .geometry import (
    FacetMatrix,
    NonGenericWeightsError,
    NotSpanningTreeError,
    WeightMatrix,
    facet_matrix,
    is_interval_matrix_reorderable,
    is_totally_unimodular,
    point_type,
    regular_subdivision,
    spanning_trees,
)
from .generators import (
    NotAPermutationError,
    all_prism_triangulations,
    prism_triangulation,
    staircase,
)

__version__ = "0.1.0"
