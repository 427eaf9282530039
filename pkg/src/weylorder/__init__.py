"""Exact normal ordering in the (q-deformed) Weyl algebra and generalized Stirling numbers."""

from .closed_forms import (
    bell,
    bell_word,
    closed_form_sw,
    f_genfunc,
    f_nested,
    f_stirling1,
    stirling1_unsigned,
    stirling2,
    summation_sw,
)
from .errors import (
    BudgetExceededError,
    EnumerationBoundError,
    InexactDivisionError,
    MalformedInputError,
    NotDyckError,
    WeylOrderError,
    WordSyntaxError,
    WordTooLongError,
)
from .forests import (
    RaryForest,
    enumerate_forests,
    forest_to_partition_g,
    forest_to_partition_h,
    partition_to_forest_g,
    partition_to_forest_h,
    reverse_labels,
)
from .graphs import (
    LabeledGraph,
    SetPartition,
    build_fan,
    build_g,
    build_g_nr,
    build_h,
    build_h_nr,
    chromatic_from_heights,
    chromatic_polynomial,
    enumerate_partitions,
    graph_stirling,
    stirling_from_chromatic,
)
from .poly import Poly
from .qpoly import q_binomial, q_factorial, q_int, q_stirling_carlitz
from .qweights import (
    MatchMatrix,
    matching_decode,
    matching_encode,
    matrix_weight,
    partition_weight,
    q_graph_stirling,
    q_matching_sum,
)
from .rewrite import NormalForm, QNormalForm, compose, leibniz_compose, normal_order, normal_order_q
from .rooks import FerrersBoard, board_of, rook_count, stirling_via_rooks
from .words import (
    AssociatedDyck,
    PathGeometry,
    associated_dyck,
    heights,
    irreducible_decomposition,
    is_dyck,
    matched_pairs,
    parse_word,
    path_geometry,
)

__version__ = "0.1.0"
