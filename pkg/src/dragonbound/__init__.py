"""Dragon curve, its polyomino boundary, and exact boundary-length counting."""

from .lsystem import (
    Alphabet,
    AlphabetError,
    BOUNDARY,
    COUNT_ORDER,
    DRAGON,
    LEFT_BOUNDARY,
    LSystem,
    RIGHT_BOUNDARY,
    apply_once,
    iterate,
    letter_counts,
    transition_matrix,
)
from .curve import ab_alternation_check, check_self_avoiding, dragon_path
from .polyomino import (
    BoundaryWord,
    GeometryError,
    boundary_split,
    cells_from_curve,
    dragon_boundary,
    dragon_cells,
    full_boundary_word,
    perimeter_counts,
    phi,
    split_boundary,
    trace_boundary,
    word_from_cycle,
)
from .counting import (
    BOUNDARY_MATRIX,
    FULL_REC,
    LEFT_GF,
    LEFT_REC,
    LinearRecurrence,
    RIGHT_GF,
    RIGHT_REC,
    RationalGF,
    WEIGHTED_REC,
    char_poly,
    full_count,
    gf_expand,
    growth_root,
    kernel_check,
    left_weighted_count,
    mat_pow_vec,
    quotient_diagram_check,
    rec_eval,
    right_count,
    symmetry_check,
)
from .enumeration import (
    aligned_listing,
    classify_bin,
    classify_row,
    count_A,
    count_S_matrix,
    enumerate_A,
    enumerate_S,
    partition_check,
    row_successors,
    successors_f,
)

__version__ = "0.1.0"
