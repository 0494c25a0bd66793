"""Exact Schubert polynomial calculator and zero-one classifier."""

from .perms import (
    Diagram,
    Permutation,
    contains_pattern,
    delete_row_col,
    has_northwest_property,
    one_step_pattern,
    parse_diagram,
    parse_permutation,
    rothe_diagram,
)
from .poly import (
    Polynomial,
    coefficientwise_geq,
    demazure,
    divided_difference,
    is_zero_one,
    max_coefficient,
    schubert_all,
    schubert_classic,
)
from .orthodontia import (
    OrthodonticTrace,
    build_D_im,
    column_equivalent,
    impact,
    is_multiplicity_free,
    orthodontic_sequence,
    schubert_orthodontic,
)
from .tableaux import (
    FillingView,
    quantized_demazure,
    read_into_diagram,
    root_operator,
    schubert_from_tableaux,
    tableaux_set,
    tableaux_stage,
    tau_reindexing,
)
from .weyl import (
    diagram_leq,
    dual_character,
    pattern_dominance_check,
    schubert_pattern_inequality,
)
from .classify import (
    MULTIPLICITOUS_PATTERNS,
    avoids_multiplicitous,
    find_configuration,
    survey,
    zero_one_status,
)

__version__ = "0.1.0"
