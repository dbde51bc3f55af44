"""Exact engine for reflections, orbit enumeration, and equivalence
classification of braided vector spaces of diagonal type.
"""

from .scalar import (
    MINUS_ONE,
    ONE,
    Scalar,
    ScalarParseError,
    parameter,
    parse_scalar,
    qint_is_zero,
    root_of_unity,
)
from .braiding import (
    BraidingMatrix,
    NotReflectableError,
    Reflection,
    TwistClass,
    bicharacter_eval,
    canonicalize,
    cartan_matrix,
    m_exponent,
    p_factor,
    parse_matrix,
    reflect,
    rep_matrix,
)
from .groupoid import (
    DEFAULT_BOUND,
    Equivalence,
    GroupoidElement,
    OrbitEdge,
    OrbitGraph,
    OrbitNode,
    RankMismatchError,
    RootEnumeration,
    Status,
    UndefinedCompositionError,
    compose,
    enumerate_orbit,
    enumerate_real_roots,
    orbit_to_dot,
    orbit_to_json,
    weyl_equivalent,
)
from .catalog import (
    Assignment,
    CatalogRow,
    Classification,
    DEFAULT_VERIFY_BOUND,
    DomainViolationError,
    FixedParam,
    MatchStatus,
    Overlap,
    Report,
    RowCheck,
    RowInstantiation,
    Verdict,
    classify,
    default_assignments,
    find_overlaps,
    format_assignment,
    instantiate_row,
    load_rows,
    row_by_id,
    verify_all,
    verify_row,
)

__version__ = "0.1.0"

__all__ = [
    "MINUS_ONE",
    "ONE",
    "Scalar",
    "ScalarParseError",
    "parameter",
    "parse_scalar",
    "qint_is_zero",
    "root_of_unity",
    "BraidingMatrix",
    "NotReflectableError",
    "Reflection",
    "TwistClass",
    "bicharacter_eval",
    "canonicalize",
    "cartan_matrix",
    "m_exponent",
    "p_factor",
    "parse_matrix",
    "reflect",
    "rep_matrix",
    "DEFAULT_BOUND",
    "Equivalence",
    "GroupoidElement",
    "OrbitEdge",
    "OrbitGraph",
    "OrbitNode",
    "RankMismatchError",
    "RootEnumeration",
    "Status",
    "UndefinedCompositionError",
    "compose",
    "enumerate_orbit",
    "enumerate_real_roots",
    "orbit_to_dot",
    "orbit_to_json",
    "weyl_equivalent",
    "Assignment",
    "CatalogRow",
    "Classification",
    "DEFAULT_VERIFY_BOUND",
    "DomainViolationError",
    "FixedParam",
    "MatchStatus",
    "Overlap",
    "Report",
    "RowCheck",
    "RowInstantiation",
    "Verdict",
    "classify",
    "default_assignments",
    "find_overlaps",
    "format_assignment",
    "instantiate_row",
    "load_rows",
    "row_by_id",
    "verify_all",
    "verify_row",
]
