"""Exact detection and construction of rank-1 equivalent bimatrix games."""

from .scalars import (
    FieldMismatchError,
    QuadExt,
    Scalar,
    format_scalar,
    parse_rational,
    parse_scalar,
    quad_ext,
    sign_of,
    solve_quadratic,
    squarefree_split,
)
from .matrices import ExactMatrix, RankOneFactor, ShapeError, solve_linear
from .games import (
    BimatrixGame,
    PatParams,
    Rank1GameSpec,
    apply_pat,
    game_rank,
    generate_disguised_game,
    invert_pat,
)
from .wedderburn import (
    PivotError,
    WedderburnStep,
    rank_reducing_decomposition,
    rowspace_propagation_check,
    wedderburn_step,
)
from .pencil import (
    ContractViolationError,
    LambdaSet,
    PencilQuadratic,
    cell_quadratic,
    find_nonzero_quadratic,
    pencil_at,
    select_pivot,
    solve_rank1_pencil,
)
from .reduction import (
    DEGENERATE_ZERO_SUM,
    EQUIVALENT,
    NOT_EQUIVALENT,
    REJECTED,
    ReductionCertificate,
    ReductionResult,
    build_reduced_pair,
    check_certificate,
    reduce_game,
    verify_certificate,
)
from .nash import (
    EnumerationResult,
    MixedProfile,
    SizeLimitError,
    cross_verify_equivalence,
    is_nash,
    support_enumeration,
)

__version__ = "0.1.0"

__all__ = [
    "BimatrixGame",
    "ContractViolationError",
    "DEGENERATE_ZERO_SUM",
    "EQUIVALENT",
    "EnumerationResult",
    "ExactMatrix",
    "FieldMismatchError",
    "LambdaSet",
    "MixedProfile",
    "NOT_EQUIVALENT",
    "PatParams",
    "PencilQuadratic",
    "PivotError",
    "QuadExt",
    "REJECTED",
    "Rank1GameSpec",
    "RankOneFactor",
    "ReductionCertificate",
    "ReductionResult",
    "Scalar",
    "ShapeError",
    "SizeLimitError",
    "WedderburnStep",
    "apply_pat",
    "build_reduced_pair",
    "cell_quadratic",
    "check_certificate",
    "cross_verify_equivalence",
    "find_nonzero_quadratic",
    "format_scalar",
    "game_rank",
    "generate_disguised_game",
    "invert_pat",
    "is_nash",
    "parse_rational",
    "parse_scalar",
    "pencil_at",
    "quad_ext",
    "rank_reducing_decomposition",
    "reduce_game",
    "rowspace_propagation_check",
    "select_pivot",
    "sign_of",
    "solve_linear",
    "solve_quadratic",
    "solve_rank1_pencil",
    "squarefree_split",
    "support_enumeration",
    "verify_certificate",
    "wedderburn_step",
]
