"""Exact computation of the upsilon and secondary upsilon concordance
invariants of torus knots, their mirrors and connected sums."""

from .plfun import (
    ExtRational,
    Infinity,
    NEG_INF,
    POS_INF,
    PLFunction,
    Rational,
    format_ext,
    is_finite,
    pl_add,
    pl_constant,
    pl_equal,
    pl_eval,
    pl_from_json,
    pl_from_samples,
    pl_lower_envelope,
    pl_neg,
    pl_scale,
    pl_to_json,
)
from .f2 import F2AffineSpace, F2Matrix, affine_intersects, rank, solve
from .staircase import (
    LaurentPoly,
    SemigroupRuns,
    Staircase,
    alexander_oracle,
    alexander_torus,
    build_staircase,
    semigroup_runs,
    staircase_steps,
    upsilon_staircase,
)
from .cfk import (
    BifilteredComplex,
    Generator,
    GradingSlice,
    complex_from_json,
    complex_to_json,
    dual,
    euler_characteristic,
    from_staircase,
    grading_slice,
    shift_filtration,
    tensor,
    unknot_complex,
    validate,
)
from .upsilon import (
    InvalidComplexError,
    JumpReport,
    PivotPair,
    candidate_parameters,
    check_subadditivity,
    cycle_space,
    gamma2,
    gamma_at,
    is_jump_value,
    jump_values,
    pivot_points,
    upsilon2,
    upsilon_pl,
)
from .expr import (
    ComplexTooLargeError,
    ExprSyntaxError,
    KnotExpr,
    Mirror,
    Multiple,
    Sum,
    Torus,
    Unknot,
    expected_generators,
    expr_to_str,
    parse_expr,
    realize,
)

__version__ = "0.1.0"
