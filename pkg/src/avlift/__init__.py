"""Computations around lifting automorphisms of abelian varieties.

Submodules: ``exact_seq`` (rank deduction in exact sequences), ``dims``
(closed-form dimension counts), ``ec_arith`` (elliptic curves over F_p),
``isometry`` (isometric 2x2 matrices over End(A)) and ``cli``.
"""

from .dims import (
    DimReport,
    deformation_dims,
    dim_report,
    extra_lift_tangent_dim,
    graph_les,
    hochschild_dim,
    hodge_dim,
)
from .ec_arith import (
    CurveAnalysis,
    CurveSpec,
    analyze,
    count_points,
    derived_equivalent,
    parse_curve,
    product_p_rank,
)
from .exact_seq import (
    ExactSequenceSpec,
    RankSolution,
    brute_force_profiles,
    build_sequence,
    solve_ranks,
)
from .isometry import (
    EndMatrix,
    EndRing,
    OrderElement,
    enumerate_isometric,
    hat,
    is_isometric,
    kernel_report,
    multiply,
    tilde,
)

__version__ = "0.1.0"
