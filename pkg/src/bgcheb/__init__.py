"""(beta, gamma)-Chebyshev functions and points on [-1, 1].

Exact parameter handling, point-set generators, polynomial-case
classification, orthogonality checks and Lebesgue-constant analysis.
"""

from .errors import DegenerateNodes, DomainError
from .functions import (
    BGChebFunction,
    eval_direct,
    eval_lobatto_fn,
    eval_recurrence,
    symmetry_reflect,
)
from .lebesgue import (
    BarycentricWeights,
    LebesgueReport,
    bary_weights,
    find_optimal_beta,
    find_optimal_delta,
    lambda_minus_one_closed,
    lebesgue_constant,
    lebesgue_function,
    log_growth_threshold,
    sweep_beta,
)
from .ortho import GramMatrix, QuadratureSpec, gram_matrix, inner_product, weight
from .params import (
    Interval,
    ParamPair,
    Rational,
    make_params,
    make_params_float,
    omega_bar_interval,
    omega_interval,
    parse_rational,
)
from .points import (
    PointKind,
    PointSet,
    cheb_as_lobatto,
    cheb_points,
    equispaced_first_kind,
    equispaced_lobatto,
    extrema_points,
    kte_map,
    lobatto_points,
    map_pointset,
)
from .polycases import (
    PolyClassification,
    PolyStatus,
    SubsetParams,
    beta_m,
    beta_mn,
    classify,
    subset_params,
    verify_classification,
    verify_subset,
)

__version__ = "0.1.0"
