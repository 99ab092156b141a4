"""bicx: bicomplex arithmetic, special functions, and fractional kinetics.

Numbers live in the commutative 4-dimensional algebra generated by two
imaginary units i, j with ij = k, k^2 = 1, stored as idempotent pairs so
every ring operation is componentwise.  On top of the arithmetic sit the
componentwise gamma machinery, the two-parameter exponential-type special
function E_{V,C}(Z) with certified series truncation, its integral
representations (including a truncated Mellin-Barnes contour), and
Riemann-Liouville fractional operators of bicomplex order with solvers
for generalized fractional kinetic equations.
"""

__version__ = "0.1.0"

from .core import (
    Bicomplex,
    HyperbolicNorm,
    E1,
    E2,
    I,
    J,
    K,
    ONE,
    ZERO,
    cos,
    cr_check,
    exp,
    hyperbolic_norm,
    idempotent,
    is_zero_divisor,
    log,
    make,
    power,
    sin,
)
from .errors import (
    DomainError,
    GammaPole,
    MaxTermsExceeded,
    ParseError,
    PathTruncationError,
    QuadratureNonConvergence,
    SeriesDivergence,
    ZeroDivisorDivision,
    ZeroDivisorLog,
    ZeroDivisorPower,
)
from .gammafn import (
    GammaDomainGuard,
    beta_complex,
    bicomplex_gamma,
    bicomplex_rgamma,
    complex_gamma,
    reciprocal_gamma,
)
from .kummer import kummer_1f1, kummer_ode_residual
from .millerross import (
    MRParams,
    derivative_k,
    derivative_shifted,
    evaluate,
    evaluate_negative_integer_order,
    ode_residual,
    recurrence_residual,
    taylor_in_order,
)
from .quadrature import CurvePair, QuadratureConfig, path_integral
from .series import SeriesValue, TruncationPolicy
from .integralreps import (
    BarnesPath,
    barnes_eval,
    ir_beta,
    ir_double,
    ir_gamma_denominator,
)
from .fractional import (
    FractionalOrder,
    KineticProblem,
    KineticSolution,
    kinetic_solve,
    kinetic_verify,
    rl_apply_mr,
    rl_derivative_power,
    rl_integral_power,
    yq_residual,
)

__all__ = [
    "Bicomplex", "HyperbolicNorm", "E1", "E2", "I", "J", "K", "ONE", "ZERO",
    "make", "idempotent", "hyperbolic_norm", "is_zero_divisor",
    "exp", "log", "sin", "cos", "power", "cr_check",
    "DomainError", "GammaPole", "MaxTermsExceeded", "ParseError",
    "PathTruncationError", "QuadratureNonConvergence", "SeriesDivergence",
    "ZeroDivisorDivision", "ZeroDivisorLog", "ZeroDivisorPower",
    "GammaDomainGuard", "beta_complex", "bicomplex_gamma", "bicomplex_rgamma",
    "complex_gamma", "reciprocal_gamma",
    "kummer_1f1", "kummer_ode_residual",
    "MRParams", "evaluate", "evaluate_negative_integer_order",
    "recurrence_residual", "derivative_k", "derivative_shifted",
    "ode_residual", "taylor_in_order",
    "CurvePair", "QuadratureConfig", "path_integral",
    "SeriesValue", "TruncationPolicy",
    "BarnesPath", "barnes_eval", "ir_beta", "ir_double", "ir_gamma_denominator",
    "FractionalOrder", "KineticProblem", "KineticSolution",
    "kinetic_solve", "kinetic_verify", "rl_apply_mr",
    "rl_derivative_power", "rl_integral_power", "yq_residual",
]
