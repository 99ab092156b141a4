"""Numerical verification of the integral representations.

Four independent reconstructions of E_{V,C}(Z), each exercised against the
series evaluation over admissible parameter clouds:

 * beta-kernel form over the unit segment,
      E = Z^V/Gamma(V+1) [1 + sum_{r>=1} (CZ)^r/Gamma(r)
                              int_D t^{r-1} (1-t)^V dt],
 * a double-curve form for shifted orders V+M with beta kernels in two
   variables,
 * a gamma-denominator form with each Gamma(V+r+1) replaced by its
   Euler integral over the positive ray,
 * a truncated Mellin-Barnes contour (vertical line between the two pole
   families) evaluated by the trapezoid rule.

Truncation of the representation sums defaults to the term count the
matching series evaluation used, plus a guard margin.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .core import Bicomplex, HyperbolicNorm, as_bicomplex
from .errors import DomainError, PathTruncationError
from .gammafn import (
    bicomplex_rgamma,
    reciprocal_gamma,
    require_real_dominates,
    zpow_rgamma,
)
from .millerross import MRParams, evaluate
from .quadrature import (
    DEFAULT_QUAD,
    CurvePair,
    QuadratureConfig,
    grade_for_exponent,
    path_integral,
)
from .series import DEFAULT_POLICY, TruncationPolicy

_GUARD_TERMS = 8
_CURVE_CLIP = 1e-6  # omitted kernel mass O(clip^4) under the default grading


def _default_terms(params: MRParams, Z, policy: TruncationPolicy) -> int:
    return evaluate(params, Z, policy).terms_used + _GUARD_TERMS


def _cpow(z: complex, e: complex) -> complex:
    # Kernel power with the integrable-limit convention at a vanishing base.
    if z == 0:
        if e.real > 0.0:
            return 0j
        raise DomainError(f"kernel power 0^({e}) is singular")
    return cmath.exp(e * cmath.log(z))


def ir_beta(
    params: MRParams,
    Z,
    R_terms: int | None = None,
    quad: QuadratureConfig = DEFAULT_QUAD,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> Bicomplex:
    """Beta-kernel representation over the unit segment, both components.

    Needs Re(alpha)+1 > |Im(beta)| so (1-t)^V stays integrable at t = 1.
    """
    Z = as_bicomplex(Z)
    V, C = params.V, params.C
    require_real_dominates(V, 1.0, "beta-kernel representation")
    if R_terms is None:
        R_terms = _default_terms(params, Z, policy)

    # Kernel in the reflected variable w = 1-t, so the algebraically
    # singular factor w^V sits at the parameter origin (no cancellation
    # computing 1-t near t = 1); node grading soaks up the singularity.
    seg = CurvePair.unit_segment(
        grade_start=(
            grade_for_exponent(V.z1.real),
            grade_for_exponent(V.z2.real),
        ),
        start_clip=_CURVE_CLIP,
    )
    CZ = C * Z
    bracket = Bicomplex(1, 1)
    czr = Bicomplex(1, 1)
    for r in range(1, R_terms + 1):
        czr = czr * CZ

        def integrand(W, _r=r):
            pw = Bicomplex(_cpow(W.z1, V.z1), _cpow(W.z2, V.z2))
            return (1 - W) ** (_r - 1) * pw

        kernel = path_integral(integrand, seg, quad)
        bracket = bracket + czr * kernel * reciprocal_gamma(r)
    return zpow_rgamma(Z, V, V + 1) * bracket


def ir_double(
    V,
    M,
    C,
    Z,
    R_terms: int | None = None,
    quad: QuadratureConfig = DEFAULT_QUAD,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> Bicomplex:
    """Two-curve representation of E_{V+M,C}(Z).

    Both orders need positive dominant real part (Re > |Im| on the j-form)
    so the kernels s^{V-1} and t^{M-1} are integrable at 0.
    """
    V, M, C, Z = map(as_bicomplex, (V, M, C, Z))
    require_real_dominates(V, 0.0, "double representation, first order")
    require_real_dominates(M, 0.0, "double representation, second order")
    params = MRParams(V + M, C)
    if R_terms is None:
        R_terms = _default_terms(params, Z, policy)

    curve_a = CurvePair.unit_segment(
        grade_start=(
            grade_for_exponent(V.z1.real - 1.0),
            grade_for_exponent(V.z2.real - 1.0),
        ),
        start_clip=_CURVE_CLIP,
    )
    curve_d = CurvePair.unit_segment(
        grade_start=(
            grade_for_exponent(M.z1.real - 1.0),
            grade_for_exponent(M.z2.real - 1.0),
        ),
        start_clip=_CURVE_CLIP,
    )

    def spow(T, expo):
        return Bicomplex(_cpow(T.z1, expo.z1), _cpow(T.z2, expo.z2))

    CZ = C * Z
    total = Bicomplex(0, 0)
    czr = Bicomplex(1, 1)
    rfact = 1.0
    for r in range(R_terms + 1):
        def f_a(S, _r=r):
            return spow(S, V - 1) * spow(1 - S, M) * (1 - S) ** _r

        def f_d(T, _r=r):
            return spow(T, M - 1) * (1 - T) ** _r

        ia = path_integral(f_a, curve_a, quad)
        id_ = path_integral(f_d, curve_d, quad)
        total = total + czr * ia * id_ * (1.0 / rfact)
        czr = czr * CZ
        rfact *= r + 1
    prefactor = zpow_rgamma(Z, V + M, Bicomplex(1, 1))  # Z^{V+M} / Gamma(1)
    return prefactor * bicomplex_rgamma(V) * bicomplex_rgamma(M) * total


def ir_gamma_denominator(
    params: MRParams,
    Z,
    R_terms: int | None = None,
    quad: QuadratureConfig = DEFAULT_QUAD,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> Bicomplex:
    """Gamma-denominator representation: each Gamma(V+r+1) by quadrature."""
    Z = as_bicomplex(Z)
    V, C = params.V, params.C
    require_real_dominates(V, 1.0, "gamma-denominator representation")
    if R_terms is None:
        R_terms = _default_terms(params, Z, policy)

    CZ = C * Z
    total = Bicomplex(0, 0)
    czr = Bicomplex(1, 1)
    for r in range(R_terms + 1):
        denom = gamma_tail_integral(V + r, quad)
        total = total + czr / denom
        czr = czr * CZ
    pre = zpow_rgamma(Z, V, Bicomplex(1, 1))  # Z^V
    return pre * total


_EXP_MAP_MAX_RE = 8.0


def gamma_tail_integral(P, quad: QuadratureConfig = DEFAULT_QUAD) -> Bicomplex:
    """int_0^inf e^-t t^P dt over the ray curve; equals Gamma(P+1).

    The exp map u -> -log(1-u) saturates at t ~ 36.7 (one ulp below u=1),
    which truncates a visible fraction of the mass once Re(P) exceeds ~10;
    such terms fall back to the rational map regardless of the configured
    default.
    """
    P = as_bicomplex(P)
    kind = quad.infinite_domain_map
    if kind == "exp" and max(P.z1.real, P.z2.real) > _EXP_MAP_MAX_RE:
        kind = "rational"
    ray = CurvePair.positive_ray(
        kind=kind,
        grade_start=(
            grade_for_exponent(min(P.z1.real, 0.0)),
            grade_for_exponent(min(P.z2.real, 0.0)),
        ),
    )

    def integrand(T):
        return Bicomplex(
            cmath.exp(-T.z1 + P.z1 * cmath.log(T.z1)),
            cmath.exp(-T.z2 + P.z2 * cmath.log(T.z2)),
        )

    return path_integral(integrand, ray, quad)


# ---- Mellin-Barnes ---------------------------------------------------------

@dataclass(frozen=True, slots=True)
class BarnesPath:
    """Truncated vertical line s = sigma + i*tau, tau in [-T, T].

    sigma must separate the pole families: s = r >= 0 to the right,
    s = -l <= -1 to the left.  nodes=None picks a trapezoid spacing of
    about 0.1, well inside the spectral-accuracy regime for this
    integrand (nearest poles sit 1/2 away from the line).
    """

    sigma: float = -0.5
    T: float = 40.0
    nodes: int | None = None
    tail_tol: float = 1e-4

    def __post_init__(self):
        if not (-1.0 < self.sigma < 0.0):
            raise DomainError("sigma must lie in (-1, 0) to separate the poles")
        if self.T <= 0:
            raise DomainError("T must be positive")

    @property
    def node_count(self) -> int:
        if self.nodes is not None:
            return self.nodes
        return 2 * int(10 * self.T) + 1


def _barnes_component(nu: complex, c: complex, z: complex, path: BarnesPath):
    """(value, tail_estimate) of the component contour integral / (2 pi i)."""
    mcz = -c * z
    if mcz.real <= 0.0:
        raise PathTruncationError(
            f"Barnes hypothesis Re(cz) < 0 violated (cz = {c * z})"
        )
    log_mcz = cmath.log(mcz)
    z_nu = cmath.exp(nu * cmath.log(z))

    def integrand(tau: float) -> complex:
        s = complex(path.sigma, tau)
        # Gamma(-s) Gamma(1+s) = -pi / sin(pi s)
        return (
            z_nu
            * cmath.exp(s * log_mcz)
            * (-math.pi / cmath.sin(math.pi * s))
            * reciprocal_gamma(nu + 1.0 + s)
        )

    n = path.node_count
    h = 2.0 * path.T / (n - 1)
    acc = 0.5 * (integrand(-path.T) + integrand(path.T))
    for m in range(1, n - 1):
        acc += integrand(-path.T + m * h)
    value = acc * h / (2.0 * math.pi)

    # Vertical decay rate of the integrand is pi/2 - |arg(-cz)|.
    lam = math.pi / 2.0 - abs(cmath.phase(mcz))
    if lam <= 0.05:
        raise PathTruncationError(
            f"Barnes tail decays too slowly (rate {lam:.3f}) for cz = {c * z}"
        )
    tail = (abs(integrand(path.T)) + abs(integrand(-path.T))) / lam / (2.0 * math.pi)
    return value, tail


def barnes_tail_estimate(params: MRParams, Z, path: BarnesPath) -> HyperbolicNorm:
    """Estimated modulus of the omitted contour tails, componentwise."""
    Z = as_bicomplex(Z)
    t1 = _barnes_component(params.V.z1, params.C.z1, Z.z1, path)[1]
    t2 = _barnes_component(params.V.z2, params.C.z2, Z.z2, path)[1]
    return HyperbolicNorm(t1, t2)


def barnes_eval(params: MRParams, Z, path: BarnesPath = BarnesPath()) -> Bicomplex:
    """E_{V,C}(Z) from the truncated Barnes contour.

    Needs Re(c_i z_i) < 0 per component and Re(alpha)+1 > |Im(beta)|;
    raises PathTruncationError when the hypothesis fails or the estimated
    tail exceeds path.tail_tol.
    """
    Z = as_bicomplex(Z)
    require_real_dominates(params.V, 1.0, "Barnes representation")
    v1, t1 = _barnes_component(params.V.z1, params.C.z1, Z.z1, path)
    v2, t2 = _barnes_component(params.V.z2, params.C.z2, Z.z2, path)
    if max(t1, t2) > path.tail_tol:
        raise PathTruncationError(
            f"estimated contour tail ({max(t1, t2):.3e}) exceeds "
            f"tail_tol={path.tail_tol:g}; increase T"
        )
    return Bicomplex(v1, v2)
