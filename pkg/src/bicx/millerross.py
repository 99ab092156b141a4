"""The bicomplex Miller-Ross function and its identities.

The function of order V and multiplier C is the series

    E_{V,C}(Z) = Z^V * sum_r (C Z)^r / Gamma(V + r + 1),

which acts componentwise on idempotent pairs; the normalized series has
infinite hyperbolic radius of convergence.  Every evaluation here goes
through reciprocal gamma, so negative-integer order components contribute
exact zero terms instead of poles, and the Z^V prefactor is polynomial
whenever the order component is a nonnegative integer (zero and
zero-divisor Z are then admitted).

Alongside evaluation this module carries the executable identities:
 * order recurrences (the Z^3 / Z^2 shift relations),
 * the closed-form k-th derivative and the shifted-order derivative,
 * the second-order ODE  Z U'' + (1 - V - C Z) U' + (V - 1) C U = 0,
 * the order-series (Taylor) expansion around a fixed invertible Z0.

Residual operations return hyperbolic norms of LHS - RHS and are meant to
be driven over random parameter clouds by the verify suites.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Tuple

from .core import Bicomplex, HyperbolicNorm, as_bicomplex
from .errors import DomainError, ZeroDivisorPower
from .gammafn import (
    GammaDomainGuard,
    reciprocal_gamma,
    zpow_rgamma,
)
from .series import (
    DEFAULT_POLICY,
    SeriesValue,
    TruncationPolicy,
    min_stop_for_order,
    shifted_ratio_majorant,
    sum_certified,
)


def _is_nonneg_int(z: complex) -> bool:
    return z.imag == 0.0 and z.real >= 0.0 and z.real == round(z.real)


def _is_nonpos_int(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == round(z.real)


@dataclass(frozen=True, slots=True)
class MRParams:
    """Order V and multiplier C of a Miller-Ross evaluation."""

    V: Bicomplex
    C: Bicomplex

    def __post_init__(self):
        object.__setattr__(self, "V", as_bicomplex(self.V))
        object.__setattr__(self, "C", as_bicomplex(self.C))

    @property
    def has_nonneg_integer_order(self) -> bool:
        return _is_nonneg_int(self.V.z1) and _is_nonneg_int(self.V.z2)

    @property
    def has_nonpos_integer_order(self) -> bool:
        return _is_nonpos_int(self.V.z1) and _is_nonpos_int(self.V.z2)

    def shifted(self, offset) -> "MRParams":
        return MRParams(self.V + offset, self.C)


def _series_component(nu: complex, x: complex, policy: TruncationPolicy):
    """sum_r x^r / Gamma(nu + r + 1) with a certified tail."""
    def terms():
        p = 1.0 + 0.0j
        r = 0
        while True:
            yield p * reciprocal_gamma(nu + r + 1.0)
            p *= x
            r += 1

    return sum_certified(
        terms(),
        shifted_ratio_majorant(abs(x), abs(nu)),
        policy,
        min_stop_index=min_stop_for_order(nu),
        what=f"Miller-Ross series (nu={nu}, x={x})",
    )


def series_factor(params: MRParams, Z, policy: TruncationPolicy = DEFAULT_POLICY):
    """The series sum_r (CZ)^r / Gamma(V+r+1) without the Z^V prefactor.

    Returns (value, terms_used, tail) with componentwise tail bounds.
    """
    Z = as_bicomplex(Z)
    c1, n1, t1 = _series_component(params.V.z1, params.C.z1 * Z.z1, policy)
    c2, n2, t2 = _series_component(params.V.z2, params.C.z2 * Z.z2, policy)
    return Bicomplex(c1, c2), max(n1, n2), HyperbolicNorm(t1, t2)


def _prefactor_component(z: complex, nu: complex) -> complex:
    if _is_nonneg_int(nu):
        return z ** int(nu.real)
    if z == 0:
        raise ZeroDivisorPower(
            "Z^V prefactor needs an invertible Z for non-integer order"
        )
    return cmath.exp(nu * cmath.log(z))


def evaluate(params: MRParams, Z, policy: TruncationPolicy = DEFAULT_POLICY) -> SeriesValue:
    """E_{V,C}(Z) with a certified truncation bound.

    Z may be zero or a zero divisor only when both order components are
    nonnegative integers (the prefactor is then polynomial).
    """
    Z = as_bicomplex(Z)
    if not params.has_nonneg_integer_order and not Z.is_invertible():
        raise ZeroDivisorPower(
            "E_{V,C} needs Z outside O2 (and nonzero) unless V has "
            "nonnegative integer components"
        )
    pre1 = _prefactor_component(Z.z1, params.V.z1)
    pre2 = _prefactor_component(Z.z2, params.V.z2)
    s, terms, tail = series_factor(params, Z, policy)
    value = Bicomplex(pre1 * s.z1, pre2 * s.z2)
    return SeriesValue(value, terms, tail.scaled(abs(pre1), abs(pre2)))


def evaluate_negative_integer_order(
    params: MRParams, Z, policy: TruncationPolicy = DEFAULT_POLICY
) -> SeriesValue:
    """E_{V,C}(Z) = C^{-V} E_{0,C}(Z) for orders with components -l, l >= 0.

    The reduction is exact: C^{-V} has nonnegative integer component
    exponents, so no branch is involved.  Must agree with evaluate()
    within the combined tail bounds.
    """
    if not params.has_nonpos_integer_order:
        raise DomainError(
            "negative-integer-order path needs order components in {0,-1,-2,...}"
        )
    C = params.C
    if not C.is_invertible():
        raise ZeroDivisorPower("C^{-V} reduction needs C outside O2")
    l1 = int(-params.V.z1.real)
    l2 = int(-params.V.z2.real)
    factor = Bicomplex(C.z1 ** l1, C.z2 ** l2)
    base = evaluate(MRParams(Bicomplex(0, 0), C), Z, policy)
    return SeriesValue(
        factor * base.value,
        base.terms_used,
        base.tail_bound.scaled(abs(factor.z1), abs(factor.z2)),
    )


# ---- recurrences -----------------------------------------------------------

_RECURRENCE_IDS = ("ii", "iii", "iv")


def recurrence_sides(
    identity: str, params: MRParams, Z, policy: TruncationPolicy = DEFAULT_POLICY
) -> Tuple[Bicomplex, Bicomplex]:
    """(LHS, RHS) of the selected order recurrence.

    ii : Z^3 E_V = C Z^3 E_{V+1} + (V+1)(V+2)(V+3) [E_{V+3} - C E_{V+4}]
    iii: Z^2 E_V = Z^{V+2}/Gamma(V+1) + C^2 Z^2 E_{V+2}
                   + C (V+2)(V+3) [E_{V+3} - C E_{V+4}]
    iv : Z^2 E_V = Z^{V+2}/Gamma(V+1) + C Z^{V+3}/Gamma(V+2)
                   + C^3 Z^2 E_{V+3} + C^2 (V+3)(V+4) [E_{V+4} - C E_{V+5}]
    """
    if identity not in _RECURRENCE_IDS:
        raise DomainError(f"unknown recurrence id {identity!r}; use ii/iii/iv")
    Z = as_bicomplex(Z)
    V, C = params.V, params.C

    def E(shift: int) -> Bicomplex:
        return evaluate(params.shifted(shift), Z, policy).value

    if identity == "ii":
        lhs = Z ** 3 * E(0)
        rhs = C * Z ** 3 * E(1) + (V + 1) * (V + 2) * (V + 3) * (E(3) - C * E(4))
    elif identity == "iii":
        lhs = Z ** 2 * E(0)
        rhs = (
            zpow_rgamma(Z, V + 2, V + 1)
            + C ** 2 * Z ** 2 * E(2)
            + C * (V + 2) * (V + 3) * (E(3) - C * E(4))
        )
    else:
        lhs = Z ** 2 * E(0)
        rhs = (
            zpow_rgamma(Z, V + 2, V + 1)
            + C * zpow_rgamma(Z, V + 3, V + 2)
            + C ** 3 * Z ** 2 * E(3)
            + C ** 2 * (V + 3) * (V + 4) * (E(4) - C * E(5))
        )
    return lhs, rhs


def recurrence_residual(
    identity: str, params: MRParams, Z, policy: TruncationPolicy = DEFAULT_POLICY
) -> HyperbolicNorm:
    lhs, rhs = recurrence_sides(identity, params, Z, policy)
    return (lhs - rhs).hyperbolic_norm()


# ---- derivatives -----------------------------------------------------------

def derivative_k(
    params: MRParams, Z, k: int, policy: TruncationPolicy = DEFAULT_POLICY
) -> Bicomplex:
    """Closed form of d^k/dZ^k E_{V,C}(Z):

        sum_{p=1..k} C^{k-p} Z^{V-p} / Gamma(V-p+1)  +  C^k E_{V,C}(Z).

    Integer-order poles in the shifted gammas vanish via reciprocal gamma.
    """
    if k < 1:
        raise DomainError("derivative order k must be a positive integer")
    Z = as_bicomplex(Z)
    if not Z.is_invertible():
        raise ZeroDivisorPower("derivative closed form needs Z outside O2")
    V, C = params.V, params.C
    acc = C ** k * evaluate(params, Z, policy).value
    for p in range(1, k + 1):
        acc = acc + C ** (k - p) * zpow_rgamma(Z, V - p, V - p + 1)
    return acc


def derivative_shifted(
    params: MRParams, M, Z, k: int, policy: TruncationPolicy = DEFAULT_POLICY
) -> Bicomplex:
    """d^k/dZ^k E_{V+M,C}(Z) = E_{V+M-k,C}(Z) for positive-integer M components.

    Falls back to the derivative_k closed form at order V+M when k exceeds
    min(m1, m2), where the pole-free shifted reduction is not guaranteed.
    """
    M = as_bicomplex(M)
    if not (_is_nonneg_int(M.z1) and _is_nonneg_int(M.z2)
            and M.z1.real >= 1 and M.z2.real >= 1):
        raise DomainError("M must have positive integer components")
    if k < 1:
        raise DomainError("derivative order k must be a positive integer")
    if k <= min(int(M.z1.real), int(M.z2.real)):
        return evaluate(MRParams(params.V + M - k, params.C), Z, policy).value
    return derivative_k(MRParams(params.V + M, params.C), Z, k, policy)


def ode_residual(
    params: MRParams,
    Z,
    policy: TruncationPolicy = DEFAULT_POLICY,
    check_hypothesis: bool = True,
) -> HyperbolicNorm:
    """Residual of Z U'' + (1 - V - C Z) U' + (V - 1) C U at U = E_{V,C}(Z).

    The stated hypothesis Re(alpha)+1 > |Im(beta)| is enforced by default;
    pass check_hypothesis=False to probe outside it (the formal identity
    does not need it).
    """
    Z = as_bicomplex(Z)
    V, C = params.V, params.C
    if check_hypothesis and not GammaDomainGuard.of(V).real_dominates(1.0):
        raise DomainError(
            "ODE hypothesis Re(alpha)+1 > |Im(beta)| fails for this order"
        )
    if not Z.is_invertible():
        raise ZeroDivisorPower("ODE residual needs Z outside O2")
    U = evaluate(params, Z, policy).value
    U1 = derivative_k(params, Z, 1, policy)
    U2 = derivative_k(params, Z, 2, policy)
    res = Z * U2 + (1 - V - C * Z) * U1 + (V - 1) * C * U
    return res.hyperbolic_norm()


def ode_term_scale(
    params: MRParams, Z, policy: TruncationPolicy = DEFAULT_POLICY
) -> HyperbolicNorm:
    """Largest constituent magnitude of the ODE, for relative residuals."""
    Z = as_bicomplex(Z)
    V, C = params.V, params.C
    U = evaluate(params, Z, policy).value
    U1 = derivative_k(params, Z, 1, policy)
    U2 = derivative_k(params, Z, 2, policy)
    parts = (Z * U2, (1 - V - C * Z) * U1, (V - 1) * C * U)
    n1 = max(abs(p.z1) for p in parts)
    n2 = max(abs(p.z2) for p in parts)
    return HyperbolicNorm(n1, n2)


# ---- order-series expansion -------------------------------------------------

def taylor_in_order(
    params: MRParams, Z0, K: int, policy: TruncationPolicy = DEFAULT_POLICY
) -> Bicomplex:
    """Partial sum A * sum_{k<=K} (log Z0)^k V^k / k! (principal branch).

    A = sum_r (C Z0)^r / Gamma(V+r+1) is held fixed; the expansion replaces
    only the Z0^V prefactor, and converges to evaluate() as K grows.
    """
    if K < 0:
        raise DomainError("K must be nonnegative")
    Z0 = as_bicomplex(Z0)
    if not Z0.is_invertible():
        raise ZeroDivisorPower("order expansion needs Z0 outside O2")
    A, _, _ = series_factor(params, Z0, policy)
    out = []
    for z0, nu, a in ((Z0.z1, params.V.z1, A.z1), (Z0.z2, params.V.z2, A.z2)):
        x = nu * cmath.log(z0)
        term = 1.0 + 0.0j
        s = term
        for k in range(1, K + 1):
            term *= x / k
            s += term
        out.append(a * s)
    return Bicomplex(out[0], out[1])


def entire_order_components(V: Bicomplex) -> bool:
    """True when both order components are integers (entirety regime)."""
    V = as_bicomplex(V)
    return all(
        z.imag == 0.0 and z.real == round(z.real) for z in (V.z1, V.z2)
    )
