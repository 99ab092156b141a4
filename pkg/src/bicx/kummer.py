"""Bicomplex confluent hypergeometric (Kummer) series.

1F1(a; b; Y) acts componentwise; it is the Miller-Ross backbone via
E_{V,C}(Z) = Z^V / Gamma(V+1) * 1F1(1; V+1; CZ).  Derivatives for the ODE
residual are termwise-differentiated series, not finite differences.
"""

from __future__ import annotations

from typing import Tuple

from .core import Bicomplex, HyperbolicNorm, as_bicomplex
from .errors import DomainError, GammaPole
from .gammafn import is_nonpositive_integer
from .series import (
    DEFAULT_POLICY,
    SeriesValue,
    TruncationPolicy,
    pair_value,
    sum_certified,
)


def _ratio_majorant(y_abs: float, a_abs: float, b_abs: float, drop: int):
    # |t_{m+1}/t_m| = |y| |a+m| / (|b+m| (m+1-drop)) for the drop-times
    # differentiated series; bounded by |y| (1 + |a|/m) / (m - |b|).
    def rho(r: int) -> float:
        m = r + drop  # index in the undifferentiated series
        denom = m - b_abs
        if m <= 0 or denom <= 0.0:
            return float("inf")
        return y_abs * (1.0 + a_abs / m) / denom

    return rho


def _kummer_component(a: complex, b: complex, y: complex,
                      policy: TruncationPolicy, drop: int = 0):
    """Scalar series sum_{r} (a)_{r+drop} y^r / ((b)_{r+drop} r!).

    drop = 0 is 1F1 itself; drop = d gives the d-th termwise derivative.
    """
    def terms():
        t = 1.0 + 0.0j
        for m in range(drop):
            t *= (a + m) / (b + m)
        r = 0
        while True:
            yield t
            t *= (a + drop + r) * y / ((b + drop + r) * (r + 1))
            r += 1

    return sum_certified(
        terms(),
        _ratio_majorant(abs(y), abs(a), abs(b), drop),
        policy,
        what=f"Kummer series (a={a}, b={b}, y={y}, drop={drop})",
    )


def _require_b(b: Bicomplex) -> None:
    for comp in (b.z1, b.z2):
        if is_nonpositive_integer(comp):
            raise GammaPole(f"Kummer lower parameter at a pole: {comp}")


def kummer_1f1(a, b, Y, policy: TruncationPolicy = DEFAULT_POLICY) -> SeriesValue:
    """Componentwise 1F1(a; b; Y) with a certified truncation bound."""
    a, b, Y = as_bicomplex(a), as_bicomplex(b), as_bicomplex(Y)
    _require_b(b)
    return pair_value((
        _kummer_component(a.z1, b.z1, Y.z1, policy),
        _kummer_component(a.z2, b.z2, Y.z2, policy),
    ))


def _derivatives(a, b, Y, policy) -> Tuple[Bicomplex, Bicomplex, Bicomplex]:
    w = []
    for drop in (0, 1, 2):
        c1 = _kummer_component(a.z1, b.z1, Y.z1, policy, drop)[0]
        c2 = _kummer_component(a.z2, b.z2, Y.z2, policy, drop)[0]
        w.append(Bicomplex(c1, c2))
    return w[0], w[1], w[2]


def confluent_ode_residual_from(W, W1, W2, a, b, Y) -> HyperbolicNorm:
    """Residual of Y W'' + (b - Y) W' - a W for externally supplied W."""
    a, b, Y = as_bicomplex(a), as_bicomplex(b), as_bicomplex(Y)
    res = Y * W2 + (b - Y) * W1 - a * W
    return res.hyperbolic_norm()


def kummer_ode_residual(a, b, Y, policy: TruncationPolicy = DEFAULT_POLICY) -> HyperbolicNorm:
    """Residual of the confluent equation at W = 1F1(a; b; Y).

    Derivatives come from the termwise-differentiated series.
    """
    a, b, Y = as_bicomplex(a), as_bicomplex(b), as_bicomplex(Y)
    _require_b(b)
    if not Y.is_invertible():
        raise DomainError("ODE residual needs Y outside O2 (singular point)")
    W, W1, W2 = _derivatives(a, b, Y, policy)
    return confluent_ode_residual_from(W, W1, W2, a, b, Y)
