"""Certified truncation of componentwise power series.

Every series in this library converges on the whole space (the hyperbolic
ratio test gives an infinite radius), but a finite evaluation needs a
stopping rule with a tail certificate.  The rule used throughout:

  stop after term r once
    * the last 3 terms were small (|t| <= max(abs_tol, rel_tol * |sum|)), and
    * a majorant rho >= sup_{m >= r} |t_{m+1}/t_m| satisfies rho < 1/2;
  the geometric bound  tail <= |t_r| * rho / (1 - rho)  is then valid.

Callers supply the majorant, which encodes what they know about their own
coefficients.  A minimum stop index guards series whose leading terms vanish
exactly (reciprocal gamma at nonpositive integers): a run of structural
zeros must not be mistaken for convergence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Tuple

from .core import Bicomplex, HyperbolicNorm
from .errors import MaxTermsExceeded

_CONSECUTIVE_SMALL = 3
_RATIO_LIMIT = 0.5


@dataclass(frozen=True, slots=True)
class TruncationPolicy:
    """Stopping-rule knobs for certified series evaluation."""

    rel_tol: float = 1e-14
    abs_tol: float = 1e-300
    max_terms: int = 10_000

    def __post_init__(self):
        if self.rel_tol <= 0:
            raise ValueError("rel_tol must be positive")
        if self.max_terms < 8:
            raise ValueError("max_terms must be at least 8")


DEFAULT_POLICY = TruncationPolicy()


@dataclass(frozen=True, slots=True)
class SeriesValue:
    """An evaluated bicomplex series value with its truncation certificate."""

    value: Bicomplex
    terms_used: int
    tail_bound: HyperbolicNorm


def sum_certified(
    terms: Iterable[complex],
    ratio_majorant: Callable[[int], float],
    policy: TruncationPolicy = DEFAULT_POLICY,
    min_stop_index: int = 0,
    what: str = "series",
) -> Tuple[complex, int, float]:
    """Sum a scalar complex series under the certified stopping rule.

    ratio_majorant(r) must bound |t_{m+1}/t_m| for every m >= r (may return
    inf while no bound is available yet).  Returns (value, terms_used,
    tail_bound).  Raises MaxTermsExceeded if the rule is never met.
    """
    total = 0j
    consecutive = 0
    for r, term in enumerate(terms):
        if r >= policy.max_terms:
            break
        total += term
        small = abs(term) <= max(policy.abs_tol, policy.rel_tol * abs(total))
        consecutive = consecutive + 1 if small else 0
        if consecutive >= _CONSECUTIVE_SMALL and r >= min_stop_index:
            rho = ratio_majorant(r)
            if 0.0 <= rho < _RATIO_LIMIT:
                tail = abs(term) * rho / (1.0 - rho)
                return total, r + 1, tail
    raise MaxTermsExceeded(
        f"{what}: no certified stop within {policy.max_terms} terms"
    )


def pair_value(
    component_results: Tuple[Tuple[complex, int, float], Tuple[complex, int, float]],
) -> SeriesValue:
    """Combine two scalar component sums into a SeriesValue."""
    (v1, n1, t1), (v2, n2, t2) = component_results
    return SeriesValue(Bicomplex(v1, v2), max(n1, n2), HyperbolicNorm(t1, t2))


def shifted_ratio_majorant(arg_abs: float, order_abs: float) -> Callable[[int], float]:
    """Majorant for series with t_{m+1}/t_m = x / (nu + m + 1).

    |nu + m + 1| >= m + 1 - |nu| gives rho(r) = |x| / (r + 1 - |nu|),
    valid for all m >= r once positive.
    """
    def rho(r: int) -> float:
        denom = r + 1 - order_abs
        if denom <= 0.0:
            return math.inf
        return arg_abs / denom

    return rho


def min_stop_for_order(order: complex) -> int:
    """Forbid stopping before the zero-prefix of negative-integer orders ends."""
    return int(math.ceil(abs(order)))
