"""Adaptive Gauss-Kronrod quadrature and bicomplex path integration.

A 15-point Kronrod rule with embedded 7-point Gauss estimate drives a
worst-interval-first refinement.  Tolerances are mixed: an interval sum I
is accepted once the accumulated error estimate is below
max(tol, tol * |I|); a purely absolute tolerance would be meaningless for
gamma-sized integrands.

Bicomplex path integrals split componentwise over a CurvePair (D1, D2):

    int_D f dxi = [int_{D1} f_1 dxi_1] e1 + [int_{D2} f_2 dxi_2] e2.

Curves carry their own parametrization.  Graded reparametrizations of the
unit segment and of the positive ray are provided so integrands with
algebraic endpoint singularities (t^{u-1}, (1-t)^v with small positive
Re) stay within the subdivision budget; the contour itself is unchanged.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

from .core import Bicomplex, as_bicomplex
from .errors import QuadratureNonConvergence

# QUADPACK dqk15 nodes/weights on [-1, 1]; Gauss points are every other
# Kronrod abscissa.
_XGK = (
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0,
)
_WGK = (
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
)
_WG = (
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469,
)


@dataclass(frozen=True, slots=True)
class QuadratureConfig:
    tol: float = 1e-10
    max_subdivisions: int = 2000
    infinite_domain_map: str = "exp"  # "exp" | "rational"

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.infinite_domain_map not in ("exp", "rational"):
            raise ValueError("infinite_domain_map must be 'exp' or 'rational'")


DEFAULT_QUAD = QuadratureConfig()


def _gk15(f: Callable[[float], complex], a: float, b: float):
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    fc = f(mid)
    resk = _WGK[7] * fc
    resg = _WG[3] * fc
    for idx in range(7):
        dx = half * _XGK[idx]
        s = f(mid - dx) + f(mid + dx)
        resk += _WGK[idx] * s
        if idx % 2 == 1:
            resg += _WG[idx // 2] * s
    resk *= half
    resg *= half
    return resk, abs(resk - resg)


def adaptive_quad(
    f: Callable[[float], complex],
    a: float,
    b: float,
    quad: QuadratureConfig = DEFAULT_QUAD,
) -> complex:
    """Integrate complex-valued f over [a, b] adaptively.

    Raises QuadratureNonConvergence if the error estimate is still above
    max(tol, tol*|I|) after max_subdivisions interval splits.
    """
    value, err = _gk15(f, a, b)
    # (err, order-tiebreak, a, b, value); heapq is a min-heap so negate err.
    counter = 0
    heap = [(-err, counter, a, b, value)]
    total_err = err
    total_val = value
    splits = 0
    while total_err > max(quad.tol, quad.tol * abs(total_val)):
        if splits >= quad.max_subdivisions or not heap:
            raise QuadratureNonConvergence(
                f"error estimate {total_err:.3e} above tolerance after "
                f"{splits} subdivisions"
            )
        neg_err, _, ia, ib, ival = heapq.heappop(heap)
        im = 0.5 * (ia + ib)
        if neg_err >= 0.0 or im <= ia or im >= ib:
            # No interval left that refinement can improve.
            raise QuadratureNonConvergence(
                f"error estimate {total_err:.3e} stuck above tolerance at "
                "floating-point interval resolution"
            )
        lv, le = _gk15(f, ia, im)
        rv, re_ = _gk15(f, im, ib)
        total_err += le + re_ + neg_err  # neg_err = -(old error)
        total_val += lv + rv - ival
        counter += 1
        heapq.heappush(heap, (-le, counter, ia, im, lv))
        counter += 1
        heapq.heappush(heap, (-re_, counter, im, ib, rv))
        splits += 1
    return total_val


# ---- curves ---------------------------------------------------------------

ComplexPath = Callable[[float], complex]


@dataclass(frozen=True, slots=True)
class CurvePair:
    """A bicomplex integration path given by two complex component paths.

    Each component is a parametric map xi_i(t) with derivative dxi_i(t) on
    the shared interval [a, b]; quadrature never evaluates the endpoints.
    """

    xi1: ComplexPath
    dxi1: ComplexPath
    xi2: ComplexPath
    dxi2: ComplexPath
    a: float = 0.0
    b: float = 1.0

    @staticmethod
    def segments(start, end) -> "CurvePair":
        """Straight segments from start to end, componentwise."""
        s = as_bicomplex(start)
        e = as_bicomplex(end)
        d1, d2 = e.z1 - s.z1, e.z2 - s.z2
        return CurvePair(
            xi1=lambda t: s.z1 + t * d1, dxi1=lambda t: d1,
            xi2=lambda t: s.z2 + t * d2, dxi2=lambda t: d2,
        )

    @staticmethod
    def unit_segment(grade_start=(1.0, 1.0), grade_end=(1.0, 1.0),
                     start_clip: float = 0.0, end_clip: float = 0.0) -> "CurvePair":
        """[0, 1] on both components, optionally graded per component.

        The map u -> (1 - (1-u)^ge)^gs clusters quadrature nodes at an
        endpoint with an algebraically singular integrand; the traced
        segment is unchanged.  Clips shave the parameter interval to
        [start_clip, 1-end_clip]: with grading target p the omitted mass
        is O(clip^(p+1)), and they keep graded maps away from underflow.
        """
        def build(gs: float, ge: float):
            def xi(u: float) -> complex:
                return (1.0 - (1.0 - u) ** ge) ** gs

            def dxi(u: float) -> complex:
                tau = 1.0 - (1.0 - u) ** ge
                return gs * tau ** (gs - 1.0) * ge * (1.0 - u) ** (ge - 1.0)

            return xi, dxi

        x1, d1 = build(*_pair(grade_start, grade_end, 0))
        x2, d2 = build(*_pair(grade_start, grade_end, 1))
        return CurvePair(x1, d1, x2, d2, a=start_clip, b=1.0 - end_clip)

    @staticmethod
    def positive_ray(kind: str = "exp", grade_start=(1.0, 1.0)) -> "CurvePair":
        """[0, inf) on both components via a finite-parameter map.

        kind 'exp': t = -log(1-u); kind 'rational': t = u/(1-u).  Both live
        on u in [0, 1) with the improper endpoint at u = 1.
        """
        if kind not in ("exp", "rational"):
            raise ValueError("ray kind must be 'exp' or 'rational'")

        top = math.nextafter(1.0, 0.0)  # keep 1-u nonzero under deep refinement

        def build(gs: float):
            if kind == "exp":
                def xi(v: float) -> complex:
                    return -math.log1p(-min(v ** gs, top))

                def dxi(v: float) -> complex:
                    u = min(v ** gs, top)
                    return gs * v ** (gs - 1.0) / (1.0 - u)
            else:
                def xi(v: float) -> complex:
                    u = min(v ** gs, top)
                    return u / (1.0 - u)

                def dxi(v: float) -> complex:
                    u = min(v ** gs, top)
                    return gs * v ** (gs - 1.0) / (1.0 - u) ** 2

            return xi, dxi

        x1, d1 = build(grade_start[0] if isinstance(grade_start, tuple) else grade_start)
        x2, d2 = build(grade_start[1] if isinstance(grade_start, tuple) else grade_start)
        return CurvePair(x1, d1, x2, d2)

    def point(self, t: float) -> Bicomplex:
        return Bicomplex(self.xi1(t), self.xi2(t))


def _pair(grade_start, grade_end, idx: int):
    gs = grade_start[idx] if isinstance(grade_start, tuple) else grade_start
    ge = grade_end[idx] if isinstance(grade_end, tuple) else grade_end
    return gs, ge


def grade_for_exponent(re_exponent: float, target: float = 3.0, cap: float = 24.0) -> float:
    """Grading strength for an integrand ~ s^e near an endpoint.

    Picks g with g*(Re e + 1) >= target + 1 so the pulled-back integrand is
    about C^target there.  Exponents at or below -1 are not integrable.
    """
    p = re_exponent + 1.0
    if p <= 0.0:
        raise QuadratureNonConvergence(
            f"endpoint exponent {re_exponent} is not integrable"
        )
    return min(cap, max(1.0, (target + 1.0) / p))


def path_integral(
    f: Callable[[Bicomplex], Bicomplex],
    D: CurvePair,
    quad: QuadratureConfig = DEFAULT_QUAD,
) -> Bicomplex:
    """Bicomplex path integral of f along D, componentwise."""
    def comp1(t: float) -> complex:
        return f(D.point(t)).z1 * D.dxi1(t)

    def comp2(t: float) -> complex:
        return f(D.point(t)).z2 * D.dxi2(t)

    i1 = adaptive_quad(comp1, D.a, D.b, quad)
    i2 = adaptive_quad(comp2, D.a, D.b, quad)
    return Bicomplex(i1, i2)
