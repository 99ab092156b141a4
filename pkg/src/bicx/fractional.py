"""Riemann-Liouville operators of bicomplex order and kinetic equations.

On power functions the operators are closed-form:

    D^{-M} t^u = Gamma(u+1)/Gamma(u+M+1) t^{u+M}   (Re m1 > |Im m2|)
    D^{+M} t^u = Gamma(u+1)/Gamma(u-M+1) t^{u-M}   (Re m1 > 0)

with (m1, m2) the j-form of the order; reciprocal gamma turns derivative
poles into exact zero coefficients.  Applied termwise to Miller-Ross
series in t they shift the order: D^{+M} E_{V,C}(Z0 t) = Z0^M
E_{V-M,C}(Z0 t) and D^{-M} gives Z0^{-M} E_{V+M,C}(Z0 t).

Kinetic solvers return certified series for the three equation kinds

    basic:      N - N0               = -c^V D^{-V} N
    exp_forced: N - N0 exp(C t)      = -c^V D^{-V} N
    mr_forced:  N - N0 E_{mu*k0,C}(Z0 t) = -c^V D^{-V} N

and kinetic_verify substitutes a solution back through direct RL
quadrature of the convolution integral, which is the per-point
certificate this module stands on (no transform methods involved).

Note on mr_forced: the solution series uses orders mu*k0 + V*k, the
orders the iteration D^{-Vk} applied to a fixed forcing actually
produces; this is what back-substitution certifies.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, List, Sequence, Tuple

from .core import Bicomplex, HyperbolicNorm, as_bicomplex
from .errors import (
    DomainError,
    MaxTermsExceeded,
    SeriesDivergence,
    ZeroDivisorPower,
)
from .gammafn import (
    GammaDomainGuard,
    complex_gamma,
    is_nonpositive_integer,
    reciprocal_gamma,
)
from .millerross import MRParams, evaluate
from .quadrature import DEFAULT_QUAD, QuadratureConfig, adaptive_quad
from .series import (
    DEFAULT_POLICY,
    SeriesValue,
    TruncationPolicy,
    min_stop_for_order,
    shifted_ratio_majorant,
    sum_certified,
)

_MODES = ("integral", "derivative")


@dataclass(frozen=True, slots=True)
class FractionalOrder:
    """A bicomplex order with its admissibility mode checked on the j-form."""

    order: Bicomplex
    mode: str

    def __post_init__(self):
        object.__setattr__(self, "order", as_bicomplex(self.order))
        if self.mode not in _MODES:
            raise DomainError(f"mode must be one of {_MODES}")
        m1, m2 = self.order.w1, self.order.w2
        if self.mode == "integral" and not (m1.real > abs(m2.imag)):
            raise DomainError(
                f"integral order needs Re(m1) > |Im(m2)|; got m1={m1}, m2={m2}"
            )
        if self.mode == "derivative" and not (m1.real > 0.0):
            raise DomainError(f"derivative order needs Re(m1) > 0; got m1={m1}")

    @property
    def signed(self) -> Bicomplex:
        """+M for integration into t^{u+M}, -M for differentiation."""
        return self.order if self.mode == "integral" else -self.order


def _check_power_args(u: float, t: float) -> None:
    if not u > -1.0:
        raise DomainError("power exponent u must exceed -1")
    if not t > 0.0:
        raise DomainError("time t must be positive")


def rl_integral_power(order: FractionalOrder, u: float, t: float) -> Bicomplex:
    """D^{-M} t^u = Gamma(u+1)/Gamma(u+M+1) * t^{u+M}."""
    if order.mode != "integral":
        raise DomainError("order was constructed for differentiation")
    _check_power_args(u, t)
    g = complex_gamma(u + 1.0)
    lt = math.log(t)
    M = order.order
    out = []
    for m in (M.z1, M.z2):
        out.append(g * reciprocal_gamma(u + m + 1.0) * cmath.exp((u + m) * lt))
    return Bicomplex(out[0], out[1])


def rl_derivative_power(order: FractionalOrder, u: float, t: float) -> Bicomplex:
    """D^{M} t^u = Gamma(u+1)/Gamma(u-M+1) * t^{u-M}; poles give exact 0."""
    if order.mode != "derivative":
        raise DomainError("order was constructed for integration")
    _check_power_args(u, t)
    g = complex_gamma(u + 1.0)
    lt = math.log(t)
    M = order.order
    out = []
    for m in (M.z1, M.z2):
        rg = reciprocal_gamma(u - m + 1.0)
        out.append(0j if rg == 0 else g * rg * cmath.exp((u - m) * lt))
    return Bicomplex(out[0], out[1])


def rl_apply_mr(
    order: FractionalOrder,
    params: MRParams,
    Z0,
    t: float,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> Bicomplex:
    """RL operator applied termwise to E_{V,C}(Z0 t) as a series in t.

    Terms absent from the source series (reciprocal gamma zero at
    negative-integer order components) stay absent after the shift.
    """
    Z0 = as_bicomplex(Z0)
    if not Z0.is_invertible():
        raise ZeroDivisorPower("rl_apply_mr needs Z0 outside O2")
    if not t > 0.0:
        raise DomainError("time t must be positive")
    shift = order.signed
    lt = math.log(t)
    out = []
    for nu, c, z0, m in (
        (params.V.z1, params.C.z1, Z0.z1, shift.z1),
        (params.V.z2, params.C.z2, Z0.z2, shift.z2),
    ):
        x = c * z0 * t
        pre = cmath.exp(nu * cmath.log(z0) + (nu + m) * lt)

        def terms(_nu=nu, _m=m, _x=x):
            p = 1.0 + 0.0j
            r = 0
            while True:
                if _nu.imag == 0.0 and is_nonpositive_integer(_nu + r + 1):
                    yield 0j  # source term absent; shift must not revive it
                else:
                    yield p * reciprocal_gamma(_nu + _m + r + 1.0)
                p *= _x
                r += 1

        min_stop = max(min_stop_for_order(nu), min_stop_for_order(nu + m))
        val, _, _ = sum_certified(
            terms(),
            shifted_ratio_majorant(abs(x), abs(nu + m)),
            policy,
            min_stop_index=min_stop,
            what="termwise RL of Miller-Ross",
        )
        out.append(pre * val)
    return Bicomplex(out[0], out[1])


# ---- kinetic equations -------------------------------------------------------

_KINDS = ("basic", "exp_forced", "mr_forced")


@dataclass(frozen=True, slots=True)
class KineticProblem:
    """A fractional kinetic equation instance.

    kind selects the forcing: constant N0, N0*exp(C t), or
    N0*E_{mu*k_forcing,C}(Z0 t).  The decay order V needs Re(alpha) >
    |Im(beta)| on its j-form; the rate c and initial value N0 are
    positive reals.
    """

    kind: str
    n0: float
    c: float
    order: Bicomplex
    multiplier: Bicomplex | None = None
    mu: Bicomplex | None = None
    z0: Bicomplex | None = None
    k_forcing: int = 0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise DomainError(f"kind must be one of {_KINDS}")
        if not (self.n0 > 0 and self.c > 0):
            raise DomainError("N0 and c must be positive")
        object.__setattr__(self, "order", as_bicomplex(self.order))
        if not GammaDomainGuard.of(self.order).real_dominates(0.0):
            raise DomainError("kinetic order needs Re(alpha) > |Im(beta)|")
        if self.kind in ("exp_forced", "mr_forced"):
            if self.multiplier is None:
                raise DomainError(f"{self.kind} forcing needs a multiplier C")
            object.__setattr__(self, "multiplier", as_bicomplex(self.multiplier))
        if self.kind == "mr_forced":
            if self.mu is None or self.z0 is None:
                raise DomainError("mr_forced needs mu and Z0")
            object.__setattr__(self, "mu", as_bicomplex(self.mu))
            object.__setattr__(self, "z0", as_bicomplex(self.z0))
            if not GammaDomainGuard.of(self.mu).real_dominates(1.0):
                raise DomainError("mr_forced mu needs Re(gamma)+1 > |Im(delta)|")
            if not self.z0.is_invertible():
                raise DomainError("mr_forced Z0 must lie outside O2")
            if self.k_forcing < 0:
                raise DomainError("k_forcing must be a nonnegative integer")


class _RgRows:
    """Grow-on-demand cache of reciprocal gammas rg(w_k + n + 1)."""

    def __init__(self, order_of_row: Callable[[int], complex]):
        self._order_of_row = order_of_row
        self._rows: List[List[complex]] = []

    def row(self, k: int) -> Tuple[complex, List[complex]]:
        while len(self._rows) <= k:
            self._rows.append([])
        return self._order_of_row(k), self._rows[k]

    @staticmethod
    def ensure(values: List[complex], w: complex, n: int) -> complex:
        while len(values) <= n:
            values.append(reciprocal_gamma(w + len(values) + 1.0))
        return values[n]


def _sum_outer(term_fn, policy: TruncationPolicy, what: str, t: float,
               order_re: float):
    """Certified outer sum with an empirically measured ratio.

    term_fn(k) -> (term value, already-scaled inner tail).  Divergence is
    reported with an empirical t-radius extrapolated from the measured
    ratio (outer ratios scale like t^Re(order) per step).
    """
    total = 0j
    inner_tails = 0.0
    prev_mag: float | None = None
    ratios: List[float] = []
    consecutive = 0
    term_mag = 0.0
    for k in range(policy.max_terms):
        tk, itail = term_fn(k)
        total += tk
        inner_tails += itail
        term_mag = abs(tk)
        if prev_mag is not None and prev_mag > 0.0:
            ratios.append(term_mag / prev_mag)
        prev_mag = term_mag
        small = term_mag <= max(policy.abs_tol, policy.rel_tol * abs(total))
        consecutive = consecutive + 1 if small else 0
        if consecutive >= 3 and len(ratios) >= 3:
            rho = max(ratios[-3:])
            if rho < 0.5:
                tail = term_mag * rho / (1.0 - rho) + inner_tails
                return total, k + 1, tail
    recent = sorted(ratios[-5:]) if ratios else []
    if recent and recent[len(recent) // 2] >= 1.0:
        rho = recent[len(recent) // 2]
        radius = t * rho ** (-1.0 / order_re) if order_re > 0 else None
        raise SeriesDivergence(
            f"{what}: outer ratio test failed at max_terms "
            f"(median recent ratio {rho:.3g})",
            empirical_radius=radius,
        )
    raise MaxTermsExceeded(f"{what}: no certified stop within {policy.max_terms} terms")


@dataclass(frozen=True)
class KineticSolution:
    """Certified series evaluator for a kinetic problem, defined for t > 0.

    Coefficient rows are cached internally (grow-only, safe under the
    GIL); the evaluator itself is pure.
    """

    problem: KineticProblem
    policy: TruncationPolicy
    _caches: tuple = field(repr=False, default=())

    def __call__(self, t: float) -> SeriesValue:
        return self.at(t)

    def at(self, t: float) -> SeriesValue:
        if not t > 0.0:
            raise DomainError("kinetic evaluator is defined for t > 0")
        p = self.problem
        comps = []
        for idx in (0, 1):
            if p.kind == "basic":
                comps.append(self._basic_component(idx, t))
            else:
                comps.append(self._forced_component(idx, t))
        (v1, n1, t1), (v2, n2, t2) = comps
        return SeriesValue(Bicomplex(v1, v2), max(n1, n2), HyperbolicNorm(t1, t2))

    # basic: N0 sum_r (-1)^r (c t)^{V r} rg(V r + 1)
    def _basic_component(self, idx: int, t: float):
        p = self.problem
        nu = (p.order.z1, p.order.z2)[idx]
        rg_cache: List[complex] = self._caches[idx]
        lct = math.log(p.c * t)

        def term_fn(k: int):
            while len(rg_cache) <= k:
                rk = len(rg_cache)
                rg_cache.append(reciprocal_gamma(nu * rk + 1.0))
            sign = -1.0 if k % 2 else 1.0
            return p.n0 * sign * cmath.exp(nu * k * lct) * rg_cache[k], 0.0

        return _sum_outer(term_fn, self.policy, "kinetic series (basic)",
                          t, nu.real)

    # forced kinds: N0 * pref * m^k * t^{w_k} * sum_n (x)^n rg(w_k+n+1)
    def _forced_component(self, idx: int, t: float):
        p = self.problem
        nu = (p.order.z1, p.order.z2)[idx]
        cm = (p.multiplier.z1, p.multiplier.z2)[idx]
        rows: _RgRows = self._caches[idx]
        mneg = -cmath.exp(nu * math.log(p.c))  # -c^nu
        if p.kind == "mr_forced":
            z0 = (p.z0.z1, p.z0.z2)[idx]
            mu = (p.mu.z1, p.mu.z2)[idx]
            pref = cmath.exp(mu * p.k_forcing * cmath.log(z0))
            x = cm * z0 * t
        else:
            pref = 1.0 + 0.0j
            x = cm * t
        lt = math.log(t)

        def term_fn(k: int):
            w, rg_row = rows.row(k)
            n = 0
            pw = 1.0 + 0.0j
            inner = 0j
            majorant = shifted_ratio_majorant(abs(x), abs(w))
            min_stop = min_stop_for_order(w)
            consecutive = 0
            tail = math.inf
            while n < self.policy.max_terms:
                rg = _RgRows.ensure(rg_row, w, n)
                term = pw * rg
                inner += term
                small = abs(term) <= max(
                    self.policy.abs_tol, self.policy.rel_tol * abs(inner)
                )
                consecutive = consecutive + 1 if small else 0
                if consecutive >= 3 and n >= min_stop:
                    rho = majorant(n)
                    if rho < 0.5:
                        tail = abs(term) * rho / (1.0 - rho)
                        break
                pw *= x
                n += 1
            else:
                raise MaxTermsExceeded("kinetic inner series did not converge")
            scale = p.n0 * pref * mneg ** k * cmath.exp(w * lt)
            return scale * inner, abs(scale) * tail

        return _sum_outer(term_fn, self.policy,
                          f"kinetic series ({p.kind})", t, nu.real)

    def _order_of_row(self, idx: int) -> Callable[[int], complex]:
        p = self.problem
        nu = (p.order.z1, p.order.z2)[idx]
        if p.kind == "mr_forced":
            mu = (p.mu.z1, p.mu.z2)[idx]
            return lambda k: mu * p.k_forcing + nu * k
        return lambda k: nu * k


def kinetic_solve(
    problem: KineticProblem, policy: TruncationPolicy = DEFAULT_POLICY
) -> KineticSolution:
    """Build the certified series solution for the given problem kind."""
    sol = KineticSolution(problem, policy)
    if problem.kind == "basic":
        caches = ([], [])
    else:
        caches = (
            _RgRows(sol._order_of_row(0)),
            _RgRows(sol._order_of_row(1)),
        )
    object.__setattr__(sol, "_caches", caches)
    return sol


def kinetic_forcing(problem: KineticProblem, t: float,
                    policy: TruncationPolicy = DEFAULT_POLICY) -> Bicomplex:
    """The forcing term of the equation at time t."""
    if problem.kind == "basic":
        return Bicomplex(problem.n0, problem.n0)
    if problem.kind == "exp_forced":
        C = problem.multiplier
        return problem.n0 * Bicomplex(cmath.exp(C.z1 * t), cmath.exp(C.z2 * t))
    order = problem.mu * problem.k_forcing
    val = evaluate(MRParams(order, problem.multiplier), problem.z0 * t, policy)
    return problem.n0 * val.value


def kinetic_verify(
    problem: KineticProblem,
    solution: KineticSolution,
    t_grid: Sequence[float],
    quad: QuadratureConfig = DEFAULT_QUAD,
) -> List[HyperbolicNorm]:
    """|N(t) - forcing(t) + c^V D^{-V} N(t)|_h per grid point.

    D^{-V} is evaluated as the RL convolution (1/Gamma(nu)) *
    int_0^t (t - tau)^{nu-1} N(tau) dtau per component, with the
    endpoint-singularity substitution tau = t (1 - u^{1/nu_min}).
    """
    nu1, nu2 = problem.order.z1, problem.order.z2
    nu_min = min(nu1.real, nu2.real)
    if nu_min <= 0:
        raise DomainError("RL verification needs positive order real parts")
    out = []
    for t in t_grid:
        if not t > 0.0:
            raise DomainError("verification grid must be positive")
        n_t = solution.at(t).value
        f_t = kinetic_forcing(problem, t, solution.policy)
        res = []
        for idx, nu in ((0, nu1), (1, nu2)):
            def integrand(u: float, _nu=nu, _idx=idx):
                tau = t * (1.0 - u ** (1.0 / nu_min))
                n_tau = solution.at(tau).value
                n_c = (n_tau.z1, n_tau.z2)[_idx]
                return cmath.exp((_nu / nu_min - 1.0) * math.log(u)) * n_c

            conv = adaptive_quad(integrand, 0.0, 1.0, quad)
            d_int = (
                reciprocal_gamma(nu)
                * cmath.exp(nu * math.log(t))
                / nu_min
                * conv
            )
            n_c = (n_t.z1, n_t.z2)[idx]
            f_c = (f_t.z1, f_t.z2)[idx]
            c_pow = cmath.exp(nu * math.log(problem.c))
            res.append(abs(n_c - f_c + c_pow * d_int))
        out.append(HyperbolicNorm(res[0], res[1]))
    return out


# ---- fractional ODE of rational order ---------------------------------------

def _require_real_components(V: Bicomplex, what: str) -> None:
    # Hypothesis "alpha real, beta hyperimaginary" means both idempotent
    # components are real.
    if V.z1.imag != 0.0 or V.z2.imag != 0.0:
        raise DomainError(f"{what}: order components must be real")
    if min(V.z1.real, V.z2.real) <= -1.0:
        raise DomainError(f"{what}: needs alpha + 1 > |beta|")


def yq_combination(p: int, q: int, V, C, Z0, t: float,
                   policy: TruncationPolicy = DEFAULT_POLICY) -> Bicomplex:
    """y_q = sum_{k=1..q} C^{(k-1)p/q} E_{V-p+kp/q,C}(Z0 t)."""
    V, C, Z0 = map(as_bicomplex, (V, C, Z0))
    from .core import power

    y = Bicomplex(0, 0)
    for k in range(1, q + 1):
        coeff = power(C, (k - 1) * p / q) if k > 1 else Bicomplex(1, 1)
        order = V - p + Bicomplex.from_scalar(k * p / q)
        y = y + coeff * evaluate(MRParams(order, C), Z0 * t, policy).value
    return y


def yq_residual(p: int, q: int, V, C, Z0, t: float,
                policy: TruncationPolicy = DEFAULT_POLICY) -> HyperbolicNorm:
    """Residual of [D^{p/q} - (Z0 C)^{p/q}] y_q = power-term RHS.

    The fractional derivative is applied termwise (rl_apply_mr) to each
    member of the combination; the RHS is the closed power sum
    sum_{r<p} C^r Z0^{V+r-p+p/q} t^{V+r-p} / Gamma(V+r-p+1).
    """
    if p < 1 or q < 1:
        raise DomainError("p and q must be positive integers")
    V, C, Z0 = map(as_bicomplex, (V, C, Z0))
    _require_real_components(V, "rational-order equation")
    if not (C.is_invertible() and Z0.is_invertible()):
        raise ZeroDivisorPower("C and Z0 must lie outside O2")
    if not t > 0.0:
        raise DomainError("time t must be positive")
    from .core import power

    frac = FractionalOrder(Bicomplex.from_scalar(p / q), "derivative")
    d_yq = Bicomplex(0, 0)
    for k in range(1, q + 1):
        coeff = power(C, (k - 1) * p / q) if k > 1 else Bicomplex(1, 1)
        order = V - p + Bicomplex.from_scalar(k * p / q)
        d_yq = d_yq + coeff * rl_apply_mr(frac, MRParams(order, C), Z0, t, policy)
    lhs = d_yq - power(Z0 * C, p / q) * yq_combination(p, q, V, C, Z0, t, policy)

    lt = math.log(t)
    rhs = Bicomplex(0, 0)
    for r in range(p):
        comps = []
        for nu, c, z0 in ((V.z1, C.z1, Z0.z1), (V.z2, C.z2, Z0.z2)):
            rg = reciprocal_gamma(nu + r - p + 1.0)
            if rg == 0:
                comps.append(0j)
                continue
            comps.append(
                c ** r
                * cmath.exp((nu + r - p + p / q) * cmath.log(z0))
                * cmath.exp((nu + r - p) * lt)
                * rg
            )
        rhs = rhs + Bicomplex(comps[0], comps[1])
    return (lhs - rhs).hyperbolic_norm()
