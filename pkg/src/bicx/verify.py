"""Identity verification suites over seeded random parameter clouds.

Each suite draws its cloud from random.Random(seed), evaluates one family
of identities, and reports the maximum residual against a fixed budget.
Reports are plain dicts with a stable layout so the CLI can emit
byte-stable JSON.

Residuals are normalized where the identity says "relative": recurrences
against the dominant side, the ODE against its largest constituent term,
representations against the series evaluation.  Cloud ranges keep the
series arguments within |cz| <= ~5 (beyond that the exp-type cancellation
floor exceeds the stated budgets in doubles) and the quadrature-backed
suites use tighter moduli so they stay desk-scale.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from typing import Callable, List

from .core import Bicomplex, HyperbolicNorm, cr_check, exp as bc_exp, power
from .errors import DomainError
from .fractional import (
    FractionalOrder,
    KineticProblem,
    kinetic_solve,
    kinetic_verify,
    rl_derivative_power,
    rl_integral_power,
    rl_apply_mr,
    yq_residual,
)
from .gammafn import complex_gamma, reciprocal_gamma
from .integralreps import (
    BarnesPath,
    barnes_eval,
    barnes_tail_estimate,
    ir_beta,
    ir_double,
    ir_gamma_denominator,
)
from .millerross import (
    MRParams,
    derivative_k,
    derivative_shifted,
    evaluate,
    evaluate_negative_integer_order,
    ode_residual,
    ode_term_scale,
    recurrence_sides,
    taylor_in_order,
)
from .quadrature import QuadratureConfig
from .series import TruncationPolicy

POLICY = TruncationPolicy()
_VERIFY_QUAD = QuadratureConfig(tol=1e-9)
_KINETIC_QUAD = QuadratureConfig(tol=1e-8)


@dataclass
class CheckResult:
    name: str
    points: int
    max_residual: float
    budget: float

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.budget

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "points": self.points,
            "max_residual": self.max_residual,
            "budget": self.budget,
            "pass": self.passed,
        }


# ---- samplers ---------------------------------------------------------------

def sample_component(rng: random.Random, lo: float, hi: float,
                     arg_margin: float = 0.1) -> complex:
    r = rng.uniform(lo, hi)
    th = rng.uniform(-math.pi + arg_margin, math.pi - arg_margin)
    return r * cmath.exp(1j * th)


def sample_value(rng: random.Random, lo: float = 0.1, hi: float = 1.5) -> Bicomplex:
    return Bicomplex(sample_component(rng, lo, hi), sample_component(rng, lo, hi))


def sample_order(rng: random.Random, lo: float = 0.1, hi: float = 2.2,
                 min_real: float | None = None,
                 pole_margin: float = 1e-3,
                 integer_margin: bool = True) -> Bicomplex:
    """Order sample rejecting components near integers (pole-adjacent
    for every shift used by the identities)."""
    def one() -> complex:
        while True:
            z = sample_component(rng, lo, hi)
            if min_real is not None and z.real < min_real:
                continue
            if integer_margin and abs(z - round(z.real)) < pole_margin:
                continue
            return z

    return Bicomplex(one(), one())


def sample_order_box(rng: random.Random, re_lo: float, re_hi: float,
                     im_bound: float, pole_margin: float = 1e-3) -> Bicomplex:
    """Box-bounded order sample; keeps |E| at O(1) scales for absolute
    finite-difference budgets (large |Im nu| inflates |z^nu| by
    exp(|Im nu| pi))."""
    def one() -> complex:
        while True:
            z = complex(rng.uniform(re_lo, re_hi), rng.uniform(-im_bound, im_bound))
            if abs(z - round(z.real)) < pole_margin:
                continue
            return z

    return Bicomplex(one(), one())


def _rel(delta: HyperbolicNorm, scale: HyperbolicNorm, floor: float = 1e-30) -> float:
    return max(
        delta.n1 / max(scale.n1, floor),
        delta.n2 / max(scale.n2, floor),
    )


def _mixed(delta: HyperbolicNorm, scale: HyperbolicNorm) -> float:
    return max(
        delta.n1 / (1.0 + scale.n1),
        delta.n2 / (1.0 + scale.n2),
    )


# ---- suites -----------------------------------------------------------------

def suite_recurrences(rng: random.Random, n: int = 200) -> List[CheckResult]:
    worst = {ident: 0.0 for ident in ("ii", "iii", "iv")}
    worst_dual = 0.0
    for _ in range(n):
        V = sample_order(rng)
        C = sample_value(rng)
        Z = sample_value(rng)
        p = MRParams(V, C)
        for ident in ("ii", "iii", "iv"):
            lhs, rhs = recurrence_sides(ident, p, Z, POLICY)
            res = _rel((lhs - rhs).hyperbolic_norm(), lhs.hyperbolic_norm())
            worst[ident] = max(worst[ident], res)
        # dual path for nonpositive integer orders
        Vn = Bicomplex(-rng.randint(0, 4), -rng.randint(0, 4))
        pn = MRParams(Vn, C)
        a = evaluate(pn, Z, POLICY).value
        b = evaluate_negative_integer_order(pn, Z, POLICY).value
        worst_dual = max(
            worst_dual, _rel((a - b).hyperbolic_norm(), a.hyperbolic_norm())
        )
    out = [
        CheckResult(f"recurrence_{ident}", n, worst[ident], 1e-10)
        for ident in ("ii", "iii", "iv")
    ]
    out.append(CheckResult("negative_integer_dual_path", n, worst_dual, 1e-10))
    return out


def _richardson_d1(f: Callable[[Bicomplex], Bicomplex], Z: Bicomplex,
                   h: float) -> Bicomplex:
    def central(step: float) -> Bicomplex:
        return (f(Z + step) - f(Z - step)) / (2.0 * step)

    return (central(h / 2.0) * 4.0 - central(h)) / 3.0


def _richardson_d2(f: Callable[[Bicomplex], Bicomplex], Z: Bicomplex,
                   h: float) -> Bicomplex:
    def second(step: float) -> Bicomplex:
        return (f(Z + step) - f(Z) * 2.0 + f(Z - step)) / (step * step)

    return (second(h / 2.0) * 4.0 - second(h)) / 3.0


def suite_derivatives(rng: random.Random, n: int = 60) -> List[CheckResult]:
    worst_fd1 = worst_fd2 = 0.0
    worst_shift = worst_remark = 0.0
    for _ in range(n):
        V = sample_order(rng)
        C = sample_value(rng)
        Z = sample_value(rng, lo=0.3, hi=1.5)
        p = MRParams(V, C)

        # absolute FD budgets need O(1) function scales
        Vb = sample_order_box(rng, -0.5, 2.0, 1.0)
        pb = MRParams(Vb, C)

        def f(Zp: Bicomplex) -> Bicomplex:
            return evaluate(pb, Zp, POLICY).value

        d1 = derivative_k(pb, Z, 1, POLICY)
        fd1 = _richardson_d1(f, Z, 1e-4)
        worst_fd1 = max(worst_fd1, (d1 - fd1).hyperbolic_norm().sup)

        d2 = derivative_k(pb, Z, 2, POLICY)
        fd2 = _richardson_d2(f, Z, 1e-3)
        worst_fd2 = max(worst_fd2, (d2 - fd2).hyperbolic_norm().sup)

        # shifted-order reduction d^k E_{V+M} = E_{V+M-k}
        m = rng.randint(1, 3)
        k = rng.randint(1, m)
        M = Bicomplex(m, m)
        a = derivative_shifted(p, M, Z, k, POLICY)
        b = derivative_k(MRParams(V + M, C), Z, k, POLICY)
        worst_shift = max(
            worst_shift, _rel((a - b).hyperbolic_norm(), a.hyperbolic_norm())
        )

        # M=0 remark: evaluate at V-k equals the closed derivative form
        kk = rng.randint(1, 3)
        a = evaluate(MRParams(V - kk, C), Z, POLICY).value
        b = derivative_k(p, Z, kk, POLICY)
        worst_remark = max(
            worst_remark, _rel((a - b).hyperbolic_norm(), a.hyperbolic_norm())
        )
    return [
        CheckResult("derivative_vs_fd_k1", n, worst_fd1, 1e-6),
        CheckResult("derivative_vs_fd_k2", n, worst_fd2, 1e-6),
        CheckResult("shifted_order_reduction", n, worst_shift, 1e-9),
        CheckResult("order_lowering_remark", n, worst_remark, 1e-9),
    ]


def suite_ode(rng: random.Random, n: int = 60,
              inject_bug: bool = False) -> List[CheckResult]:
    worst = 0.0
    for _ in range(n):
        V = sample_order(rng, min_real=None)
        while not (V.w1.real + 1.0 > abs(V.w2.imag)):
            V = sample_order(rng)
        C = sample_value(rng)
        Z = sample_value(rng)
        p = MRParams(V, C)
        if inject_bug:
            # test hook: evaluate the residual with the damping sign flipped
            U = evaluate(p, Z, POLICY).value
            u1 = derivative_k(p, Z, 1, POLICY)
            u2 = derivative_k(p, Z, 2, POLICY)
            res = (Z * u2 + (1 + V - C * Z) * u1 + (V - 1) * C * U).hyperbolic_norm()
        else:
            res = ode_residual(p, Z, POLICY)
        worst = max(worst, _rel(res, ode_term_scale(p, Z, POLICY)))

    # wrong-solution control: U = exp(2Z) against the V=0, C=1 equation
    Z1 = Bicomplex(1, 1)
    U = bc_exp(2 * Z1)
    ctrl = (Z1 * (4 * U) + (1 - 0 - Z1) * (2 * U) + (0 - 1) * U).hyperbolic_norm().sup
    return [
        CheckResult("ode_residual", n, worst, 1e-9),
        CheckResult("ode_wrong_solution_control_exceeds", 1,
                    0.1 / max(ctrl, 1e-30), 1.0),
    ]


def suite_integral_reps(rng: random.Random, n: int = 12) -> List[CheckResult]:
    worst_beta = worst_double = worst_gamma = 0.0
    for _ in range(n):
        C = sample_value(rng, 0.1, 1.2)
        Z = sample_value(rng, 0.1, 1.2)
        V = sample_order(rng, lo=0.1, hi=1.8, min_real=-0.45)
        p = MRParams(V, C)
        ev = evaluate(p, Z, POLICY).value
        r1 = ir_beta(p, Z, quad=_VERIFY_QUAD)
        worst_beta = max(
            worst_beta, _rel((r1 - ev).hyperbolic_norm(), ev.hyperbolic_norm())
        )

        Vp = sample_order(rng, lo=0.2, hi=1.5, min_real=0.15)
        Mp = sample_order(rng, lo=0.2, hi=1.5, min_real=0.15)
        ev2 = evaluate(MRParams(Vp + Mp, C), Z, POLICY).value
        r2 = ir_double(Vp, Mp, C, Z, quad=_VERIFY_QUAD)
        worst_double = max(
            worst_double, _rel((r2 - ev2).hyperbolic_norm(), ev2.hyperbolic_norm())
        )

        r3 = ir_gamma_denominator(p, Z, quad=_VERIFY_QUAD)
        worst_gamma = max(
            worst_gamma, _rel((r3 - ev).hyperbolic_norm(), ev.hyperbolic_norm())
        )
    return [
        CheckResult("beta_kernel_rep", n, worst_beta, 1e-7),
        CheckResult("double_curve_rep", n, worst_double, 1e-6),
        CheckResult("gamma_denominator_rep", n, worst_gamma, 1e-8),
    ]


def barnes_points(rng: random.Random, n: int) -> List[tuple]:
    """Admissible (params, Z) with Re(c z) < 0 and a usable decay rate."""
    pts = []
    for _ in range(n):
        V = sample_order(rng, lo=0.2, hi=1.6, min_real=-0.4)
        while not (V.w1.real + 1.0 > abs(V.w2.imag)):
            V = sample_order(rng, lo=0.2, hi=1.6, min_real=-0.4)
        comps = []
        for _i in range(2):
            z = sample_component(rng, 0.5, 1.5)
            delta = rng.uniform(-1.1, 1.1)  # arg(-cz); decay rate >= 0.47
            mag = rng.uniform(0.5, 1.5)
            c = (mag / abs(z)) * cmath.exp(1j * (math.pi + delta - cmath.phase(z)))
            comps.append((c, z))
        C = Bicomplex(comps[0][0], comps[1][0])
        Z = Bicomplex(comps[0][1], comps[1][1])
        pts.append((MRParams(V, C), Z))
    return pts


def suite_barnes(rng: random.Random, n: int = 10,
                 barnes_T: float = 40.0) -> List[CheckResult]:
    worst = 0.0
    worst_ratio = 0.0
    tail_note = 0.0
    for params, Z in barnes_points(rng, n):
        ev = evaluate(params, Z, POLICY).value
        errs = []
        for T in (barnes_T / 4.0, barnes_T / 2.0, barnes_T):
            val = barnes_eval(params, Z, BarnesPath(T=T, tail_tol=1.0))
            errs.append(_mixed((val - ev).hyperbolic_norm(), ev.hyperbolic_norm()))
        worst = max(worst, errs[-1])
        for lo_e, hi_e in zip(errs[1:], errs[:-1]):
            if hi_e > 1e-11:  # above the discretization floor
                worst_ratio = max(worst_ratio, lo_e / hi_e)
        tail_note = max(
            tail_note,
            barnes_tail_estimate(params, Z, BarnesPath(T=barnes_T, tail_tol=1.0)).sup,
        )
    return [
        CheckResult(f"barnes_T{barnes_T:g}", n, worst, 1e-5),
        CheckResult("barnes_error_halving_ratio", n, worst_ratio, 1.0 / 1.5),
        CheckResult("barnes_tail_estimate", n, tail_note, 1e-4),
    ]


def suite_fractional(rng: random.Random, n: int = 40) -> List[CheckResult]:
    worst_closed = worst_semigroup = worst_inverse = 0.0
    worst_64 = worst_65 = 0.0
    for _ in range(n):
        t = rng.uniform(0.2, 2.0)
        u = rng.uniform(-0.5, 2.5)
        m1 = Bicomplex(complex(rng.uniform(0.2, 1.2), rng.uniform(-0.3, 0.3)),
                       complex(rng.uniform(0.2, 1.2), rng.uniform(-0.3, 0.3)))
        m2 = Bicomplex(complex(rng.uniform(0.2, 1.2), rng.uniform(-0.3, 0.3)),
                       complex(rng.uniform(0.2, 1.2), rng.uniform(-0.3, 0.3)))
        try:
            o1 = FractionalOrder(m1, "integral")
            o2 = FractionalOrder(m2, "integral")
            od = FractionalOrder(m1, "derivative")
        except DomainError:
            continue

        # closed forms against direct gamma evaluation
        got = rl_integral_power(o1, u, t)
        lt = math.log(t)
        exp1 = Bicomplex(
            complex_gamma(u + 1) * reciprocal_gamma(u + m1.z1 + 1) * cmath.exp((u + m1.z1) * lt),
            complex_gamma(u + 1) * reciprocal_gamma(u + m1.z2 + 1) * cmath.exp((u + m1.z2) * lt),
        )
        worst_closed = max(
            worst_closed, _rel((got - exp1).hyperbolic_norm(), exp1.hyperbolic_norm())
        )

        # semigroup: D^{-m1} D^{-m2} t^u = D^{-(m1+m2)} t^u (coefficientwise)
        comps = []
        for mz1, mz2 in ((m1.z1, m2.z1), (m1.z2, m2.z2)):
            lhs = (
                complex_gamma(u + 1)
                * reciprocal_gamma(u + mz2 + 1)
                * complex_gamma(u + mz2 + 1)
                * reciprocal_gamma(u + mz2 + mz1 + 1)
            )
            rhs = complex_gamma(u + 1) * reciprocal_gamma(u + mz1 + mz2 + 1)
            comps.append(abs(lhs - rhs) / max(abs(rhs), 1e-30))
        worst_semigroup = max(worst_semigroup, max(comps))

        # inverse: D^{m1} D^{-m1} t^u = t^u
        comps = []
        for mz in (m1.z1, m1.z2):
            coeff = (
                complex_gamma(u + 1) * reciprocal_gamma(u + mz + 1)
                * complex_gamma(u + mz + 1) * reciprocal_gamma(u + 1)
            )
            comps.append(abs(coeff - 1.0))
        worst_inverse = max(worst_inverse, max(comps))

        # termwise RL vs order shift
        V = sample_order(rng, lo=0.3, hi=1.6, min_real=0.2)
        C = sample_value(rng, 0.1, 1.0)
        Z0 = sample_value(rng, 0.5, 1.4)
        p = MRParams(V, C)
        got = rl_apply_mr(od, p, Z0, t, POLICY)
        ref = power(Z0, m1) * evaluate(MRParams(V - m1, C), Z0 * t, POLICY).value
        worst_64 = max(
            worst_64, _rel((got - ref).hyperbolic_norm(), ref.hyperbolic_norm())
        )

    for pq in ((1, 2), (1, 3), (2, 3), (1, 4)):
        for _ in range(max(2, n // 10)):
            V = Bicomplex(rng.uniform(0.4, 2.4), rng.uniform(0.4, 2.4))
            C = Bicomplex(
                rng.uniform(0.3, 1.2) * cmath.exp(1j * rng.uniform(-1.2, 1.2)),
                rng.uniform(0.3, 1.2) * cmath.exp(1j * rng.uniform(-1.2, 1.2)),
            )
            Z0 = Bicomplex(
                rng.uniform(0.5, 1.4) * cmath.exp(1j * rng.uniform(-1.2, 1.2)),
                rng.uniform(0.5, 1.4) * cmath.exp(1j * rng.uniform(-1.2, 1.2)),
            )
            t = rng.uniform(0.3, 1.5)
            res = yq_residual(pq[0], pq[1], V, C, Z0, t, POLICY)
            scale = yq_scale(pq[0], pq[1], V, C, Z0, t)
            worst_65 = max(worst_65, _rel(res, scale))
    return [
        CheckResult("rl_power_closed_forms", n, worst_closed, 1e-12),
        CheckResult("rl_semigroup", n, worst_semigroup, 1e-12),
        CheckResult("rl_inverse", n, worst_inverse, 1e-12),
        CheckResult("rl_termwise_order_shift", n, worst_64, 1e-10),
        CheckResult("rational_order_ode", n, worst_65, 1e-8),
    ]


def yq_scale(p: int, q: int, V, C, Z0, t: float) -> HyperbolicNorm:
    from .fractional import yq_combination

    y = yq_combination(p, q, V, C, Z0, t, POLICY)
    h = y.hyperbolic_norm()
    return HyperbolicNorm(max(h.n1, 1.0), max(h.n2, 1.0))


def suite_kinetic(rng: random.Random, n: int = 4) -> List[CheckResult]:
    # classical reduction nu = 1
    worst_exp = 0.0
    prob = KineticProblem("basic", n0=1.0, c=2.0, order=Bicomplex(1, 1))
    sol = kinetic_solve(prob, POLICY)
    for t in (0.2, 0.7, 1.4, 2.0):
        v = sol.at(t).value
        ref = math.exp(-2.0 * t)
        worst_exp = max(worst_exp, abs(v.z1 - ref), abs(v.z2 - ref))

    worst_res = 0.0
    grid = [0.3, 1.1, 2.0]
    for _ in range(n):
        alpha = rng.uniform(0.4, 1.2)
        beta = rng.uniform(-0.2, 0.2) * alpha
        order = Bicomplex.from_jform(alpha, beta)
        c = rng.uniform(0.5, 1.5)
        problems = [
            KineticProblem("basic", n0=1.0, c=c, order=order),
            KineticProblem(
                "exp_forced", n0=1.0, c=c, order=order,
                multiplier=sample_value(rng, 0.1, 0.8),
            ),
            KineticProblem(
                "mr_forced", n0=1.0, c=c, order=order,
                multiplier=sample_value(rng, 0.1, 0.6),
                mu=sample_order(rng, lo=0.2, hi=1.2, min_real=0.1),
                z0=sample_value(rng, 0.5, 1.2),
                k_forcing=rng.randint(0, 2),
            ),
        ]
        for prob in problems:
            sol = kinetic_solve(prob, POLICY)
            for r in kinetic_verify(prob, sol, grid, _KINETIC_QUAD):
                worst_res = max(worst_res, r.sup)
    return [
        CheckResult("classical_exponential_reduction", 4, worst_exp, 1e-12),
        CheckResult("rl_backsubstitution_residual", n * 3 * len(grid),
                    worst_res, 1e-5),
    ]


def suite_cr(rng: random.Random, n: int = 20) -> List[CheckResult]:
    worst_order = worst_entire = worst_taylor = 0.0
    for _ in range(n):
        C = sample_value(rng, 0.2, 1.2)
        Z0 = sample_value(rng, 0.5, 1.6)
        V = sample_order(rng, lo=0.2, hi=1.2)

        def f_order(W: Bicomplex) -> Bicomplex:
            return evaluate(MRParams(W, C), Z0, POLICY).value

        r1, r2 = cr_check(f_order, V)
        worst_order = max(worst_order, r1, r2)

        # integer-component order: entire in Z
        Vi = Bicomplex(rng.randint(-2, 3), rng.randint(-2, 3))
        p = MRParams(Vi, C)

        def f_z(Zp: Bicomplex) -> Bicomplex:
            return evaluate(p, Zp, POLICY).value

        r1, r2 = cr_check(f_z, Z0)
        worst_entire = max(worst_entire, r1, r2)

        # order-series partial sums converge to the evaluation
        Vs = Bicomplex(
            0.8 * sample_component(rng, 0.2, 1.0),
            0.8 * sample_component(rng, 0.2, 1.0),
        )
        tay = taylor_in_order(MRParams(Vs, C), Z0, 60, POLICY)
        ev = evaluate(MRParams(Vs, C), Z0, POLICY).value
        worst_taylor = max(
            worst_taylor, _rel((tay - ev).hyperbolic_norm(), ev.hyperbolic_norm())
        )

    # non-holomorphic control: conjugation must be flagged
    ctrl = cr_check(
        lambda W: Bicomplex.from_jform(W.w1.conjugate(), W.w2),
        Bicomplex.from_jform(1.0, 0.0),
    )
    return [
        CheckResult("order_holomorphy", n, worst_order, 1e-6),
        CheckResult("entire_in_z", n, worst_entire, 1e-6),
        CheckResult("order_series_convergence", n, worst_taylor, 1e-10),
        CheckResult("conjugation_control_exceeds", 1,
                    0.1 / max(max(ctrl), 1e-30), 1.0),
    ]


SUITES: dict[str, Callable] = {
    "recurrences": suite_recurrences,
    "derivatives": suite_derivatives,
    "ode": suite_ode,
    "integral-reps": suite_integral_reps,
    "barnes": suite_barnes,
    "fractional": suite_fractional,
    "kinetic": suite_kinetic,
    "cr": suite_cr,
}


def run_suite(suite: str, seed: int, n: int | None = None,
              barnes_T: float = 40.0, inject_bug: bool = False) -> dict:
    """Run one suite (or 'all') and return the JSON-ready report."""
    names = list(SUITES) if suite == "all" else [suite]
    for name in names:
        if name not in SUITES:
            raise DomainError(
                f"unknown suite {name!r}; choose from {', '.join(SUITES)} or 'all'"
            )
    checks: List[CheckResult] = []
    for name in names:
        rng = random.Random(seed)
        fn = SUITES[name]
        kwargs = {}
        if n is not None:
            kwargs["n"] = n
        if name == "barnes":
            kwargs["barnes_T"] = barnes_T
        if name == "ode":
            kwargs["inject_bug"] = inject_bug
        checks.extend(fn(rng, **kwargs))
    return {
        "suite": suite,
        "seed": seed,
        "checks": [c.as_dict() for c in checks],
        "pass": all(c.passed for c in checks),
    }
