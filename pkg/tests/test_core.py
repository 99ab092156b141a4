"""Bicomplex algebra: representations, ring ops, elementary functions."""

import cmath
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicx.core import (
    Bicomplex,
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
from bicx.errors import DomainError, ZeroDivisorDivision, ZeroDivisorLog

from checks import rel_err_bc, ulps_apart

finite = st.floats(min_value=-10.0, max_value=10.0,
                   allow_nan=False, allow_infinity=False)


def rand_bc(rng, lo=0.1, hi=5.0):
    def c():
        return rng.uniform(lo, hi) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
    return Bicomplex(c(), c())


# ---- representations --------------------------------------------------------

def test_unit_table():
    assert E1 * E1 == E1
    assert E2 * E2 == E2
    assert E1 * E2 == ZERO
    assert E1 + E2 == ONE
    assert J * J == -1
    assert K == I * J
    assert K * K == ONE


def test_make_examples():
    assert make(0, 1) == J
    assert make(0, 1).idempotent() == (-1j, 1j)
    assert make(1, 0) == ONE
    assert make(0.5, 0.5j) == E1  # (1 + k)/2


def test_make_idempotent_inverse():
    rng = random.Random(3)
    for _ in range(100):
        Z = rand_bc(rng)
        w1, w2 = Z.jform()
        back = make(w1, w2)
        assert ulps_apart(back.z1, Z.z1) <= 4
        assert ulps_apart(back.z2, Z.z2) <= 4
        assert idempotent(Z) == (Z.z1, Z.z2)


def test_reals_round_trip():
    Z = Bicomplex.from_reals(1.5, -2.25, 0.125, 3.0)
    assert Z.reals() == (1.5, -2.25, 0.125, 3.0)


# ---- ring operations ---------------------------------------------------------

@settings(max_examples=200)
@given(finite, finite, finite, finite, finite, finite, finite, finite)
def test_ring_axioms(a, b, c, d, e, f, g, h):
    X = Bicomplex(complex(a, b), complex(c, d))
    Y = Bicomplex(complex(e, f), complex(g, h))
    assert X + Y == Y + X
    assert X * Y == Y * X
    # distributivity holds componentwise up to float rounding
    lhs = X * (Y + ONE)
    rhs = X * Y + X
    assert abs(lhs.z1 - rhs.z1) <= 1e-12 * max(1.0, abs(lhs.z1))
    assert abs(lhs.z2 - rhs.z2) <= 1e-12 * max(1.0, abs(lhs.z2))


def test_scalar_interop():
    Z = Bicomplex(2 + 1j, 3 - 1j)
    assert Z + 1 == Bicomplex(3 + 1j, 4 - 1j)
    assert 2 * Z == Bicomplex(4 + 2j, 6 - 2j)
    assert (1 - Z) == Bicomplex(-1 - 1j, -2 + 1j)
    assert Z / 2 == Bicomplex(1 + 0.5j, 1.5 - 0.5j)
    assert 1 / ONE == ONE
    assert Z ** 2 == Z * Z


def test_division_by_zero_divisor_raises():
    with pytest.raises(ZeroDivisorDivision):
        ONE / E1
    with pytest.raises(ZeroDivisorDivision):
        ONE / ZERO
    with pytest.raises(ZeroDivisorDivision):
        E1 ** -1


def test_division_inverse():
    rng = random.Random(5)
    for _ in range(50):
        Z = rand_bc(rng)
        W = rand_bc(rng)
        assert rel_err_bc((Z * W) / W, Z) < 1e-14


# ---- norms and zero divisors --------------------------------------------------

def test_hyperbolic_norm_examples():
    assert tuple(hyperbolic_norm(ZERO)) == (0.0, 0.0)
    assert tuple(hyperbolic_norm(J)) == (1.0, 1.0)


def test_hyperbolic_norm_multiplicative():
    rng = random.Random(11)
    for _ in range(300):
        Z, W = rand_bc(rng), rand_bc(rng)
        nz, nw = hyperbolic_norm(Z), hyperbolic_norm(W)
        nprod = hyperbolic_norm(Z * W)
        assert abs(nprod.n1 - nz.n1 * nw.n1) <= 1e-14 * nprod.n1
        assert abs(nprod.n2 - nz.n2 * nw.n2) <= 1e-14 * nprod.n2


def test_zero_divisor_predicate():
    assert is_zero_divisor(E1)
    assert is_zero_divisor(E2)
    assert not is_zero_divisor(ONE)
    assert not is_zero_divisor(ZERO)
    # w1^2 + w2^2 = 0 <=> a component vanishes
    assert is_zero_divisor(make(1, 1j))
    w = make(1, 1j)
    assert abs(w.w1 ** 2 + w.w2 ** 2) == 0.0


# ---- elementary functions ------------------------------------------------------

def test_exp_addition_theorem():
    rng = random.Random(17)
    for _ in range(200):
        Z, W = rand_bc(rng, 0.1, 2.5), rand_bc(rng, 0.1, 2.5)
        assert rel_err_bc(exp(Z + W), exp(Z) * exp(W)) < 1e-12


def test_exp_of_j_euler():
    rng = random.Random(19)
    for _ in range(100):
        Z = rand_bc(rng, 0.1, 3.0)
        assert rel_err_bc(exp(J * Z), cos(Z) + J * sin(Z)) < 1e-13


def test_exp_log_round_trip():
    rng = random.Random(23)
    for _ in range(200):
        Z = rand_bc(rng)
        assert rel_err_bc(exp(log(Z)), Z) < 1e-12


def test_log_power_domain():
    with pytest.raises(ZeroDivisorLog):
        log(E1)
    with pytest.raises(ZeroDivisorLog):
        power(E2, Bicomplex(0.5, 0.5))
    assert exp(ZERO) == ONE


def test_power_one_is_one():
    rng = random.Random(29)
    for _ in range(50):
        V = rand_bc(rng, 0.1, 3.0)
        assert rel_err_bc(power(E1 + E2, V), ONE) < 1e-15


def test_power_branch_shift():
    Z = Bicomplex(2.0, 3.0)
    V = Bicomplex(0.5, 0.5)
    base = power(Z, V)
    shifted = power(Z, V, branch=1)
    expect = base * exp(V * Bicomplex(2j * math.pi, 2j * math.pi))
    assert rel_err_bc(shifted, expect) < 1e-12


# ---- numerical CR check ----------------------------------------------------------

def test_cr_check_polynomial():
    res = cr_check(lambda Z: Z * Z, Bicomplex(1.3 + 0.2j, 0.4 - 1.1j))
    assert max(res) < 1e-8


def test_cr_check_conjugate_control():
    f = lambda Z: make(Z.w1.conjugate(), Z.w2)
    res = cr_check(f, make(1.0, 0.0))
    assert max(res) > 0.1


def test_cr_check_step_validation():
    with pytest.raises(DomainError):
        cr_check(lambda Z: Z, ONE, h=1.0)
