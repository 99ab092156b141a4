"""Gamma machinery against the high-precision oracle."""

import cmath
import math
import random

import pytest

from bicx.core import Bicomplex
from bicx.errors import GammaPole
from bicx.gammafn import (
    GammaDomainGuard,
    beta_complex,
    bicomplex_gamma,
    bicomplex_rgamma,
    complex_gamma,
    is_nonpositive_integer,
    reciprocal_gamma,
    zpow_rgamma,
)

import oracles
from checks import rel_err_c

# grid away from poles: rectangle plus reflection half-plane coverage
GRID = [
    complex(x, y)
    for x in (-4.3, -2.7, -1.4, -0.6, -0.1, 0.3, 0.5, 1.0, 2.5, 4.8, 7.3)
    for y in (-6.0, -2.2, -0.7, 0.0, 0.4, 1.9, 5.5)
]


def test_gamma_grid_vs_oracle():
    for z in GRID:
        got = complex_gamma(z)
        want = oracles.gamma(z)
        assert rel_err_c(got, want) <= 1e-13, z


def test_rgamma_grid_vs_oracle():
    for z in GRID:
        got = reciprocal_gamma(z)
        want = oracles.rgamma(z)
        assert abs(got - want) <= 1e-13 * max(1.0, abs(want)), z


def test_gamma_point_values():
    assert complex_gamma(1) == 1
    assert complex_gamma(5) == 24
    assert rel_err_c(complex_gamma(0.5), oracles.SQRT_PI) < 1e-14
    assert rel_err_c(complex_gamma(1.5), oracles.GAMMA_3_2) < 1e-14
    assert rel_err_c(complex_gamma(2.5), oracles.GAMMA_5_2) < 1e-14


def test_gamma_poles():
    for z in (0, -1, -2, -17):
        with pytest.raises(GammaPole):
            complex_gamma(z)
        assert reciprocal_gamma(z) == 0
        assert is_nonpositive_integer(complex(z))
    assert reciprocal_gamma(-3) == 0


def test_gamma_recursion_cloud():
    rng = random.Random(7)
    worst = 0.0
    for _ in range(500):
        z = complex(rng.uniform(-6, 6), rng.uniform(-6, 6))
        if abs(z - round(z.real)) < 1e-2 and z.real <= 0.5:
            continue  # pole-adjacent, conditioning unbounded
        got = complex_gamma(z + 1)
        want = z * complex_gamma(z)
        worst = max(worst, rel_err_c(got, want))
    assert worst <= 1e-12


def test_beta_examples():
    assert beta_complex(1, 1) == 1
    assert rel_err_c(beta_complex(0.5, 0.5), oracles.BETA_HALF_HALF) < 1e-13
    rng = random.Random(13)
    for _ in range(50):
        a = complex(rng.uniform(0.2, 4.0), rng.uniform(-2, 2))
        assert rel_err_c(beta_complex(a, 1), 1.0 / a) < 1e-13
    with pytest.raises(GammaPole):
        beta_complex(-2, 0.5)


def test_bicomplex_gamma_componentwise():
    # structural: equals the scalar gamma per component, exactly
    rng = random.Random(17)
    for _ in range(100):
        y1 = complex(rng.uniform(0.2, 4), rng.uniform(-3, 3))
        y2 = complex(rng.uniform(0.2, 4), rng.uniform(-3, 3))
        g = bicomplex_gamma(Bicomplex(y1, y2))
        assert g.z1 == complex_gamma(y1)
        assert g.z2 == complex_gamma(y2)


def test_bicomplex_gamma_examples():
    assert bicomplex_gamma(Bicomplex(1, 1)) == Bicomplex(1, 1)
    assert bicomplex_gamma(Bicomplex(2, 3)) == Bicomplex(1, 2)
    g = bicomplex_gamma(Bicomplex(2.5, 2.5))
    assert rel_err_c(g.z1, oracles.GAMMA_5_2) < 1e-14
    assert g.z1 == g.z2
    with pytest.raises(GammaPole):
        bicomplex_gamma(Bicomplex(-1, 2))
    rg = bicomplex_rgamma(Bicomplex(-1, 2))
    assert rg.z1 == 0 and rg.z2 == 1


def test_domain_guard():
    # V = alpha + j beta; Re(alpha)+offset > |Im(beta)|
    V = Bicomplex.from_jform(0.5, 0.9j)
    g = GammaDomainGuard.of(V)
    assert g.real_dominates(1.0)
    assert not g.real_dominates(0.0)
    # the j-form pole condition matches the componentwise one
    for p in range(4):
        for q in range(4):
            x1 = -(p + q) / 2.0
            x2 = 1j * (q - p) / 2.0
            Y = Bicomplex.from_jform(x1, x2)
            assert is_nonpositive_integer(Y.z1) and is_nonpositive_integer(Y.z2)
            assert Y.z1 == -p and Y.z2 == -q


def test_zpow_rgamma_pole_collapse():
    # integer poles in the gamma argument zero the whole factor
    Z = Bicomplex(0.7 + 0.1j, 1.3 - 0.2j)
    out = zpow_rgamma(Z, Bicomplex(2, 2), Bicomplex(-1, 3))
    assert out.z1 == 0
    assert out.z2 != 0
    # polynomial exponents admit zero-divisor bases
    out = zpow_rgamma(Bicomplex(0, 2), Bicomplex(2, 2), Bicomplex(1, 1))
    assert out.z1 == 0 and out.z2 == 4


def test_gamma_conjugation_symmetry():
    rng = random.Random(23)
    for _ in range(50):
        z = complex(rng.uniform(0.3, 5), rng.uniform(0.1, 5))
        a = complex_gamma(z.conjugate())
        b = complex_gamma(z).conjugate()
        assert rel_err_c(a, b) < 1e-13
