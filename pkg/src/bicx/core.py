"""Bicomplex arithmetic in the idempotent representation.

A bicomplex number Z = w1 + j*w2 (w1, w2 in C(i); i^2 = j^2 = -1,
ij = ji = k, k^2 = 1) factors uniquely over the idempotents
e1 = (1 + k)/2 and e2 = (1 - k)/2:

    Z = (w1 - i*w2)*e1 + (w1 + i*w2)*e2 = z1*e1 + z2*e2,

and every ring operation acts componentwise on the pair (z1, z2).  That
pair is the stored representation; the j-form (w1, w2) is a derived view.
Nonzero values with a vanishing component are the zero divisors: they
admit no inverse, logarithm, or non-integer power.

Elementary functions (exp, log, sin, cos, general powers) apply the
corresponding complex function per component; log and power use the
principal branch per component, with an optional integer branch index.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Callable, Tuple

from .errors import (
    DomainError,
    ZeroDivisorDivision,
    ZeroDivisorLog,
)

_TWO_PI_I = 2j * cmath.pi

Scalar = (int, float, complex)


@dataclass(frozen=True, slots=True)
class HyperbolicNorm:
    """The componentwise modulus pair (|z1|, |z2|).

    Multiplicative: |Z*W|_h equals |Z|_h * |W|_h componentwise, which is
    what makes it usable for convergence control of bicomplex series.
    """

    n1: float
    n2: float

    def __iter__(self):
        return iter((self.n1, self.n2))

    @property
    def sup(self) -> float:
        return max(self.n1, self.n2)

    def scaled(self, s1: float, s2: float) -> "HyperbolicNorm":
        return HyperbolicNorm(self.n1 * s1, self.n2 * s2)


@dataclass(frozen=True, slots=True, eq=False)
class Bicomplex:
    """A bicomplex number stored as its idempotent pair (z1, z2)."""

    z1: complex
    z2: complex

    def __post_init__(self):
        object.__setattr__(self, "z1", complex(self.z1))
        object.__setattr__(self, "z2", complex(self.z2))

    # ---- construction ------------------------------------------------

    @staticmethod
    def from_jform(w1: complex, w2: complex) -> "Bicomplex":
        """Build from the j-form Z = w1 + j*w2."""
        w1 = complex(w1)
        w2 = complex(w2)
        return Bicomplex(w1 - 1j * w2, w1 + 1j * w2)

    @staticmethod
    def from_reals(a1: float, a2: float, a3: float, a4: float) -> "Bicomplex":
        """Build from Z = a1 + i*a2 + j*a3 + k*a4."""
        return Bicomplex.from_jform(complex(a1, a2), complex(a3, a4))

    @staticmethod
    def from_scalar(x) -> "Bicomplex":
        """Embed a real/complex scalar (both components equal)."""
        x = complex(x)
        return Bicomplex(x, x)

    # ---- views ---------------------------------------------------------

    @property
    def w1(self) -> complex:
        return (self.z1 + self.z2) / 2.0

    @property
    def w2(self) -> complex:
        return 1j * (self.z1 - self.z2) / 2.0

    def jform(self) -> Tuple[complex, complex]:
        return (self.w1, self.w2)

    def idempotent(self) -> Tuple[complex, complex]:
        return (self.z1, self.z2)

    def reals(self) -> Tuple[float, float, float, float]:
        """Real coordinates (a1, a2, a3, a4) of a1 + i*a2 + j*a3 + k*a4."""
        u, v = self.w1, self.w2
        return (u.real, u.imag, v.real, v.imag)

    # ---- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.z1 == 0 and self.z2 == 0

    def is_zero_divisor(self) -> bool:
        """True iff Z != 0 and a component vanishes (w1^2 + w2^2 = 0)."""
        return (not self.is_zero()) and (self.z1 == 0 or self.z2 == 0)

    def is_invertible(self) -> bool:
        return self.z1 != 0 and self.z2 != 0

    def hyperbolic_norm(self) -> HyperbolicNorm:
        return HyperbolicNorm(abs(self.z1), abs(self.z2))

    # ---- ring operations -------------------------------------------------

    def __add__(self, other):
        other = _as_bicomplex(other)
        if other is None:
            return NotImplemented
        return Bicomplex(self.z1 + other.z1, self.z2 + other.z2)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_bicomplex(other)
        if other is None:
            return NotImplemented
        return Bicomplex(self.z1 - other.z1, self.z2 - other.z2)

    def __rsub__(self, other):
        other = _as_bicomplex(other)
        if other is None:
            return NotImplemented
        return Bicomplex(other.z1 - self.z1, other.z2 - self.z2)

    def __mul__(self, other):
        other = _as_bicomplex(other)
        if other is None:
            return NotImplemented
        return Bicomplex(self.z1 * other.z1, self.z2 * other.z2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_bicomplex(other)
        if other is None:
            return NotImplemented
        if other.z1 == 0 or other.z2 == 0:
            raise ZeroDivisorDivision(
                "division by a zero divisor: idempotent components "
                f"({other.z1!r}, {other.z2!r})"
            )
        return Bicomplex(self.z1 / other.z1, self.z2 / other.z2)

    def __rtruediv__(self, other):
        other = _as_bicomplex(other)
        if other is None:
            return NotImplemented
        return other.__truediv__(self)

    def __neg__(self):
        return Bicomplex(-self.z1, -self.z2)

    def __pos__(self):
        return self

    def __pow__(self, n):
        # Integer powers only; general exponents go through power().
        if not isinstance(n, int):
            return NotImplemented
        if n < 0 and (self.z1 == 0 or self.z2 == 0):
            raise ZeroDivisorDivision("negative power of a zero divisor")
        return Bicomplex(self.z1 ** n, self.z2 ** n)

    def __eq__(self, other):
        other = _as_bicomplex(other)
        if other is None:
            return NotImplemented
        return self.z1 == other.z1 and self.z2 == other.z2

    def __hash__(self):
        return hash((self.z1, self.z2))

    def __repr__(self):
        return f"Bicomplex({self.z1!r}, {self.z2!r})"


def _as_bicomplex(x):
    if isinstance(x, Bicomplex):
        return x
    if isinstance(x, Scalar):
        return Bicomplex.from_scalar(x)
    return None


def as_bicomplex(x) -> Bicomplex:
    """Coerce a scalar or Bicomplex to Bicomplex, raising on other types."""
    b = _as_bicomplex(x)
    if b is None:
        raise TypeError(f"cannot interpret {type(x).__name__} as Bicomplex")
    return b


# ---- units and idempotents ------------------------------------------------

ZERO = Bicomplex(0, 0)
ONE = Bicomplex(1, 1)
I = Bicomplex(1j, 1j)            # imaginary unit i
J = Bicomplex.from_jform(0, 1)   # imaginary unit j  -> (-i, +i)
K = Bicomplex.from_jform(0, 1j)  # hyperbolic unit k = ij -> (1, -1)
E1 = Bicomplex(1, 0)             # (1 + k)/2
E2 = Bicomplex(0, 1)             # (1 - k)/2


# ---- spec-level helpers ----------------------------------------------------

def make(w1: complex, w2: complex) -> Bicomplex:
    """Construct w1 + j*w2; inverse of idempotent()."""
    return Bicomplex.from_jform(w1, w2)


def idempotent(Z: Bicomplex) -> Tuple[complex, complex]:
    return Z.idempotent()


def hyperbolic_norm(Z) -> HyperbolicNorm:
    return as_bicomplex(Z).hyperbolic_norm()


def is_zero_divisor(Z) -> bool:
    return as_bicomplex(Z).is_zero_divisor()


# ---- elementary functions --------------------------------------------------

def exp(Z) -> Bicomplex:
    Z = as_bicomplex(Z)
    return Bicomplex(cmath.exp(Z.z1), cmath.exp(Z.z2))


def sin(Z) -> Bicomplex:
    Z = as_bicomplex(Z)
    return Bicomplex(cmath.sin(Z.z1), cmath.sin(Z.z2))


def cos(Z) -> Bicomplex:
    Z = as_bicomplex(Z)
    return Bicomplex(cmath.cos(Z.z1), cmath.cos(Z.z2))


def log(Z, branch: int = 0) -> Bicomplex:
    """Componentwise logarithm, principal branch shifted by 2*pi*i*branch.

    Undefined on zero divisors and zero: raises ZeroDivisorLog.
    """
    Z = as_bicomplex(Z)
    if Z.z1 == 0 or Z.z2 == 0:
        raise ZeroDivisorLog("log undefined on O2: a component is zero")
    shift = _TWO_PI_I * branch
    return Bicomplex(cmath.log(Z.z1) + shift, cmath.log(Z.z2) + shift)


def power(Z, E, branch: int = 0) -> Bicomplex:
    """Z**E = exp(E * log Z) with the chosen log branch per component."""
    E = as_bicomplex(E)
    return exp(E * log(Z, branch=branch))


# ---- numerical Cauchy-Riemann check ----------------------------------------

def _partial(f: Callable[[Bicomplex], Bicomplex], Z: Bicomplex,
             direction: Bicomplex, h: float) -> Bicomplex:
    # Average of real-step and imaginary-step central differences: for a
    # holomorphic component both equal the complex partial; their averaging
    # makes anti-holomorphic behaviour (the conj control) visible.
    dr = (f(Z + direction * h) - f(Z - direction * h)) / (2.0 * h)
    di = (f(Z + direction * (1j * h)) - f(Z - direction * (1j * h))) / (2j * h)
    return (dr + di) * 0.5


def cr_check(f: Callable[[Bicomplex], Bicomplex], Z: Bicomplex,
             h: float = 1e-5) -> Tuple[float, float]:
    """Residuals of the bicomplex Cauchy-Riemann equations at Z.

    Returns (|df1/dw1 - df2/dw2|, |df1/dw2 + df2/dw1|) where f = f1 + j*f2,
    estimated by Richardson-extrapolated central differences in the w1 and
    w2 directions.  Small residuals are necessary for holomorphy; the pair
    is diagnostic, not a proof.
    """
    if not (1e-7 <= h <= 1e-3):
        raise DomainError("cr_check step h must lie in [1e-7, 1e-3]")
    partials = []
    for direction in (ONE, J):
        coarse = _partial(f, Z, direction, h)
        fine = _partial(f, Z, direction, h / 2.0)
        partials.append((fine * 4.0 - coarse) / 3.0)
    dw1, dw2 = partials
    r1 = abs(dw1.w1 - dw2.w2)
    r2 = abs(dw2.w1 + dw1.w2)
    return (r1, r2)
