"""Small comparison helpers shared by the test modules."""

from __future__ import annotations

import math

from bicx.core import Bicomplex, HyperbolicNorm


def rel_err_c(got: complex, want: complex, floor: float = 1e-300) -> float:
    return abs(got - want) / max(abs(want), floor)


def rel_err_bc(got: Bicomplex, want: Bicomplex, floor: float = 1e-300) -> float:
    return max(
        abs(got.z1 - want.z1) / max(abs(want.z1), floor),
        abs(got.z2 - want.z2) / max(abs(want.z2), floor),
    )


def abs_err_bc(got: Bicomplex, want: Bicomplex) -> float:
    return max(abs(got.z1 - want.z1), abs(got.z2 - want.z2))


def ulps_apart(a: complex, b: complex, scale: float | None = None) -> float:
    # Rounding error of the j-form round trip lives at the scale of the
    # larger idempotent component (the addition operands), so callers pass
    # that scale when comparing mixed-magnitude pairs.
    if scale is None:
        scale = max(abs(a), abs(b), 1e-300)
    return abs(a - b) / math.ulp(scale)


def hnorm_max(h: HyperbolicNorm) -> float:
    return max(h.n1, h.n2)
