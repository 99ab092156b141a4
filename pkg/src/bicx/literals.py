"""Bicomplex literal parsing and canonical formatting.

Two input syntaxes: the j-form "a+bi+cj+dk" (any subset of terms, i for
the complex imaginary unit) and the idempotent form "z1|z2" with complex
components.  Canonical output is idempotent with 17 significant digits,
which round-trips doubles exactly.
"""

from __future__ import annotations

from .core import Bicomplex
from .errors import ParseError

_SUFFIXES = ("", "i", "j", "k")


def _split_terms(s: str) -> list[str]:
    terms = []
    cur = ""
    for ch in s:
        if ch in "+-" and cur and cur[-1] not in "eE":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    if cur:
        terms.append(cur)
    return terms


def _parse_terms(s: str, allowed: tuple[str, ...]) -> dict[str, float]:
    s = s.strip().replace(" ", "")
    if not s:
        raise ParseError("empty literal")
    acc = {suffix: 0.0 for suffix in _SUFFIXES}
    for term in _split_terms(s):
        suffix = term[-1] if term[-1] in "ijk" else ""
        if suffix not in allowed:
            raise ParseError(f"unit {suffix!r} not allowed here: {term!r}")
        body = term[:-1] if suffix else term
        if body in ("", "+"):
            value = 1.0
        elif body == "-":
            value = -1.0
        else:
            try:
                value = float(body)
            except ValueError:
                raise ParseError(f"bad numeric part in term {term!r}") from None
        if suffix == "" and body in ("", "+", "-"):
            raise ParseError(f"bare sign in literal: {term!r}")
        acc[suffix] += value
    return acc


def parse_complex(s: str) -> complex:
    """Parse "a+bi" style complex literals (i as the imaginary unit)."""
    acc = _parse_terms(s, ("", "i"))
    return complex(acc[""], acc["i"])


def parse_bicomplex(s: str) -> Bicomplex:
    """Parse either "z1|z2" (idempotent) or "a+bi+cj+dk" (j-form)."""
    s = s.strip()
    if "|" in s:
        parts = s.split("|")
        if len(parts) != 2:
            raise ParseError("idempotent literal needs exactly one '|'")
        return Bicomplex(parse_complex(parts[0]), parse_complex(parts[1]))
    acc = _parse_terms(s, _SUFFIXES)
    return Bicomplex.from_reals(acc[""], acc["i"], acc["j"], acc["k"])


def format_real(x: float) -> str:
    out = f"{x:.17g}"
    return "0" if out in ("-0", "-0.0") else out


def format_complex(z: complex) -> str:
    re, im = z.real, z.imag
    if im == 0.0:
        return format_real(re)
    im_part = f"{format_real(abs(im))}i"
    sign = "-" if im < 0 else "+"
    if re == 0.0:
        return f"{im_part}" if im > 0 else f"-{im_part}"
    return f"{format_real(re)}{sign}{im_part}"


def format_bicomplex(Z: Bicomplex) -> str:
    """Canonical idempotent form "z1|z2"."""
    return f"{format_complex(Z.z1)}|{format_complex(Z.z2)}"
