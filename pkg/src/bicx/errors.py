"""Exception types shared across the library."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ZeroDivisorDivision(DomainError):
    """Division by a bicomplex zero divisor (or by zero)."""


class ZeroDivisorLog(DomainError):
    """Logarithm of a zero divisor: no principal branch exists on O2."""


class ZeroDivisorPower(DomainError):
    """Power with zero / zero-divisor base and a non-integer exponent."""


class GammaPole(DomainError):
    """Gamma function evaluated at a nonpositive integer."""


class MaxTermsExceeded(ArithmeticError):
    """A certified series failed to meet its stopping rule within max_terms."""


class SeriesDivergence(ArithmeticError):
    """The ratio test kept failing at max_terms: the series looks divergent."""

    def __init__(self, message: str, empirical_radius: float | None = None):
        super().__init__(message)
        self.empirical_radius = empirical_radius


class QuadratureNonConvergence(ArithmeticError):
    """Adaptive quadrature could not push the error estimate below tolerance."""


class PathTruncationError(ArithmeticError):
    """Truncated contour tail estimate exceeds the requested tolerance."""


class ParseError(ValueError):
    """Malformed bicomplex literal."""
