"""Exception types shared across the package.

All errors are ValueError subclasses so callers that do not care about the
fine-grained taxonomy can catch the builtin. ``DomainError`` groups the
"mathematically out of domain" family (null cone, superluminal speed,
singular point), which the CLI maps to its own exit code.
"""


class InvalidParameterError(ValueError):
    """A numeric parameter is non-finite or outside its legal range."""


class SystemMismatchError(ValueError):
    """Arithmetic attempted between numbers of different hypercomplex systems."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of the operation."""


class ZeroDivisorError(DomainError, ZeroDivisionError):
    """Division by an element whose modulus is (numerically) zero.

    In the hyperbolic system these are the points on or near the null cone
    x = +/- t, which have no multiplicative inverse.
    """


class SectorError(DomainError):
    """Point is outside the right sector x > 0, |x| > |t|.

    The hyperbolic logarithm and polar decomposition are only defined there.
    """


class SuperluminalError(DomainError):
    """A velocity with |v| >= 1 (c = 1 units) was supplied."""


class SingularityError(DomainError):
    """Evaluation requested at a singular point (e.g. the origin of a log potential)."""


class DegenerateSpacingError(InvalidParameterError):
    """Sample abscissae are not strictly increasing."""
