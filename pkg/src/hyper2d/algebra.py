"""General two-dimensional hypercomplex arithmetic.

A two-dimensional hypercomplex system is fixed by two real structure
constants (alpha, beta) through the versor rule

    u^2 = alpha + u * beta

Numbers are w = x + u*y with real components. The discriminant
delta = beta^2 + 4*alpha splits the (alpha, beta) plane into three
equivalence classes:

    delta < 0   elliptic    (canonical form: ordinary complex numbers, u^2 = -1)
    delta = 0   parabolic   (canonical form: dual numbers, u^2 = 0)
    delta > 0   hyperbolic  (canonical form: split-complex numbers, u^2 = +1)

Every system is ring-isomorphic to its canonical form; ``canonicalize``
returns the explicit component map.

Conjugation and the quadratic modulus generalize the two familiar cases:

    conjugate(x + u*y) = (x + beta*y) - u*y
    norm(x + u*y)      = x^2 + beta*x*y - alpha*y^2

``norm`` is exactly the Euclidean x^2 + y^2 for the canonical elliptic
system and the space-time interval x^2 - y^2 for the canonical hyperbolic
one. It is multiplicative, which is what makes unit-modulus hyperbolic
constants act as Lorentz boosts (see :mod:`hyper2d.kinematics`).

All values here are immutable and every operation is a pure function, so
everything is safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import InvalidParameterError, SystemMismatchError, ZeroDivisorError

#: Deadband around delta = 0 inside which a system counts as parabolic.
CLASS_EPSILON = 1e-12

#: Base factor of the zero-divisor rejection threshold used by division.
#: The effective threshold scales with the divisor: eps * (1 + |x| + |y|)^2.
DIVISOR_EPSILON = 1e-12


class SystemClass(Enum):
    """The three equivalence classes of 2D hypercomplex systems."""

    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class SystemParams:
    """Structure constants (alpha, beta) of one 2D hypercomplex system."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "beta", float(self.beta))
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise InvalidParameterError(
                f"structure constants must be finite, got alpha={self.alpha}, beta={self.beta}"
            )

    @property
    def delta(self) -> float:
        """Discriminant beta^2 + 4*alpha deciding the system class."""
        return self.beta * self.beta + 4.0 * self.alpha

    def system_class(self, class_epsilon: float = CLASS_EPSILON) -> SystemClass:
        return classify(self, class_epsilon)


#: Canonical split-complex numbers, u = h with h^2 = +1 (space-time plane).
CANONICAL_HYPERBOLIC = SystemParams(1.0, 0.0)
#: Canonical complex numbers, u = i with i^2 = -1 (Euclidean plane).
CANONICAL_ELLIPTIC = SystemParams(-1.0, 0.0)
#: Canonical parabolic (dual) numbers, u^2 = 0.
CANONICAL_PARABOLIC = SystemParams(0.0, 0.0)


def classify(params: SystemParams, class_epsilon: float = CLASS_EPSILON) -> SystemClass:
    """Classify a system by the sign of its discriminant.

    ``class_epsilon`` is an absolute deadband around zero: an exactly
    parabolic system built from rounded inputs rarely lands on delta == 0.
    """
    if class_epsilon < 0 or not math.isfinite(class_epsilon):
        raise InvalidParameterError(f"class_epsilon must be finite and >= 0, got {class_epsilon}")
    delta = params.delta
    if abs(delta) <= class_epsilon:
        return SystemClass.PARABOLIC
    return SystemClass.HYPERBOLIC if delta > 0 else SystemClass.ELLIPTIC


@dataclass(frozen=True)
class HyperNumber:
    """A number x + u*y in the system fixed by ``system``.

    Arithmetic is defined between numbers of the same system only; mixing
    systems raises :class:`SystemMismatchError`. Plain ints/floats embed as
    (s, 0) and may be mixed freely.
    """

    x: float
    y: float
    system: SystemParams

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))

    @classmethod
    def hyperbolic(cls, x: float, y: float) -> "HyperNumber":
        """A split-complex number x + h*y (h^2 = +1)."""
        return cls(x, y, CANONICAL_HYPERBOLIC)

    @classmethod
    def elliptic(cls, x: float, y: float) -> "HyperNumber":
        """A complex number x + i*y represented in this package's types."""
        return cls(x, y, CANONICAL_ELLIPTIC)

    # -- ring structure -------------------------------------------------

    def __add__(self, other: "HyperNumber | float | int") -> "HyperNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return HyperNumber(self.x + other.x, self.y + other.y, self.system)

    __radd__ = __add__

    def __neg__(self) -> "HyperNumber":
        return HyperNumber(-self.x, -self.y, self.system)

    def __sub__(self, other: "HyperNumber | float | int") -> "HyperNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return HyperNumber(self.x - other.x, self.y - other.y, self.system)

    def __rsub__(self, other: "float | int") -> "HyperNumber":
        return (-self) + other

    def __mul__(self, other: "HyperNumber | float | int") -> "HyperNumber":
        if isinstance(other, (int, float)):
            return HyperNumber(self.x * other, self.y * other, self.system)
        if not isinstance(other, HyperNumber):
            return NotImplemented
        self._check_system(other)
        a, b = self.system.alpha, self.system.beta
        return HyperNumber(
            self.x * other.x + a * (self.y * other.y),
            self.x * other.y + self.y * other.x + b * (self.y * other.y),
            self.system,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: "HyperNumber | float | int") -> "HyperNumber":
        if isinstance(other, (int, float)):
            return HyperNumber(self.x / other, self.y / other, self.system)
        if not isinstance(other, HyperNumber):
            return NotImplemented
        return divide(self, other)

    def __rtruediv__(self, other: "float | int") -> "HyperNumber":
        return divide(self._coerce(other), self)

    # -- involution and modulus -----------------------------------------

    def conjugate(self) -> "HyperNumber":
        """The involution making w * conjugate(w) real: (x + beta*y) - u*y."""
        return HyperNumber(self.x + self.system.beta * self.y, -self.y, self.system)

    def norm(self) -> float:
        """Quadratic modulus x^2 + beta*x*y - alpha*y^2 (may be <= 0)."""
        return (
            self.x * self.x
            + self.system.beta * (self.x * self.y)
            - self.system.alpha * (self.y * self.y)
        )

    def is_zero_divisor(self, divisor_epsilon: float = DIVISOR_EPSILON) -> bool:
        """True when the modulus is below the scaled inversion threshold."""
        scale = 1.0 + abs(self.x) + abs(self.y)
        return abs(self.norm()) <= divisor_epsilon * scale * scale

    # -- helpers ---------------------------------------------------------

    def _coerce(self, other: "HyperNumber | float | int"):
        if isinstance(other, HyperNumber):
            self._check_system(other)
            return other
        if isinstance(other, (int, float)):
            return HyperNumber(float(other), 0.0, self.system)
        return NotImplemented

    def _check_system(self, other: "HyperNumber") -> None:
        if other.system != self.system:
            raise SystemMismatchError(
                f"operands belong to different systems: {self.system} vs {other.system}"
            )

    def __repr__(self) -> str:
        return f"HyperNumber({self.x!r}, {self.y!r}, alpha={self.system.alpha!r}, beta={self.system.beta!r})"


def divide(
    a: HyperNumber, b: HyperNumber, divisor_epsilon: float = DIVISOR_EPSILON
) -> HyperNumber:
    """Ring division a / b via a * conjugate(b) / norm(b).

    Raises :class:`ZeroDivisorError` when b sits on or near the set of
    non-invertible elements (|norm(b)| below the scaled threshold). For the
    canonical hyperbolic system that set is the null cone x = +/- t.
    """
    a._check_system(b)
    n = b.norm()
    scale = 1.0 + abs(b.x) + abs(b.y)
    if abs(n) <= divisor_epsilon * scale * scale:
        raise ZeroDivisorError(
            f"divisor ({b.x}, {b.y}) has modulus {n}, too close to a zero divisor"
        )
    num = a * b.conjugate()
    return HyperNumber(num.x / n, num.y / n, a.system)


@dataclass(frozen=True)
class LinearMap:
    """Invertible component map between two systems, w -> (xx*x + xy*y, yx*x + yy*y).

    Produced by :func:`canonicalize`; the map is a ring isomorphism, i.e.
    apply(a * b) == apply(a) * apply(b) with the product taken in the
    respective system.
    """

    xx: float
    xy: float
    yx: float
    yy: float
    source: SystemParams
    target: SystemParams

    def apply(self, w: HyperNumber) -> HyperNumber:
        if w.system != self.source:
            raise SystemMismatchError("number does not belong to this map's source system")
        return HyperNumber(
            self.xx * w.x + self.xy * w.y,
            self.yx * w.x + self.yy * w.y,
            self.target,
        )

    def determinant(self) -> float:
        return self.xx * self.yy - self.xy * self.yx

    def inverse(self) -> "LinearMap":
        det = self.determinant()
        return LinearMap(
            self.yy / det, -self.xy / det, -self.yx / det, self.xx / det,
            self.target, self.source,
        )


def canonicalize(
    params: SystemParams, class_epsilon: float = CLASS_EPSILON
) -> tuple[SystemParams, LinearMap]:
    """Return the canonical system of ``params`` and the isomorphism onto it.

    The versor substitution is u -> (2u - beta)/sqrt(|delta|) when delta != 0
    and u -> u - beta/2 when delta == 0; on components that is the upper
    triangular map (x, y) -> (x + beta/2 * y, s*y) with s = sqrt(|delta|)/2
    (s = 1 in the parabolic case). Already-canonical systems get the
    identity map.
    """
    cls = classify(params, class_epsilon)
    if cls is SystemClass.HYPERBOLIC:
        target = CANONICAL_HYPERBOLIC
        s = math.sqrt(params.delta) / 2.0
    elif cls is SystemClass.ELLIPTIC:
        target = CANONICAL_ELLIPTIC
        s = math.sqrt(-params.delta) / 2.0
    else:
        target = CANONICAL_PARABOLIC
        s = 1.0
    return target, LinearMap(1.0, params.beta / 2.0, 0.0, s, params, target)
