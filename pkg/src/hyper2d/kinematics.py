"""Lorentz boosts of the (1+1)-dimensional space-time plane, c = 1.

A boost is multiplication by a unit-modulus constant of the canonical
hyperbolic system: with gamma = cosh(rapidity) and gamma*beta =
sinh(rapidity), the event w = x + h*t maps to

    x' = x*cosh(rapidity) + t*sinh(rapidity)
    t' = x*sinh(rapidity) + t*cosh(rapidity)

which is exactly the product (cosh + h*sinh) * (x + h*t). Because the
quadratic modulus is multiplicative and a boost has modulus 1, the interval
x^2 - t^2 is preserved, and boosts compose by adding rapidities.

Only proper orthochronous boosts are modeled (gamma > 0, modulus exactly
+1); the general unit-free constant with a dilation factor is exposed
separately as :func:`scale_then_boost`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import HyperNumber
from .errors import InvalidParameterError, SuperluminalError


@dataclass(frozen=True)
class Event:
    """A space-time point (x, t) in c = 1 units."""

    x: float
    t: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "t", float(self.t))
        if not (math.isfinite(self.x) and math.isfinite(self.t)):
            raise InvalidParameterError(f"event components must be finite, got ({self.x}, {self.t})")

    def interval(self) -> float:
        """The invariant x^2 - t^2 (the hyperbolic modulus of x + h*t)."""
        return self.as_number().norm()

    def as_number(self) -> HyperNumber:
        return HyperNumber.hyperbolic(self.x, self.t)


def interval(e: Event) -> float:
    """Module-level spelling of :meth:`Event.interval`."""
    return e.interval()


@dataclass(frozen=True)
class Boost:
    """A proper orthochronous boost, identified by its rapidity.

    gamma and gamma_beta are the cosh/sinh of the rapidity, i.e. the two
    components of the unit-modulus hyperbolic constant realizing the boost;
    gamma_beta/gamma = tanh(rapidity) is the frame velocity.
    """

    rapidity: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "rapidity", float(self.rapidity))
        if not math.isfinite(self.rapidity):
            raise InvalidParameterError(f"rapidity must be finite, got {self.rapidity}")

    @classmethod
    def from_velocity(cls, v: float) -> "Boost":
        """Boost to a frame moving at velocity v, |v| < 1.

        rapidity = atanh(v); raises SuperluminalError at or beyond the
        light cone.
        """
        if not math.isfinite(v):
            raise InvalidParameterError(f"velocity must be finite, got {v}")
        if abs(v) >= 1.0:
            raise SuperluminalError(f"|v| must be < 1 (c = 1 units), got {v}")
        return cls(math.atanh(v))

    @property
    def gamma(self) -> float:
        return math.cosh(self.rapidity)

    @property
    def gamma_beta(self) -> float:
        return math.sinh(self.rapidity)

    @property
    def velocity(self) -> float:
        return math.tanh(self.rapidity)

    def as_number(self) -> HyperNumber:
        """The unit-modulus constant cosh(rapidity) + h*sinh(rapidity)."""
        return HyperNumber.hyperbolic(self.gamma, self.gamma_beta)

    def apply(self, e: Event) -> Event:
        """Boost an event, implemented as hyperbolic multiplication."""
        w = self.as_number() * e.as_number()
        return Event(w.x, w.y)

    def compose(self, other: "Boost") -> "Boost":
        """Boost composition = rapidity addition (exact, associative)."""
        return Boost(self.rapidity + other.rapidity)

    def inverse(self) -> "Boost":
        return Boost(-self.rapidity)


def velocity_addition(v1: float, v2: float) -> float:
    """Relativistic velocity composition (v1 + v2) / (1 + v1*v2).

    Equals tanh(atanh(v1) + atanh(v2)); inputs must be subluminal and the
    result is always strictly inside (-1, 1). The closed formula can round
    to exactly +/-1 when both speeds sit within an ulp of the light cone,
    so the result is nudged back into the open interval in that case.
    """
    for v in (v1, v2):
        if not math.isfinite(v):
            raise InvalidParameterError(f"velocity must be finite, got {v}")
        if abs(v) >= 1.0:
            raise SuperluminalError(f"|v| must be < 1 (c = 1 units), got {v}")
    out = (v1 + v2) / (1.0 + v1 * v2)
    if out >= 1.0:
        return math.nextafter(1.0, 0.0)
    if out <= -1.0:
        return math.nextafter(-1.0, 0.0)
    return out


def scale_then_boost(log_scale: float, rapidity: float, e: Event) -> Event:
    """Action of a general invertible constant: dilation by exp(log_scale)
    composed with a boost of the given rapidity.

    This is multiplication by the constant exp(log_scale) * (cosh(rapidity)
    + h*sinh(rapidity)); log_scale = 0 reduces to Boost.apply.
    """
    if not (math.isfinite(log_scale) and math.isfinite(rapidity)):
        raise InvalidParameterError("log_scale and rapidity must be finite")
    factor = math.exp(log_scale)
    constant = HyperNumber.hyperbolic(
        factor * math.cosh(rapidity), factor * math.sinh(rapidity)
    )
    w = constant * e.as_number()
    return Event(w.x, w.y)
