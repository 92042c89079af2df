"""Rotation-invariant field solutions and the worldlines they generate.

On the right sector the log/angle chart (X, T) with X = ln sqrt(x^2 - t^2),
T = atanh(t/x) turns the wave equation into itself; a solution independent
of the hyperbolic angle T must be affine in X:

    U(x, t) = slope * ln sqrt(x^2 - t^2) + offset

Its equipotentials X = const are hyperbolas x^2 - t^2 = const, which,
parameterized by arc length, are exactly the worldlines of constant proper
acceleration: x = r*cosh(tau/r), t = r*sinh(tau/r) with acceleration 1/r.
:func:`hyperbolic_motion` samples those worldlines and
:func:`proper_acceleration` measures the acceleration both from the closed
form and by finite differences.

The Euclidean analog replaces the wave operator by the Laplacian and the
hyperbolas by circles: slope * ln sqrt(x^2 + y^2) + offset is the familiar
logarithmic point potential, harmonic away from the origin. The
first-order analyticity checker for the elliptic system is re-exported
here as :func:`cr_check_complex`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

from .algebra import CANONICAL_ELLIPTIC
from .analysis import (
    DEFAULT_FD_STEP_FIRST,
    DEFAULT_FD_STEP_SECOND,
    SECTOR_EPSILON,
    AnalyticFunction,
    Grid2D,
    PolarHyperbolic,
    ResidualReport,
    cr_residual,
    in_right_sector,
)
from .errors import (
    DegenerateSpacingError,
    InvalidParameterError,
    SectorError,
    SingularityError,
    SystemMismatchError,
)
from .kinematics import Boost, Event

__all__ = [
    "Trajectory",
    "TrajectorySample",
    "log_coordinates",
    "event_from_log",
    "radial_wave_solution",
    "radial_wave_residual",
    "boost_invariance_check",
    "hyperbolic_motion",
    "proper_acceleration",
    "four_velocity",
    "equipotential_map",
    "laplace_radial_solution",
    "laplace_residual",
    "cr_check_complex",
]


# ---------------------------------------------------------------------------
# log/angle chart on the right sector
# ---------------------------------------------------------------------------


def log_coordinates(e: Event, sector_epsilon: float = SECTOR_EPSILON) -> PolarHyperbolic:
    """Chart a right-sector event to its (log-radius, angle) coordinates."""
    if not in_right_sector(e.x, e.t, sector_epsilon):
        raise SectorError(f"event ({e.x}, {e.t}) is outside the right sector")
    lp = math.log(e.x + e.t)
    lm = math.log(e.x - e.t)
    return PolarHyperbolic(0.5 * (lp + lm), 0.5 * (lp - lm))


def event_from_log(c: PolarHyperbolic) -> Event:
    """Inverse chart; the image is always inside the right sector."""
    r = math.exp(c.log_modulus)
    return Event(r * math.cosh(c.angle), r * math.sinh(c.angle))


# ---------------------------------------------------------------------------
# angle-independent wave solution
# ---------------------------------------------------------------------------


def radial_wave_solution(
    slope: float, offset: float, e: Event, sector_epsilon: float = SECTOR_EPSILON
) -> float:
    """The angle-independent wave solution slope * ln sqrt(x^2 - t^2) + offset."""
    return slope * log_coordinates(e, sector_epsilon).log_modulus + offset


def _second_difference_residual(
    value: Callable[[float, float], float],
    in_domain: Callable[[float, float], bool],
    grid: Grid2D,
    fd_step: float,
    laplacian: bool,
) -> ResidualReport:
    """Max |U_xx -/+ U_tt| over the grid by 5-point central differences."""
    if not fd_step > 0:
        raise InvalidParameterError(f"fd_step must be > 0, got {fd_step}")
    h = fd_step
    h2 = h * h
    max_r = 0.0
    evaluated = 0
    skipped = 0
    for x, t in grid.points():
        stencil = ((x, t), (x + h, t), (x - h, t), (x, t + h), (x, t - h))
        if not all(in_domain(px, pt) for px, pt in stencil):
            skipped += 1
            continue
        uc = value(x, t)
        u_xx = (value(x + h, t) - 2.0 * uc + value(x - h, t)) / h2
        u_tt = (value(x, t + h) - 2.0 * uc + value(x, t - h)) / h2
        r = abs(u_xx + u_tt) if laplacian else abs(u_xx - u_tt)
        if r > max_r:
            max_r = r
        evaluated += 1
    return ResidualReport(
        fd_step=fd_step,
        points_evaluated=evaluated,
        points_skipped_out_of_domain=skipped,
        max_abs_wave_residual=max_r,
    )


def radial_wave_residual(
    slope: float,
    offset: float,
    grid: Grid2D,
    fd_step: float = DEFAULT_FD_STEP_SECOND,
    sector_epsilon: float = SECTOR_EPSILON,
) -> ResidualReport:
    """Finite-difference wave residual of the radial solution over a grid.

    Points whose stencil leaves the right sector are skipped and counted.
    """

    def value(x: float, t: float) -> float:
        return slope * 0.5 * (math.log(x + t) + math.log(x - t)) + offset

    def domain(x: float, t: float) -> bool:
        return in_right_sector(x, t, sector_epsilon)

    return _second_difference_residual(value, domain, grid, fd_step, laplacian=False)


def boost_invariance_check(
    slope: float,
    offset: float,
    boost: Boost,
    grid: Grid2D,
    sector_epsilon: float = SECTOR_EPSILON,
) -> float:
    """Max |U(boosted point) - U(point)| over the grid.

    The radial solution depends only on the interval, so the result is at
    rounding level for any boost. Raises SectorError if the grid or its
    boosted image leaves the right sector.
    """
    max_dev = 0.0
    for x, t in grid.points():
        e = Event(x, t)
        before = radial_wave_solution(slope, offset, e, sector_epsilon)
        after = radial_wave_solution(slope, offset, boost.apply(e), sector_epsilon)
        dev = abs(after - before)
        if dev > max_dev:
            max_dev = dev
    return max_dev


# ---------------------------------------------------------------------------
# constant-acceleration worldlines
# ---------------------------------------------------------------------------


class TrajectorySample(NamedTuple):
    """One worldline sample: proper time, coordinate time, position."""

    tau: float
    t: float
    x: float


@dataclass(frozen=True)
class Trajectory:
    """A sampled constant-acceleration worldline on x^2 - t^2 = radius^2.

    ``radius`` is the vertex distance of the hyperbola, equal to the
    inverse of the (constant) proper acceleration. Samples are uniform in
    proper time, endpoints included, right branch (x > 0).
    """

    radius: float
    samples: tuple[TrajectorySample, ...]


def _sample_axis(rng: tuple[float, float, int], what: str) -> list[float]:
    lo, hi, count = rng
    if not (math.isfinite(lo) and math.isfinite(hi)) or hi < lo:
        raise InvalidParameterError(f"{what} range must be finite with max >= min")
    if not isinstance(count, int) or count < 1:
        raise InvalidParameterError(f"{what} count must be an int >= 1")
    if count == 1:
        return [lo]
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


def hyperbolic_motion(radius: float, tau_range: tuple[float, float, int]) -> Trajectory:
    """Sample x = r*cosh(tau/r), t = r*sinh(tau/r) uniformly in proper time.

    ``radius`` must be > 0 and ``tau_range`` is (min, max, count) with
    count >= 2.
    """
    if not (math.isfinite(radius) and radius > 0.0):
        raise InvalidParameterError(f"radius must be finite and > 0, got {radius}")
    if tau_range[2] < 2:
        raise InvalidParameterError("tau_range count must be >= 2")
    taus = _sample_axis(tau_range, "tau")
    samples = []
    for tau in taus:
        u = tau / radius
        samples.append(TrajectorySample(tau, radius * math.sinh(u), radius * math.cosh(u)))
    return Trajectory(radius, tuple(samples))


def four_velocity(traj: Trajectory) -> list[tuple[float, float]]:
    """(dt/dtau, dx/dtau) at each sample, from the closed form.

    The pairs satisfy the proper-time normalization
    (dt/dtau)^2 - (dx/dtau)^2 = 1.
    """
    out = []
    for s in traj.samples:
        u = s.tau / traj.radius
        out.append((math.cosh(u), math.sinh(u)))
    return out


def proper_acceleration(traj: Trajectory, mode: str = "analytic") -> list[float]:
    """Invariant acceleration magnitude sqrt|x''^2 - t''^2| along the worldline.

    ``analytic`` differentiates the closed form (the second derivatives are
    cosh/sinh over radius; the difference of squares is evaluated in the
    factored form exp(u)*exp(-u) to dodge cancellation) and returns one
    value per sample, each equal to 1/radius up to rounding.

    ``fd`` estimates the second derivatives from the samples themselves by
    central differences and returns one value per interior sample
    (endpoints excluded). Raises DegenerateSpacingError unless the proper
    times increase strictly.
    """
    g = traj.radius
    if mode == "analytic":
        out = []
        for s in traj.samples:
            u = s.tau / g
            out.append(math.sqrt((math.exp(u) / g) * (math.exp(-u) / g)))
        return out
    if mode != "fd":
        raise InvalidParameterError(f"mode must be 'analytic' or 'fd', got {mode!r}")
    samples = traj.samples
    if len(samples) < 3:
        raise InvalidParameterError("fd mode needs at least 3 samples")
    for a, b in zip(samples, samples[1:]):
        if not b.tau > a.tau:
            raise DegenerateSpacingError("proper times must be strictly increasing")
    out = []
    for prev, cur, nxt in zip(samples, samples[1:], samples[2:]):
        h = 0.5 * (nxt.tau - prev.tau)
        h2 = h * h
        x_acc = (nxt.x - 2.0 * cur.x + prev.x) / h2
        t_acc = (nxt.t - 2.0 * cur.t + prev.t) / h2
        out.append(math.sqrt(abs(x_acc * x_acc - t_acc * t_acc)))
    return out


def equipotential_map(
    radii: Sequence[float], angle_range: tuple[float, float, int]
) -> list[list[tuple[float, float]]]:
    """Image of the lines X = ln(radius) under the exponential chart.

    For each radius the returned polyline samples (r*cosh T, r*sinh T) over
    the angle range; every vertex lies on x^2 - t^2 = radius^2, inside the
    right sector.
    """
    angles = _sample_axis(angle_range, "angle")
    polylines = []
    for r in radii:
        if not (math.isfinite(r) and r > 0.0):
            raise InvalidParameterError(f"radii must be finite and > 0, got {r}")
        polylines.append([(r * math.cosh(a), r * math.sinh(a)) for a in angles])
    return polylines


# ---------------------------------------------------------------------------
# Euclidean analog: the logarithmic point potential
# ---------------------------------------------------------------------------


def laplace_radial_solution(slope: float, offset: float, x: float, y: float) -> float:
    """slope * ln sqrt(x^2 + y^2) + offset; the potential of a point source.

    Raises SingularityError at the origin.
    """
    if not (math.isfinite(x) and math.isfinite(y)):
        raise InvalidParameterError(f"coordinates must be finite, got ({x}, {y})")
    r = math.hypot(x, y)
    if r == 0.0:
        raise SingularityError("the log potential is singular at the origin")
    return slope * math.log(r) + offset


def laplace_residual(
    slope: float,
    offset: float,
    grid: Grid2D,
    fd_step: float = DEFAULT_FD_STEP_SECOND,
) -> ResidualReport:
    """Finite-difference Laplacian residual of the point potential."""

    def value(x: float, y: float) -> float:
        return slope * math.log(math.hypot(x, y)) + offset

    def domain(x: float, y: float) -> bool:
        return math.hypot(x, y) > 0.0

    return _second_difference_residual(value, domain, grid, fd_step, laplacian=True)


def cr_check_complex(
    f: AnalyticFunction,
    grid: Grid2D,
    fd_step: float = DEFAULT_FD_STEP_FIRST,
) -> ResidualReport:
    """First-order analyticity residual with the elliptic sign pattern.

    ``f`` must be built over the canonical elliptic system; the check then
    measures |u_x - v_y| and |u_y + v_x| exactly as :func:`cr_residual`
    does for the hyperbolic system.
    """
    if f.system != CANONICAL_ELLIPTIC:
        raise SystemMismatchError("cr_check_complex expects a function over the elliptic system")
    return cr_residual(f, grid, fd_step)
