"""Function theory of the canonical hyperbolic (split-complex) plane.

A function f(w) = u(x, t) + h*v(x, t) of the hyperbolic variable w = x + h*t
is analytic when the first-order system

    u_x = v_t,   u_t = v_x

holds; u and v then solve the wave equation u_xx - u_tt = 0. This module
provides the polar/exponential machinery for the right sector
(x > 0, |x| > |t|), a closed catalog of analytic functions, and numerical
verifiers that measure the residuals of both equations on grids by central
differences.

The same machinery runs over the canonical elliptic system (ordinary
complex numbers), where the first-order system picks up the classical
sign pattern (u_x = v_y, u_y = -v_x) and the wave operator becomes the
Laplacian. Select the system when constructing an :class:`AnalyticFunction`.

Functions form a closed enumeration rather than accepting arbitrary
callables so that every member has an analytically known domain. Two
deliberately non-analytic control maps are included to prove the checkers
can detect violations; they are not part of the analytic catalog.

Grid evaluation is delegated to :mod:`hyper2d._kernels` (compiled when
available); the scalar evaluation path here is an independent
implementation in terms of :class:`~hyper2d.algebra.HyperNumber`
arithmetic, and the test suite cross-checks the two.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple, Optional, Sequence

import numpy as np

from . import _kernels
from .algebra import (
    CANONICAL_ELLIPTIC,
    CANONICAL_HYPERBOLIC,
    DIVISOR_EPSILON,
    HyperNumber,
    SystemParams,
)
from .errors import (
    DomainError,
    InvalidParameterError,
    SectorError,
    SystemMismatchError,
    ZeroDivisorError,
)

#: Right-sector guard: reject points with x^2 - t^2 <= eps * (x^2 + t^2).
SECTOR_EPSILON = 1e-12

#: Default central-difference step for first derivatives.
DEFAULT_FD_STEP_FIRST = 1e-5
#: Default central-difference step for second derivatives.
DEFAULT_FD_STEP_SECOND = 1e-3

# exp stays within double range while x + |t| is below this (see kernels)
_EXP_ARG_LIMIT = 709.0


# ---------------------------------------------------------------------------
# polar / exponential form on the right sector
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolarHyperbolic:
    """Exponential form (log-modulus, hyperbolic angle) of a right-sector number.

    w = exp(log_modulus) * (cosh(angle) + h*sinh(angle)), with
    log_modulus = ln sqrt(x^2 - t^2) and angle = atanh(t/x).
    """

    log_modulus: float
    angle: float


def _require_canonical_hyperbolic(w: HyperNumber) -> None:
    if w.system != CANONICAL_HYPERBOLIC:
        raise SystemMismatchError(
            "operation defined on the canonical hyperbolic system only"
        )


def in_right_sector(x: float, t: float, sector_epsilon: float = SECTOR_EPSILON) -> bool:
    """True when (x, t) lies strictly inside the sector x > 0, |x| > |t|,
    with a relative guard band around the null cone."""
    return x > 0.0 and (x - t) * (x + t) > sector_epsilon * (x * x + t * t)


def _log_parts(x: float, t: float, sector_epsilon: float) -> tuple[float, float]:
    # ln(x+t) and ln(x-t); their half-sum/half-difference give modulus/angle.
    if not in_right_sector(x, t, sector_epsilon):
        raise SectorError(
            f"point ({x}, {t}) is outside the right sector x > 0, |x| > |t|"
        )
    return math.log(x + t), math.log(x - t)


def to_polar(w: HyperNumber, sector_epsilon: float = SECTOR_EPSILON) -> PolarHyperbolic:
    """Polar decomposition of a right-sector hyperbolic number."""
    _require_canonical_hyperbolic(w)
    lp, lm = _log_parts(w.x, w.y, sector_epsilon)
    return PolarHyperbolic(0.5 * (lp + lm), 0.5 * (lp - lm))


def from_polar(p: PolarHyperbolic) -> HyperNumber:
    """Inverse of :func:`to_polar`; always lands in the right sector."""
    scale = math.exp(p.log_modulus)
    return HyperNumber.hyperbolic(scale * math.cosh(p.angle), scale * math.sinh(p.angle))


def hexp(w: HyperNumber) -> HyperNumber:
    """Hyperbolic exponential e^x * (cosh t + h sinh t).

    Raises OverflowError when the result exceeds double range.
    """
    _require_canonical_hyperbolic(w)
    if w.x + abs(w.y) > _EXP_ARG_LIMIT:
        raise OverflowError(f"hexp(({w.x}, {w.y})) exceeds double range")
    ex = math.exp(w.x)
    return HyperNumber.hyperbolic(ex * math.cosh(w.y), ex * math.sinh(w.y))


def hlog(w: HyperNumber, sector_epsilon: float = SECTOR_EPSILON) -> HyperNumber:
    """Hyperbolic logarithm, defined on the open right sector.

    hlog(w) = ln sqrt(x^2 - t^2) + h atanh(t/x); raises SectorError
    elsewhere (the other sectors and the null cone are not continuable).
    """
    _require_canonical_hyperbolic(w)
    lp, lm = _log_parts(w.x, w.y, sector_epsilon)
    return HyperNumber.hyperbolic(0.5 * (lp + lm), 0.5 * (lp - lm))


# ---------------------------------------------------------------------------
# the closed function catalog
# ---------------------------------------------------------------------------


class FunctionKind(Enum):
    EXP = "exp"
    LOG = "log"
    POWER = "pow"
    POLYNOMIAL = "poly"
    AFFINE = "affine"
    COMPOSE = "comp"
    SHEAR_CONTROL = "test-nonanalytic"
    SQUARE_CONTROL = "test-quadratic"


_CONTROL_KINDS = (FunctionKind.SHEAR_CONTROL, FunctionKind.SQUARE_CONTROL)


def _require_canonical(system: SystemParams) -> SystemParams:
    if system not in (CANONICAL_HYPERBOLIC, CANONICAL_ELLIPTIC):
        raise InvalidParameterError(
            "function catalog supports the canonical hyperbolic and elliptic systems only"
        )
    return system


@dataclass(frozen=True)
class AnalyticFunction:
    """One member of the closed function catalog, bound to a canonical system.

    Build instances through the factory classmethods (``exp``, ``log``,
    ``power``, ``polynomial``, ``affine``, ``compose``) rather than the raw
    constructor. Instances are callable: ``f(w)`` evaluates in exact
    closed form and raises the appropriate domain error outside the
    function's domain.

    ``shear_control`` and ``square_control`` construct the two deliberately
    non-analytic diagnostic maps used to verify the residual checkers have
    detection power; ``is_analytic`` is False for them.
    """

    kind: FunctionKind
    system: SystemParams
    power: int = 0
    coeffs: tuple[HyperNumber, ...] = ()
    scale: Optional[HyperNumber] = None
    offset: Optional[HyperNumber] = None
    outer: Optional["AnalyticFunction"] = None
    inner: Optional["AnalyticFunction"] = None

    # -- factories --------------------------------------------------------

    @classmethod
    def exp(cls, system: SystemParams = CANONICAL_HYPERBOLIC) -> "AnalyticFunction":
        return cls(FunctionKind.EXP, _require_canonical(system))

    @classmethod
    def log(cls, system: SystemParams = CANONICAL_HYPERBOLIC) -> "AnalyticFunction":
        return cls(FunctionKind.LOG, _require_canonical(system))

    @classmethod
    def power(cls, n: int, system: SystemParams = CANONICAL_HYPERBOLIC) -> "AnalyticFunction":
        if not isinstance(n, int):
            raise InvalidParameterError(f"power exponent must be an int, got {n!r}")
        return cls(FunctionKind.POWER, _require_canonical(system), power=n)

    @classmethod
    def polynomial(cls, coeffs: Sequence[HyperNumber]) -> "AnalyticFunction":
        coeffs = tuple(coeffs)
        if not coeffs:
            raise InvalidParameterError("polynomial needs at least one coefficient")
        system = _require_canonical(coeffs[0].system)
        if any(c.system != system for c in coeffs):
            raise SystemMismatchError("polynomial coefficients must share one system")
        return cls(FunctionKind.POLYNOMIAL, system, coeffs=coeffs)

    @classmethod
    def affine(cls, scale: HyperNumber, offset: HyperNumber) -> "AnalyticFunction":
        system = _require_canonical(scale.system)
        if offset.system != system:
            raise SystemMismatchError("affine coefficients must share one system")
        return cls(FunctionKind.AFFINE, system, scale=scale, offset=offset)

    @classmethod
    def compose(cls, outer: "AnalyticFunction", inner: "AnalyticFunction") -> "AnalyticFunction":
        if outer.system != inner.system:
            raise SystemMismatchError("composed functions must share one system")
        return cls(FunctionKind.COMPOSE, outer.system, outer=outer, inner=inner)

    @classmethod
    def shear_control(cls, system: SystemParams = CANONICAL_HYPERBOLIC) -> "AnalyticFunction":
        """(x, t) -> (x, 2t); breaks the first-order equations by exactly 1."""
        return cls(FunctionKind.SHEAR_CONTROL, _require_canonical(system))

    @classmethod
    def square_control(cls, system: SystemParams = CANONICAL_HYPERBOLIC) -> "AnalyticFunction":
        """(x, t) -> (x^2, 0); second-order residual is exactly 2."""
        return cls(FunctionKind.SQUARE_CONTROL, _require_canonical(system))

    # -- properties --------------------------------------------------------

    @property
    def is_analytic(self) -> bool:
        if self.kind in _CONTROL_KINDS:
            return False
        if self.kind is FunctionKind.COMPOSE:
            return self.outer.is_analytic and self.inner.is_analytic
        return True

    def spec_string(self) -> str:
        """The function in the CLI mini-grammar (round-trips through the parser)."""
        k = self.kind
        if k is FunctionKind.POWER:
            return f"pow:{self.power}"
        if k is FunctionKind.POLYNOMIAL:
            flat = ",".join(f"{c.x!r},{c.y!r}" for c in self.coeffs)
            return f"poly:{flat}"
        if k is FunctionKind.AFFINE:
            a, b = self.scale, self.offset
            return f"affine:{a.x!r},{a.y!r},{b.x!r},{b.y!r}"
        if k is FunctionKind.COMPOSE:
            return f"comp({self.outer.spec_string()},{self.inner.spec_string()})"
        return k.value

    def __repr__(self) -> str:
        tag = "hyperbolic" if self.system == CANONICAL_HYPERBOLIC else "elliptic"
        return f"AnalyticFunction({self.spec_string()!r}, {tag})"

    # -- scalar evaluation -------------------------------------------------

    def __call__(
        self,
        w: HyperNumber,
        sector_epsilon: float = SECTOR_EPSILON,
        divisor_epsilon: float = DIVISOR_EPSILON,
    ) -> HyperNumber:
        if w.system != self.system:
            raise SystemMismatchError("argument does not belong to this function's system")
        return self._eval(w, sector_epsilon, divisor_epsilon)

    def _eval(self, w: HyperNumber, sector_eps: float, divisor_eps: float) -> HyperNumber:
        k = self.kind
        if k is FunctionKind.EXP:
            return self._eval_exp(w)
        if k is FunctionKind.LOG:
            return self._eval_log(w, sector_eps)
        if k is FunctionKind.POWER:
            n = self.power
            if n < 0:
                w = _invert_canonical(w, divisor_eps)
                n = -n
            acc = HyperNumber(1.0, 0.0, self.system)
            for _ in range(n):
                acc = acc * w
            return acc
        if k is FunctionKind.POLYNOMIAL:
            acc = self.coeffs[-1]
            for c in reversed(self.coeffs[:-1]):
                acc = acc * w + c
            return acc
        if k is FunctionKind.AFFINE:
            return self.scale * w + self.offset
        if k is FunctionKind.COMPOSE:
            return self.outer._eval(self.inner._eval(w, sector_eps, divisor_eps),
                                    sector_eps, divisor_eps)
        if k is FunctionKind.SHEAR_CONTROL:
            return HyperNumber(w.x, 2.0 * w.y, self.system)
        if k is FunctionKind.SQUARE_CONTROL:
            return HyperNumber(w.x * w.x, 0.0, self.system)
        raise AssertionError(f"unhandled kind {k}")

    def _eval_exp(self, w: HyperNumber) -> HyperNumber:
        if self.system == CANONICAL_HYPERBOLIC:
            if w.x + abs(w.y) > _EXP_ARG_LIMIT:
                raise OverflowError("exp out of double range")
            ex = math.exp(w.x)
            return HyperNumber(ex * math.cosh(w.y), ex * math.sinh(w.y), self.system)
        if w.x > _EXP_ARG_LIMIT:
            raise OverflowError("exp out of double range")
        ex = math.exp(w.x)
        return HyperNumber(ex * math.cos(w.y), ex * math.sin(w.y), self.system)

    def _eval_log(self, w: HyperNumber, sector_eps: float) -> HyperNumber:
        if self.system == CANONICAL_HYPERBOLIC:
            lp, lm = _log_parts(w.x, w.y, sector_eps)
            return HyperNumber(0.5 * (lp + lm), 0.5 * (lp - lm), self.system)
        r2 = w.x * w.x + w.y * w.y
        if not r2 > 0.0 or (w.y == 0.0 and w.x < 0.0):
            raise SectorError(
                f"point ({w.x}, {w.y}) is outside the principal log domain"
            )
        return HyperNumber(0.5 * math.log(r2), math.atan2(w.y, w.x), self.system)

    def in_domain(
        self,
        x: float,
        t: float,
        sector_epsilon: float = SECTOR_EPSILON,
        divisor_epsilon: float = DIVISOR_EPSILON,
    ) -> bool:
        """Whether (x, t) lies in the function's domain (finite value)."""
        try:
            out = self(HyperNumber(x, t, self.system), sector_epsilon, divisor_epsilon)
        except (DomainError, OverflowError):
            return False
        return math.isfinite(out.x) and math.isfinite(out.y)

    # -- kernel program ----------------------------------------------------

    def _stage_list(self) -> list[tuple[int, int, list[float]]]:
        k = self.kind
        if k is FunctionKind.COMPOSE:
            return self.inner._stage_list() + self.outer._stage_list()
        if k is FunctionKind.EXP:
            return [(_kernels.OP_EXP, 0, [])]
        if k is FunctionKind.LOG:
            return [(_kernels.OP_LOG, 0, [])]
        if k is FunctionKind.POWER:
            return [(_kernels.OP_POW, self.power, [])]
        if k is FunctionKind.POLYNOMIAL:
            flat: list[float] = []
            for c in self.coeffs:
                flat.extend((c.x, c.y))
            return [(_kernels.OP_POLY, len(self.coeffs), flat)]
        if k is FunctionKind.AFFINE:
            a, b = self.scale, self.offset
            return [(_kernels.OP_AFFINE, 0, [a.x, a.y, b.x, b.y])]
        if k is FunctionKind.SHEAR_CONTROL:
            return [(_kernels.OP_SHEAR_CONTROL, 0, [])]
        if k is FunctionKind.SQUARE_CONTROL:
            return [(_kernels.OP_SQUARE_CONTROL, 0, [])]
        raise AssertionError(f"unhandled kind {k}")

    def program(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """Flatten to the (ops, ipars, foffs, fpars) arrays the kernels run."""
        stages = self._stage_list()
        ops = np.empty(len(stages), dtype=np.int64)
        ipars = np.empty(len(stages), dtype=np.int64)
        foffs = np.empty(len(stages), dtype=np.int64)
        fpars: list[float] = []
        for i, (op, ipar, floats) in enumerate(stages):
            ops[i] = op
            ipars[i] = ipar
            foffs[i] = len(fpars)
            fpars.extend(floats)
        return ops, ipars, foffs, np.asarray(fpars, dtype=np.float64)


def evaluate(f: AnalyticFunction, w: HyperNumber, **kwargs) -> HyperNumber:
    """Closed-form evaluation f(w); plain alias for calling the function."""
    return f(w, **kwargs)


# ---------------------------------------------------------------------------
# grids, mapping, residual reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Grid2D:
    """Uniform rectangular grid; each range is (min, max, count), count >= 2.

    Points run row-major with the first axis outermost: the point at flat
    index i*t_count + j is (x_i, t_j).
    """

    x_range: tuple[float, float, int]
    t_range: tuple[float, float, int]

    def __post_init__(self) -> None:
        for name, (lo, hi, count) in (("x", self.x_range), ("t", self.t_range)):
            if not (math.isfinite(lo) and math.isfinite(hi)):
                raise InvalidParameterError(f"{name}_range bounds must be finite")
            if not isinstance(count, int) or count < 2:
                raise InvalidParameterError(f"{name}_range count must be an int >= 2")
            if not hi > lo:
                raise InvalidParameterError(f"{name}_range needs max > min")

    @property
    def x_count(self) -> int:
        return self.x_range[2]

    @property
    def t_count(self) -> int:
        return self.t_range[2]

    @property
    def size(self) -> int:
        return self.x_count * self.t_count

    @property
    def x_step(self) -> float:
        lo, hi, count = self.x_range
        return (hi - lo) / (count - 1)

    @property
    def t_step(self) -> float:
        lo, hi, count = self.t_range
        return (hi - lo) / (count - 1)

    def x_values(self) -> list[float]:
        lo = self.x_range[0]
        step = self.x_step
        return [lo + i * step for i in range(self.x_count)]

    def t_values(self) -> list[float]:
        lo = self.t_range[0]
        step = self.t_step
        return [lo + j * step for j in range(self.t_count)]

    def points(self) -> Iterator[tuple[float, float]]:
        """Row-major (x, t) pairs."""
        ts = self.t_values()
        for x in self.x_values():
            for t in ts:
                yield x, t


class MapPoint(NamedTuple):
    """One grid point and its image under a plane map."""

    x: float
    t: float
    u: float
    v: float
    in_domain: bool


@dataclass(frozen=True)
class ResidualReport:
    """Maximum equation residuals measured over a grid.

    A report carries the residual the producing check measured and None
    for the other one. Skipped points are those where the function (or
    any finite-difference stencil neighbour) left the domain.
    """

    fd_step: float
    points_evaluated: int
    points_skipped_out_of_domain: int
    max_abs_cr_residual: Optional[float] = None
    max_abs_wave_residual: Optional[float] = None

    @property
    def total_points(self) -> int:
        return self.points_evaluated + self.points_skipped_out_of_domain

    def as_dict(self) -> dict:
        out = {
            "fd_step": self.fd_step,
            "points_evaluated": self.points_evaluated,
            "points_skipped_out_of_domain": self.points_skipped_out_of_domain,
        }
        if self.max_abs_cr_residual is not None:
            out["max_abs_cr_residual"] = self.max_abs_cr_residual
        if self.max_abs_wave_residual is not None:
            out["max_abs_wave_residual"] = self.max_abs_wave_residual
        return out


def _kernel_args(f: AnalyticFunction, grid: Grid2D):
    ops, ipars, foffs, fpars = f.program()
    return (
        f.system.alpha,
        ops,
        ipars,
        foffs,
        fpars,
        grid.x_range[0],
        grid.x_step,
        grid.x_count,
        grid.t_range[0],
        grid.t_step,
        grid.t_count,
    )


def map_grid(
    f: AnalyticFunction,
    grid: Grid2D,
    sector_epsilon: float = SECTOR_EPSILON,
    divisor_epsilon: float = DIVISOR_EPSILON,
) -> list[MapPoint]:
    """Image of the grid under f, row-major; out-of-domain points are
    flagged (u = v = NaN), never fatal."""
    u, v, ok = _kernels.eval_grid(*_kernel_args(f, grid), sector_epsilon, divisor_epsilon)
    out = []
    idx = 0
    for x, t in grid.points():
        out.append(MapPoint(x, t, float(u[idx]), float(v[idx]), bool(ok[idx])))
        idx += 1
    return out


def cr_residual(
    f: AnalyticFunction,
    grid: Grid2D,
    fd_step: float = DEFAULT_FD_STEP_FIRST,
    sector_epsilon: float = SECTOR_EPSILON,
    divisor_epsilon: float = DIVISOR_EPSILON,
) -> ResidualReport:
    """Max first-order analyticity residual of f over the grid.

    Central differences with step ``fd_step``; for the hyperbolic system
    the residuals are |u_x - v_t| and |u_t - v_x|, for the elliptic system
    |u_x - v_y| and |u_y + v_x|.
    """
    if not fd_step > 0:
        raise InvalidParameterError(f"fd_step must be > 0, got {fd_step}")
    max_r, evaluated, skipped = _kernels.cr_residual_grid(
        *_kernel_args(f, grid), fd_step, sector_epsilon, divisor_epsilon
    )
    return ResidualReport(
        fd_step=fd_step,
        points_evaluated=int(evaluated),
        points_skipped_out_of_domain=int(skipped),
        max_abs_cr_residual=float(max_r),
    )


def wave_residual(
    f: AnalyticFunction,
    grid: Grid2D,
    fd_step: float = DEFAULT_FD_STEP_SECOND,
    sector_epsilon: float = SECTOR_EPSILON,
    divisor_epsilon: float = DIVISOR_EPSILON,
) -> ResidualReport:
    """Max second-order field-equation residual of f over the grid
    (|u_xx - u_tt| and |v_xx - v_tt|, Laplacian in the elliptic system)."""
    if not fd_step > 0:
        raise InvalidParameterError(f"fd_step must be > 0, got {fd_step}")
    max_r, evaluated, skipped = _kernels.wave_residual_grid(
        *_kernel_args(f, grid), fd_step, sector_epsilon, divisor_epsilon
    )
    return ResidualReport(
        fd_step=fd_step,
        points_evaluated=int(evaluated),
        points_skipped_out_of_domain=int(skipped),
        max_abs_wave_residual=float(max_r),
    )


# ---------------------------------------------------------------------------
# verification catalog
# ---------------------------------------------------------------------------


class CatalogEntry(NamedTuple):
    name: str
    function: AnalyticFunction
    grid: Grid2D


def _num(system: SystemParams):
    def make(x: float, y: float) -> HyperNumber:
        return HyperNumber(x, y, system)

    return make


def verification_catalog(system: SystemParams = CANONICAL_HYPERBOLIC) -> list[CatalogEntry]:
    """The analytic functions the test suite verifies, each with a grid
    inside its domain (coordinates bounded by 2).

    Grids for log and negative powers stay away from the singular sets
    (null cone / origin / branch cut); everything else uses the full
    [-2, 2]^2 square.
    """
    _require_canonical(system)
    n = _num(system)
    F = AnalyticFunction
    square = Grid2D((-2.0, 2.0, 41), (-2.0, 2.0, 41))
    if system == CANONICAL_HYPERBOLIC:
        log_grid = Grid2D((0.8, 2.0, 41), (-0.5, 0.5, 41))
        inv_grid = Grid2D((1.4, 2.0, 31), (-0.2, 0.2, 31))
    else:
        log_grid = Grid2D((0.5, 2.0, 41), (-1.0, 1.0, 41))
        inv_grid = Grid2D((0.5, 2.0, 31), (0.5, 2.0, 31))
    poly = F.polynomial(
        [n(1.0, 0.5), n(-0.25, 1.0), n(0.5, -0.5), n(0.125, 0.25)]
    )
    affine = F.affine(n(1.5, 0.5), n(-0.25, 1.0))
    small_affine = F.affine(n(0.6, 0.2), n(0.1, -0.3))
    return [
        CatalogEntry("exp", F.exp(system), square),
        CatalogEntry("log", F.log(system), log_grid),
        CatalogEntry("pow:2", F.power(2, system), square),
        CatalogEntry("pow:3", F.power(3, system), square),
        CatalogEntry("pow:-1", F.power(-1, system), inv_grid),
        CatalogEntry("poly", poly, square),
        CatalogEntry("affine", affine, square),
        CatalogEntry("comp(log,exp)", F.compose(F.log(system), F.exp(system)), square),
        CatalogEntry("comp(exp,affine)", F.compose(F.exp(system), small_affine), square),
        CatalogEntry("comp(pow:2,log)", F.compose(F.power(2, system), F.log(system)), log_grid),
    ]


def _invert_canonical(w: HyperNumber, divisor_eps: float) -> HyperNumber:
    # canonical systems have beta = 0, so conj = (x, -y) and norm = x^2 - alpha*y^2
    nrm = w.x * w.x - w.system.alpha * (w.y * w.y)
    scale = 1.0 + abs(w.x) + abs(w.y)
    if abs(nrm) <= divisor_eps * scale * scale:
        raise ZeroDivisorError(
            f"({w.x}, {w.y}) has modulus {nrm}, too close to a zero divisor to invert"
        )
    return HyperNumber(w.x / nrm, -w.y / nrm, w.system)
