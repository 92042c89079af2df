"""Two-dimensional hypercomplex numbers and the geometry they carry.

The package splits into four layers:

:mod:`hyper2d.algebra`
    Arithmetic of the general system u^2 = alpha + u*beta, classification,
    conjugation, quadratic modulus, division, canonicalization.
:mod:`hyper2d.analysis`
    Function theory of the canonical hyperbolic (and elliptic) system:
    polar form, exp/log, a closed catalog of analytic functions, and
    finite-difference verification of the first-order analyticity
    equations and the second-order field equation.
:mod:`hyper2d.kinematics`
    Lorentz boosts as unit-modulus hyperbolic constants: rapidity
    composition, velocity addition, interval preservation.
:mod:`hyper2d.fields`
    Angle-independent wave solutions, constant-acceleration worldlines,
    and the Euclidean (Laplace) analog.

Grid-scale work runs on compiled kernels when the extension is built, and
on a pure-Python fallback otherwise; ``kernel_backend()`` reports which.
"""

from ._kernels import backend_name as kernel_backend
from .algebra import (
    CANONICAL_ELLIPTIC,
    CANONICAL_HYPERBOLIC,
    CANONICAL_PARABOLIC,
    HyperNumber,
    LinearMap,
    SystemClass,
    SystemParams,
    canonicalize,
    classify,
    divide,
)
from .analysis import (
    AnalyticFunction,
    Grid2D,
    MapPoint,
    PolarHyperbolic,
    ResidualReport,
    cr_residual,
    from_polar,
    hexp,
    hlog,
    map_grid,
    to_polar,
    verification_catalog,
    wave_residual,
)
from .errors import (
    DegenerateSpacingError,
    DomainError,
    InvalidParameterError,
    SectorError,
    SingularityError,
    SuperluminalError,
    SystemMismatchError,
    ZeroDivisorError,
)
from .fields import (
    Trajectory,
    TrajectorySample,
    boost_invariance_check,
    cr_check_complex,
    equipotential_map,
    four_velocity,
    hyperbolic_motion,
    laplace_radial_solution,
    laplace_residual,
    log_coordinates,
    proper_acceleration,
    radial_wave_residual,
    radial_wave_solution,
)
from .kinematics import Boost, Event, interval, scale_then_boost, velocity_addition

__version__ = "0.1.0"

__all__ = [
    "AnalyticFunction",
    "Boost",
    "CANONICAL_ELLIPTIC",
    "CANONICAL_HYPERBOLIC",
    "CANONICAL_PARABOLIC",
    "DegenerateSpacingError",
    "DomainError",
    "Event",
    "Grid2D",
    "HyperNumber",
    "InvalidParameterError",
    "LinearMap",
    "MapPoint",
    "PolarHyperbolic",
    "ResidualReport",
    "SectorError",
    "SingularityError",
    "SuperluminalError",
    "SystemClass",
    "SystemMismatchError",
    "SystemParams",
    "Trajectory",
    "TrajectorySample",
    "ZeroDivisorError",
    "boost_invariance_check",
    "canonicalize",
    "classify",
    "cr_check_complex",
    "cr_residual",
    "divide",
    "equipotential_map",
    "four_velocity",
    "from_polar",
    "hexp",
    "hlog",
    "hyperbolic_motion",
    "interval",
    "kernel_backend",
    "laplace_radial_solution",
    "laplace_residual",
    "log_coordinates",
    "map_grid",
    "proper_acceleration",
    "radial_wave_residual",
    "radial_wave_solution",
    "scale_then_boost",
    "to_polar",
    "velocity_addition",
    "verification_catalog",
    "wave_residual",
]
