"""Grid-evaluation kernels with a compiled core and a pure-Python fallback.

The backend is selected once, at import time. By default the compiled
extension (hyper2d._kernels._core, built from _core.pyx) is used when
importable, otherwise the pure-Python implementation. Set the environment
variable ``HYPER2D_KERNELS`` to ``python`` or ``compiled`` to force one;
forcing ``compiled`` raises if the extension is missing.

Both backends implement the same three functions with identical semantics:

    eval_grid(...)          -> (u, v, in_domain) arrays, row-major
    cr_residual_grid(...)   -> (max_residual, evaluated, skipped)
    wave_residual_grid(...) -> (max_residual, evaluated, skipped)

See benchmarks/bench_kernels.py for a side-by-side timing comparison.
"""

import os

from ._ops import (  # noqa: F401  (re-exported for program builders)
    OP_AFFINE,
    OP_EXP,
    OP_LOG,
    OP_POLY,
    OP_POW,
    OP_SHEAR_CONTROL,
    OP_SQUARE_CONTROL,
)

_requested = os.environ.get("HYPER2D_KERNELS", "auto").strip().lower()

if _requested in ("auto", ""):
    try:
        from . import _core as _impl

        BACKEND = "compiled"
    except ImportError:
        from . import _pyfallback as _impl

        BACKEND = "python"
elif _requested == "compiled":
    from . import _core as _impl

    BACKEND = "compiled"
elif _requested == "python":
    from . import _pyfallback as _impl

    BACKEND = "python"
else:
    raise ImportError(
        f"HYPER2D_KERNELS={_requested!r} not understood; use 'auto', 'compiled' or 'python'"
    )

eval_grid = _impl.eval_grid
cr_residual_grid = _impl.cr_residual_grid
wave_residual_grid = _impl.wave_residual_grid


def backend_name() -> str:
    """Which kernel implementation this process is using."""
    return BACKEND
