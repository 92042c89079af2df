#!/usr/bin/env python3
"""Time the compiled grid kernels against the pure-Python fallback.

Runs the three kernel entry points (map evaluation, first-order residual,
second-order residual) for a few catalog functions on a square grid and
prints per-backend timings plus the speedup. Also verifies that the two
backends agree on what they compute.

Usage: python benchmarks/bench_kernels.py [--size N] [--repeat K]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hyper2d import _kernels
from hyper2d._kernels import _pyfallback
from hyper2d.analysis import (
    DEFAULT_FD_STEP_FIRST,
    DEFAULT_FD_STEP_SECOND,
    SECTOR_EPSILON,
    AnalyticFunction,
    Grid2D,
)
from hyper2d.algebra import DIVISOR_EPSILON

try:
    from hyper2d._kernels import _core
except ImportError:
    _core = None


def kernel_args(func: AnalyticFunction, grid: Grid2D):
    ops, ipars, foffs, fpars = func.program()
    return (
        func.system.alpha,
        ops, ipars, foffs, fpars,
        grid.x_range[0], grid.x_step, grid.x_count,
        grid.t_range[0], grid.t_step, grid.t_count,
    )


def timed(fn, repeat: int):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def check_agreement(name: str, res_py, res_c) -> None:
    if isinstance(res_py, tuple) and isinstance(res_py[0], float):
        # residual kernels: (max, evaluated, skipped)
        if res_py[1:] != res_c[1:]:
            raise SystemExit(f"{name}: point accounting disagrees: {res_py} vs {res_c}")
        a, b = res_py[0], res_c[0]
        if abs(a - b) > 1e-12 * (1.0 + abs(a)):
            raise SystemExit(f"{name}: residual maxima disagree: {a} vs {b}")
    else:
        u1, v1, ok1 = res_py
        u2, v2, ok2 = res_c
        if not np.array_equal(ok1, ok2):
            raise SystemExit(f"{name}: domain flags disagree")
        mask = ok1
        for lhs, rhs in ((u1, u2), (v1, v2)):
            err = np.max(np.abs(lhs[mask] - rhs[mask]) / (1.0 + np.abs(lhs[mask])))
            if err > 1e-12:
                raise SystemExit(f"{name}: values disagree by {err}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=400, help="grid points per axis")
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions (best taken)")
    args = parser.parse_args()

    grid = Grid2D((-2.0, 2.0, args.size), (-2.0, 2.0, args.size))
    log_grid = Grid2D((0.8, 2.0, args.size), (-0.5, 0.5, args.size))
    F = AnalyticFunction
    cases = [
        ("exp", F.exp(), grid),
        ("comp(log,exp)", F.compose(F.log(), F.exp()), grid),
        ("pow:3", F.power(3), grid),
        ("comp(pow:2,log)", F.compose(F.power(2), F.log()), log_grid),
    ]
    kernels = [
        ("map", "eval_grid", ()),
        ("cr", "cr_residual_grid", (DEFAULT_FD_STEP_FIRST,)),
        ("wave", "wave_residual_grid", (DEFAULT_FD_STEP_SECOND,)),
    ]

    print(f"grid {args.size}x{args.size}, best of {args.repeat}")
    print(f"active backend: {_kernels.backend_name()}")
    if _core is None:
        print("compiled extension not built; timing the python fallback only\n")
    header = f"{'case':<18} {'kernel':<6} {'python [s]':>11} {'compiled [s]':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for case_name, func, case_grid in cases:
        base = kernel_args(func, case_grid)
        for kname, attr, extra in kernels:
            call_args = base + extra + (SECTOR_EPSILON, DIVISOR_EPSILON)
            t_py, res_py = timed(lambda: getattr(_pyfallback, attr)(*call_args), args.repeat)
            if _core is not None:
                t_c, res_c = timed(lambda: getattr(_core, attr)(*call_args), args.repeat)
                check_agreement(f"{case_name}/{kname}", res_py, res_c)
                print(f"{case_name:<18} {kname:<6} {t_py:>11.4f} {t_c:>13.4f} {t_py / t_c:>7.1f}x")
            else:
                print(f"{case_name:<18} {kname:<6} {t_py:>11.4f} {'-':>13} {'-':>8}")
    if _core is not None:
        print("\nbackends agree on all cases.")


if __name__ == "__main__":
    main()
