"""Pure-Python grid kernels, used when the compiled extension is absent.

Same algorithms, expression orderings, and domain guards as _core.pyx, so
the two backends agree to the last few ulps. Hot loops are plain Python;
fine for desk-scale grids, the compiled core exists for big ones.

``alpha`` selects the canonical system: +1.0 hyperbolic, -1.0 elliptic.
"""

from __future__ import annotations

from math import atan2, cos, cosh, exp, fabs, isfinite, log, sin, sinh

import numpy as np

from ._ops import (
    OP_AFFINE,
    OP_EXP,
    OP_LOG,
    OP_POLY,
    OP_POW,
    OP_SHEAR_CONTROL,
    OP_SQUARE_CONTROL,
)

# exp(x)*cosh(y) stays finite (double range) while x + |y| is below this
_EXP_ARG_LIMIT = 709.0

_NAN = float("nan")


def _eval_point(alpha, ops, ipars, foffs, fpars, x, y, sector_eps, divisor_eps):
    """Run the stage program at one point; (u, v, ok). ok=False on any
    domain violation or non-finite intermediate."""
    for k in range(len(ops)):
        op = ops[k]
        if op == OP_EXP:
            if alpha > 0.0:
                if x + fabs(y) > _EXP_ARG_LIMIT:
                    return _NAN, _NAN, False
                ex = exp(x)
                x, y = ex * cosh(y), ex * sinh(y)
            else:
                if x > _EXP_ARG_LIMIT:
                    return _NAN, _NAN, False
                ex = exp(x)
                x, y = ex * cos(y), ex * sin(y)
        elif op == OP_LOG:
            if alpha > 0.0:
                # right sector only: x > 0, x^2 - y^2 above the cone guard
                p = (x - y) * (x + y)
                if not (x > 0.0 and p > sector_eps * (x * x + y * y)):
                    return _NAN, _NAN, False
                lp = log(x + y)
                lm = log(x - y)
                x, y = 0.5 * (lp + lm), 0.5 * (lp - lm)
            else:
                # principal branch: punctured plane minus the cut y=0, x<0
                r2 = x * x + y * y
                if not (r2 > 0.0) or (y == 0.0 and x < 0.0):
                    return _NAN, _NAN, False
                x, y = 0.5 * log(r2), atan2(y, x)
        elif op == OP_POW:
            n = ipars[k]
            if n < 0:
                nrm = x * x - alpha * (y * y)
                scale = 1.0 + fabs(x) + fabs(y)
                if fabs(nrm) <= divisor_eps * scale * scale:
                    return _NAN, _NAN, False
                x, y = x / nrm, -y / nrm
                n = -n
            rx, ry = 1.0, 0.0
            for _ in range(n):
                rx, ry = rx * x + alpha * (ry * y), rx * y + ry * x
            x, y = rx, ry
        elif op == OP_POLY:
            m = ipars[k]
            off = foffs[k]
            rx = fpars[off + 2 * (m - 1)]
            ry = fpars[off + 2 * (m - 1) + 1]
            for j in range(m - 2, -1, -1):
                rx, ry = (
                    rx * x + alpha * (ry * y) + fpars[off + 2 * j],
                    rx * y + ry * x + fpars[off + 2 * j + 1],
                )
            x, y = rx, ry
        elif op == OP_AFFINE:
            off = foffs[k]
            ax = fpars[off]
            ay = fpars[off + 1]
            x, y = (
                ax * x + alpha * (ay * y) + fpars[off + 2],
                ax * y + ay * x + fpars[off + 3],
            )
        elif op == OP_SHEAR_CONTROL:
            y = 2.0 * y
        elif op == OP_SQUARE_CONTROL:
            x, y = x * x, 0.0
        else:
            raise ValueError(f"unknown opcode {op}")
        if not (isfinite(x) and isfinite(y)):
            return _NAN, _NAN, False
    return x, y, True


def _as_lists(ops, ipars, foffs, fpars):
    return list(ops), list(ipars), list(foffs), list(fpars)


def eval_grid(
    alpha, ops, ipars, foffs, fpars,
    x0, dx, nx, t0, dt, nt,
    sector_eps, divisor_eps,
):
    """Evaluate the program on the nx-by-nt grid, row-major (x outer).

    Returns (u, v, ok) arrays of length nx*nt; out-of-domain entries hold
    NaN with ok=False.
    """
    ops, ipars, foffs, fpars = _as_lists(ops, ipars, foffs, fpars)
    n = nx * nt
    u = np.empty(n, dtype=np.float64)
    v = np.empty(n, dtype=np.float64)
    ok = np.empty(n, dtype=bool)
    idx = 0
    for i in range(nx):
        xi = x0 + i * dx
        for j in range(nt):
            tj = t0 + j * dt
            uu, vv, good = _eval_point(
                alpha, ops, ipars, foffs, fpars, xi, tj, sector_eps, divisor_eps
            )
            u[idx] = uu
            v[idx] = vv
            ok[idx] = good
            idx += 1
    return u, v, ok


def cr_residual_grid(
    alpha, ops, ipars, foffs, fpars,
    x0, dx, nx, t0, dt, nt,
    fd_step, sector_eps, divisor_eps,
):
    """Max first-order analyticity residual over the grid, by central
    differences with step ``fd_step``.

    hyperbolic: |u_x - v_t| and |u_t - v_x); elliptic: |u_x - v_y| and
    |u_y + v_x|. A point counts as evaluated only if the center and all
    four stencil points are in-domain; otherwise it is skipped.
    Returns (max_residual, evaluated, skipped); the max over zero
    evaluated points is 0.0.
    """
    ops, ipars, foffs, fpars = _as_lists(ops, ipars, foffs, fpars)
    s = fd_step
    max_r = 0.0
    evaluated = 0
    skipped = 0
    for i in range(nx):
        xi = x0 + i * dx
        for j in range(nt):
            tj = t0 + j * dt
            _, _, ok0 = _eval_point(alpha, ops, ipars, foffs, fpars, xi, tj, sector_eps, divisor_eps)
            uxp, vxp, ok1 = _eval_point(alpha, ops, ipars, foffs, fpars, xi + s, tj, sector_eps, divisor_eps)
            uxm, vxm, ok2 = _eval_point(alpha, ops, ipars, foffs, fpars, xi - s, tj, sector_eps, divisor_eps)
            utp, vtp, ok3 = _eval_point(alpha, ops, ipars, foffs, fpars, xi, tj + s, sector_eps, divisor_eps)
            utm, vtm, ok4 = _eval_point(alpha, ops, ipars, foffs, fpars, xi, tj - s, sector_eps, divisor_eps)
            if not (ok0 and ok1 and ok2 and ok3 and ok4):
                skipped += 1
                continue
            du_dx = (uxp - uxm) / (2.0 * s)
            dv_dx = (vxp - vxm) / (2.0 * s)
            du_dt = (utp - utm) / (2.0 * s)
            dv_dt = (vtp - vtm) / (2.0 * s)
            if alpha > 0.0:
                r1 = du_dx - dv_dt
                r2 = du_dt - dv_dx
            else:
                r1 = du_dx - dv_dt
                r2 = du_dt + dv_dx
            r = fabs(r1)
            if fabs(r2) > r:
                r = fabs(r2)
            if r > max_r:
                max_r = r
            evaluated += 1
    return max_r, evaluated, skipped


def wave_residual_grid(
    alpha, ops, ipars, foffs, fpars,
    x0, dx, nx, t0, dt, nt,
    fd_step, sector_eps, divisor_eps,
):
    """Max second-order field-equation residual over the grid.

    hyperbolic: |u_xx - u_tt| and |v_xx - v_tt| (wave operator);
    elliptic: |u_xx + u_yy| and |v_xx + v_yy| (Laplacian).
    Same skip accounting as :func:`cr_residual_grid`.
    """
    ops, ipars, foffs, fpars = _as_lists(ops, ipars, foffs, fpars)
    h = fd_step
    h2 = h * h
    max_r = 0.0
    evaluated = 0
    skipped = 0
    for i in range(nx):
        xi = x0 + i * dx
        for j in range(nt):
            tj = t0 + j * dt
            uc, vc, ok0 = _eval_point(alpha, ops, ipars, foffs, fpars, xi, tj, sector_eps, divisor_eps)
            uxp, vxp, ok1 = _eval_point(alpha, ops, ipars, foffs, fpars, xi + h, tj, sector_eps, divisor_eps)
            uxm, vxm, ok2 = _eval_point(alpha, ops, ipars, foffs, fpars, xi - h, tj, sector_eps, divisor_eps)
            utp, vtp, ok3 = _eval_point(alpha, ops, ipars, foffs, fpars, xi, tj + h, sector_eps, divisor_eps)
            utm, vtm, ok4 = _eval_point(alpha, ops, ipars, foffs, fpars, xi, tj - h, sector_eps, divisor_eps)
            if not (ok0 and ok1 and ok2 and ok3 and ok4):
                skipped += 1
                continue
            u_xx = (uxp - 2.0 * uc + uxm) / h2
            u_tt = (utp - 2.0 * uc + utm) / h2
            v_xx = (vxp - 2.0 * vc + vxm) / h2
            v_tt = (vtp - 2.0 * vc + vtm) / h2
            if alpha > 0.0:
                r1 = u_xx - u_tt
                r2 = v_xx - v_tt
            else:
                r1 = u_xx + u_tt
                r2 = v_xx + v_tt
            r = fabs(r1)
            if fabs(r2) > r:
                r = fabs(r2)
            if r > max_r:
                max_r = r
            evaluated += 1
    return max_r, evaluated, skipped
