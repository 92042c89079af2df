# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled grid kernels. Mirrors _pyfallback.py expression for expression;
see that module for the semantics and _ops.py for the opcode table."""

from libc.stdint cimport int64_t
from libc.math cimport atan2, cos, cosh, exp, fabs, isfinite, log, sin, sinh, NAN

import numpy as np

DEF OP_EXP = 1
DEF OP_LOG = 2
DEF OP_POW = 3
DEF OP_POLY = 4
DEF OP_AFFINE = 5
DEF OP_SHEAR_CONTROL = 6
DEF OP_SQUARE_CONTROL = 7

DEF EXP_ARG_LIMIT = 709.0


cdef bint _eval_point(double alpha,
                      const int64_t[::1] ops,
                      const int64_t[::1] ipars,
                      const int64_t[::1] foffs,
                      const double[::1] fpars,
                      double x, double y,
                      double sector_eps, double divisor_eps,
                      double* out_u, double* out_v) noexcept nogil:
    cdef Py_ssize_t k, j
    cdef int64_t op, n, m, off
    cdef double ex, p, lp, lm, r2, nrm, scale, rx, ry, ax, ay, tx
    for k in range(ops.shape[0]):
        op = ops[k]
        if op == OP_EXP:
            if alpha > 0.0:
                if x + fabs(y) > EXP_ARG_LIMIT:
                    out_u[0] = NAN; out_v[0] = NAN
                    return False
                ex = exp(x)
                tx = ex * cosh(y)
                y = ex * sinh(y)
                x = tx
            else:
                if x > EXP_ARG_LIMIT:
                    out_u[0] = NAN; out_v[0] = NAN
                    return False
                ex = exp(x)
                tx = ex * cos(y)
                y = ex * sin(y)
                x = tx
        elif op == OP_LOG:
            if alpha > 0.0:
                p = (x - y) * (x + y)
                if not (x > 0.0 and p > sector_eps * (x * x + y * y)):
                    out_u[0] = NAN; out_v[0] = NAN
                    return False
                lp = log(x + y)
                lm = log(x - y)
                x = 0.5 * (lp + lm)
                y = 0.5 * (lp - lm)
            else:
                r2 = x * x + y * y
                if not (r2 > 0.0) or (y == 0.0 and x < 0.0):
                    out_u[0] = NAN; out_v[0] = NAN
                    return False
                tx = 0.5 * log(r2)
                y = atan2(y, x)
                x = tx
        elif op == OP_POW:
            n = ipars[k]
            if n < 0:
                nrm = x * x - alpha * (y * y)
                scale = 1.0 + fabs(x) + fabs(y)
                if fabs(nrm) <= divisor_eps * scale * scale:
                    out_u[0] = NAN; out_v[0] = NAN
                    return False
                x = x / nrm
                y = -y / nrm
                n = -n
            rx = 1.0
            ry = 0.0
            for j in range(n):
                tx = rx * x + alpha * (ry * y)
                ry = rx * y + ry * x
                rx = tx
            x = rx
            y = ry
        elif op == OP_POLY:
            m = ipars[k]
            off = foffs[k]
            rx = fpars[off + 2 * (m - 1)]
            ry = fpars[off + 2 * (m - 1) + 1]
            for j in range(m - 2, -1, -1):
                tx = rx * x + alpha * (ry * y) + fpars[off + 2 * j]
                ry = rx * y + ry * x + fpars[off + 2 * j + 1]
                rx = tx
            x = rx
            y = ry
        elif op == OP_AFFINE:
            off = foffs[k]
            ax = fpars[off]
            ay = fpars[off + 1]
            tx = ax * x + alpha * (ay * y) + fpars[off + 2]
            y = ax * y + ay * x + fpars[off + 3]
            x = tx
        elif op == OP_SHEAR_CONTROL:
            y = 2.0 * y
        elif op == OP_SQUARE_CONTROL:
            x = x * x
            y = 0.0
        if not (isfinite(x) and isfinite(y)):
            out_u[0] = NAN; out_v[0] = NAN
            return False
    out_u[0] = x
    out_v[0] = y
    return True


def eval_grid(double alpha,
              int64_t[::1] ops, int64_t[::1] ipars,
              int64_t[::1] foffs, double[::1] fpars,
              double x0, double dx, Py_ssize_t nx,
              double t0, double dt, Py_ssize_t nt,
              double sector_eps, double divisor_eps):
    cdef Py_ssize_t i, j, idx
    cdef double xi, tj, uu, vv
    u_arr = np.empty(nx * nt, dtype=np.float64)
    v_arr = np.empty(nx * nt, dtype=np.float64)
    ok_arr = np.empty(nx * nt, dtype=np.uint8)
    cdef double[::1] u = u_arr
    cdef double[::1] v = v_arr
    cdef unsigned char[::1] ok = ok_arr
    with nogil:
        idx = 0
        for i in range(nx):
            xi = x0 + i * dx
            for j in range(nt):
                tj = t0 + j * dt
                ok[idx] = _eval_point(alpha, ops, ipars, foffs, fpars,
                                      xi, tj, sector_eps, divisor_eps, &uu, &vv)
                u[idx] = uu
                v[idx] = vv
                idx += 1
    return u_arr, v_arr, ok_arr.view(np.bool_)


def cr_residual_grid(double alpha,
                     int64_t[::1] ops, int64_t[::1] ipars,
                     int64_t[::1] foffs, double[::1] fpars,
                     double x0, double dx, Py_ssize_t nx,
                     double t0, double dt, Py_ssize_t nt,
                     double fd_step, double sector_eps, double divisor_eps):
    cdef Py_ssize_t i, j
    cdef long long evaluated = 0, skipped = 0
    cdef double s = fd_step
    cdef double xi, tj, max_r = 0.0
    cdef double uc, vc, uxp, vxp, uxm, vxm, utp, vtp, utm, vtm
    cdef double du_dx, dv_dx, du_dt, dv_dt, r1, r2, r
    cdef bint ok0, ok1, ok2, ok3, ok4
    with nogil:
        for i in range(nx):
            xi = x0 + i * dx
            for j in range(nt):
                tj = t0 + j * dt
                ok0 = _eval_point(alpha, ops, ipars, foffs, fpars, xi, tj, sector_eps, divisor_eps, &uc, &vc)
                ok1 = _eval_point(alpha, ops, ipars, foffs, fpars, xi + s, tj, sector_eps, divisor_eps, &uxp, &vxp)
                ok2 = _eval_point(alpha, ops, ipars, foffs, fpars, xi - s, tj, sector_eps, divisor_eps, &uxm, &vxm)
                ok3 = _eval_point(alpha, ops, ipars, foffs, fpars, xi, tj + s, sector_eps, divisor_eps, &utp, &vtp)
                ok4 = _eval_point(alpha, ops, ipars, foffs, fpars, xi, tj - s, sector_eps, divisor_eps, &utm, &vtm)
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


def wave_residual_grid(double alpha,
                       int64_t[::1] ops, int64_t[::1] ipars,
                       int64_t[::1] foffs, double[::1] fpars,
                       double x0, double dx, Py_ssize_t nx,
                       double t0, double dt, Py_ssize_t nt,
                       double fd_step, double sector_eps, double divisor_eps):
    cdef Py_ssize_t i, j
    cdef long long evaluated = 0, skipped = 0
    cdef double h = fd_step
    cdef double h2 = h * h
    cdef double xi, tj, max_r = 0.0
    cdef double uc, vc, uxp, vxp, uxm, vxm, utp, vtp, utm, vtm
    cdef double u_xx, u_tt, v_xx, v_tt, r1, r2, r
    cdef bint ok0, ok1, ok2, ok3, ok4
    with nogil:
        for i in range(nx):
            xi = x0 + i * dx
            for j in range(nt):
                tj = t0 + j * dt
                ok0 = _eval_point(alpha, ops, ipars, foffs, fpars, xi, tj, sector_eps, divisor_eps, &uc, &vc)
                ok1 = _eval_point(alpha, ops, ipars, foffs, fpars, xi + h, tj, sector_eps, divisor_eps, &uxp, &vxp)
                ok2 = _eval_point(alpha, ops, ipars, foffs, fpars, xi - h, tj, sector_eps, divisor_eps, &uxm, &vxm)
                ok3 = _eval_point(alpha, ops, ipars, foffs, fpars, xi, tj + h, sector_eps, divisor_eps, &utp, &vtp)
                ok4 = _eval_point(alpha, ops, ipars, foffs, fpars, xi, tj - h, sector_eps, divisor_eps, &utm, &vtm)
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
