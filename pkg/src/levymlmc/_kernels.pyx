# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled path recursion kernels.

Twin of ``_kernels_py``; operation order matches it expression by expression
so the two backends produce bit-identical doubles (no -ffast-math).
Registry coefficients are evaluated inline from their kernel code; callables
are not supported here, callers fall back to the Python kernel for those.
"""

import numpy as np
cimport numpy as cnp

BACKEND_NAME = "compiled"

TAG_GRID_F = 1
TAG_GRID_C = 2
TAG_JUMP = 4
TAG_JUMP_C = 8
TAG_AUX_F = 16
TAG_AUX_C = 32

SCHEME_IDEAL = 0
SCHEME_DIRECT = 1
SCHEME_SHOT = 2

cdef int _TAG_JUMP_C = 8
cdef int _TAG_AUX_F = 16
cdef int _TAG_AUX_C = 32
cdef int _COARSE_UPDATE = 2 | 8
cdef int _SCHEME_IDEAL = 0
cdef int _SCHEME_DIRECT = 1


cdef inline double coeff_a(int kind, double c1, double c2, double x) nogil:
    if kind == 0:
        return c1
    elif kind == 1:
        return x
    elif kind == 2:
        return c1 + c2 * x
    else:
        return c1 * x / (1.0 + x * x)


cdef inline double coeff_ap(int kind, double c1, double c2, double x) nogil:
    cdef double t
    if kind == 0:
        return 0.0
    elif kind == 1:
        return 1.0
    elif kind == 2:
        return c2
    else:
        t = 1.0 + x * x
        return c1 * (1.0 - x * x) / (t * t)


def coupled_paths(
    const double[::1] dt,
    const double[::1] dW,
    const double[::1] srem,
    const double[::1] jump,
    const unsigned char[::1] tags,
    int scheme,
    int coeff_kind,
    double c1,
    double c2,
    double x0,
    double sigma,
    double drift_fine,
    double drift_coarse,
    double band_comp,
    int has_coarse,
    double[::1] pre_f,
    double[::1] post_f,
    double[::1] pre_c,
    double[::1] post_c,
):
    cdef Py_ssize_t n = dt.shape[0]
    cdef Py_ssize_t i
    cdef double xf = x0, accf = 0.0, mf = 0.0, xf_aux = x0
    cdef double xc = x0, accc = 0.0, mc = 0.0, xc_aux = x0
    cdef double d, w, s, J, inc, incc, af, ac, contf, contc, pre, post, lump
    cdef int tg
    pre_f[0] = x0
    post_f[0] = x0
    pre_c[0] = x0
    post_c[0] = x0
    with nogil:
        for i in range(n):
            d = dt[i]
            w = dW[i]
            s = srem[i]
            J = jump[i]
            tg = tags[i]

            inc = drift_fine * d + sigma * w
            if scheme == _SCHEME_IDEAL:
                inc = inc + s
            accf = accf + inc
            if scheme == _SCHEME_DIRECT:
                mf = mf + s
            if has_coarse:
                incc = drift_coarse * d + sigma * w
                if scheme == _SCHEME_IDEAL:
                    incc = incc + s
                accc = accc + incc
                if scheme == _SCHEME_DIRECT:
                    mc = mc + s

            af = coeff_a(coeff_kind, c1, c2, xf)
            contf = accf
            if J != 0.0:
                accf = accf + J
            pre = xf + af * contf
            lump = 0.0
            if scheme == _SCHEME_DIRECT and (tg & _TAG_AUX_F):
                lump = coeff_a(coeff_kind, c1, c2, xf_aux) * mf
                mf = 0.0
            post = xf + af * accf + lump
            pre_f[i + 1] = pre
            post_f[i + 1] = post
            xf = post
            accf = 0.0
            if tg & _TAG_AUX_F:
                xf_aux = xf

            if has_coarse:
                ac = coeff_a(coeff_kind, c1, c2, xc)
                contc = accc
                if J != 0.0:
                    if scheme == _SCHEME_IDEAL:
                        accc = accc + J
                    elif tg & _TAG_JUMP_C:
                        accc = accc + J
                    elif scheme == _SCHEME_DIRECT:
                        mc = mc + J
                if tg & _COARSE_UPDATE:
                    pre = xc + ac * contc
                    lump = 0.0
                    if scheme == _SCHEME_DIRECT and (tg & _TAG_AUX_C):
                        lump = coeff_a(coeff_kind, c1, c2, xc_aux) * (mc - band_comp)
                        mc = 0.0
                    post = xc + ac * accc + lump
                    pre_c[i + 1] = pre
                    post_c[i + 1] = post
                    xc = post
                    accc = 0.0
                    if tg & _TAG_AUX_C:
                        xc_aux = xc
                else:
                    pre_c[i + 1] = xc + ac * contc
                    post_c[i + 1] = xc + ac * accc


def limit_pair(
    const double[::1] dt,
    const double[::1] dYc,
    const double[::1] dB,
    const double[::1] jump,
    const double[::1] sig_xi,
    int coeff_kind,
    double c1,
    double c2,
    double x0,
    double ups_sig2,
    double[::1] x_pre,
    double[::1] x_post,
    double[::1] u_pre,
    double[::1] u_post,
):
    cdef Py_ssize_t n = dt.shape[0]
    cdef Py_ssize_t i
    cdef double x = x0, u = 0.0
    cdef double c, J, ax, apx, xp, up, xq, uq, a_pre, ap_pre
    x_pre[0] = x0
    x_post[0] = x0
    u_pre[0] = 0.0
    u_post[0] = 0.0
    with nogil:
        for i in range(n):
            c = dYc[i]
            J = jump[i]
            ax = coeff_a(coeff_kind, c1, c2, x)
            apx = coeff_ap(coeff_kind, c1, c2, x)
            xp = x + ax * c
            up = u + apx * u * c + ups_sig2 * ax * apx * dB[i]
            if J != 0.0:
                xq = xp + ax * J
                a_pre = coeff_a(coeff_kind, c1, c2, xp)
                ap_pre = coeff_ap(coeff_kind, c1, c2, xp)
                uq = up + ap_pre * up * J + sig_xi[i] * a_pre * ap_pre * J
            else:
                xq = xp
                uq = up
            x_pre[i + 1] = xp
            x_post[i + 1] = xq
            u_pre[i + 1] = up
            u_post[i + 1] = uq
            x = xq
            u = uq
