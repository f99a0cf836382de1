"""Pure-Python path recursion kernels.

Fallback twin of the compiled extension.  Operation order is kept identical
expression by expression so both backends produce bit-identical doubles; any
change here must be mirrored in ``_kernels.pyx``.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"

# timeline tag bits (shared with the compiled kernel and the timeline builder)
TAG_GRID_F = 1
TAG_GRID_C = 2
TAG_JUMP = 4
TAG_JUMP_C = 8
TAG_AUX_F = 16
TAG_AUX_C = 32

SCHEME_IDEAL = 0
SCHEME_DIRECT = 1
SCHEME_SHOT = 2

COARSE_UPDATE = TAG_GRID_C | TAG_JUMP_C


def coupled_paths(
    dt,
    dW,
    srem,
    jump,
    tags,
    scheme,
    a,
    x0,
    sigma,
    drift_fine,
    drift_coarse,
    band_comp,
    has_coarse,
    pre_f,
    post_f,
    pre_c,
    post_c,
):
    """Jump-adapted Euler recursion for a (coarse, fine) pair on one timeline.

    Interval i runs from point i to point i+1; ``jump[i]`` and ``tags[i]``
    belong to the interval's right endpoint.  Outputs are per-point left
    limits and values, length N+1.
    """
    n = len(dt)
    xf = x0
    accf = 0.0
    mf = 0.0
    xf_aux = x0
    xc = x0
    accc = 0.0
    mc = 0.0
    xc_aux = x0
    pre_f[0] = x0
    post_f[0] = x0
    pre_c[0] = x0
    post_c[0] = x0
    for i in range(n):
        d = dt[i]
        w = dW[i]
        s = srem[i]
        J = jump[i]
        tg = tags[i]

        inc = drift_fine * d + sigma * w
        if scheme == SCHEME_IDEAL:
            inc = inc + s
        accf = accf + inc
        if scheme == SCHEME_DIRECT:
            mf = mf + s
        if has_coarse:
            incc = drift_coarse * d + sigma * w
            if scheme == SCHEME_IDEAL:
                incc = incc + s
            accc = accc + incc
            if scheme == SCHEME_DIRECT:
                mc = mc + s

        # fine path: every timeline point is one of its update times
        af = a(xf)
        contf = accf
        if J != 0.0:
            accf = accf + J
        pre = xf + af * contf
        lump = 0.0
        if scheme == SCHEME_DIRECT and (tg & TAG_AUX_F):
            lump = a(xf_aux) * mf
            mf = 0.0
        post = xf + af * accf + lump
        pre_f[i + 1] = pre
        post_f[i + 1] = post
        xf = post
        accf = 0.0
        if tg & TAG_AUX_F:
            xf_aux = xf

        if has_coarse:
            ac = a(xc)
            contc = accc
            if J != 0.0:
                if scheme == SCHEME_IDEAL:
                    accc = accc + J
                elif tg & TAG_JUMP_C:
                    accc = accc + J
                elif scheme == SCHEME_DIRECT:
                    mc = mc + J
            if tg & COARSE_UPDATE:
                pre = xc + ac * contc
                lump = 0.0
                if scheme == SCHEME_DIRECT and (tg & TAG_AUX_C):
                    lump = a(xc_aux) * (mc - band_comp)
                    mc = 0.0
                post = xc + ac * accc + lump
                pre_c[i + 1] = pre
                post_c[i + 1] = post
                xc = post
                accc = 0.0
                if tg & TAG_AUX_C:
                    xc_aux = xc
            else:
                pre_c[i + 1] = xc + ac * contc
                post_c[i + 1] = xc + ac * accc


def limit_pair(
    dt,
    dYc,
    dB,
    jump,
    sig_xi,
    a,
    a_prime,
    x0,
    ups_sig2,
    x_pre,
    x_post,
    u_pre,
    u_post,
):
    """Joint Euler step of the solution X and its limit error process U.

    ``dYc`` is the full continuous driver increment per interval, ``jump``
    the jump at the interval's right endpoint and ``sig_xi`` the mark factor
    sigma_s * xi_s attached to that jump.
    """
    n = len(dt)
    x = x0
    u = 0.0
    x_pre[0] = x0
    x_post[0] = x0
    u_pre[0] = 0.0
    u_post[0] = 0.0
    for i in range(n):
        c = dYc[i]
        J = jump[i]
        ax = a(x)
        apx = a_prime(x)
        xp = x + ax * c
        up = u + apx * u * c + ups_sig2 * ax * apx * dB[i]
        if J != 0.0:
            xq = xp + ax * J
            a_pre = a(xp)
            ap_pre = a_prime(xp)
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
