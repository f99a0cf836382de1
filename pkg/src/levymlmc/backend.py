"""Kernel backend selection: compiled extension with pure-Python fallback.

The compiled kernel is used when it imported successfully and the
coefficient comes from the registry (it carries a kernel code).  Arbitrary
coefficient callables always route through the Python kernel.  Set
``LEVYMLMC_BACKEND=python`` to force the fallback, or pass ``backend=`` to
the dispatch functions (the benchmark does) to compare both in one process.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py as _py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built; pure-Python fallback
    _compiled = None

_env = os.environ.get("LEVYMLMC_BACKEND", "").strip().lower()
if _env == "python" or _compiled is None:
    DEFAULT_BACKEND = "python"
else:
    DEFAULT_BACKEND = "compiled"

HAVE_COMPILED = _compiled is not None


def available_backends():
    return ("compiled", "python") if HAVE_COMPILED else ("python",)


def _resolve(backend, kernel_code):
    if backend is None:
        backend = DEFAULT_BACKEND
    if backend == "compiled":
        if not HAVE_COMPILED:
            raise RuntimeError("compiled backend requested but extension is not built")
        if kernel_code is None:
            backend = "python"  # callable coefficient: no compiled path
    elif backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return backend


def run_coupled(
    dt,
    dW,
    srem,
    jump,
    tags,
    scheme,
    coefficient,
    x0,
    sigma,
    drift_fine,
    drift_coarse,
    band_comp,
    has_coarse,
    backend=None,
):
    """Dispatch the coupled-path recursion; returns (pre_f, post_f, pre_c, post_c)."""
    n = len(dt)
    pre_f = np.empty(n + 1)
    post_f = np.empty(n + 1)
    pre_c = np.empty(n + 1)
    post_c = np.empty(n + 1)
    which = _resolve(backend, coefficient.kernel_code)
    if which == "compiled":
        _compiled.coupled_paths(
            dt, dW, srem, jump, tags, int(scheme),
            int(coefficient.kernel_code), coefficient.c1, coefficient.c2,
            float(x0), float(sigma), float(drift_fine), float(drift_coarse),
            float(band_comp), int(has_coarse),
            pre_f, post_f, pre_c, post_c,
        )
    else:
        _py.coupled_paths(
            dt, dW, srem, jump, tags, int(scheme),
            coefficient.a,
            float(x0), float(sigma), float(drift_fine), float(drift_coarse),
            float(band_comp), int(has_coarse),
            pre_f, post_f, pre_c, post_c,
        )
    return pre_f, post_f, pre_c, post_c


def run_limit_pair(dt, dYc, dB, jump, sig_xi, coefficient, x0, ups_sig2, backend=None):
    """Dispatch the joint (X, U) recursion; returns (x_pre, x_post, u_pre, u_post)."""
    n = len(dt)
    x_pre = np.empty(n + 1)
    x_post = np.empty(n + 1)
    u_pre = np.empty(n + 1)
    u_post = np.empty(n + 1)
    which = _resolve(backend, coefficient.kernel_code)
    if which == "compiled":
        _compiled.limit_pair(
            dt, dYc, dB, jump, sig_xi,
            int(coefficient.kernel_code), coefficient.c1, coefficient.c2,
            float(x0), float(ups_sig2),
            x_pre, x_post, u_pre, u_post,
        )
    else:
        _py.limit_pair(
            dt, dYc, dB, jump, sig_xi,
            coefficient.a, coefficient.a_prime,
            float(x0), float(ups_sig2),
            x_pre, x_post, u_pre, u_post,
        )
    return x_pre, x_post, u_pre, u_post
