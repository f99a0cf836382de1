"""Idealised limit error process U and its variance oracles.

U solves a linear SDE driven by the original driver, an independent Brownian
motion scaled by sigma^2 * Upsilon, and marked jumps whose conditional
variances sigma_s^2 are built from uniform and exponential auxiliary draws.
Two independent routes to the limit variance rho^2 = Var(grad f(AX) . AU)
are provided: direct Monte Carlo of U, and the conditional-variance kernel
phi evaluated along driver paths; a third, empirical route reads rho^2 off
the decay of coupled level differences.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import levy as lv
from .backend import run_limit_pair
from .engine import LevelSchedule, make_schedule
from .errors import ConfigError, NumericError
from .functionals import FunctionalSpec, component_weights, eval_linear, eval_supremum
from .paths import PairParams, PathSkeleton, build_timeline
from .rng import CH_AUX, CH_BROWNIAN, CH_JUMPS, CH_MARKS, CH_SMALL, RandomStream
from .sde import SdeModel

SINGULAR_TOL = 1e-12


@dataclass(frozen=True)
class UpsilonParams:
    theta: float
    M: int

    def __post_init__(self):
        if self.theta < 0:
            raise ConfigError("theta must be nonnegative")
        if self.M < 2:
            raise ConfigError("M must be at least 2")


def upsilon_sq(theta: float, M: int) -> float:
    """Limit variance constant; series evaluation near theta = 0."""
    UpsilonParams(theta, M)
    if theta < 1e-6:
        base = 0.5 - theta / 6.0 + theta**2 / 24.0 - theta**3 / 120.0
    else:
        base = (math.exp(-theta) - 1.0 + theta) / theta**2
    return base * (1.0 - 1.0 / M)


@dataclass
class JumpMarks:
    """Auxiliary mark draws and the implied conditional variances."""

    xi: np.ndarray
    u: np.ndarray
    e_theta: np.ndarray
    e_mtheta: np.ndarray
    sigma_s_sq: np.ndarray


def sample_marks(sigma: float, params: UpsilonParams, n_jumps: int, rng) -> JumpMarks:
    """i.i.d. marks; E[sigma_s^2] = sigma^2 * upsilon_sq(theta, M).

    At theta = 0 both exponential clocks are almost surely infinite and the
    bracket collapses to the uniform's window offset (m-1)/M.
    """
    xi = rng.standard_normal(n_jumps)
    u = rng.random(n_jumps)
    if params.theta > 0:
        e1 = rng.exponential(1.0 / params.theta, n_jumps)
        e2 = rng.exponential(1.0 / ((params.M - 1) * params.theta), n_jumps)
    else:
        e1 = np.full(n_jumps, np.inf)
        e2 = np.full(n_jumps, np.inf)
    window = np.floor(u * params.M)
    offset = u - window / params.M
    bracket = np.minimum(e1, u) - np.minimum.reduce([e1, e2, offset])
    return JumpMarks(xi=xi, u=u, e_theta=e1, e_mtheta=e2, sigma_s_sq=sigma**2 * bracket)


def default_h_sim(measure: lv.LevyMeasure, rel_var: float = 1e-4) -> float:
    """Truncation threshold keeping the dropped mark-sum variance small.

    Picks h with m2_below(h) <= rel_var * total second moment, so the marked
    jumps omitted from the limit simulation carry a negligible share of the
    jump-channel variance.
    """
    total = measure.total_m2()
    if total == 0.0:
        return 1.0
    h = 1.0
    for _ in range(80):
        if measure.m2_below(h) <= rel_var * total:
            return h
        h *= 0.5
    return h


# ---------------------------------------------------------------------------
# Joint simulation of (X, U)
# ---------------------------------------------------------------------------


@dataclass
class LimitSample:
    """One joint draw of the fine solution skeleton and the error process."""

    x: PathSkeleton
    u_pre: np.ndarray
    u_post: np.ndarray
    h_sim: float
    eps_sim: float
    small_exact: bool


def _eval_vec(fn, xs: np.ndarray) -> np.ndarray:
    """Vectorized coefficient evaluation (registry functions broadcast)."""
    out = fn(xs)
    return np.broadcast_to(np.asarray(out, dtype=float), xs.shape).copy()


def simulate_U(
    model: SdeModel,
    levy: lv.LevyTriplet,
    params: UpsilonParams,
    grid_eps: float,
    h_sim: float,
    stream,
    backend=None,
) -> LimitSample:
    """Jump-adapted Euler draw of (X, U) on grid_eps with jumps above h_sim.

    X follows the driver update rule at fine resolution; U adds the
    independent Brownian channel scaled by sigma^2 * Upsilon and the marked
    jump terms.  Jumps below h_sim are dropped from the mark sum; their
    compensated contribution stays in the continuous driver channel (exact
    for finite-activity restrictions, variance-matched Gaussian otherwise).
    """
    measure = levy.measure
    pp = PairParams(eps_fine=grid_eps, h_fine=h_sim, eps_aux_fine=grid_eps)
    timeline = build_timeline(levy, pp, model.T, stream.generator(CH_JUMPS))
    dt = np.ascontiguousarray(timeline.dt)
    n = len(dt)
    jumps = np.ascontiguousarray(timeline.jumps[1:])

    dW = stream.generator(CH_BROWNIAN).standard_normal(n) * np.sqrt(dt)
    small_exact = measure.m2_below(h_sim) == 0.0 or measure.small_jumps_exact(h_sim)
    srem = np.ascontiguousarray(
        lv.small_jump_increments(measure, h_sim, dt, stream.generator(CH_SMALL))
    )
    bf = levy.compensated_drift(h_sim)
    dYc = np.ascontiguousarray(bf * dt + levy.sigma * dW + srem)

    jump_idx = np.nonzero(jumps)[0]
    sig_xi = np.zeros(n)
    if len(jump_idx) > 0:
        marks = sample_marks(levy.sigma, params, len(jump_idx), stream.generator(CH_MARKS))
        sig_xi[jump_idx] = np.sqrt(marks.sigma_s_sq) * marks.xi
    dB = stream.generator(CH_AUX).standard_normal(n) * np.sqrt(dt)

    ups_sig = levy.sigma**2 * math.sqrt(upsilon_sq(params.theta, params.M))
    x_pre, x_post, u_pre, u_post = run_limit_pair(
        dt,
        dYc,
        np.ascontiguousarray(dB),
        jumps,
        np.ascontiguousarray(sig_xi),
        model.coefficient,
        model.x0,
        ups_sig,
        backend=backend,
    )

    mask = np.ones(len(timeline.times), dtype=bool)
    skeleton = PathSkeleton(
        times=timeline.times,
        tags=timeline.tags,
        pre=x_pre,
        post=x_post,
        update_mask=mask,
        cont_increments=dYc,
        driver_jumps=timeline.jumps.copy(),
        drift=bf,
        h=h_sim,
        eps=grid_eps,
        scheme="idealised",
        small_exact=small_exact,
    )
    return LimitSample(
        x=skeleton, u_pre=u_pre, u_post=u_post,
        h_sim=h_sim, eps_sim=grid_eps, small_exact=small_exact,
    )


def simulate_x_fine(
    model: SdeModel,
    levy: lv.LevyTriplet,
    grid_eps: float,
    h_sim: float,
    stream,
    backend=None,
) -> PathSkeleton:
    """Fine driver path only, consuming the same jump/Brownian/small channels."""
    sample = simulate_U(
        model, levy, UpsilonParams(0.0, 2), grid_eps, h_sim, stream, backend=backend
    )
    return sample.x


# ---------------------------------------------------------------------------
# Conditional variance kernel phi
# ---------------------------------------------------------------------------


@dataclass
class _PhiIngredients:
    e_pts: np.ndarray  # stochastic exponential at points (N+1,)
    g_pts: np.ndarray  # sigma^4 * integral term + sigma^2 * jump term, cumulated


def _phi_ingredients(model: SdeModel, levy: lv.LevyTriplet, sk: PathSkeleton) -> _PhiIngredients:
    """Stochastic exponential and cumulative variance kernel along a skeleton.

    The exponential is advanced by the Euler factors (1 + a'(X) dYc) between
    points and by the exact factors (1 + a'(X_-) dY) through jumps, matching
    the derivative flow of the path recursion itself.
    """
    coeff = model.coefficient
    xl = sk.post[:-1]
    cont = sk.cont_increments
    J = sk.driver_jumps[1:]
    a_l = _eval_vec(coeff.a, xl)
    ap_l = _eval_vec(coeff.a_prime, xl)
    fc = 1.0 + ap_l * cont

    pre = sk.pre[1:]
    a_pre = _eval_vec(coeff.a, pre)
    ap_pre = _eval_vec(coeff.a_prime, pre)
    fj = np.where(J != 0.0, 1.0 + ap_pre * J, 1.0)
    if np.any(np.abs(fj) < SINGULAR_TOL):
        raise NumericError("singular jump: 1 + a'(X-) dY vanishes")

    e_pts = np.empty(len(sk.times))
    e_pts[0] = 1.0
    np.cumprod(fc * fj, out=e_pts[1:])
    e_pre_pts = e_pts[:-1] * fc  # left limit at each interval's right endpoint
    e_left = e_pts[:-1]  # value at each interval's left endpoint

    sig2 = levy.sigma**2
    g1 = (a_l * ap_l) ** 2 / e_left**2 * np.diff(sk.times)
    g2 = np.where(
        J != 0.0, (a_pre * ap_pre) ** 2 * J**2 / (fj**2 * e_pre_pts**2), 0.0
    )
    g_pts = np.empty(len(sk.times))
    g_pts[0] = 0.0
    np.cumsum(sig2 * sig2 * g1 + sig2 * g2, out=g_pts[1:])
    return _PhiIngredients(e_pts=e_pts, g_pts=g_pts)


def phi_formula(
    model: SdeModel, levy: lv.LevyTriplet, x_skeleton: PathSkeleton, s: float, t: float
) -> float:
    """Conditional covariance kernel E[U_s U_t | driver] / Upsilon^2."""
    if s > t:
        raise ValueError("phi requires s <= t")
    if s < 0.0 or t > x_skeleton.T:
        raise ValueError("times outside the skeleton horizon")
    ing = _phi_ingredients(model, levy, x_skeleton)
    ms = int(np.searchsorted(x_skeleton.times, s, side="right")) - 1
    mt = int(np.searchsorted(x_skeleton.times, t, side="right")) - 1
    return float(ing.e_pts[ms] * ing.e_pts[mt] * ing.g_pts[ms])


def _phi_quadratic(ing: _PhiIngredients, weights: list) -> np.ndarray:
    """Matrix Q with Q[i,j] = sum_{m,n} w_i[m] w_j[n] phi(t_m, t_n)."""
    d = len(weights)
    P = [w * ing.e_pts for w in weights]
    G = ing.g_pts
    suffix = [np.concatenate([np.cumsum(p[::-1])[::-1], [0.0]]) for p in P]
    cum_pg = [np.cumsum(p * G) for p in P]
    Q = np.empty((d, d))
    for i in range(d):
        for j in range(i, d):
            # split min(m,n) at m: n > m uses G[m], n <= m uses G[n]
            q = float(np.sum(P[i] * (G * suffix[j][1:] + cum_pg[j])))
            Q[i, j] = q
            Q[j, i] = q
    return Q


# ---------------------------------------------------------------------------
# rho^2 oracles
# ---------------------------------------------------------------------------


@dataclass
class VarianceOracleResult:
    rho_sq: float
    method: str
    mc_stderr: float
    n_paths: int
    excluded: int = 0
    h_sim: float = float("nan")
    eps_sim: float = float("nan")
    warn: bool = False


def _var_with_stderr(z: np.ndarray):
    n = len(z)
    zc = z - z.mean()
    s2 = float(zc @ zc) / (n - 1)
    m4 = float(np.mean(zc**4))
    se = math.sqrt(max(m4 - s2 * s2, 0.0) / n)
    return s2, se


@dataclass(frozen=True)
class _OracleTask:
    model: SdeModel
    levy: lv.LevyTriplet
    functional: FunctionalSpec
    params: UpsilonParams
    method: str
    seed: int
    prefix: tuple
    i0: int
    i1: int
    eps_sim: float
    h_sim: float


def _oracle_block(task: _OracleTask):
    vals = []
    excluded = 0
    base = RandomStream(task.seed)
    for i in range(task.i0, task.i1):
        stream = base.child(*task.prefix, i)
        if task.method == "limit_sde":
            sample = simulate_U(
                task.model, task.levy, task.params, task.eps_sim, task.h_sim, stream
            )
            if task.functional.kind == "linear":
                z = eval_linear(task.functional.map, sample.x)
                grad, ok = task.functional.f.grad(z), task.functional.f.differentiable(z)
                if not ok:
                    excluded += 1
                    continue
                au = np.array(
                    [
                        component_weights(c, sample.x) @ sample.u_post
                        for c in task.functional.map.components
                    ]
                )
                vals.append(float(np.dot(grad, au)))
            else:
                upd = sample.x.update_indices
                best = np.maximum(sample.x.pre[upd], sample.x.post[upd])
                j = int(np.argmax(best))
                idx = upd[j]
                sup = float(best[j])
                if not task.functional.f.differentiable(np.array([sup])):
                    excluded += 1
                    continue
                fprime = float(task.functional.f.grad(np.array([sup]))[0])
                u_s = (
                    sample.u_pre[idx]
                    if sample.x.pre[idx] >= sample.x.post[idx]
                    else sample.u_post[idx]
                )
                vals.append(fprime * float(u_s))
        else:  # phi_formula
            sk = simulate_x_fine(
                task.model, task.levy, task.eps_sim, task.h_sim, stream
            )
            try:
                ing = _phi_ingredients(task.model, task.levy, sk)
            except NumericError:
                excluded += 1
                continue
            if task.functional.kind == "linear":
                z = eval_linear(task.functional.map, sk)
                if not task.functional.f.differentiable(z):
                    excluded += 1
                    continue
                grad = np.asarray(task.functional.f.grad(z), dtype=float)
                weights = [
                    component_weights(c, sk) for c in task.functional.map.components
                ]
                Q = _phi_quadratic(ing, weights)
                vals.append(float(grad @ Q @ grad))
            else:
                upd = sk.update_indices
                best = np.maximum(sk.pre[upd], sk.post[upd])
                j = int(np.argmax(best))
                idx = upd[j]
                sup = float(best[j])
                if not task.functional.f.differentiable(np.array([sup])):
                    excluded += 1
                    continue
                fprime = float(task.functional.f.grad(np.array([sup]))[0])
                phi_ss = float(ing.e_pts[idx] ** 2 * ing.g_pts[idx])
                vals.append(fprime * fprime * phi_ss)
    return vals, excluded


def rho_sq_oracle(
    model: SdeModel,
    levy: lv.LevyTriplet,
    functional: FunctionalSpec,
    params: UpsilonParams,
    method: str,
    n_paths: int,
    seed: int,
    eps_sim: Optional[float] = None,
    h_sim: Optional[float] = None,
    schedule: Optional[LevelSchedule] = None,
    level_k: int = 7,
    scheme: str = "shot_constant",
    workers: int = 1,
    stream_prefix: tuple = (),
) -> VarianceOracleResult:
    """Estimate rho^2 by one of three routes.

    limit_sde: sample variance of grad f(AX) . AU (or f'(sup X) U_S) over
    Monte Carlo draws of (X, U).  phi_formula: Upsilon^2 times the Monte
    Carlo mean of the conditional-variance functional along driver paths.
    level_empirical: variance of the coupled level difference at ``level_k``
    divided by the coarse step size.
    """
    if method == "level_empirical":
        if schedule is None:
            if params.theta > 0:
                schedule = make_schedule(
                    levy, params.M, model.T, params.theta, level_k + 1, "theta_matched"
                )
            else:
                schedule = make_schedule(
                    levy, params.M, model.T, 0.0, level_k + 1, "power", gamma=1.0
                )
        from .engine import level_profile

        stats = level_profile(
            model,
            levy,
            functional,
            schedule,
            scheme,
            n_paths,
            seed,
            levels=[level_k + 1],
            workers=workers,
            stream_prefix=stream_prefix,
        )[0]
        eps_coarse = schedule.level(level_k).eps
        # variance of the difference scaled by the coarse step
        z_var = stats.variance / eps_coarse
        se = z_var * math.sqrt(2.0 / max(stats.count - 1, 1))
        return VarianceOracleResult(
            rho_sq=z_var,
            method=method,
            mc_stderr=se,
            n_paths=stats.count,
        )

    if method not in ("limit_sde", "phi_formula"):
        raise ConfigError(f"unknown rho oracle method {method!r}")
    if eps_sim is None:
        eps_sim = model.T / 1024.0
    if h_sim is None:
        h_sim = default_h_sim(levy.measure)

    tasks = [
        _OracleTask(
            model, levy, functional, params, method, seed,
            stream_prefix, i0, min(i0 + 4096, n_paths), eps_sim, h_sim,
        )
        for i0 in range(0, n_paths, 4096)
    ]
    if workers <= 1 or len(tasks) <= 1:
        results = [_oracle_block(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_oracle_block, tasks, chunksize=1))
    vals = np.array([v for block, _ in results for v in block])
    excluded = sum(e for _, e in results)
    if len(vals) < 2:
        raise NumericError("too few usable paths for the variance oracle")

    ups = upsilon_sq(params.theta, params.M)
    if method == "limit_sde":
        rho, se = _var_with_stderr(vals)
    else:
        rho = ups * float(vals.mean())
        se = ups * float(vals.std(ddof=1)) / math.sqrt(len(vals))
    warn = excluded > 0.001 * n_paths
    return VarianceOracleResult(
        rho_sq=rho,
        method=method,
        mc_stderr=se,
        n_paths=len(vals),
        excluded=excluded,
        h_sim=h_sim,
        eps_sim=eps_sim,
        warn=warn,
    )
