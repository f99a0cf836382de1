"""Statistical verification harness: CLT experiments, normality testing,
variance-decay and bias regressions.

The central check standardizes replicated estimator outputs as
z = (estimate - reference) / delta, whose law should approach a normal with
mean kappa (the bias constant) and variance rho^2.  Normality is tested with
a Kolmogorov-Smirnov statistic against the fitted normal, using Monte Carlo
critical values (naive KS with estimated parameters is anti-conservative).
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np
from scipy import stats as sps
from scipy.special import ndtr

from ._lilliefors import PROBS as _LF_PROBS
from ._lilliefors import QUANTILES as _LF_QUANTILES
from ._lilliefors import SIZES as _LF_SIZES
from .engine import LevelSchedule, ReplicationPlan, run_estimator
from .errors import ConfigError
from .functionals import FunctionalSpec
from .levy import LevyTriplet
from .sde import SdeModel

MIN_REPLICATIONS = 100


@dataclass
class TestReport:
    """One statistical check: statistic, p-value (when defined), verdict."""

    name: str
    value: float
    p_value: Optional[float]
    passed: Optional[bool]
    tolerance: str
    n: int
    seed: Optional[int] = None
    details: dict = field(default_factory=dict)

    def row(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "p": self.p_value,
            "pass": self.passed,
            "tolerance": self.tolerance,
            "n": self.n,
            "seed": self.seed,
            **{f"detail_{k}": v for k, v in self.details.items()},
        }


# ---------------------------------------------------------------------------
# Normality testing with Lilliefors-corrected critical values
# ---------------------------------------------------------------------------


def _lilliefors_quantiles(n: int) -> np.ndarray:
    """Table quantiles of sqrt(n)*D at size n, interpolated in 1/sqrt(n)."""
    sizes = _LF_SIZES
    if n <= sizes[0]:
        return _LF_QUANTILES[sizes[0]]
    if n >= sizes[-1]:
        return _LF_QUANTILES[sizes[-1]]
    hi = next(s for s in sizes if s >= n)
    lo = sizes[sizes.index(hi) - 1]
    if hi == n:
        return _LF_QUANTILES[n]
    x0, x1, x = 1.0 / math.sqrt(lo), 1.0 / math.sqrt(hi), 1.0 / math.sqrt(n)
    w = (x - x0) / (x1 - x0)
    return (1.0 - w) * _LF_QUANTILES[lo] + w * _LF_QUANTILES[hi]


def lilliefors_pvalue(statistic: float, n: int) -> float:
    """P(sqrt(n) D > statistic) under the fitted-normal null, from the table."""
    q = _lilliefors_quantiles(n)
    cdf = float(np.interp(statistic, q, _LF_PROBS, left=0.0, right=1.0))
    floor = 1.0 / 100_000
    return min(max(1.0 - cdf, floor), 1.0 - floor)


def normality_test(samples: np.ndarray, name: str = "normality", seed=None) -> TestReport:
    """Lilliefors-corrected KS test against N(mean, sd^2) fitted to the data.

    Degenerate (zero-variance) input yields a degenerate report rather than
    an error.  The Anderson-Darling statistic is reported alongside for
    reference, with scipy's fitted-normal critical values in the details.
    """
    x = np.asarray(samples, dtype=float)
    if len(x) < MIN_REPLICATIONS:
        raise ConfigError(f"normality test needs >= {MIN_REPLICATIONS} samples")
    sd = x.std(ddof=1)
    if sd == 0.0 or not np.isfinite(sd):
        return TestReport(
            name=name,
            value=float("nan"),
            p_value=None,
            passed=None,
            tolerance="degenerate input",
            n=len(x),
            seed=seed,
            details={"degenerate": True},
        )
    z = np.sort((x - x.mean()) / sd)
    n = len(z)
    cdf = ndtr(z)
    d = max(
        float((np.arange(1, n + 1) / n - cdf).max()),
        float((cdf - np.arange(0, n) / n).max()),
    )
    stat = math.sqrt(n) * d
    p = lilliefors_pvalue(stat, n)
    ad = sps.anderson(x, dist="norm")
    return TestReport(
        name=name,
        value=stat,
        p_value=p,
        passed=p > 0.01,
        tolerance="Lilliefors KS, reject at p <= 0.01",
        n=n,
        seed=seed,
        details={
            "ks_d": d,
            "anderson_darling": float(ad.statistic),
            "ad_critical_5pct": float(ad.critical_values[2]),
        },
    )


# ---------------------------------------------------------------------------
# Regressions
# ---------------------------------------------------------------------------


def variance_decay_regression(
    eps: Sequence[float], variances: Sequence[float], name: str = "variance_decay"
) -> TestReport:
    """Least-squares slope of log variance against log eps.

    Passes when the slope lies in [0.85, 1.15] with R^2 >= 0.98, the
    operational form of the sqrt(eps) normalisation of level differences.
    """
    eps = np.asarray(eps, dtype=float)
    var = np.asarray(variances, dtype=float)
    if len(eps) < 4:
        raise ConfigError("variance decay regression needs at least 4 levels")
    if np.any(var <= 0):
        raise ConfigError("variance decay regression needs positive variances")
    x = np.log(eps)
    y = np.log(var)
    A = np.vstack([x, np.ones_like(x)]).T
    coef, *_ = np.linalg.lstsq(A, y, rcond=None)
    resid = y - A @ coef
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 - float(resid @ resid) / ss_tot if ss_tot > 0 else 1.0
    slope = float(coef[0])
    passed = 0.85 <= slope <= 1.15 and r2 >= 0.98
    return TestReport(
        name=name,
        value=slope,
        p_value=None,
        passed=passed,
        tolerance="slope in [0.85, 1.15], R^2 >= 0.98",
        n=len(eps),
        details={"r2": r2, "intercept": float(coef[1])},
    )


def bias_regression(
    eps: Sequence[float],
    level_means: Sequence[float],
    alpha: float,
    reference: float,
    ses: Optional[Sequence[float]] = None,
):
    """Weighted least squares of (mean_k - reference) on eps_k^alpha.

    ``level_means`` are estimates of E[F(X^k)] (cumulative through level k).
    Returns (kappa_hat, stderr, report).
    """
    eps = np.asarray(eps, dtype=float)
    means = np.asarray(level_means, dtype=float)
    if len(eps) < 3:
        raise ConfigError("bias regression needs at least 3 levels")
    x = eps**alpha
    y = means - reference
    if ses is None:
        w = np.ones_like(x)
    else:
        ses = np.asarray(ses, dtype=float)
        w = 1.0 / ses**2
    sxx = float(np.sum(w * x * x))
    kappa = float(np.sum(w * x * y) / sxx)
    if ses is None:
        dof = max(len(x) - 1, 1)
        sigma2 = float(np.sum((y - kappa * x) ** 2) / dof)
        se = math.sqrt(sigma2 / sxx)
    else:
        se = math.sqrt(1.0 / sxx)
    report = TestReport(
        name="bias_regression",
        value=kappa,
        p_value=None,
        passed=None,
        tolerance="diagnostic fit",
        n=len(eps),
        details={"stderr": se, "alpha": alpha},
    )
    return kappa, se, report


# ---------------------------------------------------------------------------
# CLT experiment
# ---------------------------------------------------------------------------


@dataclass
class CltExperiment:
    deltas: List[float]
    replications: int
    reference: float
    estimates: List[np.ndarray]  # per delta
    z: List[np.ndarray]  # per delta
    kappa_hat: List[float]
    rho_hat_sq: List[float]
    reports: List[TestReport]
    seed: int


@dataclass(frozen=True)
class _RepTask:
    model: SdeModel
    levy: LevyTriplet
    functional: FunctionalSpec
    schedule: LevelSchedule
    plan: ReplicationPlan
    scheme: str
    seed: int
    prefix: tuple
    r0: int
    r1: int
    beta: float


def _rep_block(task: _RepTask) -> list:
    out = []
    for r in range(task.r0, task.r1):
        est = run_estimator(
            task.model,
            task.levy,
            task.functional,
            task.schedule,
            task.plan,
            task.scheme,
            task.seed,
            workers=1,
            beta=task.beta,
            stream_prefix=task.prefix + (r,),
        )
        out.append(est.value)
    return out


def run_clt_experiment(
    model: SdeModel,
    levy: LevyTriplet,
    functional: FunctionalSpec,
    schedule: LevelSchedule,
    scheme: str,
    deltas: Sequence[float],
    replications: int,
    seed: int,
    reference: Optional[float] = None,
    delta_ref: Optional[float] = None,
    workers: int = 1,
    beta: float = 0.0,
) -> CltExperiment:
    """Replicate the estimator over a delta grid and standardize the errors.

    The reference E[F(X)] is either supplied (closed form) or computed from
    one high-accuracy run at ``delta_ref``; replications use disjoint
    substreams, so the experiment is reproducible for any worker count.
    """
    if replications < MIN_REPLICATIONS:
        raise ConfigError(f"CLT experiment needs >= {MIN_REPLICATIONS} replications")
    if reference is None:
        if delta_ref is None:
            raise ConfigError("need a closed-form reference or delta_ref")
        plan_ref = _plan_for(functional, schedule, delta_ref)
        ref_est = run_estimator(
            model, levy, functional, schedule, plan_ref, scheme, seed,
            workers=workers, beta=beta, stream_prefix=(9999,),
        )
        reference = ref_est.value

    estimates = []
    zs = []
    kappas = []
    rhos = []
    reports = []
    for di, delta in enumerate(deltas):
        plan = _plan_for(functional, schedule, delta)
        tasks = [
            _RepTask(
                model, levy, functional, schedule, plan, scheme, seed,
                (di,), r0, min(r0 + 8, replications), beta,
            )
            for r0 in range(0, replications, 8)
        ]
        if workers <= 1 or len(tasks) <= 1:
            blocks = [_rep_block(t) for t in tasks]
        else:
            with ProcessPoolExecutor(max_workers=workers) as ex:
                blocks = list(ex.map(_rep_block, tasks, chunksize=1))
        vals = np.array([v for b in blocks for v in b])
        z = (vals - reference) / delta
        estimates.append(vals)
        zs.append(z)
        kappas.append(float(z.mean()))
        rhos.append(float(z.var(ddof=1)))
        reports.append(normality_test(z, name=f"clt_normality_delta={delta}", seed=seed))
    return CltExperiment(
        deltas=list(deltas),
        replications=replications,
        reference=float(reference),
        estimates=estimates,
        z=zs,
        kappa_hat=kappas,
        rho_hat_sq=rhos,
        reports=reports,
        seed=seed,
    )


def _plan_for(functional: FunctionalSpec, schedule: LevelSchedule, delta: float):
    from .engine import make_plan

    return make_plan(delta, functional.alpha, schedule.M, schedule.T)
