"""Multilevel estimator: schedules, replication plans, statistics, runner.

Level k of the hierarchy uses ``eps_k = M^-k T``; the estimator sums the
level-1 plain MC mean and the coupled-difference means of levels 2..L, with
the depth L and the replication counts driven by the target precision.  Work
is split into fixed blocks of replication indices and block statistics are
merged in block order, so results are bit-identical for any worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from .errors import ConfigError, InfeasibleScheduleError
from .functionals import FunctionalSpec
from .levy import LevyTriplet, ZeroMeasure
from .paths import PairContext, PairParams
from .rng import RandomStream
from .sde import SdeModel

BLOCK_SIZE = 2048


# ---------------------------------------------------------------------------
# Schedules
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LevelParams:
    k: int
    eps: float
    h: float
    eps_prime: float


@dataclass(frozen=True)
class LevelSchedule:
    M: int
    T: float
    theta: float
    strategy: str
    levels: tuple

    @property
    def depth(self) -> int:
        return len(self.levels)

    def level(self, k: int) -> LevelParams:
        if not 1 <= k <= self.depth:
            raise ConfigError(f"level {k} outside schedule depth {self.depth}")
        return self.levels[k - 1]

    def single_params(self, k: int) -> PairParams:
        lp = self.level(k)
        return PairParams(eps_fine=lp.eps, h_fine=lp.h, eps_aux_fine=lp.eps_prime)

    def pair_params(self, k: int) -> PairParams:
        """Parameters of the coupled pair (k-1, k)."""
        fine = self.level(k)
        coarse = self.level(k - 1)
        return PairParams(
            eps_fine=fine.eps,
            h_fine=fine.h,
            eps_aux_fine=fine.eps_prime,
            eps_coarse=coarse.eps,
            h_coarse=coarse.h,
            eps_aux_coarse=coarse.eps_prime,
        )


def _solve_theta_matched(measure, target: float) -> float:
    """h with tail_mass(h) = target, by bisection on a bracketing interval."""
    probe = measure.tail_mass(1e-12)
    if probe < target:
        raise InfeasibleScheduleError(
            f"requested tail mass {target} exceeds available mass {probe}"
        )
    h_hi = 1.0
    for _ in range(200):
        if measure.tail_mass(h_hi) <= target:
            break
        h_hi *= 2.0
    h_lo = h_hi
    while measure.tail_mass(h_lo) < target:
        h_lo /= 2.0
        if h_lo < 1e-300:
            raise InfeasibleScheduleError("tail mass bracket collapsed")
    for _ in range(120):
        mid = 0.5 * (h_lo + h_hi)
        if measure.tail_mass(mid) >= target:
            h_lo = mid
        else:
            h_hi = mid
    h = 0.5 * (h_lo + h_hi)
    got = measure.tail_mass(h)
    if abs(got - target) > 1e-6 * max(target, 1e-300):
        raise InfeasibleScheduleError(
            f"tail mass is not invertible near {target} (closest {got})"
        )
    return h


def make_schedule(
    levy: LevyTriplet,
    M: int,
    T: float,
    theta: float,
    K_max: int,
    strategy: str,
    gamma: Optional[float] = None,
    eps_prime_factor: int = 1,
) -> LevelSchedule:
    """Level parameters eps_k = M^-k T with h_k from the chosen strategy.

    ``theta_matched`` solves tail_mass(h_k) = theta/eps_k per level;
    ``power`` sets h_k = eps_k**gamma (validation flags schedules whose
    ratios do not decay, so a deliberately bad gamma is allowed here).
    """
    if not (isinstance(M, (int, np.integer)) and M >= 2):
        raise ConfigError("M must be an integer >= 2")
    if theta < 0:
        raise ConfigError("theta must be nonnegative")
    if K_max < 1:
        raise ConfigError("K_max must be at least 1")
    if eps_prime_factor < 1 or int(eps_prime_factor) != eps_prime_factor:
        raise ConfigError("eps_prime_factor must be a positive integer")

    levels = []
    for k in range(1, K_max + 1):
        eps = T * float(M) ** (-k)
        if strategy == "theta_matched":
            if theta <= 0:
                raise ConfigError("theta_matched strategy requires theta > 0")
            h = _solve_theta_matched(levy.measure, theta / eps)
        elif strategy == "power":
            if gamma is None or gamma <= 0:
                raise ConfigError("power strategy requires gamma > 0")
            h = eps**gamma
        else:
            raise ConfigError(f"unknown schedule strategy {strategy!r}")
        levels.append(LevelParams(k=k, eps=eps, h=h, eps_prime=eps_prime_factor * eps))
    return LevelSchedule(
        M=int(M), T=T, theta=theta, strategy=strategy, levels=tuple(levels)
    )


_DECAY_RATIOS = ("r_h", "r3a", "r3b", "r4", "rdrift")


@dataclass
class ScheduleReport:
    rows: List[dict]
    flagged: dict
    theta: float

    @property
    def clean(self) -> bool:
        return not any(self.flagged.values())


def validate_schedule(schedule: LevelSchedule, levy: LevyTriplet) -> ScheduleReport:
    """Finite-level diagnostics for the schedule conditions.

    Reports, per level: the big-jump rate r2 = tail_mass(h) * eps (targets
    theta), and the ratios that must decay for the implementable schemes to
    inherit the idealised limit (threshold size, remainder-lag, truncation
    and drift-compensation ratios).  A decay ratio that is nondecreasing
    over the last three levels is flagged.
    """
    measure = levy.measure
    trivial = isinstance(measure, ZeroMeasure) or measure.total_m2() == 0.0
    rows = []
    for lp in schedule.levels:
        if trivial:
            r2 = r_h = r3a = r3b = r4 = rdrift = 0.0
        else:
            tail = measure.tail_mass(lp.h)
            m2 = measure.m2_below(lp.h)
            m1 = measure.m1_above(lp.h)
            log_term = math.log(1.0 + 1.0 / lp.eps_prime) ** 2
            r2 = tail * lp.eps
            r_h = lp.h / math.sqrt(lp.eps)
            r3a = lp.eps_prime * m2 * log_term / lp.eps
            r3b = lp.h**2 * log_term / lp.eps
            r4 = m2 / lp.eps
            rdrift = lp.eps * m1**2
        rows.append(
            {
                "k": lp.k,
                "eps": lp.eps,
                "h": lp.h,
                "eps_prime": lp.eps_prime,
                "r2": r2,
                "r_h": r_h,
                "r3a": r3a,
                "r3b": r3b,
                "r4": r4,
                "rdrift": rdrift,
            }
        )
    flagged = {}
    for name in _DECAY_RATIOS:
        series = [row[name] for row in rows]
        if len(series) < 3:
            flagged[name] = False
            continue
        tail3 = series[-3:]
        flagged[name] = not all(v == 0.0 for v in tail3) and (
            tail3[0] <= tail3[1] <= tail3[2]
        )
    return ScheduleReport(rows=rows, flagged=flagged, theta=schedule.theta)


# ---------------------------------------------------------------------------
# Replication plans
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReplicationPlan:
    delta: float
    L: int
    n: tuple

    def count(self, k: int) -> int:
        return self.n[k - 1]


def make_plan(delta: float, alpha: float, M: int, T: float) -> ReplicationPlan:
    """Depth and replication counts of the precision-delta estimator."""
    if not 0.0 < delta < 1.0:
        raise ConfigError("delta must lie in (0, 1)")
    if not alpha >= 0.5:
        raise ConfigError("alpha must be at least 1/2")
    if M < 2:
        raise ConfigError("M must be at least 2")
    L = max(1, math.ceil(math.log(1.0 / delta) / (alpha * math.log(M))))
    n = tuple(
        max(1, math.ceil(delta**-2 * L * (T * float(M) ** (-(k - 1)))))
        for k in range(1, L + 1)
    )
    return ReplicationPlan(delta=delta, L=L, n=n)


# ---------------------------------------------------------------------------
# Statistics accumulators
# ---------------------------------------------------------------------------


@dataclass
class LevelStats:
    """Streaming mean/variance of level samples plus simulated cost units."""

    k: int
    count: int = 0
    mean: float = 0.0
    m2: float = 0.0
    cost: float = 0.0

    def add(self, x: float, cost: float = 0.0) -> None:
        self.count += 1
        delta = x - self.mean
        self.mean += delta / self.count
        self.m2 += delta * (x - self.mean)
        self.cost += cost

    def merge(self, other: "LevelStats") -> None:
        if other.count == 0:
            return
        if self.count == 0:
            self.count = other.count
            self.mean = other.mean
            self.m2 = other.m2
            self.cost += other.cost
            return
        n1, n2 = self.count, other.count
        total = n1 + n2
        delta = other.mean - self.mean
        self.mean += delta * n2 / total
        self.m2 += other.m2 + delta * delta * n1 * n2 / total
        self.count = total
        self.cost += other.cost

    @property
    def variance(self) -> float:
        return self.m2 / (self.count - 1) if self.count > 1 else 0.0


@dataclass
class MlmcEstimate:
    value: float
    stderr: float
    delta: float
    L: int
    levels: List[LevelStats]
    total_cost: float
    scheme: str
    seed: int
    small_jump_fallback: bool


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _BlockTask:
    model: SdeModel
    levy: LevyTriplet
    functional: FunctionalSpec
    params: PairParams
    scheme: str
    seed: int
    prefix: tuple
    k: int
    i0: int
    i1: int
    beta: float


def _run_block(task: _BlockTask) -> LevelStats:
    stats = LevelStats(k=task.k)
    ctx = PairContext(task.model, task.levy, task.params, task.scheme)
    base = RandomStream(task.seed)
    for i in range(task.i0, task.i1):
        stream = base.child(*task.prefix, task.k, i)
        paths = ctx.simulate(stream)
        y = task.functional.evaluate(paths.fine)
        n_int = paths.timeline.n_intervals
        cost = float(n_int)
        if paths.coarse is not None:
            y -= task.functional.evaluate(paths.coarse)
            cost += task.beta * (n_int - paths.timeline.n_coarse_intervals)
        stats.add(y, cost)
    return stats


def _run_tasks(tasks: Sequence[_BlockTask], workers: int) -> List[LevelStats]:
    if workers <= 1 or len(tasks) <= 1:
        return [_run_block(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(_run_block, tasks, chunksize=1))


def _level_tasks(model, levy, functional, params, scheme, seed, prefix, k, n, beta):
    return [
        _BlockTask(model, levy, functional, params, scheme, seed, prefix, k, i0, min(i0 + BLOCK_SIZE, n), beta)
        for i0 in range(0, n, BLOCK_SIZE)
    ]


def run_estimator(
    model: SdeModel,
    levy: LevyTriplet,
    functional: FunctionalSpec,
    schedule: LevelSchedule,
    plan: ReplicationPlan,
    scheme: str,
    seed: int,
    workers: int = 1,
    beta: float = 0.0,
    stream_prefix: tuple = (),
) -> MlmcEstimate:
    """Run the multilevel estimator; deterministic in (seed, config) for any workers."""
    if plan.L > schedule.depth:
        raise ConfigError(
            f"plan depth {plan.L} exceeds schedule depth {schedule.depth}"
        )
    tasks = []
    for k in range(1, plan.L + 1):
        params = schedule.single_params(1) if k == 1 else schedule.pair_params(k)
        tasks.extend(
            _level_tasks(
                model, levy, functional, params, scheme, seed, stream_prefix, k,
                plan.count(k), beta,
            )
        )
    partials = _run_tasks(tasks, workers)

    per_level = {k: LevelStats(k=k) for k in range(1, plan.L + 1)}
    for part in partials:  # block submission order fixes the merge order
        per_level[part.k].merge(part)
    levels = [per_level[k] for k in range(1, plan.L + 1)]

    value = float(sum(s.mean for s in levels))
    var = float(sum(s.variance / s.count for s in levels if s.count > 0))
    total_cost = float(sum(s.cost for s in levels))
    h_min = min(lp.h for lp in schedule.levels[: plan.L])
    fallback = (
        scheme.startswith("direct")
        and levy.measure.m2_below(h_min) > 0.0
        and not levy.measure.small_jumps_exact(h_min)
    )
    return MlmcEstimate(
        value=value,
        stderr=math.sqrt(var),
        delta=plan.delta,
        L=plan.L,
        levels=levels,
        total_cost=total_cost,
        scheme=scheme,
        seed=seed,
        small_jump_fallback=fallback,
    )


def level_profile(
    model: SdeModel,
    levy: LevyTriplet,
    functional: FunctionalSpec,
    schedule: LevelSchedule,
    scheme: str,
    n_pilot: int,
    seed: int,
    levels: Optional[Sequence[int]] = None,
    workers: int = 1,
    beta: float = 0.0,
    stream_prefix: tuple = (),
) -> List[LevelStats]:
    """Pilot mean/variance of the coupled differences at the requested levels."""
    if n_pilot < 2:
        raise ConfigError("n_pilot must be at least 2")
    ks = list(levels) if levels is not None else list(range(2, schedule.depth + 1))
    tasks = []
    for k in ks:
        params = schedule.single_params(1) if k == 1 else schedule.pair_params(k)
        tasks.extend(
            _level_tasks(
                model, levy, functional, params, scheme, seed, stream_prefix, k,
                n_pilot, beta,
            )
        )
    partials = _run_tasks(tasks, workers)
    per_level = {k: LevelStats(k=k) for k in ks}
    for part in partials:
        per_level[part.k].merge(part)
    return [per_level[k] for k in ks]
