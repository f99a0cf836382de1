"""Jump-adapted timelines and coupled (coarse, fine) path simulation.

The update times of the fine approximation are the regular grid of width
``eps_fine`` joined with all jumps above ``h_fine``; because the coarse grid
and the coarse jump set are subsets of these, the shared timeline of a pair
equals the fine path's own timeline.  Both paths are driven by one
realization of (Brownian increments, jumps, small-jump remainder), which is
what gives the level differences their small variance.

``prepare_pair`` front-loads all parameter validation and the deterministic
grid work so the per-replication cost is just draws, the kernel recursion
and functional evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from . import levy as lv
from ._kernels_py import (
    SCHEME_DIRECT,
    SCHEME_IDEAL,
    SCHEME_SHOT,
    TAG_AUX_C,
    TAG_AUX_F,
    TAG_GRID_C,
    TAG_GRID_F,
    TAG_JUMP,
    TAG_JUMP_C,
)
from .backend import run_coupled
from .errors import ConfigError, SchemeUnsupportedError
from .rng import CH_BROWNIAN, CH_JUMPS, CH_SMALL
from .sde import SdeModel

SCHEMES = (
    "idealised",
    "direct_continuous",
    "direct_constant",
    "shot_continuous",
    "shot_constant",
)

_SCHEME_KIND = {
    "idealised": SCHEME_IDEAL,
    "direct_continuous": SCHEME_DIRECT,
    "direct_constant": SCHEME_DIRECT,
    "shot_continuous": SCHEME_SHOT,
    "shot_constant": SCHEME_SHOT,
}

COARSE_UPDATE_TAGS = TAG_GRID_C | TAG_JUMP_C
FINE_UPDATE_TAGS = TAG_GRID_F | TAG_JUMP


def _int_ratio(num: float, den: float, what: str) -> int:
    r = num / den
    k = round(r)
    if k < 1 or abs(r - k) > 1e-9 * max(1.0, abs(r)):
        raise ConfigError(f"{what} must be an integer multiple, got ratio {r}")
    return int(k)


@dataclass(frozen=True)
class PairParams:
    """Discretization parameters of one level or of a (coarse, fine) pair."""

    eps_fine: float
    h_fine: float
    eps_aux_fine: float
    eps_coarse: Optional[float] = None
    h_coarse: Optional[float] = None
    eps_aux_coarse: Optional[float] = None

    @property
    def has_coarse(self) -> bool:
        return self.eps_coarse is not None

    def validate(self, T: float) -> None:
        if not self.eps_fine > 0:
            raise ConfigError("eps_fine must be positive")
        if not self.h_fine > 0:
            raise ConfigError("h_fine must be positive")
        _int_ratio(T, self.eps_fine, "T / eps_fine")
        _int_ratio(self.eps_aux_fine, self.eps_fine, "eps_aux_fine / eps_fine")
        if self.has_coarse:
            m = _int_ratio(self.eps_coarse, self.eps_fine, "eps_coarse / eps_fine")
            if m < 2:
                raise ConfigError("eps_coarse must be at least 2 * eps_fine")
            _int_ratio(self.eps_aux_coarse, self.eps_coarse, "eps_aux_coarse / eps_coarse")
            if self.h_coarse < self.h_fine:
                raise ConfigError("h_fine must not exceed h_coarse")


@dataclass
class UpdateTimeline:
    """Merged, tagged update times of a pair, including t=0 and t=T."""

    times: np.ndarray  # (N+1,)
    tags: np.ndarray  # (N+1,) uint8; tags[0] covers the origin
    jumps: np.ndarray  # (N+1,) jump size at each point, 0 where none

    @property
    def n_intervals(self) -> int:
        return len(self.times) - 1

    @cached_property
    def dt(self) -> np.ndarray:
        return np.diff(self.times)

    @cached_property
    def n_coarse_intervals(self) -> int:
        return int(np.count_nonzero(self.tags[1:] & COARSE_UPDATE_TAGS))


_GRID_CACHE: dict = {}


def _grid_arrays(T: float, n_fine: int, ratio: int, jf: int, jc: int):
    """Tagged regular grid plus cached derived arrays (read-only, shared)."""
    key = (float(T), n_fine, ratio, jf, jc)
    hit = _GRID_CACHE.get(key)
    if hit is not None:
        return hit
    idx = np.arange(n_fine + 1)
    times = idx * (T / n_fine)
    times[-1] = T
    tags = np.full(n_fine + 1, TAG_GRID_F, dtype=np.uint8)
    tags[idx % jf == 0] |= TAG_AUX_F
    if ratio > 0:
        tags[idx % ratio == 0] |= TAG_GRID_C
        tags[idx % (ratio * jc) == 0] |= TAG_AUX_C
    zeros = np.zeros(n_fine + 1)
    dt = np.diff(times)
    tags1 = np.ascontiguousarray(tags[1:])
    zeros1 = np.zeros(n_fine)
    sqrt_dt = np.sqrt(dt)
    for arr in (times, tags, zeros, dt, tags1, zeros1, sqrt_dt):
        arr.setflags(write=False)
    if len(_GRID_CACHE) > 256:
        _GRID_CACHE.clear()
    entry = (times, tags, zeros, dt, tags1, zeros1, sqrt_dt)
    _GRID_CACHE[key] = entry
    return entry


def build_timeline(
    levy: lv.LevyTriplet, params: PairParams, T: float, rng
) -> UpdateTimeline:
    """Sample jumps above h_fine and merge them into the tagged grid.

    Jumps landing exactly on a grid time (a measure-zero event at float
    resolution) are kept as a second entry after the grid point, so replay
    order is deterministic.
    """
    return prepare_pair_grid(levy, params, T).sample_timeline(rng)


@dataclass
class _PreparedGrid:
    """Validated grid structure shared by every replication of one pair."""

    levy: lv.LevyTriplet
    params: PairParams
    T: float
    n_fine: int
    grid_times: np.ndarray
    grid_tags: np.ndarray
    grid_zeros: np.ndarray
    grid_dt: np.ndarray
    grid_tags1: np.ndarray  # tags[1:], contiguous
    grid_zeros1: np.ndarray
    grid_sqrt_dt: np.ndarray
    jump_rate: float  # tail mass above h_fine

    def sample_timeline(self, rng) -> UpdateTimeline:
        p = self.params
        if self.jump_rate > 0.0:
            batch = lv.sample_big_jumps(self.levy.measure, p.h_fine, self.T, rng)
        else:
            batch = None
        if batch is None or len(batch.times) == 0:
            tl = UpdateTimeline(
                times=self.grid_times, tags=self.grid_tags, jumps=self.grid_zeros
            )
            tl.__dict__["dt"] = self.grid_dt  # reuse cached diff
            return tl
        nj = len(batch.times)
        jtags = np.full(nj, TAG_JUMP, dtype=np.uint8)
        if p.has_coarse:
            jtags[np.abs(batch.sizes) > p.h_coarse] |= TAG_JUMP_C
        all_times = np.concatenate([self.grid_times, batch.times])
        all_tags = np.concatenate([self.grid_tags, jtags])
        all_jumps = np.concatenate([self.grid_zeros, batch.sizes])
        order = np.argsort(all_times, kind="stable")  # grid entry first on ties
        return UpdateTimeline(
            times=all_times[order], tags=all_tags[order], jumps=all_jumps[order]
        )


def prepare_pair_grid(levy: lv.LevyTriplet, params: PairParams, T: float) -> _PreparedGrid:
    params.validate(T)
    n_fine = _int_ratio(T, params.eps_fine, "T / eps_fine")
    jf = _int_ratio(params.eps_aux_fine, params.eps_fine, "aux ratio")
    if params.has_coarse:
        ratio = _int_ratio(params.eps_coarse, params.eps_fine, "eps ratio")
        jc = _int_ratio(params.eps_aux_coarse, params.eps_coarse, "coarse aux ratio")
    else:
        ratio, jc = 0, 1
    times, tags, zeros, dt, tags1, zeros1, sqrt_dt = _grid_arrays(T, n_fine, ratio, jf, jc)
    return _PreparedGrid(
        levy=levy,
        params=params,
        T=T,
        n_fine=n_fine,
        grid_times=times,
        grid_tags=tags,
        grid_zeros=zeros,
        grid_dt=dt,
        grid_tags1=tags1,
        grid_zeros1=zeros1,
        grid_sqrt_dt=sqrt_dt,
        jump_rate=levy.measure.tail_mass(params.h_fine),
    )


@dataclass
class PathSkeleton:
    """One approximate path observed at the shared timeline points.

    ``pre`` holds left limits, ``post`` the values at each point (they differ
    at this path's jump and remainder-application times).  ``update_mask``
    marks the path's own update times; functional evaluation only looks
    there.  ``cont_increments`` and ``driver_jumps`` reproduce the driver the
    path actually consumed, so the recursion is replayable from storage.
    """

    times: np.ndarray
    tags: np.ndarray
    pre: np.ndarray
    post: np.ndarray
    update_mask: np.ndarray
    cont_increments: np.ndarray  # per interval, excluding point masses
    driver_jumps: np.ndarray  # per point, jumps entering this path's driver
    drift: float
    h: float
    eps: float
    scheme: str
    small_exact: bool
    role: str = "fine"  # which update mask applies: "fine" or "coarse"

    @property
    def T(self) -> float:
        return float(self.times[-1])

    @cached_property
    def update_indices(self) -> np.ndarray:
        return np.nonzero(self.update_mask)[0]

    @cached_property
    def _last_update(self) -> np.ndarray:
        idx = np.where(self.update_mask, np.arange(len(self.times)), 0)
        return np.maximum.accumulate(idx)

    def value_at(self, t: float) -> float:
        """Value at the last own update time <= t (both scheme variants)."""
        if t < 0.0 or t > self.T:
            raise ValueError(f"time {t} outside [0, {self.T}]")
        p = int(np.searchsorted(self.times, t, side="right")) - 1
        return float(self.post[self._last_update[p]])

    @property
    def terminal(self) -> float:
        return float(self.post[-1])


@dataclass
class CoupledPaths:
    """Coarse and fine skeletons driven by one realization of the noise."""

    fine: PathSkeleton
    coarse: Optional[PathSkeleton]
    timeline: UpdateTimeline
    scheme: str

    def to_rows(self):
        """Debug dump rows (time, tag, coarse_pre, coarse_post, fine_pre, fine_post)."""
        n = len(self.timeline.times)
        cpre = self.coarse.pre if self.coarse is not None else np.full(n, np.nan)
        cpost = self.coarse.post if self.coarse is not None else np.full(n, np.nan)
        for i in range(n):
            yield (
                self.timeline.times[i],
                int(self.timeline.tags[i]),
                cpre[i],
                cpost[i],
                self.fine.pre[i],
                self.fine.post[i],
            )


def replay_marginal(paths: CoupledPaths, t: float):
    """(coarse_value, fine_value) at time t under the marginal convention."""
    if paths.coarse is None:
        raise ValueError("paths carry no coarse component")
    return paths.coarse.value_at(t), paths.fine.value_at(t)


class PairContext:
    """Everything invariant across replications of one coupled pair."""

    def __init__(
        self, model: SdeModel, levy: lv.LevyTriplet, params: PairParams, scheme: str
    ):
        if scheme not in _SCHEME_KIND:
            raise ConfigError(f"unknown scheme {scheme!r}; known: {SCHEMES}")
        self.model = model
        self.levy = levy
        self.params = params
        self.scheme = scheme
        self.kind = _SCHEME_KIND[scheme]
        self.grid = prepare_pair_grid(levy, params, model.T)
        measure = levy.measure

        self.small_needed = self.kind in (SCHEME_IDEAL, SCHEME_DIRECT)
        self.small_m2 = measure.m2_below(params.h_fine)
        self.small_exact = self.small_m2 == 0.0 or measure.small_jumps_exact(
            params.h_fine
        )
        if self.kind == SCHEME_IDEAL and not self.small_exact:
            raise SchemeUnsupportedError(
                "idealised scheme needs exactly simulable increments; "
                "the sub-threshold restriction has infinite activity"
            )

        self.bf = levy.compensated_drift(params.h_fine)
        if params.has_coarse:
            if self.kind == SCHEME_IDEAL:
                self.bc = self.bf
            else:
                self.bc = levy.compensated_drift(params.h_coarse)
            band_m1 = 0.0
            if params.h_coarse > params.h_fine:
                band_m1 = measure.m1_above(params.h_fine) - measure.m1_above(
                    params.h_coarse
                )
            self.band_comp = band_m1 * params.eps_aux_coarse
        else:
            self.bc = self.bf
            self.band_comp = 0.0

    def simulate(self, stream, backend=None) -> CoupledPaths:
        params = self.params
        timeline = self.grid.sample_timeline(stream.generator(CH_JUMPS))
        dt = timeline.dt
        n = len(dt)
        if timeline.jumps is self.grid.grid_zeros:  # cached no-jump fast path
            jumps = self.grid.grid_zeros1
            tags = self.grid.grid_tags1
            sqrt_dt = self.grid.grid_sqrt_dt
        else:
            # point-aligned slices are views; kernels need contiguous buffers
            jumps = np.ascontiguousarray(timeline.jumps[1:])
            tags = np.ascontiguousarray(timeline.tags[1:])
            sqrt_dt = np.sqrt(dt)

        dW = stream.generator(CH_BROWNIAN).standard_normal(n)
        dW *= sqrt_dt
        if self.small_needed and self.small_m2 > 0.0:
            srem = lv.small_jump_increments(
                self.levy.measure, params.h_fine, dt, stream.generator(CH_SMALL)
            )
            srem = np.ascontiguousarray(srem)
        else:
            srem = np.zeros(n)

        pre_f, post_f, pre_c, post_c = run_coupled(
            np.ascontiguousarray(dt),
            dW,
            srem,
            jumps,
            tags,
            self.kind,
            self.model.coefficient,
            self.model.x0,
            self.levy.sigma,
            self.bf,
            self.bc,
            self.band_comp,
            1 if params.has_coarse else 0,
            backend=backend,
        )

        point_tags = timeline.tags
        fine_mask = (point_tags & FINE_UPDATE_TAGS) != 0
        fine_mask[0] = True
        cont_f = self.bf * dt + self.levy.sigma * dW
        if self.kind == SCHEME_IDEAL:
            cont_f = cont_f + srem

        fine = PathSkeleton(
            times=timeline.times,
            tags=point_tags,
            pre=pre_f,
            post=post_f,
            update_mask=fine_mask,
            cont_increments=cont_f,
            driver_jumps=timeline.jumps,
            drift=self.bf,
            h=params.h_fine,
            eps=params.eps_fine,
            scheme=self.scheme,
            small_exact=self.small_exact,
            role="fine",
        )

        coarse = None
        if params.has_coarse:
            coarse_mask = (point_tags & COARSE_UPDATE_TAGS) != 0
            coarse_mask[0] = True
            cont_c = self.bc * dt + self.levy.sigma * dW
            if self.kind == SCHEME_IDEAL:
                cont_c = cont_c + srem
                driver_jumps_c = timeline.jumps
            else:
                driver_jumps_c = np.where(
                    (point_tags & TAG_JUMP_C) != 0, timeline.jumps, 0.0
                )
            coarse = PathSkeleton(
                times=timeline.times,
                tags=point_tags,
                pre=pre_c,
                post=post_c,
                update_mask=coarse_mask,
                cont_increments=cont_c,
                driver_jumps=driver_jumps_c,
                drift=self.bc,
                h=params.h_coarse,
                eps=params.eps_coarse,
                scheme=self.scheme,
                small_exact=self.small_exact,
                role="coarse",
            )

        return CoupledPaths(fine=fine, coarse=coarse, timeline=timeline, scheme=self.scheme)


def simulate_coupled(
    model: SdeModel,
    levy: lv.LevyTriplet,
    params: PairParams,
    scheme: str,
    stream,
    backend=None,
) -> CoupledPaths:
    """Simulate a coupled pair (or a single level when params has no coarse).

    The three randomness channels (jumps, Brownian, small-jump remainder) are
    drawn from fixed substreams of ``stream``, and all draws depend only on
    the fine parameters; simulating the fine level alone therefore consumes
    exactly the same randomness and reproduces the fine skeleton bit for bit.
    """
    return PairContext(model, levy, params, scheme).simulate(stream, backend=backend)


def simulate_single(
    model: SdeModel,
    levy: lv.LevyTriplet,
    eps: float,
    h: float,
    eps_aux: float,
    scheme: str,
    stream,
    backend=None,
) -> PathSkeleton:
    """One level alone; same draws as the fine path of any pair refining it."""
    params = PairParams(eps_fine=eps, h_fine=h, eps_aux_fine=eps_aux)
    return simulate_coupled(model, levy, params, scheme, stream, backend=backend).fine
