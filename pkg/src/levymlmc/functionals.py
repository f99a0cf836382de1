"""Payoff functionals F(x) = f(Ax) and F(x) = f(sup x) on path skeletons.

Linear maps combine marginals and integrals against finite signed measures
(atoms plus a piecewise-constant density).  Evaluation is piecewise-constant
quadrature over the skeleton's own update times, which is exact for the
piecewise-constant scheme variants and is the documented convention for the
continuous ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Callable, Optional, Tuple

import numpy as np

from .errors import ConfigError
from .paths import PathSkeleton


# ---------------------------------------------------------------------------
# Smooth outer functions f with gradients
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmoothFn:
    """f: R^dim -> R with user-supplied gradient and differentiability set.

    Packaged instances are built from module-level functions so functional
    specs pickle into worker processes.
    """

    dim: int
    value: Callable[[np.ndarray], float]
    grad: Callable[[np.ndarray], np.ndarray]
    differentiable: Callable[[np.ndarray], bool]
    name: str


def _always(z):
    return True


def _id_value(z):
    return float(z[0])


def _id_grad(z):
    return np.array([1.0])


def _call_value(z, k):
    return float(max(z[0] - k, 0.0))


def _call_grad(z, k):
    return np.array([1.0 if z[0] > k else 0.0])


def _call_diff(z, k):
    return z[0] != k


def _sum_value(z):
    return float(np.sum(z))


def _sum_grad(z, d):
    return np.ones(d)


def identity_fn() -> SmoothFn:
    return SmoothFn(
        dim=1, value=_id_value, grad=_id_grad, differentiable=_always, name="identity"
    )


def call_fn(strike: float) -> SmoothFn:
    """European call payoff max(z - K, 0); kink at K flagged nondifferentiable."""
    k = float(strike)
    return SmoothFn(
        dim=1,
        value=partial(_call_value, k=k),
        grad=partial(_call_grad, k=k),
        differentiable=partial(_call_diff, k=k),
        name=f"call({strike})",
    )


def sum_fn(dim: int) -> SmoothFn:
    return SmoothFn(
        dim=dim,
        value=_sum_value,
        grad=partial(_sum_grad, d=dim),
        differentiable=_always,
        name=f"sum{dim}",
    )


def validate_gradient(f: SmoothFn, points: np.ndarray, rtol: float = 1e-5):
    """Central-difference check of f.grad on probe points.

    Returns (max relative error over checked points, n_checked, n_flagged);
    flagged (nondifferentiable) probes are skipped.
    """
    points = np.atleast_2d(points)
    worst = 0.0
    checked = 0
    flagged = 0
    for z in points:
        if not f.differentiable(z):
            flagged += 1
            continue
        g = np.asarray(f.grad(z), dtype=float)
        fd = np.empty_like(g)
        for j in range(f.dim):
            h = 1e-6 * max(1.0, abs(z[j]))
            zp = z.copy()
            zm = z.copy()
            zp[j] += h
            zm[j] -= h
            fd[j] = (f.value(zp) - f.value(zm)) / (2.0 * h)
        scale = max(np.max(np.abs(g)), 1e-12)
        worst = max(worst, float(np.max(np.abs(fd - g)) / scale))
        checked += 1
    if checked and worst > rtol:
        raise ConfigError(
            f"gradient of {f.name} disagrees with finite differences "
            f"(max rel err {worst:.2e} > {rtol})"
        )
    return worst, checked, flagged


# ---------------------------------------------------------------------------
# Linear maps A
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Marginal:
    t: float


@dataclass(frozen=True)
class IntegralComponent:
    """Finite signed measure: point atoms plus a piecewise-constant density."""

    atoms: Tuple[Tuple[float, float], ...] = ()
    density: Tuple[Tuple[float, float, float], ...] = ()  # (t0, t1, value)

    def density_primitive(self, t: np.ndarray) -> np.ndarray:
        """Integral of the density from 0 to each t (piecewise linear)."""
        out = np.zeros_like(np.asarray(t, dtype=float))
        for a, b, v in self.density:
            out = out + v * np.clip(t - a, 0.0, b - a)
        return out


@dataclass(frozen=True)
class LinearMapSpec:
    components: Tuple[object, ...]

    @property
    def dim(self) -> int:
        return len(self.components)


_WEIGHT_CACHE: dict = {}


def component_weights(component, skeleton: PathSkeleton) -> np.ndarray:
    """Weights w over timeline points with A_j(skeleton) = w . post.

    Only the skeleton's own update points receive weight; marginals and atoms
    follow the last-update-before convention, density mass of each interval
    between consecutive update times goes to its left endpoint.  Weights are
    cached against the timeline arrays, which the no-jump fast path shares
    across replications.
    """
    key = (component, id(skeleton.times), id(skeleton.tags), skeleton.role)
    hit = _WEIGHT_CACHE.get(key)
    if (
        hit is not None
        and hit[0] is skeleton.times
        and hit[1] is skeleton.tags
    ):
        return hit[2]
    w = _component_weights(component, skeleton)
    w.setflags(write=False)
    if len(_WEIGHT_CACHE) > 1024:
        _WEIGHT_CACHE.clear()
    _WEIGHT_CACHE[key] = (skeleton.times, skeleton.tags, w)
    return w


def _component_weights(component, skeleton: PathSkeleton) -> np.ndarray:
    upd = skeleton.update_indices
    tau = skeleton.times[upd]
    w = np.zeros(len(skeleton.times))
    if isinstance(component, Marginal):
        t = component.t
        if t < 0.0 or t > skeleton.T:
            raise ValueError(f"marginal time {t} outside [0, {skeleton.T}]")
        j = int(np.searchsorted(tau, t, side="right")) - 1
        w[upd[j]] += 1.0
        return w
    if isinstance(component, IntegralComponent):
        prim = component.density_primitive(tau)
        mass = np.diff(prim)
        np.add.at(w, upd[:-1], mass)
        for t, m in component.atoms:
            if t < 0.0 or t > skeleton.T:
                raise ValueError(f"atom time {t} outside [0, {skeleton.T}]")
            j = int(np.searchsorted(tau, t, side="right")) - 1
            w[upd[j]] += m
        return w
    raise TypeError(f"unknown map component {component!r}")


def eval_linear(map_spec: LinearMapSpec, skeleton: PathSkeleton) -> np.ndarray:
    return np.array(
        [component_weights(c, skeleton) @ skeleton.post for c in map_spec.components]
    )


def eval_supremum(skeleton: PathSkeleton) -> Tuple[float, float]:
    """(sup over observed pre/post values at update times, earliest argmax time)."""
    upd = skeleton.update_indices
    best = np.maximum(skeleton.pre[upd], skeleton.post[upd])
    i = int(np.argmax(best))
    return float(best[i]), float(skeleton.times[upd[i]])


# ---------------------------------------------------------------------------
# Functional specification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FunctionalSpec:
    """F(x) = f(Ax) for linear A, or F(x) = f(sup x)."""

    kind: str  # "linear" | "supremum"
    f: SmoothFn
    map: Optional[LinearMapSpec] = None
    alpha: float = 1.0
    name: str = ""

    def __post_init__(self):
        if self.kind not in ("linear", "supremum"):
            raise ConfigError(f"unknown functional kind {self.kind!r}")
        if self.kind == "linear":
            if self.map is None:
                raise ConfigError("linear functional needs a map")
            if self.map.dim != self.f.dim:
                raise ConfigError("map dimension does not match f")
        elif self.f.dim != 1:
            raise ConfigError("supremum functional needs scalar f")
        if not self.alpha >= 0.5:
            raise ConfigError("bias order alpha must be at least 1/2")

    def evaluate(self, skeleton: PathSkeleton) -> float:
        if self.kind == "linear":
            return self.f.value(eval_linear(self.map, skeleton))
        sup, _ = eval_supremum(skeleton)
        return self.f.value(np.array([sup]))


def eval_functional(spec: FunctionalSpec, skeleton: PathSkeleton) -> float:
    return spec.evaluate(skeleton)


def gradient_at(spec: FunctionalSpec, point: np.ndarray):
    """(gradient, ok); ok=False flags a point outside the differentiability set."""
    z = np.atleast_1d(np.asarray(point, dtype=float))
    ok = bool(spec.f.differentiable(z))
    return np.asarray(spec.f.grad(z), dtype=float), ok


# packaged payoffs ----------------------------------------------------------


def identity_marginal(T: float, alpha: float = 1.0) -> FunctionalSpec:
    return FunctionalSpec(
        kind="linear",
        f=identity_fn(),
        map=LinearMapSpec((Marginal(T),)),
        alpha=alpha,
        name="identity_marginal",
    )


def european_call(T: float, strike: float, alpha: float = 1.0) -> FunctionalSpec:
    return FunctionalSpec(
        kind="linear",
        f=call_fn(strike),
        map=LinearMapSpec((Marginal(T),)),
        alpha=alpha,
        name="european_call",
    )


def integral_average(T: float, alpha: float = 1.0) -> FunctionalSpec:
    comp = IntegralComponent(density=((0.0, T, 1.0 / T),))
    return FunctionalSpec(
        kind="linear",
        f=identity_fn(),
        map=LinearMapSpec((comp,)),
        alpha=alpha,
        name="integral_average",
    )


def asian_call(T: float, strike: float, alpha: float = 1.0) -> FunctionalSpec:
    comp = IntegralComponent(density=((0.0, T, 1.0 / T),))
    return FunctionalSpec(
        kind="linear",
        f=call_fn(strike),
        map=LinearMapSpec((comp,)),
        alpha=alpha,
        name="asian_call",
    )


def terminal_plus_average(T: float, alpha: float = 1.0) -> FunctionalSpec:
    comp = IntegralComponent(density=((0.0, T, 1.0),))
    return FunctionalSpec(
        kind="linear",
        f=sum_fn(2),
        map=LinearMapSpec((Marginal(T), comp)),
        alpha=alpha,
        name="terminal_plus_average",
    )


def lookback(alpha: float = 1.0) -> FunctionalSpec:
    return FunctionalSpec(kind="supremum", f=identity_fn(), alpha=alpha, name="lookback")


def lookback_call(strike: float, alpha: float = 1.0) -> FunctionalSpec:
    return FunctionalSpec(
        kind="supremum", f=call_fn(strike), alpha=alpha, name="lookback_call"
    )
