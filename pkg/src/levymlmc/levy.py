"""Square-integrable Levy drivers: triplets, jump measures and samplers.

A driver is a triplet ``(b, sigma^2, nu)``.  The measure object answers the
analytic queries every scheme needs (tail mass above a threshold, truncated
second moment below it, partial first moments) and produces exact samples of
jumps above a threshold.  Jumps below the threshold are handled as a
compensated remainder: exactly when the restricted measure is finite, and by
a variance-matched Gaussian otherwise (the fallback is flagged so runs can
report it).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import ndtr

from .errors import ConfigError

_SQRT2PI = math.sqrt(2.0 * math.pi)


def _phi(z):
    return np.exp(-0.5 * z * z) / _SQRT2PI


def _check_h(h: float) -> float:
    if not h > 0.0:
        raise ValueError(f"jump threshold must be positive, got {h}")
    return float(h)


# ---------------------------------------------------------------------------
# Jump size distributions for compound Poisson measures
# ---------------------------------------------------------------------------


class JumpSizeDist:
    """Jump size law with exact moments, truncated moments and samplers."""

    def mean(self) -> float:
        raise NotImplementedError

    def second_moment(self) -> float:
        raise NotImplementedError

    def prob_above(self, h: float) -> float:
        """P(|J| > h)."""
        raise NotImplementedError

    def mean_above(self, h: float) -> float:
        """E[J 1{|J| > h}]."""
        raise NotImplementedError

    def m2_below(self, h: float) -> float:
        """E[J^2 1{|J| <= h}]."""
        raise NotImplementedError

    def sample_above(self, rng, n: int, h: float) -> np.ndarray:
        """n i.i.d. draws from J conditioned on |J| > h."""
        raise NotImplementedError

    def sample_below(self, rng, n: int, h: float) -> np.ndarray:
        """n i.i.d. draws from J conditioned on |J| <= h."""
        raise NotImplementedError


@dataclass(frozen=True)
class ConstantJump(JumpSizeDist):
    size: float

    def __post_init__(self):
        if self.size == 0.0:
            raise ConfigError("constant jump size must be nonzero")

    def mean(self):
        return self.size

    def second_moment(self):
        return self.size**2

    def prob_above(self, h):
        return 1.0 if abs(self.size) > h else 0.0

    def mean_above(self, h):
        return self.size if abs(self.size) > h else 0.0

    def m2_below(self, h):
        return self.size**2 if abs(self.size) <= h else 0.0

    def sample_above(self, rng, n, h):
        if abs(self.size) <= h:
            raise ValueError("no mass above threshold")
        return np.full(n, self.size)

    def sample_below(self, rng, n, h):
        if abs(self.size) > h:
            raise ValueError("no mass at or below threshold")
        return np.full(n, self.size)


@dataclass(frozen=True)
class UniformJump(JumpSizeDist):
    """Uniform jump sizes on [lo, hi]."""

    lo: float
    hi: float

    def __post_init__(self):
        if not self.hi > self.lo:
            raise ConfigError("uniform jump interval must have hi > lo")

    def _segments_above(self, h):
        segs = []
        if self.lo < -h:
            segs.append((self.lo, min(self.hi, -h)))
        if self.hi > h:
            segs.append((max(self.lo, h), self.hi))
        return [(a, b) for a, b in segs if b > a]

    def _segments_below(self, h):
        a, b = max(self.lo, -h), min(self.hi, h)
        return [(a, b)] if b > a else []

    def mean(self):
        return 0.5 * (self.lo + self.hi)

    def second_moment(self):
        return (self.hi**3 - self.lo**3) / (3.0 * (self.hi - self.lo))

    def prob_above(self, h):
        w = self.hi - self.lo
        return sum(b - a for a, b in self._segments_above(h)) / w

    def mean_above(self, h):
        w = self.hi - self.lo
        return sum(0.5 * (b * b - a * a) for a, b in self._segments_above(h)) / w

    def m2_below(self, h):
        w = self.hi - self.lo
        return sum((b**3 - a**3) / 3.0 for a, b in self._segments_below(h)) / w

    def _sample_segments(self, rng, n, segs):
        if not segs:
            raise ValueError("conditioning event has zero probability")
        lens = np.array([b - a for a, b in segs])
        starts = np.array([a for a, _ in segs])
        u = rng.random(n) * lens.sum()
        edges = np.concatenate([[0.0], np.cumsum(lens)])
        idx = np.searchsorted(edges, u, side="right") - 1
        idx = np.clip(idx, 0, len(segs) - 1)
        return starts[idx] + (u - edges[idx])

    def sample_above(self, rng, n, h):
        return self._sample_segments(rng, n, self._segments_above(h))

    def sample_below(self, rng, n, h):
        return self._sample_segments(rng, n, self._segments_below(h))


@dataclass(frozen=True)
class GaussianJump(JumpSizeDist):
    mu: float
    sd: float

    def __post_init__(self):
        if not self.sd > 0.0:
            raise ConfigError("gaussian jump sd must be positive")

    def mean(self):
        return self.mu

    def second_moment(self):
        return self.mu**2 + self.sd**2

    def _z(self, u):
        return (u - self.mu) / self.sd

    def _mean_upto(self, u):
        # E[J 1{J <= u}]
        z = self._z(u)
        return self.mu * ndtr(z) - self.sd * _phi(z)

    def _m2_upto(self, u):
        # E[J^2 1{J <= u}]
        z = self._z(u)
        return (self.mu**2 + self.sd**2) * ndtr(z) - self.sd * (self.mu + u) * _phi(z)

    def prob_above(self, h):
        return float(1.0 - ndtr(self._z(h)) + ndtr(self._z(-h)))

    def mean_above(self, h):
        return float(self.mu - (self._mean_upto(h) - self._mean_upto(-h)))

    def m2_below(self, h):
        return float(self._m2_upto(h) - self._m2_upto(-h))

    def sample_above(self, rng, n, h):
        if self.prob_above(h) <= 0.0:
            raise ValueError("conditioning event has zero probability")
        out = np.empty(n)
        filled = 0
        while filled < n:
            draw = self.mu + self.sd * rng.standard_normal(max(n - filled, 16))
            keep = draw[np.abs(draw) > h]
            take = min(len(keep), n - filled)
            out[filled : filled + take] = keep[:take]
            filled += take
        return out

    def sample_below(self, rng, n, h):
        out = np.empty(n)
        filled = 0
        while filled < n:
            draw = self.mu + self.sd * rng.standard_normal(max(n - filled, 16))
            keep = draw[np.abs(draw) <= h]
            take = min(len(keep), n - filled)
            out[filled : filled + take] = keep[:take]
            filled += take
        return out


# ---------------------------------------------------------------------------
# Levy measures
# ---------------------------------------------------------------------------


class LevyMeasure:
    """Jump intensity measure on R \\ {0} with finite second moment."""

    kind = "abstract"

    def tail_mass(self, h: float) -> float:
        """nu({|x| > h})."""
        raise NotImplementedError

    def m2_below(self, h: float) -> float:
        """Integral of x^2 over {|x| <= h}."""
        raise NotImplementedError

    def m1_above(self, h: float) -> float:
        """Integral of x over {|x| > h}."""
        raise NotImplementedError

    def total_m2(self) -> float:
        """Integral of x^2 over the whole measure."""
        raise NotImplementedError

    def small_jumps_exact(self, h: float) -> bool:
        """True when the restriction to {|x| <= h} has finite mass."""
        raise NotImplementedError

    def rate_below(self, h: float) -> float:
        """nu({0 < |x| <= h}); only valid when small_jumps_exact(h)."""
        raise NotImplementedError

    def m1_below(self, h: float) -> float:
        """Integral of x over {|x| <= h}; only valid when small_jumps_exact(h)."""
        raise NotImplementedError

    def sample_sizes_above(self, rng, n: int, h: float) -> np.ndarray:
        """n draws from nu restricted to {|x| > h}, normalized."""
        raise NotImplementedError

    def sample_sizes_below(self, rng, n: int, h: float) -> np.ndarray:
        """n draws from nu restricted to {0 < |x| <= h}, normalized."""
        raise NotImplementedError


@dataclass(frozen=True)
class ZeroMeasure(LevyMeasure):
    kind = "zero"

    def tail_mass(self, h):
        _check_h(h)
        return 0.0

    def m2_below(self, h):
        _check_h(h)
        return 0.0

    def m1_above(self, h):
        _check_h(h)
        return 0.0

    def total_m2(self):
        return 0.0

    def small_jumps_exact(self, h):
        return True

    def rate_below(self, h):
        return 0.0

    def m1_below(self, h):
        return 0.0

    def sample_sizes_above(self, rng, n, h):
        raise ValueError("zero measure has no jumps")

    def sample_sizes_below(self, rng, n, h):
        raise ValueError("zero measure has no jumps")


@dataclass(frozen=True)
class CompoundPoissonMeasure(LevyMeasure):
    """Finite-activity measure: rate * law(J)."""

    rate: float
    jumps: JumpSizeDist
    kind = "compound_poisson"

    def __post_init__(self):
        if not self.rate > 0.0:
            raise ConfigError("compound Poisson rate must be positive")

    def tail_mass(self, h):
        return self.rate * self.jumps.prob_above(_check_h(h))

    def m2_below(self, h):
        return self.rate * self.jumps.m2_below(_check_h(h))

    def m1_above(self, h):
        return self.rate * self.jumps.mean_above(_check_h(h))

    def total_m2(self):
        return self.rate * self.jumps.second_moment()

    def small_jumps_exact(self, h):
        return True

    def rate_below(self, h):
        return self.rate * (1.0 - self.jumps.prob_above(_check_h(h)))

    def m1_below(self, h):
        return self.rate * (self.jumps.mean() - self.jumps.mean_above(_check_h(h)))

    def sample_sizes_above(self, rng, n, h):
        return self.jumps.sample_above(rng, n, _check_h(h))

    def sample_sizes_below(self, rng, n, h):
        return self.jumps.sample_below(rng, n, _check_h(h))


@dataclass(frozen=True)
class StableLikeMeasure(LevyMeasure):
    """Symmetric density c*|x|^(-1-alpha) on 0 < |x| <= 1.

    Truncation at |x| = 1 keeps every moment closed-form while retaining
    infinite activity at the origin.
    """

    c: float
    alpha: float
    kind = "stable_like"

    def __post_init__(self):
        if not self.c > 0.0:
            raise ConfigError("stable_like weight c must be positive")
        if not 0.0 < self.alpha < 2.0:
            raise ConfigError("stable_like alpha must lie in (0, 2)")

    def tail_mass(self, h):
        h = _check_h(h)
        if h >= 1.0:
            return 0.0
        return (2.0 * self.c / self.alpha) * (h**-self.alpha - 1.0)

    def m2_below(self, h):
        h = min(_check_h(h), 1.0)
        return 2.0 * self.c / (2.0 - self.alpha) * h ** (2.0 - self.alpha)

    def m1_above(self, h):
        _check_h(h)
        return 0.0  # symmetric measure

    def total_m2(self):
        return 2.0 * self.c / (2.0 - self.alpha)

    def small_jumps_exact(self, h):
        return False  # infinite activity at the origin

    def rate_below(self, h):
        raise ValueError("stable_like restriction below h has infinite mass")

    def m1_below(self, h):
        _check_h(h)
        return 0.0  # symmetric

    def sample_sizes_above(self, rng, n, h):
        h = _check_h(h)
        if h >= 1.0:
            raise ValueError("no mass above threshold")
        # Inverse transform on the magnitude tail (u^-alpha - 1)/(h^-alpha - 1),
        # then a symmetric sign.
        v = rng.random(n)
        mag = (1.0 + v * (h**-self.alpha - 1.0)) ** (-1.0 / self.alpha)
        signs = np.where(rng.random(n) < 0.5, -1.0, 1.0)
        return signs * mag

    def sample_sizes_below(self, rng, n, h):
        raise ValueError("stable_like restriction below h has infinite mass")


class UserTabulatedMeasure(LevyMeasure):
    """Measure given by a monotone tail table, interpolated in log-log space.

    The table lists ``tail[i] = nu({|x| > h[i]})`` on an increasing grid of
    magnitudes.  Between nodes the tail is a power law (linear in log-log);
    below the first node the measure carries no mass, so the measure is
    finite with total mass ``tail[0]``.  Queries outside ``[h[0], h[-1]]``
    are errors rather than extrapolations.  ``symmetric=True`` splits every
    magnitude evenly between the two signs; otherwise all jumps are positive.
    """

    kind = "user_tabulated"

    def __init__(self, h: np.ndarray, tail: np.ndarray, symmetric: bool = False):
        h = np.asarray(h, dtype=float)
        tail = np.asarray(tail, dtype=float)
        if h.ndim != 1 or h.shape != tail.shape or len(h) < 2:
            raise ConfigError("tail table needs matching 1-d arrays of length >= 2")
        if not (np.all(np.diff(h) > 0) and np.all(h > 0)):
            raise ConfigError("tail table magnitudes must be positive and increasing")
        if not (np.all(np.diff(tail) < 0) and np.all(tail > 0)):
            raise ConfigError("tail table values must be positive and strictly decreasing")
        self.h = h
        self.tail = tail
        self.symmetric = bool(symmetric)
        self._logh = np.log(h)
        self._logt = np.log(tail)
        # per-segment power law: tail(u) = tail[i] * (u/h[i])**p[i]
        self._p = np.diff(self._logt) / np.diff(self._logh)

    def _check_range(self, h):
        h = _check_h(h)
        if h < self.h[0] or h > self.h[-1]:
            raise ValueError(
                f"threshold {h} outside tabulated range [{self.h[0]}, {self.h[-1]}]"
            )
        return h

    def tail_mass(self, h):
        h = _check_h(h)
        if h > self.h[-1]:
            return 0.0
        h = self._check_range(h)
        return float(np.exp(np.interp(np.log(h), self._logh, self._logt)))

    def _seg_moment(self, a, b, power):
        """Integral of u^power * tail(u) du over [a, b] within the table."""
        total = 0.0
        for i in range(len(self.h) - 1):
            lo, hi = max(a, self.h[i]), min(b, self.h[i + 1])
            if hi <= lo:
                continue
            p = self._p[i]
            coef = self.tail[i] / self.h[i] ** p
            q = p + power + 1.0
            if abs(q) < 1e-12:
                total += coef * (math.log(hi) - math.log(lo))
            else:
                total += coef * (hi**q - lo**q) / q
        return total

    def _m2_between(self, a, b):
        # integral of u^2 d(-tail)(u) over (a, b] by parts
        ta, tb = self.tail_mass(a), self.tail_mass(b)
        return a * a * ta - b * b * tb + 2.0 * self._seg_moment(a, b, 1.0)

    def _m1_between(self, a, b):
        ta, tb = self.tail_mass(a), self.tail_mass(b)
        return a * ta - b * tb + self._seg_moment(a, b, 0.0)

    def m2_below(self, h):
        h = _check_h(h)
        if h < self.h[0]:
            raise ValueError(f"threshold {h} below tabulated range")
        h = min(h, self.h[-1])
        return self._m2_between(self.h[0], h)

    def m1_above(self, h):
        h = _check_h(h)
        if h >= self.h[-1]:
            return 0.0
        h = self._check_range(h)
        if self.symmetric:
            return 0.0
        return self._m1_between(h, self.h[-1])

    def total_m2(self):
        return self._m2_between(self.h[0], self.h[-1])

    def small_jumps_exact(self, h):
        return True

    def rate_below(self, h):
        h = _check_h(h)
        if h < self.h[0]:
            raise ValueError(f"threshold {h} below tabulated range")
        return self.tail[0] - self.tail_mass(min(h, self.h[-1]))

    def m1_below(self, h):
        if self.symmetric:
            return 0.0
        h = _check_h(h)
        if h < self.h[0]:
            raise ValueError(f"threshold {h} below tabulated range")
        return self._m1_between(self.h[0], min(h, self.h[-1]))

    def _invert_tail(self, levels):
        """Magnitudes u with tail(u) = levels, solved per power-law segment."""
        logt = np.log(levels)
        # self._logt is decreasing; search on the reversed array
        idx = len(self._logt) - 1 - np.searchsorted(self._logt[::-1], logt, side="left")
        idx = np.clip(idx, 0, len(self._p) - 1)
        logu = self._logh[idx] + (logt - self._logt[idx]) / self._p[idx]
        return np.exp(logu)

    def _sample_band(self, rng, n, t_hi, t_lo):
        """Sizes from the band with tail levels in (t_lo, t_hi]."""
        if t_hi <= t_lo:
            raise ValueError("conditioning event has zero probability")
        levels = t_lo + rng.random(n) * (t_hi - t_lo)
        mag = self._invert_tail(levels)
        if self.symmetric:
            signs = np.where(rng.random(n) < 0.5, -1.0, 1.0)
            return signs * mag
        return mag

    def sample_sizes_above(self, rng, n, h):
        h = self._check_range(h)
        return self._sample_band(rng, n, self.tail_mass(h), 0.0)

    def sample_sizes_below(self, rng, n, h):
        h = self._check_range(h)
        return self._sample_band(rng, n, self.tail[0], self.tail_mass(h))


# ---------------------------------------------------------------------------
# Triplet and operations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LevyTriplet:
    """Levy triplet (b, sigma^2, nu) of a square-integrable driver."""

    b: float
    sigma: float
    measure: LevyMeasure = field(default_factory=ZeroMeasure)

    def __post_init__(self):
        if not self.sigma > 0.0:
            raise ConfigError("diffusion coefficient sigma must be positive")

    def compensated_drift(self, h: float) -> float:
        """Drift of the driver with jumps above h removed and compensated."""
        return self.b - self.measure.m1_above(h)


@dataclass(frozen=True)
class BigJumpBatch:
    """Jumps with |size| > h on (0, T], sorted by time."""

    times: np.ndarray
    sizes: np.ndarray
    threshold: float


def tail_mass(measure: LevyMeasure, h: float) -> float:
    """nu({|x| > h}); exact for the closed-form measure families."""
    return measure.tail_mass(h)


def truncated_second_moment(measure: LevyMeasure, h: float) -> float:
    """Integral of x^2 nu(dx) over {|x| <= h}."""
    return measure.m2_below(h)


def compensated_drift(triplet: LevyTriplet, h: float) -> float:
    """b - integral of x nu(dx) over {|x| > h}."""
    _check_h(h)
    return triplet.compensated_drift(h)


def sample_big_jumps(measure: LevyMeasure, h: float, T: float, rng) -> BigJumpBatch:
    """Poisson batch of jumps above h on (0, T].

    Count ~ Poisson(T * tail_mass(h)), times i.i.d. uniform, sizes i.i.d.
    from the normalized restriction of nu to {|x| > h}.
    """
    h = _check_h(h)
    if not T > 0.0:
        raise ValueError("horizon T must be positive")
    lam = measure.tail_mass(h) * T
    if lam == 0.0:
        return BigJumpBatch(np.empty(0), np.empty(0), h)
    n = int(rng.poisson(lam))
    times = np.sort(rng.random(n) * T)
    sizes = measure.sample_sizes_above(rng, n, h)
    return BigJumpBatch(times, sizes, h)


def small_jump_increments(
    measure: LevyMeasure, h: float, dts: np.ndarray, rng
) -> np.ndarray:
    """Compensated sub-threshold increments over consecutive windows.

    One draw per window length in ``dts``; each has mean 0 and variance
    ``dt * m2_below(h)``.  Exact compound-Poisson-minus-compensator when the
    small-jump restriction is finite, Gaussian moment matching otherwise.
    """
    dts = np.asarray(dts, dtype=float)
    h = _check_h(h)
    m2 = measure.m2_below(h)
    if m2 == 0.0:
        return np.zeros(len(dts))
    if measure.small_jumps_exact(h):
        rate = measure.rate_below(h)
        counts = rng.poisson(rate * dts)
        total = int(counts.sum())
        sums = np.zeros(len(dts))
        if total > 0:
            sizes = measure.sample_sizes_below(rng, total, h)
            idx = np.repeat(np.arange(len(dts)), counts)
            sums = np.bincount(idx, weights=sizes, minlength=len(dts))
        return sums - dts * measure.m1_below(h)
    return rng.standard_normal(len(dts)) * np.sqrt(dts * m2)


def small_jump_increment(triplet: LevyTriplet, h: float, dt: float, rng) -> float:
    """One compensated small-jump increment over a window of length dt."""
    if not dt > 0.0:
        raise ValueError("window length dt must be positive")
    return float(small_jump_increments(triplet.measure, h, np.array([dt]), rng)[0])
