"""Cost model and refinement-factor optimisation.

One coupled pair at level k costs about kappa_cost * (M + beta) / eps_{k-1}
unit operations, where beta weights the cheaper coarse concatenations.  At a
fixed rescaled precision the leading cost factor that actually depends on M
is g(M, beta) = (M-1)(M+beta)/(M ln^2 M), so picking M means minimising g.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Tuple

from .errors import ConfigError


@dataclass(frozen=True)
class CostModel:
    beta: float = 0.0
    kappa_cost: float = 1.0

    def __post_init__(self):
        if self.beta < 0:
            raise ConfigError("beta must be nonnegative")
        if not self.kappa_cost > 0:
            raise ConfigError("kappa_cost must be positive")

    def pair_cost(self, eps_coarse: float, M: int) -> float:
        return self.kappa_cost / eps_coarse * (M + self.beta)


def m_curve(M: int, beta: float) -> float:
    """g(M, beta) = (M-1)(M+beta)/(M ln^2 M)."""
    if M < 2:
        raise ValueError("M must be at least 2")
    return (M - 1) * (M + beta) / (M * math.log(M) ** 2)


def optimal_M(beta: float, M_range: Sequence[int] = range(2, 11)) -> Tuple[int, list]:
    """Integer argmin of the cost curve plus the tabulated curve itself."""
    ms = sorted(set(int(m) for m in M_range))
    if not ms or ms[0] < 2 or ms[-1] > 64:
        raise ConfigError("M_range must lie within {2, ..., 64}")
    curve = [(m, beta, m_curve(m, beta)) for m in ms]
    m_star = min(curve, key=lambda row: row[2])[0]
    return m_star, curve


def rescaled_delta(delta: float, kappa_err: float, M: int) -> float:
    """delta / (kappa_err * sqrt(1 - 1/M)); must stay inside (0, 1)."""
    if not 0.0 < delta < 1.0:
        raise ConfigError("delta must lie in (0, 1)")
    if not kappa_err > 0:
        raise ConfigError("kappa_err must be positive")
    if M < 2:
        raise ConfigError("M must be at least 2")
    out = delta / (kappa_err * math.sqrt(1.0 - 1.0 / M))
    if out >= 1.0:
        raise ConfigError(
            f"rescaled precision {out:.4g} is not below 1; the replication "
            "plan formulas need delta in (0, 1)"
        )
    return out


def predicted_cost(
    delta: float,
    alpha: float,
    M: int,
    beta: float,
    kappa_cost: float = 1.0,
    kappa_err: float = 1.0,
) -> float:
    """Leading-order cost of reaching precision delta with refinement factor M."""
    if not 0.0 < delta < 1.0:
        raise ConfigError("delta must lie in (0, 1)")
    if not alpha > 0:
        raise ConfigError("alpha must be positive")
    g = m_curve(M, beta)
    log_inv = math.log(1.0 / delta)
    return (kappa_cost * kappa_err**2 / alpha**2) * g * delta**-2 * log_inv**2
