"""SDE model dX = a(X_) dY: coefficient registry and model container.

Coefficients from the registry carry a kernel code so the compiled backend
can evaluate them without Python callbacks; arbitrary callables are accepted
too and route through the pure-Python kernel.  Registry coefficients are
built from module-level functions so models pickle cleanly into worker
processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Callable, Optional

import numpy as np

from .errors import ConfigError

# kernel codes (must match _kernels.pyx / _kernels_py.py)
COEFF_CONSTANT = 0
COEFF_LINEAR = 1
COEFF_AFFINE = 2
COEFF_LOGISTIC = 3


@dataclass(frozen=True)
class Coefficient:
    """Coefficient a with derivative a'; kernel_code set for registry entries."""

    a: Callable[[float], float]
    a_prime: Callable[[float], float]
    name: str
    kernel_code: Optional[int] = None
    c1: float = 0.0
    c2: float = 0.0


def _a_const(x, v):
    return v


def _ap_zero(x):
    return 0.0


def _a_id(x):
    return x


def _ap_one(x):
    return 1.0


def _a_affine(x, c1, c2):
    return c1 + c2 * x


def _ap_affine(x, c2):
    return c2


def _a_logistic(x, c1):
    return c1 * x / (1.0 + x * x)


def _ap_logistic(x, c1):
    t = 1.0 + x * x
    return c1 * (1.0 - x * x) / (t * t)


def constant_coefficient(value: float) -> Coefficient:
    return Coefficient(
        a=partial(_a_const, v=float(value)),
        a_prime=_ap_zero,
        name=f"constant({value})",
        kernel_code=COEFF_CONSTANT,
        c1=float(value),
    )


def linear_coefficient() -> Coefficient:
    """a(x) = x."""
    return Coefficient(
        a=_a_id, a_prime=_ap_one, name="linear", kernel_code=COEFF_LINEAR
    )


def affine_coefficient(c1: float, c2: float) -> Coefficient:
    return Coefficient(
        a=partial(_a_affine, c1=float(c1), c2=float(c2)),
        a_prime=partial(_ap_affine, c2=float(c2)),
        name=f"affine({c1},{c2})",
        kernel_code=COEFF_AFFINE,
        c1=float(c1),
        c2=float(c2),
    )


def logistic_damped_coefficient(c: float) -> Coefficient:
    """a(x) = c*x/(1+x^2), bounded and Lipschitz for any c."""
    return Coefficient(
        a=partial(_a_logistic, c1=float(c)),
        a_prime=partial(_ap_logistic, c1=float(c)),
        name=f"logistic_damped({c})",
        kernel_code=COEFF_LOGISTIC,
        c1=float(c),
    )


COEFFICIENT_REGISTRY = {
    "constant": constant_coefficient,
    "linear": linear_coefficient,
    "affine": affine_coefficient,
    "logistic_damped": logistic_damped_coefficient,
}


def coefficient_from_config(kind: str, **params) -> Coefficient:
    try:
        factory = COEFFICIENT_REGISTRY[kind]
    except KeyError:
        raise ConfigError(
            f"unknown coefficient kind {kind!r}; known: {sorted(COEFFICIENT_REGISTRY)}"
        ) from None
    try:
        return factory(**params)
    except TypeError as exc:
        raise ConfigError(f"bad parameters for coefficient {kind!r}: {exc}") from None


@dataclass(frozen=True)
class SdeModel:
    """dX = a(X_) dY with X_0 = x0 on [0, T]."""

    coefficient: Coefficient
    x0: float
    T: float

    def __post_init__(self):
        if not self.T > 0.0:
            raise ConfigError("horizon T must be positive")

    def lipschitz_probe(self, half_width: float = 10.0, n: int = 2001) -> float:
        """Max |a'| over a grid around x0; recorded as a diagnostic only."""
        xs = self.x0 + np.linspace(-half_width, half_width, n)
        return float(max(abs(self.coefficient.a_prime(x)) for x in xs))
