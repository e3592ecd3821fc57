#!/usr/bin/env python3
"""
Grid realizations of the reflection R, the supercharge Q = (d/dx R + x)/sqrt(2),
the Hamiltonian H = Q^2 and the gauge-transformed supercharge
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np

from hermite import kummer_1f1

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2.0)

# Fraction of the half-width used when measuring residuals
INTERIOR = 0.9


@dataclass(frozen=True)
class GridFunction:
    """Samples on the symmetric grid x_i = -L + i*2L/(M-1), M odd"""
    L: float
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 1:
            raise ValueError(f"GridFunction: values must be 1-D, got shape {values.shape}")
        if values.size % 2 == 0:
            raise ValueError(f"GridFunction: M must be odd so the grid contains 0, got {values.size}")
        if not self.L > 0:
            raise ValueError(f"GridFunction: half-width must be positive, got {self.L}")
        object.__setattr__(self, "values", values)

    @property
    def M(self) -> int:
        return self.values.size

    @property
    def h(self) -> float:
        return 2.0 * self.L / (self.M - 1) if self.M > 1 else 2.0 * self.L

    @property
    def x(self) -> np.ndarray:
        # integer offsets keep x_{M-1-i} = -x_i exact
        return (np.arange(self.M) - (self.M - 1) // 2) * self.h

    @property
    def interior(self) -> np.ndarray:
        return np.abs(self.x) <= INTERIOR * self.L

    @classmethod
    def sample(cls, f: Callable, L: float = 10.0, M: int = 2001) -> "GridFunction":
        base = cls(L, np.zeros(M))
        return cls(L, np.broadcast_to(np.asarray(f(base.x), dtype=np.float64), (M,)))

    @classmethod
    def uniform(cls, f: Callable, L: float = 10.0, h: float = 0.01) -> "GridFunction":
        """Sample f with step close to h; M is rounded to the nearest odd count"""
        M = 2 * int(round(L / h)) + 1
        return cls.sample(f, L, M)

    def like(self, values) -> "GridFunction":
        return GridFunction(self.L, values)

    def __add__(self, other: "GridFunction") -> "GridFunction":
        _check_same_grid(self, other, "GridFunction.__add__")
        return self.like(self.values + other.values)

    def __sub__(self, other: "GridFunction") -> "GridFunction":
        _check_same_grid(self, other, "GridFunction.__sub__")
        return self.like(self.values - other.values)

    def scale(self, c: float) -> "GridFunction":
        return self.like(c * self.values)


def _check_same_grid(a: GridFunction, b: GridFunction, name: str):
    if a.M != b.M or a.L != b.L:
        raise ValueError(f"{name}: grid mismatch (L={a.L}, M={a.M}) vs (L={b.L}, M={b.M})")


def reflect(g: GridFunction) -> GridFunction:
    """(Rg)(x) = g(-x)"""
    return g.like(g.values[::-1].copy())


def derivative(g: GridFunction) -> GridFunction:
    """Fourth-order finite-difference first derivative"""
    if g.M < 5:
        raise ValueError(f"derivative: grid too small (M={g.M}, need >= 5)")
    v = g.values
    d = np.empty_like(v)
    d[2:-2] = v[:-4] - 8.0 * v[1:-3] + 8.0 * v[3:-1] - v[4:]
    d[0] = -25.0 * v[0] + 48.0 * v[1] - 36.0 * v[2] + 16.0 * v[3] - 3.0 * v[4]
    d[1] = -3.0 * v[0] - 10.0 * v[1] + 18.0 * v[2] - 6.0 * v[3] + v[4]
    d[-1] = 25.0 * v[-1] - 48.0 * v[-2] + 36.0 * v[-3] - 16.0 * v[-4] + 3.0 * v[-5]
    d[-2] = 3.0 * v[-1] + 10.0 * v[-2] - 18.0 * v[-3] + 6.0 * v[-4] - v[-5]
    return g.like(d / (12.0 * g.h))


def second_derivative(g: GridFunction) -> GridFunction:
    """Fourth-order finite-difference second derivative"""
    if g.M < 7:
        raise ValueError(f"second_derivative: grid too small (M={g.M}, need >= 7)")
    v = g.values
    d = np.empty_like(v)
    d[2:-2] = -v[:-4] + 16.0 * v[1:-3] - 30.0 * v[2:-2] + 16.0 * v[3:-1] - v[4:]
    d[0] = 45.0 * v[0] - 154.0 * v[1] + 214.0 * v[2] - 156.0 * v[3] + 61.0 * v[4] - 10.0 * v[5]
    d[1] = 10.0 * v[0] - 15.0 * v[1] - 4.0 * v[2] + 14.0 * v[3] - 6.0 * v[4] + v[5]
    d[-1] = 45.0 * v[-1] - 154.0 * v[-2] + 214.0 * v[-3] - 156.0 * v[-4] + 61.0 * v[-5] - 10.0 * v[-6]
    d[-2] = 10.0 * v[-1] - 15.0 * v[-2] - 4.0 * v[-3] + 14.0 * v[-4] - 6.0 * v[-5] + v[-6]
    return g.like(d / (12.0 * g.h * g.h))


def supercharge_apply(g: GridFunction) -> GridFunction:
    """Qg = (d/dx[g(-x)] + x g(x)) / sqrt(2)"""
    dr = derivative(reflect(g)).values
    return g.like((dr + g.x * g.values) / SQRT2)


def hamiltonian_apply(g: GridFunction) -> GridFunction:
    """Hg = -g''/2 + x^2 g/2 - g(-x)/2"""
    x = g.x
    d2 = second_derivative(g).values
    return g.like(0.5 * (-d2 + x * x * g.values - g.values[::-1]))


def gauge_supercharge_apply(g: GridFunction) -> GridFunction:
    """Gauge image psi_0^-1 Q psi_0: (-g'(-x) + x(g(x) - g(-x))) / sqrt(2)"""
    dr = derivative(reflect(g)).values
    return g.like((dr + g.x * (g.values - g.values[::-1])) / SQRT2)


def even_odd_split(g: GridFunction) -> Tuple[GridFunction, GridFunction]:
    """(g_e, g_o) with g = g_e + g_o"""
    r = g.values[::-1]
    return g.like(0.5 * (g.values + r)), g.like(0.5 * (g.values - r))


@dataclass(frozen=True)
class OperatorResidual:
    """sup |Op(g) - lambda g| and sup |g| over the interior grid points"""
    eigenvalue: float
    residual_sup: float
    norm_sup: float

    @property
    def relative(self) -> float:
        return self.residual_sup / max(self.norm_sup, np.finfo(float).eps)


def operator_residual(applied: GridFunction, g: GridFunction, eigenvalue: float) -> OperatorResidual:
    """Compare an operator image against eigenvalue * g away from the boundary bands"""
    _check_same_grid(applied, g, "operator_residual")
    mask = g.interior
    diff = applied.values[mask] - eigenvalue * g.values[mask]
    return OperatorResidual(float(eigenvalue), float(np.max(np.abs(diff))),
                            float(np.max(np.abs(g.values[mask]))))


def system_residual(u_e: GridFunction, u_o: GridFunction, lam: float) -> Tuple[float, float]:
    """
    Relative interior residuals of the first-order system

        u_e' = lam sqrt(2) u_o
        u_o' - 2x u_o = -lam sqrt(2) u_e
    """
    _check_same_grid(u_e, u_o, "system_residual")
    mask = u_e.interior
    x = u_e.x
    first = derivative(u_e).values - lam * SQRT2 * u_o.values
    second = derivative(u_o).values - 2.0 * x * u_o.values + lam * SQRT2 * u_e.values
    scale = max(np.max(np.abs(u_e.values[mask])), np.max(np.abs(u_o.values[mask])),
                np.finfo(float).eps)
    return (float(np.max(np.abs(first[mask])) / scale),
            float(np.max(np.abs(second[mask])) / scale))


def even_equation_residual(u_e: GridFunction, lam: float) -> float:
    """Relative interior residual of u_e'' - 2x u_e' + 2 lam^2 u_e = 0"""
    mask = u_e.interior
    res = (second_derivative(u_e).values - 2.0 * u_e.x * derivative(u_e).values
           + 2.0 * lam * lam * u_e.values)
    scale = max(np.max(np.abs(u_e.values[mask])), np.finfo(float).eps)
    return float(np.max(np.abs(res[mask])) / scale)


def general_solution(lam: float, A: float, x: float) -> float:
    """u(x) = A 1F1(-lam^2/2; 1/2; x^2) - A sqrt(2) lam x 1F1(1 - lam^2/2; 3/2; x^2)"""
    a = -0.5 * lam * lam
    # snap a to an integer when lam^2 = 2n up to rounding, so the series terminates
    if abs(a - round(a)) < 1e-12:
        if a != round(a):
            logger.debug("general_solution: snapped a=%r to %d", a, round(a))
        a = float(round(a))
    z = x * x
    even = kummer_1f1(a, 0.5, z)
    odd = kummer_1f1(a + 1.0, 1.5, z) if lam != 0 else 0.0
    return A * even - A * SQRT2 * lam * x * odd
