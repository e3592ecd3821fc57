#!/usr/bin/env python3
"""
Hermite polynomials, Hermite functions, Kummer's 1F1 and the
supersymmetric Hermite polynomials H_{+-n} = H_{2n} +- 2 sqrt(n) H_{2n-1}
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from transform import QuadratureGrid

logger = logging.getLogger(__name__)

# Rescaling threshold for the Hermite function recurrence
_BIG = 1e150
_LOG_BIG = math.log(_BIG)


def _scalar_or_array(values: np.ndarray, like):
    return float(values) if np.ndim(like) == 0 else values


def split_index(nu: int) -> Tuple[int, int]:
    """Return (branch sign, n) for a signed index nu; nu = 0 belongs to the + branch"""
    nu = int(nu)
    return (-1 if nu < 0 else 1), abs(nu)


def hartley_eigenvalue(nu: int) -> int:
    """(-1)^|nu|, the Hartley eigenvalue of exp(-x^2/2) H_nu(x)"""
    return -1 if abs(int(nu)) % 2 else 1


def hermite_eval(n: int, x):
    """Physicists' Hermite polynomial H_n(x) by the three-term recurrence"""
    if n < 0:
        raise ValueError(f"hermite_eval: degree must be >= 0, got {n}")
    xa = np.asarray(x, dtype=np.float64)
    prev = np.zeros_like(xa)
    cur = np.ones_like(xa)
    for m in range(n):
        prev, cur = cur, 2.0 * xa * cur - 2.0 * m * prev
    return _scalar_or_array(cur, x)


def hermite_norm_log(m: int) -> float:
    """log sqrt(2^m m! sqrt(pi)), the normalization of H_m against exp(-x^2)"""
    return 0.5 * (m * math.log(2.0) + math.lgamma(m + 1) + 0.5 * math.log(math.pi))


def _hermite_function_pair(m: int, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    (psi_{m-1}(x), psi_m(x)) by the normalized recurrence.

    The Gaussian factor is applied once at the end together with the
    accumulated scale, so intermediate values never overflow.
    """
    prev = np.zeros_like(x)
    cur = np.full_like(x, math.pi ** -0.25)
    log_scale = np.zeros_like(x)
    rescales = 0
    for k in range(m):
        nxt = math.sqrt(2.0 / (k + 1)) * x * cur - math.sqrt(k / (k + 1)) * prev
        prev, cur = cur, nxt
        big = np.abs(cur) > _BIG
        if np.any(big):
            cur = np.where(big, cur / _BIG, cur)
            prev = np.where(big, prev / _BIG, prev)
            log_scale = log_scale + np.where(big, _LOG_BIG, 0.0)
            rescales += 1
    if rescales:
        logger.debug("hermite recurrence to degree %d rescaled %d times", m, rescales)
    factor = np.exp(log_scale - 0.5 * x * x)
    return prev * factor, cur * factor


def hermite_function(n: int, x):
    """Orthonormal Hermite function psi_n(x) = exp(-x^2/2) H_n(x) / sqrt(2^n n! sqrt(pi))"""
    if n < 0:
        raise ValueError(f"hermite_function: degree must be >= 0, got {n}")
    xa = np.asarray(x, dtype=np.float64)
    return _scalar_or_array(_hermite_function_pair(n, xa)[1], x)


def gaussian_hermite(m: int, x):
    """exp(-x^2/2) H_m(x), evaluated through psi_m"""
    return math.exp(hermite_norm_log(m)) * hermite_function(m, x)


def kummer_1f1(a: float, b: float, z: float, tol: float = 1e-16, max_terms: int = 100000) -> float:
    """Kummer's confluent hypergeometric series sum_k (a)_k/(b)_k z^k/k!"""
    terminating = a <= 0 and float(a).is_integer()
    b_pole = b <= 0 and float(b).is_integer()
    if terminating:
        last = int(-a)
        if b_pole and last > -b:
            raise ValueError(f"kummer_1f1: (b)_k vanishes before the series terminates (a={a}, b={b})")
        total = term = 1.0
        for k in range(last):
            term *= (a + k) / (b + k) * z / (k + 1)
            total += term
        return total
    if b_pole:
        raise ValueError(f"kummer_1f1: b={b} is a nonpositive integer and the series does not terminate")

    total = term = 1.0
    for k in range(max_terms):
        term *= (a + k) / (b + k) * z / (k + 1)
        total += term
        # only stop once past the largest term
        if k > abs(z) and abs(term) <= tol * abs(total):
            return total
    raise ValueError(f"kummer_1f1: no convergence after {max_terms} terms (a={a}, b={b}, z={z})")


def hermite_1f1_crosscheck(n: int, x: float) -> Tuple[float, float]:
    """Residuals of H_2n and H_2n+1 against their 1F1 representations"""
    if n < 0:
        raise ValueError(f"hermite_1f1_crosscheck: n must be >= 0, got {n}")
    sign = -1.0 if n % 2 else 1.0
    z = x * x
    even = sign * (math.factorial(2 * n) // math.factorial(n)) * kummer_1f1(-n, 0.5, z)
    odd = sign * (math.factorial(2 * n + 1) // math.factorial(n)) * 2.0 * x * kummer_1f1(-n, 1.5, z)
    return (abs(hermite_eval(2 * n, x) - even), abs(hermite_eval(2 * n + 1, x) - odd))


def susy_hermite(nu: int, x):
    """Supersymmetric Hermite polynomial H_{+-n}(x) = H_2n(x) +- 2 sqrt(n) H_{2n-1}(x)"""
    sign, n = split_index(nu)
    if n == 0:
        return _scalar_or_array(np.ones_like(np.asarray(x, dtype=np.float64)), x)
    return hermite_eval(2 * n, x) + sign * 2.0 * math.sqrt(n) * hermite_eval(2 * n - 1, x)


@dataclass(frozen=True)
class NormConstant:
    """kappa_n with kappa_n^2 = integral H_{+-n}^2 exp(-x^2) dx"""
    n: int
    log_kappa: float

    @property
    def kappa(self) -> float:
        if self.log_kappa > 709.0:
            raise OverflowError(f"kappa_{self.n} exceeds double range (log kappa = {self.log_kappa:.1f})")
        return math.exp(self.log_kappa)


def susy_norm_const(n: int) -> NormConstant:
    """
    kappa_n = pi^(1/4) 2^(n+1/2) ((2n)!)^(1/2) for n >= 1.

    For n = 0 the odd companion term is absent and kappa_0 = pi^(1/4).
    """
    if n < 0:
        raise ValueError(f"susy_norm_const: n must be >= 0, got {n}")
    if n == 0:
        return NormConstant(0, 0.25 * math.log(math.pi))
    return NormConstant(n, 0.5 * math.log(2.0) + hermite_norm_log(2 * n))


def susy_norm_squared(n: int) -> float:
    """Diagonal of the orthogonality relation: sqrt(pi) 2^(2n+1) (2n)! for n >= 1, sqrt(pi) for n = 0"""
    return susy_norm_const(n).kappa ** 2


def susy_wavefunction(nu: int, x):
    """Normalized psi_hat_nu = exp(-x^2/2) H_nu(x) / kappa_n = (psi_2n +- psi_{2n-1}) / sqrt(2)"""
    sign, n = split_index(nu)
    xa = np.asarray(x, dtype=np.float64)
    if n == 0:
        return _scalar_or_array(_hermite_function_pair(0, xa)[1], x)
    odd, even = _hermite_function_pair(2 * n, xa)
    return _scalar_or_array((even + sign * odd) / math.sqrt(2.0), x)


def gaussian_susy_hermite(nu: int, x):
    """exp(-x^2/2) H_nu(x) without overflow for large |nu|"""
    _, n = split_index(nu)
    return susy_norm_const(n).kappa * susy_wavefunction(nu, x)


def susy_orthogonality_integral(nu: int, mu: int, grid: Optional[QuadratureGrid] = None) -> float:
    """Quadrature value of integral H_nu(x) H_mu(x) exp(-x^2) dx for indices on the same branch"""
    if int(nu) * int(mu) < 0:
        raise ValueError(f"susy_orthogonality_integral: indices {nu} and {mu} lie on different branches")
    grid = grid or QuadratureGrid(M=80, rule="gauss_hermite")
    if grid.rule == "gauss_hermite":
        x, w = grid.weight_rule()
    else:
        x, w = grid.rule_points()
        w = w * np.exp(-x * x)
    return float(np.sum(w * susy_hermite(nu, x) * susy_hermite(mu, x)))
