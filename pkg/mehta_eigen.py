#!/usr/bin/env python3
"""
Mehta-type eigenvectors of the finite Hartley and Fourier transforms
Built by folding Gaussian-weighted (supersymmetric) Hermite functions onto Z/NZ
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from hermite import gaussian_hermite, gaussian_susy_hermite, hartley_eigenvalue
from transform import cas, dft_apply, dht

logger = logging.getLogger(__name__)

DEFAULT_EPSILON = 1e-16

# Below this sup-norm a vector is reported as degenerate
DEGENERATE_NORM = 1e-300

# i^n for n mod 4, exact
_QUARTER_TURNS = (complex(1, 0), complex(0, 1), complex(-1, 0), complex(0, -1))


@dataclass(frozen=True)
class TruncationPolicy:
    """Summation range |k| <= K for the folded sums, chosen for tolerance epsilon"""
    epsilon: float
    K: int

    def __post_init__(self):
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError(f"TruncationPolicy: epsilon must lie in (0, 1), got {self.epsilon}")
        if self.K < 1:
            raise ValueError(f"TruncationPolicy: K must be >= 1, got {self.K}")


def truncation_bound(N: int, n_max: int, epsilon: float = DEFAULT_EPSILON) -> TruncationPolicy:
    """
    Smallest K with exp(-pi/N ((K-1)N)^2) (1 + (sqrt(2 pi/N) K N)^(2 n_max)) 2^(2 n_max) < epsilon.

    The Gaussian-times-polynomial majorant bounds every neglected term for all
    residues r and every index with |nu| <= n_max.
    """
    if not 0.0 < epsilon < 1.0:
        raise ValueError(f"truncation_bound: epsilon must lie in (0, 1), got {epsilon}")
    if N < 1 or n_max < 0:
        raise ValueError(f"truncation_bound: need N >= 1 and n_max >= 0, got N={N}, n_max={n_max}")
    target = math.log(epsilon)
    p = 2 * n_max
    K = 1
    while True:
        gauss = -math.pi / N * ((K - 1) * N) ** 2
        poly = np.logaddexp(0.0, p * math.log(math.sqrt(2.0 * math.pi / N) * K * N))
        if gauss + poly + p * math.log(2.0) < target:
            break
        K += 1
    logger.debug("truncation_bound N=%d n_max=%d eps=%g -> K=%d", N, n_max, epsilon, K)
    return TruncationPolicy(epsilon, K)


def _fold_order(K: int) -> np.ndarray:
    """k = -K, K, -(K-1), K-1, ..., 0: smallest terms accumulate first"""
    order = []
    for m in range(K, 0, -1):
        order.extend((-m, m))
    order.append(0)
    return np.array(order, dtype=np.int64)


def fold(f: Callable, N: int, policy: TruncationPolicy) -> np.ndarray:
    """(M_N f)(j) = sum_{|k| <= K} f(sqrt(2 pi/N) (kN + j)), j = 0..N-1"""
    if N < 1:
        raise ValueError(f"fold: N must be >= 1, got {N}")
    k = _fold_order(policy.K)
    x = math.sqrt(2.0 * math.pi / N) * (np.outer(k, np.full(N, N)) + np.arange(N)).astype(np.float64)
    values = np.broadcast_to(np.asarray(f(x), dtype=np.float64), x.shape)
    if not np.all(np.isfinite(values)):
        raise ValueError("fold: non-finite sample of the folded function")
    total = np.zeros(N)
    for row in values:
        total += row
    return total


def gaussian_susy(nu: int) -> Callable:
    """f(x) = exp(-x^2/2) H_nu(x)"""
    return lambda x: gaussian_susy_hermite(nu, x)


def gaussian_susy_hartley(nu: int) -> Callable:
    """Continuous Hartley image of gaussian_susy(nu): (-1)^|nu| times itself"""
    sign = hartley_eigenvalue(nu)
    return lambda x: sign * gaussian_susy_hermite(nu, x)


def mehta_hartley_vector(N: int, nu: int, policy: Optional[TruncationPolicy] = None) -> np.ndarray:
    """G_nu(r) = sum_k exp(-pi/N (kN + r)^2) H_nu(sqrt(2 pi/N)(kN + r))"""
    policy = policy or truncation_bound(N, abs(nu))
    return fold(gaussian_susy(nu), N, policy)


def mehta_fourier_vector(N: int, n: int, policy: Optional[TruncationPolicy] = None) -> np.ndarray:
    """F_n(r) = sum_k exp(-pi/N (kN + r)^2) H_n(sqrt(2 pi/N)(kN + r))"""
    if n < 0:
        raise ValueError(f"mehta_fourier_vector: n must be >= 0, got {n}")
    policy = policy or truncation_bound(N, (n + 1) // 2)
    return fold(lambda x: gaussian_hermite(n, x), N, policy)


def mehta_index_set(N: int) -> List[int]:
    """Mehta's conjectured basis indices: 0..N-1 for odd N, 0..N-2 and N for even N"""
    if N % 2:
        return list(range(N))
    return list(range(N - 1)) + [N]


@dataclass(frozen=True)
class EigenvectorFamily:
    """One column per index; kind is 'hartley' (signed indices) or 'fourier'"""
    N: int
    indices: Tuple[int, ...]
    vectors: np.ndarray
    policy: TruncationPolicy
    kind: str = "hartley"


def hartley_family(N: int, nu_list: Sequence[int], epsilon: float = DEFAULT_EPSILON) -> EigenvectorFamily:
    nu_list = tuple(int(nu) for nu in nu_list)
    if not nu_list:
        raise ValueError("hartley_family: empty index list")
    policy = truncation_bound(N, max(abs(nu) for nu in nu_list), epsilon)
    vectors = np.column_stack([mehta_hartley_vector(N, nu, policy) for nu in nu_list])
    return EigenvectorFamily(N, nu_list, vectors, policy, "hartley")


def fourier_family(N: int, n_list: Sequence[int], epsilon: float = DEFAULT_EPSILON) -> EigenvectorFamily:
    n_list = tuple(int(n) for n in n_list)
    if not n_list:
        raise ValueError("fourier_family: empty index list")
    policy = truncation_bound(N, (max(n_list) + 1) // 2, epsilon)
    vectors = np.column_stack([mehta_fourier_vector(N, n, policy) for n in n_list])
    return EigenvectorFamily(N, n_list, vectors, policy, "fourier")


@dataclass(frozen=True)
class EigenReport:
    """Outcome of one eigenrelation check"""
    N: int
    index: int
    eigenvalue: complex
    residual: float
    norm: float
    degenerate: bool = False

    def passed(self, tol: float) -> bool:
        return not self.degenerate and self.residual < tol


def _report(N: int, index: int, eigenvalue, image: np.ndarray, vector: np.ndarray) -> EigenReport:
    norm = float(np.max(np.abs(vector)))
    if norm < DEGENERATE_NORM:
        logger.warning("degenerate eigenvector N=%d index=%d (norm %.3g)", N, index, norm)
        return EigenReport(N, index, eigenvalue, math.inf, norm, True)
    residual = float(np.max(np.abs(image - eigenvalue * vector))) / norm
    return EigenReport(N, index, eigenvalue, residual, norm)


def verify_hartley_eigen(N: int, nu: int, policy: Optional[TruncationPolicy] = None) -> EigenReport:
    """Check H^(N) G_nu = (-1)^|nu| G_nu"""
    G = mehta_hartley_vector(N, nu, policy)
    lam = hartley_eigenvalue(nu)
    return _report(N, nu, float(lam), dht(G), G)


def verify_fourier_eigen(N: int, n: int, policy: Optional[TruncationPolicy] = None) -> EigenReport:
    """Check Phi^(N) F_n = i^n F_n"""
    F = mehta_fourier_vector(N, n, policy)
    return _report(N, n, _QUARTER_TURNS[n % 4], dft_apply(F), F)


def poisson_check(f: Callable, Hf: Callable, a: float, b: float, x: float,
                  M_terms: int = 100) -> Tuple[float, float]:
    """
    Both sides of the Hartley-Poisson summation formula

        ab sum_r f(b(ar + x)) = sqrt(2 pi) sum_m (Hf)(2 pi m/(ab)) cas(2 pi m x/a)

    truncated to |r|, |m| <= M_terms.
    """
    if not (a > 0 and b > 0):
        raise ValueError(f"poisson_check: a and b must be positive, got a={a}, b={b}")
    r = np.arange(-M_terms, M_terms + 1, dtype=np.float64)
    left = np.asarray(f(b * (a * r + x)), dtype=np.float64)
    right = np.asarray(Hf(2.0 * np.pi * r / (a * b)), dtype=np.float64) * cas(2.0 * np.pi * r * x / a)
    if not (np.all(np.isfinite(left)) and np.all(np.isfinite(right))):
        raise ValueError("poisson_check: non-finite summand")
    return a * b * math.fsum(left), math.sqrt(2.0 * math.pi) * math.fsum(right)


def fold_intertwining_residual(f: Callable, Hf: Callable, N: int,
                               policy: Optional[TruncationPolicy] = None) -> float:
    """sup |M_N(Hf) - H^(N) M_N f| for a continuous Hartley pair (f, Hf)"""
    policy = policy or TruncationPolicy(DEFAULT_EPSILON, 8)
    return float(np.max(np.abs(fold(Hf, N, policy) - dht(fold(f, N, policy)))))
