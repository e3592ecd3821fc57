#!/usr/bin/env python3
"""
Finite and continuous Hartley transforms
Holds the cas kernel, the naive/fast finite Hartley transform, the unitary
finite Fourier transform used for comparison and a quadrature Hartley integral
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial.hermite import hermgauss

logger = logging.getLogger(__name__)

METHODS = ("naive", "fast")
RULES = ("trapezoid", "gauss_hermite")

# Rows of the naive transform evaluated per block
_NAIVE_BLOCK = 256


def cas(x):
    """cas(x) = cos(x) - sin(x)"""
    return np.cos(x) - np.sin(x)


def cas_series(x: float, terms: int) -> float:
    """Partial sum of sum_n (-1)^(n(n+1)/2) x^n / n!, the Maclaurin series of cos - sin"""
    if terms < 1:
        raise ValueError(f"cas_series: terms must be >= 1, got {terms}")
    total = 0.0
    term = 1.0
    for n in range(terms):
        if n > 0:
            term *= x / n
        # signs + - - + repeating with period 4
        sign = -1.0 if (n * (n + 1) // 2) % 2 else 1.0
        total += sign * term
    return total


def is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def as_real_sequence(values, name: str = "f") -> np.ndarray:
    """Validate and return a 1-D float64 copy of a real sequence"""
    arr = np.array(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"{name}: expected a 1-D sequence, got shape {arr.shape}")
    if arr.size < 1:
        raise ValueError(f"{name}: sequence must have at least one sample")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name}: sequence contains non-finite values")
    return arr


def _kernel_table(N: int) -> np.ndarray:
    return cas(2.0 * np.pi * np.arange(N) / N)


def _reduced_products(rows: np.ndarray, N: int) -> np.ndarray:
    """(r*s) mod N in exact integer arithmetic"""
    cols = np.arange(N, dtype=np.int64)
    return np.outer(rows.astype(np.int64), cols) % N


@dataclass(frozen=True)
class TransformPlan:
    """Precomputed kernel for a length-N Hartley transform"""
    N: int
    method: str = "naive"
    table: np.ndarray = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.N < 1:
            raise ValueError(f"TransformPlan: N must be >= 1, got {self.N}")
        if self.method not in METHODS:
            raise ValueError(f"TransformPlan: unknown method '{self.method}'")
        if self.method == "fast" and not is_power_of_two(self.N):
            raise ValueError(f"TransformPlan: fast method needs a power of two, got N={self.N}")
        if self.table is None:
            object.__setattr__(self, "table", _kernel_table(self.N))


def make_plan(N: int, method: str = "auto") -> TransformPlan:
    """Build a plan; 'auto' picks the fast path whenever N is a power of two"""
    if method == "auto":
        method = "fast" if is_power_of_two(N) else "naive"
    return TransformPlan(N=N, method=method)


def dht_matrix(N: int) -> np.ndarray:
    """Matrix of the finite Hartley transform, entries cas(2*pi*r*s/N)/sqrt(N)"""
    if N < 1:
        raise ValueError(f"dht_matrix: N must be >= 1, got {N}")
    table = _kernel_table(N)
    return table[_reduced_products(np.arange(N), N)] * (1.0 / np.sqrt(N))


def _dht_naive(table: np.ndarray, f: np.ndarray) -> np.ndarray:
    N = f.size
    out = np.empty(N)
    for start in range(0, N, _NAIVE_BLOCK):
        rows = np.arange(start, min(start + _NAIVE_BLOCK, N))
        out[rows] = table[_reduced_products(rows, N)] @ f
    return out * (1.0 / np.sqrt(N))


def dht_apply(plan: TransformPlan, f) -> np.ndarray:
    """Apply the finite Hartley transform described by plan to f"""
    f = as_real_sequence(f)
    if f.size != plan.N:
        raise ValueError(f"dht_apply: plan has N={plan.N} but sequence has length {f.size}")
    if plan.method == "fast":
        return dht_fast(f)
    return _dht_naive(plan.table, f)


def dht(f) -> np.ndarray:
    """Hartley transform of f with the best available method"""
    f = as_real_sequence(f)
    return dht_apply(make_plan(f.size), f)


def _bit_reversal(N: int) -> np.ndarray:
    bits = N.bit_length() - 1
    idx = np.arange(N)
    rev = np.zeros(N, dtype=np.int64)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    return rev


def fft_radix2(z) -> np.ndarray:
    """
    Iterative radix-2 FFT with kernel exp(+2*pi*i*r*s/N), no normalization.

    Args:
        z: complex samples, length a power of two
    """
    a = np.asarray(z, dtype=np.complex128)
    N = a.size
    if not is_power_of_two(N):
        raise ValueError(f"fft_radix2: N={N} is not a power of two")
    a = a[_bit_reversal(N)]
    m = 2
    while m <= N:
        half = m // 2
        twiddle = np.exp(2j * np.pi * np.arange(half) / m)
        blocks = a.reshape(-1, m)
        top = blocks[:, :half]
        bottom = blocks[:, half:] * twiddle
        a = np.concatenate((top + bottom, top - bottom), axis=1).reshape(N)
        m *= 2
    return a


def _real_fft(f: np.ndarray) -> np.ndarray:
    """Full-length DFT (+ sign) of a real power-of-two sequence via a half-length complex FFT"""
    N = f.size
    if N == 1:
        return f.astype(np.complex128)
    half = N // 2
    Z = fft_radix2(f[0::2] + 1j * f[1::2])
    k = np.arange(half)
    Zc = np.conj(Z[(-k) % half])
    even = 0.5 * (Z + Zc)
    odd = -0.5j * (Z - Zc)
    w = np.exp(2j * np.pi * k / N) * odd
    return np.concatenate((even + w, even - w))


def dht_fast(f) -> np.ndarray:
    """O(N log N) Hartley transform for power-of-two N, DHT = Re(DFT) - Im(DFT)"""
    f = as_real_sequence(f)
    N = f.size
    if not is_power_of_two(N):
        raise ValueError(f"dht_fast: N={N} is not a power of two")
    F = _real_fft(f)
    return (F.real - F.imag) * (1.0 / np.sqrt(N))


def dft_apply(f) -> np.ndarray:
    """Unitary finite Fourier transform with kernel exp(+2*pi*i*r*s/N)/sqrt(N)"""
    f = np.asarray(f, dtype=np.complex128)
    if f.ndim != 1 or f.size < 1:
        raise ValueError("dft_apply: expected a non-empty 1-D sequence")
    N = f.size
    roots = np.exp(2j * np.pi * np.arange(N) / N)
    out = np.empty(N, dtype=np.complex128)
    for start in range(0, N, _NAIVE_BLOCK):
        rows = np.arange(start, min(start + _NAIVE_BLOCK, N))
        out[rows] = roots[_reduced_products(rows, N)] @ f
    return out * (1.0 / np.sqrt(N))


def cas_orthogonality_check(N: int) -> float:
    """max |sum_j cas(2*pi*j*k/N) cas(2*pi*j*k'/N) - N*delta_kk'|"""
    if N < 1:
        raise ValueError(f"cas_orthogonality_check: N must be >= 1, got {N}")
    C = _kernel_table(N)[_reduced_products(np.arange(N), N)]
    return float(np.max(np.abs(C.T @ C - N * np.eye(N))))


@dataclass(frozen=True)
class QuadratureGrid:
    """Integration rule on the real line"""
    L: float = 12.0
    M: int = 4001
    rule: str = "trapezoid"

    def __post_init__(self):
        if self.rule not in RULES:
            raise ValueError(f"QuadratureGrid: unknown rule '{self.rule}'")
        if self.M < 2:
            raise ValueError(f"QuadratureGrid: need M >= 2 points, got {self.M}")
        if self.rule == "trapezoid" and not self.L > 0:
            raise ValueError(f"QuadratureGrid: half-width must be positive, got {self.L}")

    @property
    def h(self) -> float:
        return 2.0 * self.L / (self.M - 1)

    def weight_rule(self) -> Tuple[np.ndarray, np.ndarray]:
        """Gauss-Hermite nodes and weights for integrals against exp(-x^2)"""
        return hermgauss(self.M)

    def rule_points(self) -> Tuple[np.ndarray, np.ndarray]:
        """Nodes and weights for plain dx integration"""
        if self.rule == "trapezoid":
            x = np.linspace(-self.L, self.L, self.M)
            w = np.full(self.M, self.h)
            w[0] = w[-1] = 0.5 * self.h
            return x, w
        x, w = hermgauss(self.M)
        # fold exp(x^2) into the weights without overflowing
        return x, np.exp(np.log(w) + x * x)


def _sample(f: Callable, x: np.ndarray, name: str) -> np.ndarray:
    values = np.asarray(f(x), dtype=np.float64)
    if values.shape != x.shape:
        values = np.broadcast_to(values, x.shape).astype(np.float64)
    if not np.all(np.isfinite(values)):
        raise ValueError(f"{name}: non-finite sample of the integrand")
    return values


def hartley_continuous(f: Callable, lambdas, grid: Optional[QuadratureGrid] = None) -> np.ndarray:
    """(H f)(lambda) = 1/sqrt(2 pi) * integral f(x) cas(lambda x) dx by quadrature"""
    grid = grid or QuadratureGrid()
    lam = np.atleast_1d(np.asarray(lambdas, dtype=np.float64))
    x, w = grid.rule_points()
    fw = _sample(f, x, "hartley_continuous") * w
    return cas(np.outer(lam, x)) @ fw / np.sqrt(2.0 * np.pi)


def hartley_intertwining_residual(f: Callable, df: Callable, lambdas,
                                  grid: Optional[QuadratureGrid] = None) -> float:
    """
    sup over lambdas of |H(d/dx R f)(lambda) - lambda (H f)(lambda)|.

    df is the derivative of f; (d/dx R f)(x) = -f'(-x).
    """
    lam = np.atleast_1d(np.asarray(lambdas, dtype=np.float64))
    left = hartley_continuous(lambda x: -df(-x), lam, grid)
    right = lam * hartley_continuous(f, lam, grid)
    return float(np.max(np.abs(left - right)))


def _best_time_ns(fn: Callable, repeats: int) -> int:
    best = None
    for _ in range(repeats):
        start = time.perf_counter_ns()
        fn()
        elapsed = time.perf_counter_ns() - start
        best = elapsed if best is None else min(best, elapsed)
    return int(best)


def benchmark_transforms(exponents: Sequence[int] = range(4, 15), seed: int = 0,
                         repeats: int = 3) -> List[Tuple[int, int, int]]:
    """Best-of-repeats timings (N, t_naive_ns, t_fast_ns) on random vectors"""
    rng = np.random.default_rng(seed)
    rows = []
    for e in exponents:
        N = 1 << e
        f = rng.standard_normal(N)
        naive = TransformPlan(N, "naive")
        t_naive = _best_time_ns(lambda: dht_apply(naive, f), repeats)
        t_fast = _best_time_ns(lambda: dht_fast(f), repeats)
        logger.debug("bench N=%d naive=%dns fast=%dns", N, t_naive, t_fast)
        rows.append((N, t_naive, t_fast))
    return rows
