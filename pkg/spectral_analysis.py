#!/usr/bin/env python3
"""
Spectral diagnostics for the finite Hartley transform
Cyclic Jacobi eigensolver, eigenvalue multiplicities, Gram-matrix ranks of
Mehta families and eigenspace projectors
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from hermite import hartley_eigenvalue
from mehta_eigen import (DEFAULT_EPSILON, EigenReport, EigenvectorFamily,
                         mehta_index_set, truncation_bound, verify_hartley_eigen)
from transform import as_real_sequence, dht, dht_matrix

logger = logging.getLogger(__name__)

MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """Jacobi iteration did not reach the requested off-diagonal tolerance"""


class SpectrumError(RuntimeError):
    """An eigenvalue of the Hartley matrix is not close to +1 or -1"""


@dataclass(frozen=True)
class SymmetricEigenDecomposition:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    max_offdiag: float
    sweeps: int = 0


def _max_offdiag(a: np.ndarray) -> float:
    if a.shape[0] < 2:
        return 0.0
    return float(np.max(np.abs(a - np.diag(np.diag(a)))))


def jacobi_eigen(A, tol: float = 1e-14, max_sweeps: int = MAX_SWEEPS) -> SymmetricEigenDecomposition:
    """
    Cyclic Jacobi rotations until the largest off-diagonal entry is below
    tol * ||A||_F. Eigenpairs are returned in descending order.
    """
    a = np.array(A, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"jacobi_eigen: expected a square matrix, got shape {a.shape}")
    if not tol > 0:
        raise ValueError(f"jacobi_eigen: tol must be positive, got {tol}")
    scale = max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0
    if np.max(np.abs(a - a.T), initial=0.0) > 1e-12 * scale:
        raise ValueError("jacobi_eigen: matrix is not symmetric")
    a = 0.5 * (a + a.T)
    n = a.shape[0]
    V = np.eye(n)
    target = tol * float(np.linalg.norm(a))

    sweeps = 0
    off = _max_offdiag(a)
    while off > target:
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                f"jacobi_eigen: off-diagonal {off:.3e} above {target:.3e} after {max_sweeps} sweeps")
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-3 * target:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                v_p, v_q = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * v_p - s * v_q
                V[:, q] = s * v_p + c * v_q
        off = _max_offdiag(a)
    logger.debug("jacobi_eigen n=%d converged in %d sweeps (off-diagonal %.3e)", n, sweeps, off)

    order = np.argsort(-np.diag(a), kind="stable")
    return SymmetricEigenDecomposition(np.diag(a)[order].copy(), V[:, order], off, sweeps)


def gauss_sum_multiplicities(N: int) -> Tuple[int, int]:
    """
    (mult+, mult-) of H^(N) from its trace, t = (1/sqrt(N)) sum_r cas(2 pi r^2/N),
    which the quadratic Gauss sum fixes to 1, 0, -1, 0 for N = 1, 2, 3, 0 mod 4.
    """
    t = (0, 1, 0, -1)[N % 4]
    return (N + t) // 2, (N - t) // 2


def fourier_class_multiplicities(N: int) -> Tuple[int, int, int, int]:
    """Multiplicities of the Fourier eigenvalues i^c, c = 0..3, counted over Mehta's index set"""
    counts = [0, 0, 0, 0]
    for n in mehta_index_set(N):
        counts[n % 4] += 1
    return tuple(counts)


def dht_spectrum(N: int) -> Tuple[int, int]:
    """Count eigenvalues of H^(N) at +1 and -1 with the Jacobi solver"""
    eigenvalues = jacobi_eigen(dht_matrix(N)).eigenvalues
    distance = np.minimum(np.abs(eigenvalues - 1.0), np.abs(eigenvalues + 1.0))
    worst = float(np.max(distance))
    if worst > 1e-6:
        raise SpectrumError(f"dht_spectrum: eigenvalue {worst:.3e} away from +-1 for N={N}")
    if worst > 1e-8:
        logger.warning("dht_spectrum: eigenvalue %.3e away from +-1 for N=%d", worst, N)
    plus = int(np.count_nonzero(eigenvalues > 0))
    return plus, N - plus


def spectral_projector(N: int, lam: int) -> np.ndarray:
    """P = (I + lam H^(N)) / 2"""
    if lam not in (1, -1):
        raise ValueError(f"spectral_projector: eigenvalue must be +1 or -1, got {lam}")
    return 0.5 * (np.eye(N) + lam * dht_matrix(N))


def eigenspace_membership(N: int, v, lam: int) -> float:
    """||P_lam v - v|| / ||v||; zero exactly when v lies in the lam-eigenspace"""
    if lam not in (1, -1):
        raise ValueError(f"eigenspace_membership: eigenvalue must be +1 or -1, got {lam}")
    v = as_real_sequence(v, "eigenspace_membership")
    if v.size != N:
        raise ValueError(f"eigenspace_membership: expected length {N}, got {v.size}")
    norm = float(np.linalg.norm(v))
    if norm == 0.0:
        raise ValueError("eigenspace_membership: zero vector")
    projected = 0.5 * (v + lam * dht(v))
    return float(np.linalg.norm(projected - v)) / norm


@dataclass(frozen=True)
class GramReport:
    size: int
    gram_eigenvalues: np.ndarray
    rank: int
    rank_threshold: float
    min_angle_deg: float
    gram: Optional[np.ndarray] = None


def gram_rank(family: EigenvectorFamily, threshold_factor: float = 10.0) -> GramReport:
    """Numerical rank of the Gram matrix of the normalized family columns"""
    vectors = np.asarray(family.vectors, dtype=np.float64)
    if vectors.ndim != 2 or vectors.shape[1] == 0:
        raise ValueError("gram_rank: empty family")
    norms = np.linalg.norm(vectors, axis=0)
    if np.any(norms == 0.0):
        zero = [family.indices[i] for i in np.flatnonzero(norms == 0.0)]
        raise ValueError(f"gram_rank: zero-norm column for indices {zero}")
    unit = vectors / norms
    gram = unit.T @ unit
    gram = 0.5 * (gram + gram.T)
    eigenvalues = jacobi_eigen(gram).eigenvalues
    threshold = threshold_factor * family.N * np.finfo(float).eps * float(eigenvalues[0])
    rank = int(np.count_nonzero(eigenvalues > threshold))

    size = gram.shape[0]
    if size > 1:
        upper = np.abs(gram[np.triu_indices(size, 1)])
        min_angle = float(np.degrees(np.arccos(np.clip(np.max(upper), 0.0, 1.0))))
    else:
        min_angle = 90.0
    return GramReport(size, eigenvalues, rank, float(threshold), min_angle, gram)


def eigenspace_rank_bound(family: EigenvectorFamily) -> int:
    """Sum over eigenvalue classes of min(#members in the class, multiplicity)"""
    if family.kind == "hartley":
        plus, minus = gauss_sum_multiplicities(family.N)
        even = sum(1 for nu in set(family.indices) if hartley_eigenvalue(nu) == 1)
        odd = len(set(family.indices)) - even
        return min(even, plus) + min(odd, minus)
    mult = fourier_class_multiplicities(family.N)
    members = [0, 0, 0, 0]
    for n in set(family.indices):
        members[n % 4] += 1
    return sum(min(m, k) for m, k in zip(members, mult))


def residual_table(N: int, nu_list: Sequence[int], epsilon: float = DEFAULT_EPSILON) -> List[EigenReport]:
    """One eigenrelation report per index, in the given order"""
    nu_list = [int(nu) for nu in nu_list]
    if not nu_list:
        return []
    policy = truncation_bound(N, max(abs(nu) for nu in nu_list), epsilon)
    return [verify_hartley_eigen(N, nu, policy) for nu in nu_list]
