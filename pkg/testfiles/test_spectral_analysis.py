#!/usr/bin/env python3
"""
Tests for the Jacobi eigensolver, multiplicities, projectors and Gram ranks
"""

import numpy as np
import pytest

from mehta_eigen import fourier_family, hartley_family, mehta_hartley_vector
from spectral_analysis import (ConvergenceError, SpectrumError, dht_spectrum, eigenspace_membership,
                               eigenspace_rank_bound, fourier_class_multiplicities,
                               gauss_sum_multiplicities, gram_rank, jacobi_eigen, residual_table,
                               spectral_projector)
from transform import dht_matrix

# (mult+, mult-) of the N x N Hartley matrix for N = 1..16
MULTIPLICITIES = [(1, 0), (1, 1), (1, 2), (2, 2), (3, 2), (3, 3), (3, 4), (4, 4),
                  (5, 4), (5, 5), (5, 6), (6, 6), (7, 6), (7, 7), (7, 8), (8, 8)]


class TestJacobi:

    def test_identity(self):
        result = jacobi_eigen(np.eye(5))
        assert np.array_equal(result.eigenvalues, np.ones(5))
        assert result.sweeps == 0

    def test_diagonal(self):
        result = jacobi_eigen(np.diag([3.0, 1.0, -2.0]))
        assert np.array_equal(result.eigenvalues, [3.0, 1.0, -2.0])
        assert np.array_equal(np.abs(result.eigenvectors), np.eye(3))

    def test_random_symmetric(self, rng):
        B = rng.standard_normal((7, 7))
        A = B + B.T
        result = jacobi_eigen(A)
        assert np.allclose(result.eigenvalues, np.sort(np.linalg.eigvalsh(A))[::-1], atol=1e-12)
        V = result.eigenvectors
        assert np.allclose(A @ V, V * result.eigenvalues, atol=1e-11)
        assert np.allclose(V.T @ V, np.eye(7), atol=1e-12)

    def test_hartley_matrix(self):
        values = jacobi_eigen(dht_matrix(8)).eigenvalues
        assert np.all(np.minimum(np.abs(values - 1), np.abs(values + 1)) < 1e-10)

    def test_single_entry(self):
        assert jacobi_eigen([[2.5]]).eigenvalues[0] == 2.5

    def test_rejects_shapes(self):
        with pytest.raises(ValueError, match="square"):
            jacobi_eigen(np.ones((2, 3)))
        with pytest.raises(ValueError, match="symmetric"):
            jacobi_eigen([[1.0, 2.0], [0.0, 1.0]])

    def test_sweep_limit(self):
        with pytest.raises(ConvergenceError):
            jacobi_eigen([[1.0, 0.5], [0.5, 2.0]], max_sweeps=0)


class TestMultiplicities:

    @pytest.mark.parametrize("N", range(1, 17))
    def test_against_table(self, N):
        assert dht_spectrum(N) == MULTIPLICITIES[N - 1]
        assert gauss_sum_multiplicities(N) == MULTIPLICITIES[N - 1]

    @pytest.mark.parametrize("N", [20, 33, 50])
    def test_closed_form_matches_solver(self, N):
        plus, minus = dht_spectrum(N)
        assert plus + minus == N
        assert (plus, minus) == gauss_sum_multiplicities(N)

    def test_trace(self):
        for N in range(1, 40):
            plus, minus = gauss_sum_multiplicities(N)
            assert plus - minus == pytest.approx(np.trace(dht_matrix(N)), abs=1e-9)

    @pytest.mark.parametrize("N", [1, 2, 5, 8, 12])
    def test_fourier_classes(self, N):
        counts = fourier_class_multiplicities(N)
        assert sum(counts) == N
        # a real eigenvector for i^n is a Hartley eigenvector for Re(i^n) - Im(i^n)
        assert (counts[0] + counts[3], counts[1] + counts[2]) == gauss_sum_multiplicities(N)

    def test_spectrum_error_type(self):
        assert issubclass(SpectrumError, RuntimeError)


class TestProjectors:

    @pytest.mark.parametrize("N", [3, 8, 13])
    def test_identities(self, N):
        plus, minus = spectral_projector(N, 1), spectral_projector(N, -1)
        assert np.max(np.abs(plus + minus - np.eye(N))) < 1e-12
        assert np.max(np.abs(plus @ minus)) < 1e-12
        assert np.max(np.abs(plus @ plus - plus)) < 1e-12

    def test_rejects_eigenvalue(self):
        with pytest.raises(ValueError):
            spectral_projector(4, 0)
        with pytest.raises(ValueError):
            eigenspace_membership(4, np.ones(4), 2)

    def test_membership(self):
        N = 7
        assert eigenspace_membership(N, mehta_hartley_vector(N, 0), 1) < 1e-10
        assert eigenspace_membership(N, mehta_hartley_vector(N, 1), 1) == pytest.approx(1.0, abs=1e-8)
        e0 = np.zeros(N)
        e0[0] = 1.0
        assert 0.0 < eigenspace_membership(N, e0, 1) < 1.0

    def test_sign_consistency(self):
        N = 9
        for nu in range(-6, 7):
            lam = -1 if abs(nu) % 2 else 1
            assert eigenspace_membership(N, mehta_hartley_vector(N, nu), lam) < 1e-8

    def test_membership_errors(self):
        with pytest.raises(ValueError, match="zero vector"):
            eigenspace_membership(3, np.zeros(3), 1)
        with pytest.raises(ValueError, match="length"):
            eigenspace_membership(3, np.ones(4), 1)


class TestGram:

    def test_single_vector(self):
        report = gram_rank(hartley_family(6, [0]))
        assert report.rank == 1
        assert report.size == 1
        assert report.min_angle_deg == 90.0

    def test_rank_limited_by_multiplicity(self):
        family = hartley_family(3, [0, 1, 2])
        assert eigenspace_rank_bound(family) == 2
        assert gram_rank(family).rank == 2

    def test_full_rank(self):
        family = hartley_family(5, range(5))
        assert eigenspace_rank_bound(family) == 5
        assert gram_rank(family).rank == 5

    @pytest.mark.parametrize("N, rank", [(3, 2), (5, 5), (7, 6), (9, 9)])
    def test_rank_matches_svd(self, N, rank):
        family = hartley_family(N, range(N))
        columns = family.vectors / np.linalg.norm(family.vectors, axis=0)
        singular = np.linalg.svd(columns, compute_uv=False)
        oracle = int(np.sum(singular > N * np.finfo(float).eps * singular[0]))
        assert oracle == rank
        assert gram_rank(family).rank == rank
        assert eigenspace_rank_bound(family) == rank

    @pytest.mark.parametrize("N", [3, 5, 7, 9])
    def test_positive_semidefinite(self, N):
        report = gram_rank(hartley_family(N, range(N)))
        assert np.array_equal(report.gram, report.gram.T)
        assert report.gram_eigenvalues[-1] > -1e-10 * report.gram_eigenvalues[0]

    def test_not_orthogonal(self):
        report = gram_rank(fourier_family(5, [0, 4]))
        assert abs(report.gram[0, 1]) > 1e-6
        assert report.min_angle_deg < 90.0

    def test_distinct_eigenvalues_are_orthogonal(self):
        family = hartley_family(5, [0, 1])
        u, v = family.vectors.T
        assert abs(u @ v) < 1e-12 * np.linalg.norm(u) * np.linalg.norm(v)

    def test_fourier_bound(self):
        family = fourier_family(5, range(5))
        assert eigenspace_rank_bound(family) == 5

    def test_zero_column(self):
        family = hartley_family(4, [0, 1])
        broken = type(family)(family.N, family.indices, np.zeros_like(family.vectors), family.policy)
        with pytest.raises(ValueError, match="zero-norm"):
            gram_rank(broken)


class TestResidualTable:

    def test_rows(self):
        reports = residual_table(8, range(-2, 3))
        assert [r.index for r in reports] == [-2, -1, 0, 1, 2]
        assert [r.eigenvalue for r in reports] == [1.0, -1.0, 1.0, -1.0, 1.0]
        assert all(r.residual < 1e-10 for r in reports)

    def test_single_row(self):
        (report,) = residual_table(2, [0])
        assert report.eigenvalue == 1.0

    def test_large_sweep(self):
        reports = residual_table(64, range(-12, 13))
        assert len(reports) == 25
        assert all(r.passed(1e-8) for r in reports)

    def test_empty(self):
        assert residual_table(4, []) == []
