#!/usr/bin/env python3
"""
Tests for the finite and continuous Hartley transforms
"""

import math

import numpy as np
import pytest

from transform import (QuadratureGrid, TransformPlan, as_real_sequence, benchmark_transforms, cas,
                       cas_orthogonality_check, cas_series, dft_apply, dht, dht_apply, dht_fast,
                       dht_matrix, fft_radix2, hartley_continuous, hartley_intertwining_residual,
                       is_power_of_two, make_plan)

INV_SQRT2 = 1.0 / math.sqrt(2.0)


def _reference_dht(f):
    """DHT from numpy's inverse FFT, which carries the exp(+2 pi i rs/N) kernel"""
    F = len(f) * np.fft.ifft(f)
    return (F.real - F.imag) / math.sqrt(len(f))


class TestCas:

    @pytest.mark.parametrize("x, expected", [(0.0, 1.0), (math.pi / 2, -1.0), (math.pi / 4, 0.0)])
    def test_values(self, x, expected):
        assert cas(x) == pytest.approx(expected, abs=1e-15)

    def test_shifted_cosine(self):
        x = np.linspace(-7, 7, 41)
        assert np.allclose(cas(x), math.sqrt(2.0) * np.cos(x + math.pi / 4), atol=1e-14)

    def test_series_first_terms(self):
        assert cas_series(0.0, 1) == 1.0
        assert cas_series(1.0, 2) == 0.0

    def test_series_converges(self):
        assert abs(cas_series(0.5, 30) - cas(0.5)) < 1e-14
        assert abs(cas_series(-2.0, 40) - cas(-2.0)) < 1e-13

    def test_series_rejects_zero_terms(self):
        with pytest.raises(ValueError, match="cas_series"):
            cas_series(1.0, 0)


class TestMatrix:

    def test_small_matrices(self):
        assert np.allclose(dht_matrix(1), [[1.0]])
        assert np.allclose(dht_matrix(2), INV_SQRT2 * np.array([[1.0, 1.0], [1.0, -1.0]]), atol=1e-15)
        assert dht_matrix(4)[1, 3] == pytest.approx(0.5, abs=1e-15)

    @pytest.mark.parametrize("N", [1, 2, 3, 8, 17, 30])
    def test_symmetric_involution(self, N):
        H = dht_matrix(N)
        assert np.array_equal(H, H.T)
        assert np.max(np.abs(H @ H - np.eye(N))) < 1e-12

    @pytest.mark.parametrize("N, bound", [(1, 0.0), (8, 1e-11), (17, 1e-11)])
    def test_cas_orthogonality(self, N, bound):
        assert cas_orthogonality_check(N) <= bound

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            dht_matrix(0)


class TestFiniteTransform:

    def test_examples(self):
        assert dht([3.5]) == pytest.approx([3.5])
        assert dht([1.0, 0.0]) == pytest.approx([INV_SQRT2, INV_SQRT2], abs=1e-15)
        impulse = np.zeros(8)
        impulse[0] = 1.0
        assert np.allclose(dht_fast(impulse), np.full(8, 1.0 / math.sqrt(8)), atol=1e-15)

    def test_involution_and_parseval(self, rng):
        for N in range(1, 129):
            for _ in range(20):
                f = rng.standard_normal(N)
                Hf = dht(f)
                assert np.max(np.abs(dht(Hf) - f)) < 1e-12
                assert abs(np.linalg.norm(Hf) - np.linalg.norm(f)) < 1e-12 * np.linalg.norm(f)

    @pytest.mark.parametrize("N", [3, 5, 12, 31])
    def test_naive_matches_reference(self, N, rng):
        f = rng.standard_normal(N)
        assert np.allclose(dht_apply(TransformPlan(N), f), _reference_dht(f), atol=1e-12)

    @pytest.mark.parametrize("exponent", range(1, 13))
    def test_fast_matches_naive(self, exponent, rng):
        N = 1 << exponent
        f = rng.standard_normal(N)
        naive = dht_apply(TransformPlan(N, "naive"), f)
        fast = dht_fast(f)
        assert np.max(np.abs(fast - naive)) < 1e-10 * np.max(np.abs(naive))

    def test_fast_needs_power_of_two(self):
        with pytest.raises(ValueError, match="power of two"):
            dht_fast(np.ones(12))
        with pytest.raises(ValueError):
            TransformPlan(12, "fast")

    def test_plan_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dht_apply"):
            dht_apply(make_plan(4), np.ones(5))

    def test_make_plan_auto(self):
        assert make_plan(16).method == "fast"
        assert make_plan(12).method == "naive"
        assert make_plan(16, "naive").method == "naive"
        with pytest.raises(ValueError):
            make_plan(8, "chirp")

    def test_power_of_two(self):
        assert [n for n in range(20) if is_power_of_two(n)] == [1, 2, 4, 8, 16]

    @pytest.mark.parametrize("bad", [[], [[1.0, 2.0]], [1.0, float("nan")], [float("inf")]])
    def test_rejects_bad_sequences(self, bad):
        with pytest.raises(ValueError):
            as_real_sequence(bad)


class TestFourier:

    def test_examples(self):
        assert dft_apply([2.0 + 1.0j]) == pytest.approx([2.0 + 1.0j])
        assert dft_apply([1.0, 0.0]) == pytest.approx([INV_SQRT2, INV_SQRT2])
        assert np.allclose(dft_apply([1.0, 1.0, 1.0, 1.0]), [2.0, 0.0, 0.0, 0.0], atol=1e-15)

    def test_hartley_is_real_minus_imaginary(self, rng):
        f = rng.standard_normal(13)
        F = dft_apply(f)
        assert np.allclose(dht(f), F.real - F.imag, atol=1e-13)

    @pytest.mark.parametrize("N", [1, 2, 8, 64, 512])
    def test_fft_radix2_sign_convention(self, N, rng):
        z = rng.standard_normal(N) + 1j * rng.standard_normal(N)
        assert np.allclose(fft_radix2(z), N * np.fft.ifft(z), atol=1e-10)

    def test_fft_radix2_rejects_length(self):
        with pytest.raises(ValueError, match="fft_radix2"):
            fft_radix2(np.ones(6))


class TestContinuous:

    def test_gaussian_integral(self):
        value = hartley_continuous(lambda x: np.exp(-0.5 * x * x), [0.0], QuadratureGrid(L=12.0, M=4001))
        assert value[0] == pytest.approx(1.0, abs=1e-10)

    def test_gaussian_is_fixed(self):
        lam = np.linspace(-5, 5, 21)
        value = hartley_continuous(lambda x: np.exp(-0.5 * x * x), lam)
        assert np.max(np.abs(value - np.exp(-0.5 * lam * lam))) < 1e-8

    def test_odd_hermite_function(self):
        value = hartley_continuous(lambda x: x * np.exp(-0.5 * x * x), [1.0])
        assert value[0] == pytest.approx(-math.exp(-0.5), abs=1e-8)

    def test_shifted_gaussian(self):
        c = 0.7
        lam = np.linspace(-4, 4, 17)
        value = hartley_continuous(lambda x: np.exp(-0.5 * (x - c) ** 2), lam)
        assert np.max(np.abs(value - np.exp(-0.5 * lam * lam) * cas(c * lam))) < 1e-8

    def test_plain_dx_weights(self):
        x, w = QuadratureGrid(M=60, rule="gauss_hermite").rule_points()
        assert np.sum(w * np.exp(-x * x)) == pytest.approx(math.sqrt(math.pi), rel=1e-12)

    def test_intertwining(self):
        lam = np.linspace(-3, 3, 13)
        f = lambda x: np.exp(-0.5 * x * x) * (1.0 + x)
        df = lambda x: np.exp(-0.5 * x * x) * (1.0 - x - x * x)
        assert hartley_intertwining_residual(f, df, lam) < 1e-8

    def test_non_finite_integrand(self):
        with pytest.raises(ValueError, match="non-finite"):
            hartley_continuous(lambda x: np.exp(x * x * x), [0.0], QuadratureGrid(L=12.0, M=101))

    @pytest.mark.parametrize("kwargs", [{"rule": "simpson"}, {"M": 1}, {"L": 0.0}])
    def test_grid_validation(self, kwargs):
        with pytest.raises(ValueError, match="QuadratureGrid"):
            QuadratureGrid(**kwargs)


class TestBenchmark:

    def test_rows(self):
        rows = benchmark_transforms([2, 3], seed=1, repeats=1)
        assert [r[0] for r in rows] == [4, 8]
        assert all(r[1] > 0 and r[2] > 0 for r in rows)

    def test_scaling(self):
        (_, naive_small, fast_small), (_, naive_large, fast_large) = \
            benchmark_transforms([10, 12], seed=0, repeats=5)
        assert fast_large / fast_small < 8
        assert naive_large / naive_small > 10
