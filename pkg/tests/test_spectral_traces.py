"""Tests for eigenvalue multisets, their matching and trace identities."""
import numpy as np
import pytest

import generators
import spectral_traces
from common import InputError


class TestEigenvalues:
    def test_ordering(self):
        spectrum = spectral_traces.eigenvalues_ordered(np.diag([1.0, -2.0, 1j]))
        np.testing.assert_allclose(spectrum.values, [-2.0, 1.0, 1j])
        assert not spectrum.ill_conditioned

    def test_swap_matrix(self):
        spectrum = spectral_traces.eigenvalues_ordered(np.array([[0.0, 1.0], [1.0, 0.0]]))
        np.testing.assert_allclose(np.sort(spectrum.values.real), [-1.0, 1.0], atol=1e-12)
        np.testing.assert_allclose(spectrum.values.imag, 0.0, atol=1e-12)

    def test_nilpotent_is_flagged(self):
        spectrum = spectral_traces.eigenvalues_ordered(np.array([[0.0, 1.0], [0.0, 0.0]]))
        np.testing.assert_allclose(spectrum.values, [0.0, 0.0], atol=1e-12)
        assert spectrum.ill_conditioned
        assert len(spectrum) == 2

    def test_json(self):
        data = spectral_traces.eigenvalues_ordered(np.diag([2.0, 1.0])).to_json()
        assert data["values"] == [[2.0, 0.0], [1.0, 0.0]]


class TestMatching:
    def test_greedy(self):
        holds, mismatch, method = spectral_traces.match_multisets(
            np.array([1.0, 2.0]), np.array([2.0 + 1e-12, 1.0]), 1e-9
        )
        assert holds
        assert method == "greedy"
        assert mismatch <= 1e-11

    def test_bottleneck_rescues_greedy(self):
        holds, mismatch, method = spectral_traces.match_multisets(
            np.array([1.0, 0.6]), np.array([1.39, 0.8]), 0.5
        )
        assert holds
        assert method == "bottleneck"
        assert mismatch == pytest.approx(0.39)

    def test_size_mismatch(self):
        holds, mismatch, method = spectral_traces.match_multisets(
            np.array([1.0]), np.array([1.0, 2.0]), 1.0
        )
        assert not holds
        assert mismatch == float("inf")
        assert method == "size"

    def test_empty(self):
        assert spectral_traces.match_multisets(np.array([]), np.array([]), 0.0)[0]


class TestSpectralIdentities:
    def test_ab_ba_example(self):
        a = np.array([[0.0, 1.0], [0.0, 0.0]])
        b = np.array([[0.0, 0.0], [1.0, 0.0]])
        report = spectral_traces.lambda_ab_equals_ba(a, b)
        assert report.holds
        np.testing.assert_allclose(report.multisets["ab"].values, [1.0, 0.0], atol=1e-12)
        assert report.trace_sum_deviation <= 1e-12

    def test_ab_ba_random(self):
        for seed in range(5):
            a = generators.gen_ginibre(5, seed)
            b = generators.gen_ginibre(5, seed + 40)
            report = spectral_traces.lambda_ab_equals_ba(a, b)
            assert report.holds
            assert set(report.to_json()["multisets"]) == {"ab", "ba"}

    def test_explicit_tolerance(self):
        a = generators.gen_ginibre(3, 1)
        report = spectral_traces.lambda_ab_equals_ba(a, np.eye(3), tol=0.0)
        assert report.tolerance == 0.0
        assert report.max_mismatch == 0.0

    @pytest.mark.parametrize("theta", [0.0, 0.3, 1.0])
    def test_interpolated(self, theta):
        a = generators.gen_ginibre(4, 3)
        b = generators.gen_psd(4, 4)
        report = spectral_traces.lambda_interpolated(a, b, theta)
        assert report.holds
        assert set(report.multisets) == {"ab", "ba", "interpolated"}

    def test_interpolated_singular_b(self):
        a = generators.gen_ginibre(4, 5)
        b = generators.gen_psd(4, 6, allow_singular=True)
        assert spectral_traces.lambda_interpolated(a, b, 0.5).holds

    def test_interpolated_rejects_indefinite_b(self):
        with pytest.raises(InputError):
            spectral_traces.lambda_interpolated(np.eye(2), np.diag([1.0, -1.0]), 0.5)


class TestTraceIdentities:
    def test_theta_identity(self):
        a = generators.gen_ginibre(4, 8)
        b = generators.gen_psd(4, 9)
        for theta in (0.0, 0.5, 0.8, 1.0):
            result = spectral_traces.trace_theta_identity(a, b, theta)
            assert result.holds
            assert len(result.traces) == 3
            assert len(result.to_json()["deviations"]) == 2

    def test_eigenvalue_identity(self):
        for seed in range(3):
            result = spectral_traces.trace_eigenvalue_identity(generators.gen_ginibre(6, seed))
            assert result.holds

    def test_eigenvalue_identity_nilpotent(self):
        result = spectral_traces.trace_eigenvalue_identity(np.array([[0.0, 1.0], [0.0, 0.0]]))
        assert result.holds
        assert result.deviations[0] <= 1e-12

    def test_rejects_rectangular(self):
        with pytest.raises(InputError):
            spectral_traces.trace_eigenvalue_identity(np.ones((2, 3)))
