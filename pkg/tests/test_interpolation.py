"""Tests for the strip sampling and the boundary submajorizations."""
import numpy as np
import pytest

import generators
import interpolation
from common import InputError
from interpolation import StripGrid


def _contraction(n, seed):
    g = generators.gen_ginibre(n, seed)
    return g / np.linalg.norm(g, 2)


class TestStripAxes:
    def test_defaults_are_symmetric(self):
        thetas, imag_values = interpolation.strip_axes(ymax=2.0, ystep=0.5, thetas=[0.0, 1.0])
        np.testing.assert_allclose(imag_values, [-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0])
        np.testing.assert_array_equal(thetas, [0.0, 1.0])

    def test_bad_step(self):
        with pytest.raises(InputError):
            interpolation.strip_axes(ymax=1.0, ystep=0.0)


class TestStripEvaluate:
    def test_zero_b_gives_constant_trace(self, rng):
        a = generators.gen_hermitian(3, rng)
        c = _contraction(3, 4)
        grid = interpolation.strip_evaluate(a, np.zeros((3, 3)), c, [0.0, 0.5, 1.0], [-1.0, 2.0])
        np.testing.assert_allclose(grid.values, np.full((3, 2), np.trace(a @ c)), atol=1e-12)

    def test_commuting_inputs_are_height_independent(self):
        a = np.diag([1.0, -2.0])
        b = np.diag([0.5, -0.3])
        c = np.diag([0.5, 1.0])
        grid = interpolation.strip_evaluate(a, b, c, [0.0, 0.3], [-3.0, 0.0, 3.0])
        expected = 1.0 * 0.5 * np.exp(0.5) - 2.0 * 1.0 * np.exp(-0.3)
        np.testing.assert_allclose(grid.values, np.full((2, 3), expected), atol=1e-12)

    def test_matches_direct_formula(self, hermitian_pair):
        a, _ = hermitian_pair
        b = generators.gen_hermitian(4, 6, norm_cap=1.0)
        c = _contraction(4, 7)
        grid = interpolation.strip_evaluate(a, b, c, [0.25], [1.5])
        z = 0.25 + 1.5j
        eigenvalues, vectors = np.linalg.eigh(b)
        left = (vectors * np.exp(z * eigenvalues)) @ vectors.conj().T
        right = (vectors * np.exp((1 - z) * eigenvalues)) @ vectors.conj().T
        assert grid.values[0, 0] == pytest.approx(np.trace(left @ a @ right @ c), abs=1e-10)

    def test_zero_contraction(self, hermitian_pair):
        a, b = hermitian_pair
        grid = interpolation.strip_evaluate(a, b / 10, np.zeros((4, 4)), [0.0, 1.0], [0.0])
        assert grid.max_abs == 0.0
        assert grid.bound_constant == 0.0
        assert grid.boundedness()[0]

    def test_workers_match_sequential(self, hermitian_pair):
        a, _ = hermitian_pair
        b = generators.gen_hermitian(4, 2)
        c = _contraction(4, 3)
        thetas, imag_values = interpolation.strip_axes(ymax=2.0, ystep=0.5)
        sequential = interpolation.strip_evaluate(a, b, c, thetas, imag_values)
        threaded = interpolation.strip_evaluate(a, b, c, thetas, imag_values, workers=4)
        np.testing.assert_array_equal(sequential.values, threaded.values)

    def test_bounded_by_a_priori_constant(self, hermitian_pair):
        a, _ = hermitian_pair
        b = generators.gen_hermitian(4, 9)
        c = _contraction(4, 10)
        thetas, imag_values = interpolation.strip_axes(ymax=4.0, ystep=0.5)
        grid = interpolation.strip_evaluate(a, b, c, thetas, imag_values)
        holds, margin, _ = grid.boundedness()
        assert holds
        assert margin < 0

    def test_rejects_bad_inputs(self):
        with pytest.raises(InputError):
            interpolation.strip_evaluate(
                np.eye(2), np.array([[0.0, 1.0], [0.0, 0.0]]), np.eye(2), [0.0], [0.0]
            )
        with pytest.raises(InputError):
            interpolation.strip_evaluate(np.eye(2), np.eye(2), np.eye(2), [1.5], [0.0])

    def test_csv(self):
        grid = interpolation.strip_evaluate(np.eye(2), np.zeros((2, 2)), np.eye(2), [0.0, 1.0],
                                            [-1.0, 0.0, 1.0])
        lines = grid.to_csv().splitlines()
        assert lines[0] == "theta,y,re,im,abs"
        assert len(lines) == 7
        first = [float(x) for x in lines[1].split(",")]
        assert first == pytest.approx([0.0, -1.0, 2.0, 0.0, 2.0])


class TestThreeLines:
    def _grid(self, middle):
        values = np.array([[1.0, 2.0], [middle, 0.5], [0.5, 1.5]], dtype=complex)
        return StripGrid(np.array([0.0, 0.5, 1.0]), np.array([0.0, 1.0]), values, 10.0)

    def test_holds_and_fails(self):
        assert interpolation.three_lines_check(self._grid(1.9)).holds
        result = interpolation.three_lines_check(self._grid(3.0))
        assert not result.holds
        assert result.interior_max == 3.0
        assert result.boundary_max == 2.0

    def test_interior_mask(self):
        values = np.array([[1.0, 1.0], [0.5, 3.0], [1.0, 1.0]], dtype=complex)
        grid = StripGrid(np.array([0.0, 0.5, 1.0]), np.array([0.0, 5.0]), values, 10.0)
        assert not interpolation.three_lines_check(grid).holds
        assert interpolation.three_lines_check(grid, interior_ymax=2.0).holds

    def test_needs_both_boundaries(self):
        grid = StripGrid(np.array([0.0, 0.5]), np.array([0.0]), np.ones((2, 1)), 1.0)
        with pytest.raises(InputError):
            interpolation.three_lines_check(grid)

    def test_constant_function(self, rng):
        a = generators.gen_hermitian(3, rng)
        grid = interpolation.strip_evaluate(a, np.zeros((3, 3)), _contraction(3, 1),
                                            [0.0, 0.5, 1.0], [0.0, 1.0])
        assert interpolation.three_lines_check(grid).holds


class TestBoundarySubmajorization:
    def test_bound_holds_for_hermitian_pairs(self):
        for seed in range(5):
            a = generators.gen_hermitian(4, seed, norm_cap=2.0)
            b = generators.gen_hermitian(4, seed + 100, norm_cap=1.5)
            for theta in (0.0, 0.3, 0.5, 1.0):
                assert interpolation.boundary_submajorization_bound(a, b, theta).holds

    def test_endpoint_is_tight(self, hermitian_pair):
        a, _ = hermitian_pair
        b = generators.gen_hermitian(4, 5)
        verdict = interpolation.boundary_submajorization_bound(a, b, 1.0)
        assert abs(verdict.margin) <= verdict.tolerance_used

    def test_max_bound_for_general_a(self):
        for seed in range(5):
            a = generators.gen_ginibre(3, seed)
            b = generators.gen_hermitian(3, seed + 50, norm_cap=2.0)
            for theta in (0.0, 0.25, 0.5, 1.0):
                assert interpolation.boundary_submajorization_max(a, b, theta).holds

    def test_bound_requires_hermitian_a(self):
        with pytest.raises(InputError):
            interpolation.boundary_submajorization_bound(
                np.array([[0.0, 1.0], [0.0, 0.0]]), np.eye(2), 0.5
            )
