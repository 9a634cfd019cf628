"""Tests for the dense linear algebra kernel."""
import numpy as np
import pytest
import scipy.linalg

import generators
import matrix_kernel
from common import InputError


def _random_hermitian(rng, n):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (g + g.conj().T) / 2


class TestValidation:
    def test_rejects_non_finite(self):
        with pytest.raises(InputError):
            matrix_kernel.as_matrix([[1.0, np.nan], [0.0, 1.0]])

    def test_rejects_vectors_and_empty(self):
        with pytest.raises(InputError):
            matrix_kernel.as_matrix([1.0, 2.0])
        with pytest.raises(InputError):
            matrix_kernel.as_matrix(np.zeros((0, 3)))

    def test_require_square(self):
        with pytest.raises(InputError):
            matrix_kernel.require_square(np.ones((2, 3)))

    def test_require_same_size(self):
        with pytest.raises(InputError):
            matrix_kernel.require_same_size(np.eye(2), np.eye(3))

    def test_hermitian_check_uses_tolerance(self):
        a = np.array([[1.0, 1e-14], [0.0, 1.0]])
        assert matrix_kernel.is_hermitian(a)
        assert not matrix_kernel.is_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]))
        with pytest.raises(InputError):
            matrix_kernel.require_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_require_psd(self):
        with pytest.raises(InputError):
            matrix_kernel.require_psd(np.diag([1.0, -1.0]))

        result = matrix_kernel.require_psd(np.diag([1.0, 1e-20]))
        np.testing.assert_array_equal(result.eigenvalues, [0.0, 1.0])

    def test_require_theta(self):
        assert matrix_kernel.require_theta(0) == 0.0
        assert matrix_kernel.require_theta(1) == 1.0
        with pytest.raises(InputError):
            matrix_kernel.require_theta(1.5)


class TestDecompositions:
    def test_svd_reconstructs(self, rng):
        a = rng.standard_normal((5, 3)) + 1j * rng.standard_normal((5, 3))
        result = matrix_kernel.svd(a)
        assert result.singular_values.shape == (3,)
        np.testing.assert_allclose(result.reconstruct(), a, atol=1e-12)
        assert np.all(np.diff(result.singular_values) <= 0)

    def test_numerical_rank(self):
        assert matrix_kernel.numerical_rank(np.diag([1.0, 1e-20, 0.0])) == 1
        assert matrix_kernel.numerical_rank(np.zeros((3, 3))) == 0
        assert matrix_kernel.numerical_rank(np.eye(3)) == 3

    def test_support_projection(self, rng):
        c = np.outer(rng.standard_normal(4), rng.standard_normal(4)).astype(complex)
        p = matrix_kernel.support_projection(c)
        np.testing.assert_allclose(p @ p, p, atol=1e-12)
        assert np.trace(p).real == pytest.approx(1.0)
        np.testing.assert_allclose(c @ p, c, atol=1e-12)

    def test_eig_hermitian_rejects_non_hermitian(self):
        with pytest.raises(InputError):
            matrix_kernel.eig_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]))


class TestSpectralCalculus:
    def test_exp_hermitian_matches_pade(self, rng):
        h = _random_hermitian(rng, 5)
        np.testing.assert_allclose(
            matrix_kernel.exp_hermitian(h), scipy.linalg.expm(h), rtol=1e-10, atol=1e-10
        )

    def test_exp_routes_agree(self, rng):
        h = _random_hermitian(rng, 4)
        spectral = matrix_kernel.matrix_exp(h, route="spectral")
        pade = matrix_kernel.matrix_exp(h, route="pade")
        np.testing.assert_allclose(spectral, pade, rtol=1e-10, atol=1e-10)
        with pytest.raises(InputError):
            matrix_kernel.matrix_exp(h, route="taylor")

    def test_exp_of_nilpotent(self):
        a = np.array([[0.0, 1.0], [0.0, 0.0]])
        np.testing.assert_allclose(matrix_kernel.matrix_exp(a), [[1.0, 1.0], [0.0, 1.0]])

    def test_complex_exponent_is_unitary_for_imaginary_z(self, rng):
        h = _random_hermitian(rng, 3)
        u = matrix_kernel.exp_hermitian(h, 2.5j)
        np.testing.assert_allclose(u @ u.conj().T, np.eye(3), atol=1e-12)

    def test_psd_power(self):
        b = np.diag([4.0, 0.0])
        np.testing.assert_allclose(matrix_kernel.psd_power(b, 0.5), np.diag([2.0, 0.0]))
        np.testing.assert_allclose(matrix_kernel.psd_power(b, 0.0), np.eye(2))
        np.testing.assert_allclose(matrix_kernel.psd_power(b, 1.0), b)

    def test_exp_inverse(self, rng):
        for n in (2, 3, 5):
            a = generators.gen_ginibre(n, rng)
            a = a * (2.0 / np.linalg.norm(a, 2))
            for route in ("auto", "pade"):
                forward = matrix_kernel.matrix_exp(a, route)
                np.testing.assert_allclose(
                    forward @ matrix_kernel.matrix_exp(-a, route), np.eye(n), atol=1e-10
                )
            h = generators.gen_hermitian(n, rng, norm_cap=2.0)
            forward = matrix_kernel.matrix_exp(h, "spectral")
            np.testing.assert_allclose(
                forward @ matrix_kernel.matrix_exp(-h, "spectral"), np.eye(n), atol=1e-10
            )

    @pytest.mark.parametrize("singular", [False, True])
    def test_psd_power_semigroup(self, rng, singular):
        for n in (2, 4):
            b = generators.gen_psd(n, rng, allow_singular=singular)
            scale = np.linalg.norm(b, 2)
            for theta in np.linspace(0.0, 1.0, 9):
                power = matrix_kernel.psd_power(b, theta)
                product = power @ matrix_kernel.psd_power(b, 1.0 - theta)
                np.testing.assert_allclose(product, b, atol=1e-10 * (1.0 + scale))

    def test_psd_power_rank_deficient_stays_rank_deficient(self):
        b = np.diag([1.0, 1e-18])
        np.testing.assert_allclose(matrix_kernel.psd_power(b, 0.1), np.diag([1.0, 0.0]))

    def test_polar(self, rng):
        a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        a[:, 0] = 0.0
        result = matrix_kernel.polar(a)
        np.testing.assert_allclose(result.partial_isometry @ result.modulus, a, atol=1e-12)
        u = result.partial_isometry
        np.testing.assert_allclose(u @ u.conj().T @ u, u, atol=1e-12)


class TestMatrixFiles:
    def test_round_trip(self, tmp_path, rng):
        a = rng.standard_normal((2, 3)) + 1j * rng.standard_normal((2, 3))
        path = tmp_path / "a.json"
        matrix_kernel.save_matrix(path, a)
        np.testing.assert_array_equal(matrix_kernel.load_matrix(path), a)

    def test_plain_numbers_accepted(self):
        a = matrix_kernel.matrix_from_json({"rows": 1, "cols": 2, "entries": [1, [0, 2]]})
        np.testing.assert_array_equal(a, [[1.0, 2j]])

    @pytest.mark.parametrize(
        "data",
        [
            {"rows": 2, "cols": 2, "entries": [[1, 0]] * 3},
            {"rows": 1, "cols": 1, "entries": [[1, 2, 3]]},
            {"rows": 1, "cols": 1, "entries": [["nan", 0]]},
            {"rows": 1, "cols": 1, "entries": [["x", 0]]},
            {"rows": 1, "cols": 1, "entries": [[None, 0]]},
            {"rows": 1, "cols": 1, "entries": [[1, {}]]},
            {"rows": 0, "cols": 1, "entries": []},
            {"cols": 1, "entries": [1]},
        ],
    )
    def test_rejects_malformed(self, data):
        with pytest.raises(InputError):
            matrix_kernel.matrix_from_json(data)

    def test_invalid_json_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(InputError):
            matrix_kernel.load_matrix(path)
