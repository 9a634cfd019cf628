#!/usr/bin/env python3
# -*- coding: UTF-8 -*-
"""The matrix kernel component holds the dense complex linear algebra
that every other component is built on: validation and file format of
matrices, singular value and Hermitian eigen decompositions, the
matrix exponential, fractional powers of positive matrices and the
polar decomposition.

Matrices are plain two-dimensional complex `numpy` arrays. All
functions are pure and never modify their inputs.
"""
import json
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from common import InputError
from settings import SETTINGS


"""RESULT TYPES"""


@dataclass(frozen=True)
class SvdResult:
    """Thin singular value decomposition `a = u @ diag(s) @ v^*`.
    `u` and `v` have orthonormal columns, `singular_values` are sorted
    non-increasing.
    """

    u: np.ndarray
    singular_values: np.ndarray
    v: np.ndarray

    def rank(self, threshold=None):
        """Number of singular values that are not treated as zero."""
        return numerical_rank_of_values(self.singular_values, threshold)

    def reconstruct(self):
        return (self.u * self.singular_values) @ self.v.conj().T


@dataclass(frozen=True)
class EigResult:
    """Eigen decomposition of a Hermitian matrix with real eigenvalues
    in ascending order and orthonormal eigenvector columns.
    """

    eigenvalues: np.ndarray
    vectors: np.ndarray

    def apply(self, function):
        """Spectral calculus: `V @ diag(function(eigenvalues)) @ V^*`."""
        return (self.vectors * function(self.eigenvalues)) @ self.vectors.conj().T


@dataclass(frozen=True)
class PolarResult:
    """`a = partial_isometry @ modulus` with `modulus = |a|`."""

    partial_isometry: np.ndarray
    modulus: np.ndarray


"""VALIDATION"""


def as_matrix(x, name="matrix"):
    """Converts array-like input into a complex two-dimensional array
    and checks the Matrix invariants.

    :param x: Anything `numpy` can turn into a 2-D array.
    :param name: Name used in error messages.
    :return: A new complex `ndarray`.
    """
    try:
        a = np.array(x, dtype=complex)
    except (TypeError, ValueError) as e:
        raise InputError("{} is not numeric: {}".format(name, e))

    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise InputError("{} must be a non-empty 2-D matrix, got shape {}.".format(name, a.shape))
    if not np.all(np.isfinite(a)):
        raise InputError("{} has non-finite entries.".format(name))

    return a


def operator_norm(a):
    """Largest singular value of `a`."""
    a = np.asarray(a)
    if a.size == 0:
        return 0.0
    return float(np.linalg.norm(a, 2))


def scaled_tolerance(relative, a):
    """Absolute tolerance `relative * (1 + ||a||)` for checks on `a`."""
    return relative * (1.0 + operator_norm(a))


def require_square(a, name="matrix"):
    a = as_matrix(a, name)
    if a.shape[0] != a.shape[1]:
        raise InputError("{} must be square, got shape {}.".format(name, a.shape))

    return a


def require_same_size(*matrices):
    sizes = {m.shape for m in matrices}
    if len(sizes) != 1:
        raise InputError("Matrices must share one square size, got {}.".format(sorted(sizes)))

    return


def hermitian_defect(a):
    """Operator norm of `a - a^*`."""
    return operator_norm(a - a.conj().T)


def is_hermitian(a, tol=None):
    """Whether `a` is square and Hermitian within
    `hermitian_tol * (1 + ||a||)`.
    """
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    if tol is None:
        tol = scaled_tolerance(SETTINGS.hermitian_tol, a)

    return hermitian_defect(a) <= tol


def require_hermitian(a, name="matrix"):
    """Validates a Hermitian input. Inputs failing the check are
    rejected, never symmetrized.
    """
    a = require_square(a, name)
    if not is_hermitian(a):
        raise InputError(
            "{} is not Hermitian: ||a - a*|| = {:.3e}.".format(name, hermitian_defect(a))
        )

    return a


def require_psd(a, name="matrix"):
    """Validates a positive semi-definite input and returns its eigen
    decomposition. Eigenvalues in `[-psd_tol, 0)` and those below
    `rank_threshold` times the largest one are set to exactly zero, so
    fractional powers of a rank-deficient input stay rank-deficient.
    """
    a = require_hermitian(a, name)
    result = eig_hermitian(a)
    floor = -scaled_tolerance(SETTINGS.psd_tol, a)
    if result.eigenvalues.size and result.eigenvalues[0] < floor:
        raise InputError(
            "{} is not positive semi-definite: smallest eigenvalue {:.3e}.".format(
                name, result.eigenvalues[0]
            )
        )

    eigenvalues = np.maximum(result.eigenvalues, 0.0)
    if eigenvalues.size:
        eigenvalues[eigenvalues <= SETTINGS.rank_threshold * eigenvalues.max()] = 0.0

    return EigResult(eigenvalues, result.vectors)


def require_theta(theta):
    """Interpolation parameters are accepted on the closed interval."""
    theta = float(theta)
    if not 0.0 <= theta <= 1.0:
        raise InputError("theta must lie in [0, 1], got {}.".format(theta))

    return theta


"""DECOMPOSITIONS"""


def svd(a):
    """Thin singular value decomposition.

    :param a: A finite matrix of any shape.
    :return: `SvdResult` with `min(rows, cols)` singular values.
    """
    a = as_matrix(a)
    u, s, vh = scipy.linalg.svd(a, full_matrices=False, lapack_driver="gesdd")

    return SvdResult(u, s, vh.conj().T)


def singular_values(a):
    """Singular values only, sorted non-increasing."""
    a = as_matrix(a)
    return scipy.linalg.svdvals(a)


def numerical_rank_of_values(values, threshold=None):
    """Counts values above `threshold * max(values)`. Values below the
    threshold are reported by `svd` as computed but treated as zero
    here.
    """
    if threshold is None:
        threshold = SETTINGS.rank_threshold
    values = np.asarray(values, dtype=float)
    if values.size == 0 or values[0] <= 0.0:
        return 0

    return int(np.count_nonzero(values > threshold * values.max()))


def numerical_rank(a, threshold=None):
    return numerical_rank_of_values(singular_values(a), threshold)


def support_projection(c, threshold=None):
    """Orthogonal projection onto the range of `|c|`, the support s(c).
    Its trace equals the numerical rank of `c`.
    """
    result = svd(c)
    r = result.rank(threshold)
    v_r = result.v[:, :r]

    return v_r @ v_r.conj().T


def eig_hermitian(a):
    """Eigen decomposition of a Hermitian matrix.

    :param a: Square, Hermitian within `hermitian_tol * (1 + ||a||)`.
    :return: `EigResult` with ascending real eigenvalues.
    """
    a = require_square(a)
    if not is_hermitian(a):
        raise InputError(
            "eig_hermitian needs a Hermitian input: ||a - a*|| = {:.3e}.".format(
                hermitian_defect(a)
            )
        )
    eigenvalues, vectors = scipy.linalg.eigh(a)

    return EigResult(eigenvalues, vectors)


"""SPECTRAL CALCULUS"""


def exp_hermitian(b, z=1.0):
    """`e^{zb}` for Hermitian `b` and any complex `z`, computed as
    `V diag(e^{z lambda}) V^*`. This is the analytic continuation used
    on the interpolation strip.
    """
    result = b if isinstance(b, EigResult) else eig_hermitian(b)

    return result.apply(lambda values: np.exp(z * values))


def matrix_exp(a, route="auto"):
    """Matrix exponential.

    The general route is scaling and squaring with Pade approximants
    (`scipy.linalg.expm`). Hermitian inputs take the spectral route,
    so both are available for a cross-check.

    :param a: A square matrix.
    :param route: `auto`, `pade` or `spectral`.
    :return: `e^a`.
    """
    a = require_square(a)
    if route == "pade":
        return scipy.linalg.expm(a)
    if route == "spectral":
        return exp_hermitian(a)
    if route != "auto":
        raise InputError("Unknown matrix exponential route `{}`.".format(route))

    if is_hermitian(a):
        return exp_hermitian(a)

    return scipy.linalg.expm(a)


def psd_power(b, theta):
    """Fractional power `b^theta` of a positive semi-definite matrix.
    Small negative eigenvalues within `psd_tol` are clamped to zero and
    `0^0` is taken as 1, so `b^0` is the identity.

    :param b: Square Hermitian PSD matrix, or its `EigResult`.
    :param theta: Exponent in [0, 1].
    :return: Hermitian PSD matrix.
    """
    theta = require_theta(theta)
    result = b if isinstance(b, EigResult) else require_psd(b, "b")

    return result.apply(lambda values: np.power(np.maximum(values, 0.0), theta))


def polar(a):
    """Polar decomposition `a = u |a|` with `u` a partial isometry whose
    initial space is the support of `|a|`.

    :param a: A square matrix.
    :return: `PolarResult`.
    """
    a = require_square(a)
    result = svd(a)
    r = result.rank()
    w_r = result.u[:, :r]
    v_r = result.v[:, :r]

    modulus = (result.v * result.singular_values) @ result.v.conj().T
    modulus = (modulus + modulus.conj().T) / 2
    partial_isometry = w_r @ v_r.conj().T

    return PolarResult(partial_isometry, modulus)


"""MATRIX FILE FORMAT"""


def matrix_from_json(data):
    """Builds a matrix from the shared JSON form
    `{"rows": n, "cols": m, "entries": [[re, im], ...]}` (row-major).

    :param data: The decoded JSON object.
    :return: A complex `ndarray`.
    """
    try:
        rows = int(data["rows"])
        cols = int(data["cols"])
        entries = data["entries"]
    except (KeyError, TypeError, ValueError) as e:
        raise InputError("Matrix JSON needs `rows`, `cols` and `entries`: {}".format(e))

    if rows < 1 or cols < 1:
        raise InputError("Matrix JSON has non-positive shape {}x{}.".format(rows, cols))
    if not isinstance(entries, list):
        raise InputError("Matrix JSON `entries` must be a list.")
    if len(entries) != rows * cols:
        raise InputError(
            "Matrix JSON declares {}x{} but has {} entries.".format(rows, cols, len(entries))
        )

    values = []
    for entry in entries:
        if isinstance(entry, (int, float)):
            values.append(complex(entry))
        elif isinstance(entry, list) and len(entry) == 2:
            try:
                values.append(complex(float(entry[0]), float(entry[1])))
            except (TypeError, ValueError):
                raise InputError("Matrix entry {} is not a pair of numbers.".format(entry))
        else:
            raise InputError("Matrix entry {} is not a [re, im] pair.".format(entry))

    return as_matrix(np.array(values, dtype=complex).reshape(rows, cols))


def matrix_to_json(a):
    a = as_matrix(a)
    entries = [[float(z.real), float(z.imag)] for z in a.reshape(-1)]

    return {"rows": a.shape[0], "cols": a.shape[1], "entries": entries}


def load_json(file_path):
    with open(file_path, "r", encoding="utf-8") as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise InputError("{} is not valid JSON: {}".format(file_path, e))


def load_matrix(file_path):
    return matrix_from_json(load_json(file_path))


def save_matrix(file_path, a):
    with open(file_path, "w", encoding="utf-8") as f:
        json.dump(matrix_to_json(a), f)

    return
