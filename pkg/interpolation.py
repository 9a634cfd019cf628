#!/usr/bin/env python3
# -*- coding: UTF-8 -*-
"""The interpolation component checks the three-lines mechanism behind
the submajorization `e^{theta b} a e^{(1 - theta) b} <<< a e^b` for
Hermitian `a` and `b`.

For a contraction `c` the function
`F(z) = Tr(e^{zb} a e^{(1 - z)b} c)` is entire and bounded on the strip
`0 <= Re z <= 1`. It is sampled on a grid of vertical lines
`Re z = theta` and heights `Im z = y`. The y-grid is truncated (the
default is |y| <= 8): `F` is almost periodic in y through the factors
`e^{i y lambda}`, so the grid is a verification sample and not a
proof.
"""
import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

import matrix_kernel
import rearrangement
from common import InputError
from settings import SETTINGS


"""STRIP GRID"""


@dataclass(frozen=True, eq=False)
class StripGrid:
    """`values[i, j] = F(thetas[i] + 1j * imag_values[j])` together with
    the a-priori bound `t * ||a|| * e^{2 ||b||}` on `|F|`.
    """

    thetas: np.ndarray
    imag_values: np.ndarray
    values: np.ndarray
    bound_constant: float

    @property
    def max_abs(self):
        return float(np.abs(self.values).max()) if self.values.size else 0.0

    def boundedness(self, rtol=None):
        """Whether every sampled `|F|` respects the bound.

        :return: A tuple `(holds, margin, tolerance)` where margin is
                 `max |F| - bound_constant`.
        """
        if rtol is None:
            rtol = SETTINGS.rtol
        tolerance = rtol * (1.0 + self.bound_constant)
        margin = self.max_abs - self.bound_constant

        return margin <= tolerance, margin, tolerance

    def to_csv(self):
        """The grid as CSV text with columns theta, y, re, im, abs."""
        output = io.StringIO()
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(["theta", "y", "re", "im", "abs"])
        for i, theta in enumerate(self.thetas):
            for j, y in enumerate(self.imag_values):
                value = self.values[i, j]
                row = [float(theta), float(y), value.real, value.imag, abs(value)]
                writer.writerow([repr(float(x)) for x in row])

        return output.getvalue()


@dataclass(frozen=True)
class ThreeLinesResult:
    holds: bool
    interior_max: float
    boundary_max: float
    tolerance: float


def strip_axes(ymax=None, ystep=None, thetas=None):
    """Default sampling axes of the strip.

    :return: A tuple `(thetas, imag_values)` of arrays.
    """
    ymax = SETTINGS.strip_ymax if ymax is None else float(ymax)
    ystep = SETTINGS.strip_ystep if ystep is None else float(ystep)
    thetas = SETTINGS.strip_thetas if thetas is None else thetas
    if not ystep > 0 or not ymax >= 0:
        raise InputError("Strip grid needs ystep > 0 and ymax >= 0.")

    count = int(round(2 * ymax / ystep)) + 1
    imag_values = np.linspace(-ymax, ymax, count)

    return np.asarray(thetas, dtype=float), imag_values


def _row_values(weights, gaps, theta, imag_values):
    z = theta + 1j * imag_values
    return np.exp(np.outer(z, gaps)) @ weights


def strip_evaluate(a, b, c, thetas, imag_values, workers=1):
    """Samples `F(z) = Tr(e^{zb} a e^{(1 - z)b} c)` on the strip.

    With `b = V diag(lambda) V^*`, `a' = V^* a V` and `c' = V^* c V`,
    `F(z) = sum_{j,k} a'_{jk} c'_{kj} e^{lambda_k} e^{z (lambda_j - lambda_k)}`,
    which is the spectral calculus of `b` evaluated in its eigenbasis.
    Rows are independent, so `workers > 1` evaluates them on threads
    with results identical to the sequential evaluation.

    :param a: Square matrix.
    :param b: Hermitian matrix of the same size.
    :param c: Square matrix of the same size, normally a contraction.
    :param thetas: Real parts in [0, 1].
    :param imag_values: Imaginary parts.
    :param workers: Number of threads.
    :return: `StripGrid`.
    """
    a = matrix_kernel.require_square(a, "a")
    b = matrix_kernel.require_hermitian(b, "b")
    c = matrix_kernel.require_square(c, "c")
    matrix_kernel.require_same_size(a, b, c)
    thetas = np.asarray(thetas, dtype=float).reshape(-1)
    imag_values = np.asarray(imag_values, dtype=float).reshape(-1)
    for theta in thetas:
        matrix_kernel.require_theta(theta)

    eig = matrix_kernel.eig_hermitian(b)
    lam = eig.eigenvalues
    vectors = eig.vectors
    a_rot = vectors.conj().T @ a @ vectors
    c_rot = vectors.conj().T @ c @ vectors
    weights = (a_rot * c_rot.T * np.exp(lam)[np.newaxis, :]).reshape(-1)
    gaps = (lam[:, np.newaxis] - lam[np.newaxis, :]).reshape(-1)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            rows = list(
                executor.map(lambda theta: _row_values(weights, gaps, theta, imag_values), thetas)
            )
    else:
        rows = [_row_values(weights, gaps, theta, imag_values) for theta in thetas]
    values = np.array(rows).reshape(thetas.size, imag_values.size)

    t = matrix_kernel.numerical_rank(c)
    bound = t * max(1.0, matrix_kernel.operator_norm(c)) * matrix_kernel.operator_norm(a)
    bound *= np.exp(2 * matrix_kernel.operator_norm(b))

    return StripGrid(thetas, imag_values, values, float(bound))


def three_lines_check(grid, tol=None, interior_ymax=None):
    """Compares the largest `|F|` on interior lines with the largest on
    the boundary lines `Re z = 0` and `Re z = 1`.

    :param grid: A `StripGrid` containing both boundary lines.
    :param tol: Absolute tolerance, `three_lines_rtol * (1 + boundary_max)`
                if not given.
    :param interior_ymax: Only interior points with `|y| <= interior_ymax`
                          are compared, all if `None`. The boundary lines
                          then extend past the compared interior range.
    :return: `ThreeLinesResult`.
    """
    on_left = np.isclose(grid.thetas, 0.0, rtol=0.0, atol=1e-12)
    on_right = np.isclose(grid.thetas, 1.0, rtol=0.0, atol=1e-12)
    if not on_left.any() or not on_right.any():
        raise InputError("The strip grid must contain the lines theta = 0 and theta = 1.")

    moduli = np.abs(grid.values)
    boundary = on_left | on_right
    interior = ~boundary[:, np.newaxis] & np.ones(moduli.shape, dtype=bool)
    if interior_ymax is not None:
        interior &= (np.abs(grid.imag_values) <= interior_ymax)[np.newaxis, :]
    boundary_max = float(moduli[boundary].max()) if moduli[boundary].size else 0.0
    interior_max = float(moduli[interior].max()) if interior.any() else 0.0
    if tol is None:
        tol = SETTINGS.three_lines_rtol * (1.0 + boundary_max)

    return ThreeLinesResult(interior_max <= boundary_max + tol, interior_max, boundary_max, tol)


"""BOUNDARY SUBMAJORIZATION"""


def _exp_sandwich(eig, a, theta):
    """`e^{theta b} a e^{(1 - theta) b}` from the eigendecomposition of b."""
    exp_left = matrix_kernel.exp_hermitian(eig, theta)
    return exp_left @ a @ matrix_kernel.exp_hermitian(eig, 1 - theta)


def boundary_submajorization_bound(a, b, theta):
    """Verdict of `e^{theta b} a e^{(1 - theta) b} <<< a e^b` for
    Hermitian `a` and `b`.
    """
    a = matrix_kernel.require_hermitian(a, "a")
    b = matrix_kernel.require_hermitian(b, "b")
    matrix_kernel.require_same_size(a, b)
    theta = matrix_kernel.require_theta(theta)

    eig = matrix_kernel.eig_hermitian(b)
    left = _exp_sandwich(eig, a, theta)
    right = a @ matrix_kernel.exp_hermitian(eig, 1.0)

    return rearrangement.submajorizes(
        rearrangement.profile_of(left), rearrangement.profile_of(right)
    )


def boundary_submajorization_max(a, b, theta):
    """Verdict of `e^{theta b} a e^{(1 - theta) b} <<< max{mu(a e^b), mu(e^b a)}`
    for arbitrary square `a` and Hermitian `b`.
    """
    a = matrix_kernel.require_square(a, "a")
    b = matrix_kernel.require_hermitian(b, "b")
    matrix_kernel.require_same_size(a, b)
    theta = matrix_kernel.require_theta(theta)

    eig = matrix_kernel.eig_hermitian(b)
    exp_b = matrix_kernel.exp_hermitian(eig, 1.0)
    left = _exp_sandwich(eig, a, theta)
    right = rearrangement.profile_max(
        rearrangement.profile_of(a @ exp_b), rearrangement.profile_of(exp_b @ a)
    )

    return rearrangement.submajorizes(rearrangement.profile_of(left), right)
