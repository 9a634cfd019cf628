#!/usr/bin/env python3
# -*- coding: UTF-8 -*-
"""The spectral component checks eigenvalue-multiset identities and
trace equalities at finite dimension with the standard trace:

* `Lambda(ab) = Lambda(ba)` for square `a` and `b`,
* `Lambda(ab) = Lambda(ba) = Lambda(b^(1 - theta) a b^theta)` and the
  matching trace identity for PSD `b`,
* `Tr(a) = sum of the eigenvalues of a` with algebraic multiplicity.

At finite dimension every trace is a multiple of `Tr`, so only the
standard trace is verified. Eigenvalues of non-normal products come
from the Schur-based dense solver of LAPACK and can be ill-conditioned;
reports carry the condition number of the eigenvector matrix.
"""
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

import matrix_kernel
from common import logger
from settings import SETTINGS

# Above this eigenvector condition number a spectrum is flagged as
# possibly defective in match reports.
ILL_CONDITIONED = 1e8


"""MULTISETS"""


@dataclass(frozen=True, eq=False)
class EigenvalueMultiset:
    """Eigenvalues with algebraic multiplicity, ordered by
    non-increasing modulus, then by argument, then by input order.
    """

    values: np.ndarray
    eigenvector_condition: float = 1.0

    def __len__(self):
        return self.values.size

    @property
    def ill_conditioned(self):
        return not self.eigenvector_condition < ILL_CONDITIONED

    def to_json(self):
        return {
            "values": [[float(v.real), float(v.imag)] for v in self.values],
            "eigenvector_condition": float(self.eigenvector_condition),
        }


def _ordered(values):
    values = np.asarray(values, dtype=complex)
    # lexsort uses the last key as the primary one.
    order = np.lexsort((np.arange(values.size), np.angle(values), -np.abs(values)))

    return values[order]


def eigenvalues_ordered(a):
    """All eigenvalues of a square matrix, modulus-ordered.

    :param a: Square matrix.
    :return: `EigenvalueMultiset`.
    """
    a = matrix_kernel.require_square(a, "a")
    values, vectors = scipy.linalg.eig(a)
    condition = float(np.linalg.cond(vectors))
    if not np.isfinite(condition):
        condition = float("inf")

    return EigenvalueMultiset(_ordered(values), condition)


"""MATCHING"""


@dataclass(frozen=True)
class MatchReport:
    """Outcome of matching two or three eigenvalue multisets.
    `trace_sum_deviation` is `|sum Lambda(ab) - Tr(ab)|` where
    applicable.
    """

    holds: bool
    max_mismatch: float
    tolerance: float
    multisets: dict = field(default_factory=dict)
    trace_sum_deviation: float = None
    method: str = "greedy"

    @property
    def ill_conditioned(self):
        return any(m.ill_conditioned for m in self.multisets.values())

    def to_json(self):
        return {
            "holds": self.holds,
            "max_mismatch": self.max_mismatch,
            "tolerance": self.tolerance,
            "method": self.method,
            "trace_sum_deviation": self.trace_sum_deviation,
            "ill_conditioned": self.ill_conditioned,
            "multisets": {name: m.to_json() for name, m in self.multisets.items()},
        }


def _greedy_mismatch(x, y):
    """Pairs every entry of `x` in order with the nearest unused entry
    of `y`; returns the largest paired distance.
    """
    unused = np.ones(y.size, dtype=bool)
    worst = 0.0
    for value in x:
        distances = np.where(unused, np.abs(y - value), np.inf)
        j = int(np.argmin(distances))
        unused[j] = False
        worst = max(worst, float(distances[j]))

    return worst


def _bottleneck_mismatch(x, y):
    """Smallest `d` such that a perfect matching between `x` and `y`
    exists using only pairs at distance <= d.
    """
    distances = np.abs(x[:, np.newaxis] - y[np.newaxis, :])
    candidates = np.unique(distances)
    low, high = 0, candidates.size - 1
    while low < high:
        middle = (low + high) // 2
        graph = csr_matrix((distances <= candidates[middle]).astype(np.int8))
        matching = maximum_bipartite_matching(graph, perm_type="column")
        if np.all(matching >= 0):
            high = middle
        else:
            low = middle + 1

    return float(candidates[low])


def match_multisets(x, y, tol):
    """Matches two eigenvalue lists of equal length within `tol`.

    Greedy nearest-neighbour pairing is tried first; when it leaves a
    pair above `tol`, the optimal min-max (bottleneck) matching decides,
    since clustered eigenvalues can defeat the greedy order.

    :param x: `EigenvalueMultiset` or complex array.
    :param y: `EigenvalueMultiset` or complex array of the same length.
    :param tol: Absolute tolerance.
    :return: A tuple `(holds, max_mismatch, method)`.
    """
    x = _ordered(getattr(x, "values", x))
    y = _ordered(getattr(y, "values", y))
    if x.size != y.size:
        return False, float("inf"), "size"
    if x.size == 0:
        return True, 0.0, "greedy"

    mismatch = _greedy_mismatch(x, y)
    if mismatch <= tol:
        return True, mismatch, "greedy"

    mismatch = min(mismatch, _bottleneck_mismatch(x, y))
    logger.debug("Match Multisets: Greedy failed, bottleneck gives {:.3e}.".format(mismatch))

    return mismatch <= tol, mismatch, "bottleneck"


def _default_spectral_tolerance(a, b):
    norms = matrix_kernel.operator_norm(a) * matrix_kernel.operator_norm(b)
    return SETTINGS.spectral_rtol * (1.0 + norms)


def lambda_ab_equals_ba(a, b, tol=None):
    """Checks `Lambda(ab) = Lambda(ba)` by multiset matching.

    :param a: Square matrix.
    :param b: Square matrix of the same size.
    :param tol: Absolute tolerance, `spectral_rtol * (1 + ||a|| ||b||)`
                if not given.
    :return: `MatchReport`.
    """
    a = matrix_kernel.require_square(a, "a")
    b = matrix_kernel.require_square(b, "b")
    matrix_kernel.require_same_size(a, b)
    if tol is None:
        tol = _default_spectral_tolerance(a, b)

    ab = a @ b
    lambda_ab = eigenvalues_ordered(ab)
    lambda_ba = eigenvalues_ordered(b @ a)
    holds, mismatch, method = match_multisets(lambda_ab, lambda_ba, tol)
    deviation = float(abs(lambda_ab.values.sum() - np.trace(ab)))

    return MatchReport(
        holds, mismatch, float(tol), {"ab": lambda_ab, "ba": lambda_ba}, deviation, method
    )


def lambda_interpolated(a, b, theta, tol=None):
    """Three-way match of `Lambda(ab)`, `Lambda(ba)` and
    `Lambda(b^(1 - theta) a b^theta)` for PSD `b`.
    """
    a = matrix_kernel.require_square(a, "a")
    eig_b = matrix_kernel.require_psd(b, "b")
    b = matrix_kernel.as_matrix(b, "b")
    matrix_kernel.require_same_size(a, b)
    theta = matrix_kernel.require_theta(theta)
    if tol is None:
        tol = _default_spectral_tolerance(a, b)

    ab = a @ b
    middle = matrix_kernel.psd_power(eig_b, 1 - theta) @ a @ matrix_kernel.psd_power(eig_b, theta)
    lambda_ab = eigenvalues_ordered(ab)
    lambda_ba = eigenvalues_ordered(b @ a)
    lambda_middle = eigenvalues_ordered(middle)

    holds_ba, mismatch_ba, method_ba = match_multisets(lambda_ab, lambda_ba, tol)
    holds_middle, mismatch_middle, method_middle = match_multisets(lambda_ab, lambda_middle, tol)
    method = "bottleneck" if "bottleneck" in (method_ba, method_middle) else "greedy"
    deviation = float(abs(lambda_ab.values.sum() - np.trace(ab)))

    return MatchReport(
        holds_ba and holds_middle,
        max(mismatch_ba, mismatch_middle),
        float(tol),
        {"ab": lambda_ab, "ba": lambda_ba, "interpolated": lambda_middle},
        deviation,
        method,
    )


"""TRACES"""


@dataclass(frozen=True)
class TraceIdentityResult:
    """`deviations` holds the two pairwise absolute differences of the
    compared traces.
    """

    holds: bool
    deviations: tuple
    tolerance: float
    traces: tuple = ()

    def to_json(self):
        return {
            "holds": self.holds,
            "deviations": list(self.deviations),
            "tolerance": self.tolerance,
            "traces": [[float(t.real), float(t.imag)] for t in self.traces],
        }


def trace_theta_identity(a, b, theta, rtol=None):
    """`Tr(ab) = Tr(ba) = Tr(b^(1 - theta) a b^theta)` for PSD `b`.

    :param rtol: Relative tolerance, `trace_rtol` if not given. The
                 absolute tolerance is `rtol * (1 + |Tr(ab)|)`.
    :return: `TraceIdentityResult`.
    """
    a = matrix_kernel.require_square(a, "a")
    eig_b = matrix_kernel.require_psd(b, "b")
    b = matrix_kernel.as_matrix(b, "b")
    matrix_kernel.require_same_size(a, b)
    theta = matrix_kernel.require_theta(theta)
    if rtol is None:
        rtol = SETTINGS.trace_rtol

    trace_ab = np.trace(a @ b)
    trace_ba = np.trace(b @ a)
    middle = matrix_kernel.psd_power(eig_b, 1 - theta) @ a @ matrix_kernel.psd_power(eig_b, theta)
    trace_middle = np.trace(middle)

    deviations = (float(abs(trace_ab - trace_ba)), float(abs(trace_ab - trace_middle)))
    tolerance = rtol * (1.0 + float(abs(trace_ab)))

    return TraceIdentityResult(
        max(deviations) <= tolerance, deviations, tolerance, (trace_ab, trace_ba, trace_middle)
    )


def trace_eigenvalue_identity(a, rtol=None):
    """`Tr(a)` equals the sum of the eigenvalues of `a` counted with
    algebraic multiplicity, within `rtol * (1 + n ||a||)`.
    """
    a = matrix_kernel.require_square(a, "a")
    if rtol is None:
        rtol = SETTINGS.trace_rtol

    spectrum = eigenvalues_ordered(a)
    deviation = float(abs(np.trace(a) - spectrum.values.sum()))
    tolerance = rtol * (1.0 + a.shape[0] * matrix_kernel.operator_norm(a))

    return TraceIdentityResult(
        deviation <= tolerance, (deviation,), tolerance, (np.trace(a), spectrum.values.sum())
    )
