#!/usr/bin/env python3
# -*- coding: UTF-8 -*-
"""The duality component realizes the variational description of Ky
Fan partial sums: the sum of the top k singular values of `a` is the
supremum of `|Tr(a c)|` over contractions `c` whose support projection
has trace (rank) at most k. The supremum is attained by a certificate
built from the singular value decomposition, and random feasible
contractions give the lower-bound side.
"""
from dataclasses import dataclass

import numpy as np

import generators
import matrix_kernel
import rearrangement
from common import InputError, logger
from settings import SETTINGS


"""CERTIFICATES"""


@dataclass(frozen=True)
class ContractionCertificate:
    """A contraction `c` (shape `cols x rows` of the decomposed `a`)
    with `support_rank` = rank of s(c) and `attained` = `|Tr(a c)|`.
    """

    c: np.ndarray
    support_rank: int
    attained: float

    def is_valid(self, k, rtol=None):
        """Checks the certificate invariants against a rank budget."""
        if rtol is None:
            rtol = SETTINGS.rtol
        norm_ok = matrix_kernel.operator_norm(self.c) <= 1.0 + rtol
        rank_ok = matrix_kernel.numerical_rank(self.c) == self.support_rank <= k

        return norm_ok and rank_ok

    def to_json(self, reference=None):
        data = {
            "c": matrix_kernel.matrix_to_json(self.c),
            "support_rank": self.support_rank,
            "attained": self.attained,
        }
        if reference is not None:
            data["ky_fan_reference"] = reference

        return data


def _require_rank_budget(a, k):
    if int(k) != k or not 0 <= k <= min(a.shape):
        raise InputError("k must be an integer in [0, {}], got {}.".format(min(a.shape), k))

    return int(k)


def optimal_contraction(a, k):
    """Builds the optimal certificate `c = p v^*`, where `p` is the
    spectral projection of `|a|` onto its top k singular directions and
    `a = v |a|` is the polar decomposition. In SVD terms
    `c = V_k W_k^*`, so `Tr(a c) = s_1 + ... + s_k`.

    :param a: Any finite matrix.
    :param k: Integer rank budget in [0, min(rows, cols)].
    :return: `ContractionCertificate`.
    """
    a = matrix_kernel.as_matrix(a, "a")
    k = _require_rank_budget(a, k)
    if k == 0:
        return ContractionCertificate(np.zeros((a.shape[1], a.shape[0]), dtype=complex), 0, 0.0)

    result = matrix_kernel.svd(a)
    c = result.v[:, :k] @ result.u[:, :k].conj().T
    attained = float(abs(np.trace(a @ c)))

    return ContractionCertificate(c, matrix_kernel.numerical_rank(c), attained)


"""RANDOM CONTRACTIONS"""


def random_contraction(shape, k, rng):
    """One contraction `u diag(s) v^*` of rank at most k: `s` uniform in
    [0, 1] on k coordinates and zero elsewhere, `u` and `v` Haar
    unitaries.

    :param shape: `(rows, cols)` of the contraction.
    :param k: Number of non-zero singular values.
    :param rng: A `numpy` generator.
    :return: The contraction.
    """
    rows, cols = shape
    u = generators.haar_unitary(rows, rng)[:, :k]
    v = generators.haar_unitary(cols, rng)[:, :k]
    s = rng.uniform(0.0, 1.0, size=k)

    return (u * s) @ v.conj().T


def random_contraction_values(a, k, samples, seed):
    """`|Tr(a c)|` for each of `samples` seeded random contractions of
    support rank at most k.
    """
    a = matrix_kernel.as_matrix(a, "a")
    k = _require_rank_budget(a, k)
    rng = np.random.default_rng(seed)
    values = np.zeros(samples)
    if k == 0:
        return values

    for i in range(samples):
        c = random_contraction((a.shape[1], a.shape[0]), k, rng)
        values[i] = abs(np.trace(a @ c))

    return values


def random_contraction_bound(a, k, samples, seed):
    """Largest `|Tr(a c)|` over seeded random rank-k contractions. By
    the duality it never exceeds the Ky Fan k sum of `a`.

    :param samples: Number of contractions, at least 1.
    :return: The sampled lower bound.
    """
    if int(samples) != samples or samples < 1:
        raise InputError("samples must be a positive integer, got {}.".format(samples))

    return float(random_contraction_values(a, k, int(samples), seed).max())


def ky_fan_via_duality(a, k, samples=None, seed=0):
    """Ky Fan k sum computed from the dual side: the best of the optimal
    certificate and `samples` random feasible contractions.

    :param a: Any finite matrix.
    :param k: Integer in [0, min(rows, cols)].
    :param samples: Number of random contractions, `duality_samples`
                    if not given; 0 skips sampling.
    :param seed: Seed of the sampler.
    :return: The supremum value.
    """
    a = matrix_kernel.as_matrix(a, "a")
    k = _require_rank_budget(a, k)
    if samples is None:
        samples = SETTINGS.duality_samples
    if int(samples) != samples or samples < 0:
        raise InputError("samples must be a non-negative integer, got {}.".format(samples))

    best = optimal_contraction(a, k).attained
    if samples:
        best = max(best, random_contraction_bound(a, k, samples, seed))
    logger.debug("Ky Fan Via Duality: k={} value={:.6g}.".format(k, best))

    return best


def certify(a, k):
    """Certificate plus the primal reference value, as emitted by the
    `certify` command.
    """
    certificate = optimal_contraction(a, k)
    reference = rearrangement.ky_fan(rearrangement.profile_of(a), k)

    return certificate, reference
