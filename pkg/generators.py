#!/usr/bin/env python3
# -*- coding: UTF-8 -*-
"""The generators component produces the seeded random inputs of the
verification campaigns: Ginibre matrices, Hermitian and positive
semi-definite matrices and Haar unitaries.

Every generator accepts either an integer seed or an existing
`numpy.random.Generator` (passed through unchanged by
`numpy.random.default_rng`), so a trial can draw several inputs from a
single stream.

Splitting scheme: the stream of one trial is
`default_rng(SeedSequence([campaign_seed, suite_key, size, trial]))`
where `suite_key` is the CRC-32 of the suite name. Streams of
different trials share no state, so trials can run in any order and on
any number of threads.
"""
import zlib

import numpy as np

from common import InputError


"""STREAMS"""


def suite_key(suite_name):
    """Stable 32-bit key of a suite name."""
    return zlib.crc32(suite_name.encode("utf-8"))


def trial_rng(seed, *keys):
    """Generator of one trial, see the module docstring.

    :param seed: The 64-bit campaign seed.
    :param keys: Further non-negative integers (suite key, size, trial).
    :return: A `numpy.random.Generator`.
    """
    entropy = [int(seed) % 2**64] + [int(key) for key in keys]
    return np.random.default_rng(np.random.SeedSequence(entropy))


def _require_size(n):
    if int(n) != n or n < 1:
        raise InputError("Matrix size must be a positive integer, got {}.".format(n))

    return int(n)


"""MATRICES"""


def gen_ginibre(n, seed, cols=None):
    """Matrix with independent standard complex Gaussian entries
    (`E|z|^2 = 1`).

    :param n: Number of rows, at least 1.
    :param seed: Integer seed or generator.
    :param cols: Number of columns, `n` if not given.
    :return: An `n x cols` complex matrix.
    """
    n = _require_size(n)
    cols = n if cols is None else _require_size(cols)
    rng = np.random.default_rng(seed)
    real = rng.standard_normal((n, cols))
    imag = rng.standard_normal((n, cols))

    return (real + 1j * imag) / np.sqrt(2.0)


def gen_hermitian(n, seed, norm_cap=1.0):
    """`(g + g^*) / 2` for Ginibre `g`, rescaled to operator norm
    `norm_cap`. The symmetrization is done entry-wise, so the output is
    exactly Hermitian.
    """
    if not norm_cap > 0:
        raise InputError("norm_cap must be positive, got {}.".format(norm_cap))
    g = gen_ginibre(n, seed)
    h = (g + g.conj().T) / 2
    norm = np.linalg.norm(h, 2)
    if norm > 0:
        h = h * (norm_cap / norm)

    return (h + h.conj().T) / 2


def gen_psd(n, seed, allow_singular=False):
    """Gram matrix `g g^*` of a Ginibre `g`. With `allow_singular` a
    random non-empty proper subset of the columns of `g` (the single
    column when n = 1) is zeroed first, so the result is rank-deficient.
    """
    rng = np.random.default_rng(seed)
    g = gen_ginibre(n, rng)
    if allow_singular:
        dropped = int(rng.integers(1, n)) if n > 1 else 1
        columns = rng.choice(n, size=dropped, replace=False)
        g[:, columns] = 0.0
    b = g @ g.conj().T

    return (b + b.conj().T) / 2


def haar_unitary(n, seed):
    """Haar-distributed unitary from the QR decomposition of a Ginibre
    matrix, with the phases of `diag(r)` moved into `q`.
    """
    z = gen_ginibre(n, seed)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    phases = np.where(np.abs(d) > 0, d / np.where(np.abs(d) > 0, np.abs(d), 1.0), 1.0)

    return q * phases
