"""Shared fixtures. The modules live flat at the repository root, so the
root is put on `sys.path` first.
"""
import os
import sys

import numpy as np
import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)


@pytest.fixture
def rng():
    return np.random.default_rng(42)


@pytest.fixture
def hermitian_pair(rng):
    """A Hermitian matrix and a positive definite one, both 4x4."""
    import generators

    return generators.gen_hermitian(4, rng, norm_cap=2.0), generators.gen_psd(4, rng)


@pytest.fixture
def corpus_database(tmp_path):
    import database

    database.define_database(str(tmp_path / "corpus.db"))
    yield database
    database.CONN.close()
    database.CONN = None
    database.CURSOR = None
