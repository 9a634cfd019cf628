"""Tests for the SQLite corpus of campaigns and witnesses."""
import numpy as np


class TestCampaigns:
    def test_insert_and_retrieve(self, corpus_database):
        summary = {"verdicts": 3, "suites": {}, "worst": None}
        corpus_database.campaign_insert(5, summary, True)
        corpus_database.campaign_insert(6, summary, False)

        assert len(corpus_database.campaign_retrieve()) == 2
        recorded = corpus_database.campaign_retrieve(6)
        assert len(recorded) == 1
        assert recorded[0]["summary"] == summary
        assert not recorded[0]["passed"]
        assert recorded[0]["recorded"].endswith("Z")

    def test_empty(self, corpus_database):
        assert corpus_database.campaign_retrieve(1) == []


class TestWitnesses:
    def test_insert_is_idempotent(self, corpus_database):
        a = np.array([[0.0, 1.0], [1.0, 0.0]])
        b = np.diag([4.0, 1.0])
        assert corpus_database.witness_insert(3, 17, a, b, 1.0)
        assert not corpus_database.witness_insert(3, 17, a, b, 1.0)

        stored = corpus_database.witness_retrieve(3)
        assert len(stored) == 1
        assert stored[0]["trial"] == 17
        assert stored[0]["excess"] == 1.0
        np.testing.assert_array_equal(stored[0]["a"], a)
        np.testing.assert_array_equal(stored[0]["b"], b)
        assert corpus_database.witness_retrieve(4) == []
