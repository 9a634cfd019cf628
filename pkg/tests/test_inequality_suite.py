"""Tests for the inequality suite: the theorems hold on random and
hand-made inputs, and the counterexamples fail exactly as expected.
"""
import json
import math
import os

import numpy as np
import pytest

import generators
import inequality_suite
import matrix_kernel
from common import InputError

CORPUS = os.path.join(os.path.dirname(__file__), "corpus")
NILPOTENT = np.array([[0.0, 1.0], [0.0, 0.0]])


@pytest.fixture
def witness():
    with open(os.path.join(CORPUS, "pointwise_witness.json"), encoding="utf-8") as f:
        data = json.load(f)

    return (
        matrix_kernel.matrix_from_json(data["a"]),
        matrix_kernel.matrix_from_json(data["b"]),
        data,
    )


@pytest.fixture
def searched_witness():
    """The stored search witness. A record without matrices is filled
    from the search on first use.
    """
    path = os.path.join(CORPUS, "pointwise_search_witness.json")
    with open(path, encoding="utf-8") as f:
        data = json.load(f)

    if "a" not in data:
        result = inequality_suite.counterexample_pointwise_search(data["seed"], data["trials"])
        data.update(inequality_suite.witness_record(data["seed"], result))
        with open(path, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=2)

    return data


class TestVerdictBookkeeping:
    def test_passed_inverts_for_expected_failures(self):
        verdict = inequality_suite.InequalityVerdict("x", False, 1.0, 0.1, expected_failure=True)
        assert verdict.passed
        assert not inequality_suite.InequalityVerdict("x", False, 1.0, 0.1).passed

    def test_combine_reports_worst_part(self):
        parts = [
            inequality_suite.ComparisonPart("small", -1.0, 1.0),
            inequality_suite.ComparisonPart("large", 2e-9, 1e-9),
        ]
        verdict = inequality_suite.combine_parts("demo", parts, {}, theta=1.0)
        assert not verdict.holds
        assert verdict.margin == 2e-9
        assert set(verdict.details) == {"small", "large", "boundary_case"}

    def test_json_float(self):
        assert inequality_suite.json_float(math.inf) == "inf"
        assert inequality_suite.json_float(None) is None
        assert inequality_suite.json_float(1) == 1.0

    def test_digest_is_stable(self):
        first = inequality_suite.inputs_digest(np.eye(2), np.ones((2, 2)))
        assert first == inequality_suite.inputs_digest(np.eye(2), np.ones((2, 2)))
        assert first["shape"] == [2, 2]
        assert len(first["sha256"]) == 16


class TestMainTheorem:
    @pytest.mark.parametrize("theta", [0.0, 0.25, 0.5, 0.9, 1.0])
    def test_selfadjoint_holds(self, hermitian_pair, theta):
        a, b = hermitian_pair
        verdict = inequality_suite.bik_theorem_selfadjoint(a, b, theta)
        assert verdict.holds
        assert verdict.passed
        assert verdict.theta == theta

    def test_selfadjoint_with_singular_b(self):
        for seed in range(5):
            a = generators.gen_hermitian(4, seed, norm_cap=2.0)
            b = generators.gen_psd(4, seed + 10, allow_singular=True)
            for theta in (0.1, 0.5):
                assert inequality_suite.bik_theorem_selfadjoint(a, b, theta).holds

    def test_theta_one_is_equality(self, hermitian_pair):
        a, b = hermitian_pair
        verdict = inequality_suite.bik_theorem_selfadjoint(a, b, 1.0)
        assert abs(verdict.margin) <= verdict.tolerance
        assert verdict.details["boundary_case"]

    def test_selfadjoint_rejects_non_hermitian_a(self):
        with pytest.raises(InputError):
            inequality_suite.bik_theorem_selfadjoint(NILPOTENT, np.eye(2), 0.5)

    def test_rejects_indefinite_b(self):
        with pytest.raises(InputError):
            inequality_suite.bik_theorem_selfadjoint(np.eye(2), np.diag([1.0, -1.0]), 0.5)

    def test_general_example(self):
        b = np.diag([math.e ** 2, 1.0])
        verdict = inequality_suite.bik_theorem_general(NILPOTENT, b, 0.5)
        assert verdict.holds
        assert verdict.details["margin_against_ab"] == pytest.approx(math.e - 1.0)
        assert not verdict.details["holds_against_ab"]

    def test_general_holds_on_random_input(self):
        for seed in range(5):
            a = generators.gen_ginibre(3, seed)
            b = generators.gen_psd(3, seed + 20)
            assert inequality_suite.bik_theorem_general(a, b, 0.3).holds

    @pytest.mark.parametrize("spec", ["schatten:1", "schatten:2.5", "operator", "ky_fan:2"])
    def test_norm_corollary(self, hermitian_pair, spec):
        a, b = hermitian_pair
        verdict = inequality_suite.bik_norm_corollary(a, b, 0.4, spec)
        assert verdict.holds
        assert verdict.p == spec
        assert verdict.details["lhs"] <= verdict.details["rhs"] * (1 + 1e-9)


class TestCounterexampleTr:
    def test_reproduces_numbers(self):
        verdict = inequality_suite.counterexample_tr(2.0, 0.0, 0.5)
        assert not verdict.holds
        assert verdict.passed
        assert verdict.expected_failure
        assert verdict.margin == pytest.approx(math.e - 1.0)
        assert verdict.reproduced
        np.testing.assert_allclose(verdict.details["left_values"], [math.e, 0.0])
        np.testing.assert_allclose(verdict.details["right_values"], [1.0, 0.0])
        assert verdict.details["left_profile"]["holds"]
        assert verdict.details["right_profile"]["holds"]
        assert verdict.details["expected_margin"] == pytest.approx(math.e - 1.0)

    @pytest.mark.parametrize(
        "lam, mu, theta", [(1.0, -1.0, 0.3), (0.5, 0.4, 1.0), (3.0, 2.0, 0.9)]
    )
    def test_fails_for_every_positive_theta(self, lam, mu, theta):
        verdict = inequality_suite.counterexample_tr(lam, mu, theta)
        assert verdict.passed
        expected = math.exp(theta * lam + (1 - theta) * mu) - math.exp(mu)
        assert verdict.details["expected_margin"] == pytest.approx(expected)

    def test_theta_zero_is_not_a_counterexample(self):
        verdict = inequality_suite.counterexample_tr(2.0, 0.0, 0.0)
        assert verdict.holds
        assert not verdict.passed

    def test_wrong_closed_form_does_not_pass(self, monkeypatch):
        def scaled(lam, mu, theta):
            return 5.0 * math.exp(theta * lam + (1 - theta) * mu), 5.0 * math.exp(mu)

        monkeypatch.setattr(inequality_suite, "counterexample_tr_values", scaled)
        verdict = inequality_suite.counterexample_tr(2.0, 0.0, 0.5)
        assert not verdict.holds
        assert not verdict.reproduced
        assert not verdict.passed
        assert not verdict.details["left_profile"]["holds"]
        assert verdict.to_json()["reproduced"] is False

    def test_requires_lambda_above_mu(self):
        with pytest.raises(InputError):
            inequality_suite.counterexample_tr(1.0, 1.0, 0.5)


class TestPointwiseCounterexample:
    def test_corpus_witness(self, witness):
        a, b, data = witness
        excess, tolerance = inequality_suite.pointwise_excess(a, b)
        assert excess == pytest.approx(data["excess"])
        assert excess > tolerance

        pointwise, theorem = inequality_suite.verify_pointwise_witness(a, b)
        assert not pointwise.holds
        assert pointwise.passed
        assert theorem.holds
        np.testing.assert_allclose(
            matrix_kernel.singular_values(a @ b), data["right_singular_values"]
        )

    def test_search_reproduces_stored_witness(self, searched_witness):
        data = searched_witness
        result = inequality_suite.counterexample_pointwise_search(data["seed"], data["trials"])
        assert result.found
        assert result.trial_index == data["trial_index"]
        a, b = result.witness
        np.testing.assert_array_equal(a, matrix_kernel.matrix_from_json(data["a"]))
        np.testing.assert_array_equal(b, matrix_kernel.matrix_from_json(data["b"]))
        assert result.excess == pytest.approx(data["excess"])

        pointwise, theorem = inequality_suite.verify_pointwise_witness(a, b)
        assert not pointwise.holds
        assert pointwise.passed
        assert theorem.holds

    def test_witness_record_needs_a_witness(self):
        with pytest.raises(InputError):
            inequality_suite.witness_record(0, inequality_suite.PointwiseSearchResult(False))

    def test_search_result_is_consistent(self):
        result = inequality_suite.counterexample_pointwise_search(5, trials=200)
        if result.found:
            a, b = result.witness
            pointwise, theorem = inequality_suite.verify_pointwise_witness(a, b)
            assert pointwise.passed
            assert theorem.holds
            assert 0 <= result.trial_index < 200
        else:
            assert result.witness is None

    def test_search_is_reproducible(self):
        first = inequality_suite.counterexample_pointwise_search(3, trials=50)
        second = inequality_suite.counterexample_pointwise_search(3, trials=50)
        assert first.found == second.found
        assert first.trial_index == second.trial_index

    def test_search_budget(self):
        with pytest.raises(InputError):
            inequality_suite.counterexample_pointwise_search(0, trials=0)


class TestBlockCorollaries:
    def test_corollary_i_example(self):
        b0 = np.diag([2.0, 0.0])
        b1 = np.diag([0.0, 3.0])
        for theta in (0.0, 0.5, 1.0):
            verdict = inequality_suite.block_corollary_i(np.eye(2), b0, b1, theta)
            assert verdict.holds
            assert verdict.details["profile_AB"]["holds"]
            assert verdict.details["profile_BA"]["holds"]

    def test_corollary_i_random(self):
        for seed in range(4):
            a = generators.gen_ginibre(3, seed)
            b0 = generators.gen_psd(3, seed + 1)
            b1 = generators.gen_psd(3, seed + 2, allow_singular=True)
            assert inequality_suite.block_corollary_i(a, b0, b1, 0.7).holds

    def test_corollary_ii_random(self):
        for seed in range(4):
            a = generators.gen_ginibre(3, seed)
            b0 = generators.gen_psd(3, seed + 1)
            b1 = generators.gen_psd(3, seed + 2)
            verdict = inequality_suite.block_corollary_ii(a, b0, b1, 0.3)
            assert verdict.holds
            assert "sigma2" not in verdict.details
            assert isinstance(verdict.details["direct_sum_strictly_tighter"], bool)

    def test_corollary_ii_doubled_form(self, hermitian_pair):
        a, b0 = hermitian_pair
        b1 = generators.gen_psd(4, 77)
        verdict = inequality_suite.block_corollary_ii(a, b0, b1, 0.5)
        assert verdict.holds
        assert verdict.details["sigma2"]["holds"]

    def test_size_mismatch(self):
        with pytest.raises(InputError):
            inequality_suite.block_corollary_i(np.eye(2), np.eye(2), np.eye(3), 0.5)


class TestNormInterpolation:
    @pytest.mark.parametrize("spec", ["schatten:1", "schatten:3", "operator", "ky_fan:2"])
    def test_holder_holds(self, spec):
        a = generators.gen_ginibre(4, 1)
        b0 = generators.gen_psd(4, 2)
        b1 = generators.gen_psd(4, 3)
        verdict = inequality_suite.holder_norm_interpolation(a, b0, b1, 0.35, spec)
        assert verdict.holds
        assert verdict.details["partial_sums"]["holds"]

    def test_holder_is_homogeneous(self):
        a = generators.gen_ginibre(3, 4)
        b0 = generators.gen_psd(3, 5)
        b1 = generators.gen_psd(3, 6)
        base = inequality_suite.holder_norm_interpolation(a, b0, b1, 0.5, "schatten:2")
        for t in (0.1, 10.0):
            scaled = inequality_suite.holder_norm_interpolation(a, t * b0, b1, 0.5, "schatten:2")
            assert scaled.holds
            assert scaled.details["norm"]["margin"] == pytest.approx(
                base.details["norm"]["margin"], abs=1e-9
            )

    @pytest.mark.parametrize("p", [1.0, 2.0, 4.5])
    def test_half_power(self, hermitian_pair, p):
        a, b0 = hermitian_pair
        b1 = generators.gen_psd(4, 31)
        verdict = inequality_suite.schatten_half_power(a, b0, b1, p)
        assert verdict.holds
        assert verdict.theta == 0.5

    def test_half_power_rejects_bad_p(self, hermitian_pair):
        a, b = hermitian_pair
        for p in (0.5, math.inf):
            with pytest.raises(InputError):
                inequality_suite.schatten_half_power(a, b, b, p)


class TestGoldenThompson:
    def _pair(self, seed):
        return (
            generators.gen_hermitian(4, seed, norm_cap=2.0),
            generators.gen_hermitian(4, seed + 1, norm_cap=2.0),
        )

    @pytest.mark.parametrize("theta", [0.0, 0.5, 1.0])
    def test_symmetric(self, theta):
        a, b = self._pair(1)
        verdict = inequality_suite.golden_thompson_symmetric(a, b, theta, "schatten:2")
        assert verdict.holds
        assert verdict.details["submajorization"]["holds"]

    @pytest.mark.parametrize("p", [1, 2, 3.5, "inf"])
    def test_exp_sum_and_symmetrized(self, p):
        a, b = self._pair(7)
        assert inequality_suite.golden_thompson_exp_sum(a, b, p).holds
        assert inequality_suite.golden_thompson_symmetrized(a, b, p).holds

    def test_p_spellings_agree(self):
        a, b = self._pair(9)
        values = {
            inequality_suite.golden_thompson_exp_sum(a, b, p).details["lhs"]
            for p in (2, "2", "schatten:2")
        }
        assert len(values) == 1
        assert inequality_suite.golden_thompson_exp_sum(a, b, math.inf).p == "operator"

    def test_commuting_pair_is_equality(self):
        a = np.diag([0.3, -1.0, 0.5])
        b = np.diag([1.0, 0.2, -0.4])
        for verdict in (
            inequality_suite.golden_thompson_exp_sum(a, b, 2),
            inequality_suite.golden_thompson_trace(a, b),
        ):
            assert verdict.holds
            assert abs(verdict.margin) <= 1e-12

    def test_trace(self):
        a, b = self._pair(11)
        verdict = inequality_suite.golden_thompson_trace(a, b)
        assert verdict.holds
        assert verdict.details["lhs"] <= verdict.details["rhs"] * (1 + 1e-8)
        assert abs(verdict.details["imaginary_part"]) < 1e-10


def test_registry_names_match_operations():
    for name, operation in inequality_suite.INEQUALITIES.items():
        assert operation.__name__ == name
