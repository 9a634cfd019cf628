#!/usr/bin/env python3
# -*- coding: UTF-8 -*-
"""The inequality suite has one operation per operator inequality that
is verified: the main submajorization theorem in its self-adjoint and
general forms, the block-operator corollaries, the Hoelder-type norm
interpolation and its half-power corollary, the Golden-Thompson family,
and reproductions of the two known counterexamples (the non-self-adjoint
2x2 example and the failure of the pointwise singular value bound).

Every operation returns an `InequalityVerdict`. Operations made of
several comparisons report the worst of them (largest margin relative
to its own tolerance) and list all of them under `details`, so
`holds == (margin <= tolerance)` always.

At finite dimension every operator is bounded and the integrability
hypothesis on `ab` is vacuous, so it is not checked.
"""
import hashlib
import math
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

import generators
import matrix_kernel
import rearrangement
from common import InputError, logger
from rearrangement import profile_of, submajorizes
from settings import SETTINGS


"""VERDICTS"""


@dataclass(frozen=True)
class InequalityVerdict:
    """Result of one inequality check.

    `expected_failure` inverts the polarity: for counterexamples the
    verdict passes when the inequality does NOT hold. `reproduced` is
    outside that inversion: a counterexample whose computed profiles
    differ from the closed form never passes.
    """

    name: str
    holds: bool
    margin: float
    tolerance: float
    theta: float = None
    p: str = None
    worst_t: float = None
    expected_failure: bool = False
    reproduced: bool = True
    inputs_digest: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.holds != self.expected_failure and self.reproduced

    def to_json(self):
        return {
            "name": self.name,
            "holds": self.holds,
            "passed": self.passed,
            "expected_failure": self.expected_failure,
            "reproduced": self.reproduced,
            "margin": json_float(self.margin),
            "tolerance": json_float(self.tolerance),
            "theta": self.theta,
            "p": self.p,
            "worst_t": self.worst_t,
            "inputs_digest": self.inputs_digest,
            "details": self.details,
        }


@dataclass(frozen=True)
class ComparisonPart:
    label: str
    margin: float
    tolerance: float
    worst_t: float = None

    @property
    def holds(self):
        return bool(self.margin <= self.tolerance)

    @property
    def score(self):
        if self.tolerance > 0:
            return (self.margin - self.tolerance) / self.tolerance
        return math.inf if self.margin > 0 else -math.inf


def json_float(value):
    """Finite floats pass through; infinities become strings."""
    if value is None:
        return None
    value = float(value)
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"

    return value


def inputs_digest(*matrices):
    """Shape and a short SHA-256 of the inputs, for report bookkeeping."""
    sha = hashlib.sha256()
    for m in matrices:
        sha.update(np.ascontiguousarray(m, dtype=complex).tobytes())

    return {"shape": list(matrices[0].shape), "sha256": sha.hexdigest()[:16]}


def submajorization_part(label, verdict):
    return ComparisonPart(label, verdict.margin, verdict.tolerance_used, verdict.worst_t)


def relative_part(label, lhs, rhs, rtol, worst_t=None):
    """`lhs <= rhs` checked as `(lhs - rhs) / max(|lhs|, |rhs|) <= rtol`,
    which is invariant under common rescaling of both sides.
    """
    scale = max(abs(lhs), abs(rhs))
    margin = (lhs - rhs) / scale if scale > 0 else 0.0

    return ComparisonPart(label, float(margin), float(rtol), worst_t)


def identity_part(label, computed, expected, rtol=None):
    """Agreement of two value arrays within `rtol * (1 + max |expected|)`."""
    if rtol is None:
        rtol = SETTINGS.rtol
    computed = np.asarray(computed, dtype=float)
    expected = np.asarray(expected, dtype=float)
    length = max(computed.size, expected.size)
    computed = np.pad(computed, (0, length - computed.size))
    expected = np.pad(expected, (0, length - expected.size))
    deviation = float(np.abs(computed - expected).max()) if length else 0.0
    scale = float(np.abs(expected).max()) if length else 0.0

    return ComparisonPart(label, deviation, rtol * (1.0 + scale))


def combine_parts(
    name, parts, digest, theta=None, p=None, expected_failure=False, extra=None, required=()
):
    """Reports the worst of `parts`. The `required` parts are listed under
    `details` and must all hold for `reproduced`, whatever the polarity.
    """
    worst = max(parts, key=lambda part: part.score)
    details = {
        part.label: {
            "holds": part.holds,
            "margin": json_float(part.margin),
            "tolerance": json_float(part.tolerance),
        }
        for part in list(parts) + list(required)
    }
    if extra:
        details.update(extra)
    if theta is not None and theta in (0.0, 1.0):
        details["boundary_case"] = True

    return InequalityVerdict(
        name=name,
        holds=worst.holds,
        margin=float(worst.margin),
        tolerance=float(worst.tolerance),
        theta=theta,
        p=p,
        worst_t=worst.worst_t,
        expected_failure=expected_failure,
        reproduced=all(part.holds for part in required),
        inputs_digest=digest,
        details=details,
    )


def _square_pair(a, b, a_name="a"):
    a = matrix_kernel.require_square(a, a_name)
    eig_b = matrix_kernel.require_psd(b, "b")
    b = matrix_kernel.as_matrix(b, "b")
    matrix_kernel.require_same_size(a, b)

    return a, b, eig_b


def _sandwich(eig_left, a, eig_right, theta):
    """`left^theta a right^(1 - theta)` for PSD factors."""
    return (
        matrix_kernel.psd_power(eig_left, theta)
        @ a
        @ matrix_kernel.psd_power(eig_right, 1.0 - theta)
    )


"""MAIN THEOREM"""


def bik_theorem_selfadjoint(a, b, theta):
    """`b^theta a b^(1 - theta) <<< a b` for Hermitian `a` and PSD `b`.

    :param a: Hermitian matrix.
    :param b: Hermitian positive semi-definite matrix of the same size.
    :param theta: Interpolation parameter in [0, 1].
    :return: `InequalityVerdict`.
    """
    a = matrix_kernel.require_hermitian(a, "a")
    a, b, eig_b = _square_pair(a, b)
    theta = matrix_kernel.require_theta(theta)

    left = _sandwich(eig_b, a, eig_b, theta)
    verdict = submajorizes(profile_of(left), profile_of(a @ b))

    return combine_parts(
        "bik_theorem_selfadjoint",
        [submajorization_part("submajorization", verdict)],
        inputs_digest(a, b),
        theta=theta,
    )


def bik_theorem_general(a, b, theta):
    """`b^theta a b^(1 - theta) <<< max{mu(ab), mu(ba)}` for arbitrary
    square `a` and PSD `b`. The margin against `mu(ab)` alone is kept
    under `details` since it can be positive for non-Hermitian `a`.
    """
    a, b, eig_b = _square_pair(a, b)
    theta = matrix_kernel.require_theta(theta)

    left = profile_of(_sandwich(eig_b, a, eig_b, theta))
    mu_ab = profile_of(a @ b)
    right = rearrangement.profile_max(mu_ab, profile_of(b @ a))
    verdict = submajorizes(left, right)
    against_ab = submajorizes(left, mu_ab)

    return combine_parts(
        "bik_theorem_general",
        [submajorization_part("submajorization", verdict)],
        inputs_digest(a, b),
        theta=theta,
        extra={"margin_against_ab": against_ab.margin, "holds_against_ab": against_ab.holds},
    )


def bik_norm_corollary(a, b, theta, spec):
    """Fully symmetric norm form of the main theorem:
    `||b^theta a b^(1 - theta)|| <= ||ab||` for Hermitian `a`, and
    `<= ||max{mu(ab), mu(ba)}||` otherwise.
    """
    a, b, eig_b = _square_pair(a, b)
    theta = matrix_kernel.require_theta(theta)
    spec = rearrangement.parse_norm(spec)

    left = profile_of(_sandwich(eig_b, a, eig_b, theta))
    if matrix_kernel.is_hermitian(a):
        right = profile_of(a @ b)
    else:
        right = rearrangement.profile_max(profile_of(a @ b), profile_of(b @ a))
    lhs = rearrangement.symmetric_norm(left, spec)
    rhs = rearrangement.symmetric_norm(right, spec)

    return combine_parts(
        "bik_norm_corollary",
        [relative_part("norm", lhs, rhs, SETTINGS.norm_rtol)],
        inputs_digest(a, b),
        theta=theta,
        p=str(spec),
        extra={"lhs": lhs, "rhs": rhs},
    )


"""COUNTEREXAMPLES"""


def counterexample_tr_values(lam, mu, theta):
    """Closed-form leading singular values of both sides of the 2x2
    counterexample: `e^{theta lam + (1 - theta) mu}` and `e^mu`.
    """
    return math.exp(theta * lam + (1 - theta) * mu), math.exp(mu)


def counterexample_tr(lam, mu, theta):
    """Reproduces the 2x2 counterexample for non-self-adjoint `a`:
    `a = [[0, 1], [0, 0]]`, `b = diag(lam, mu)` with `lam > mu`. Then
    `a e^b = e^mu a` and `e^{theta b} a e^{(1 - theta) b} =
    e^{theta lam + (1 - theta) mu} a`, so the submajorization
    `e^{theta b} a e^{(1 - theta) b} <<< a e^b` fails with margin
    `e^{theta lam + (1 - theta) mu} - e^mu` for every theta in (0, 1].

    :return: `InequalityVerdict` with `expected_failure` set.
    """
    lam = float(lam)
    mu = float(mu)
    if not lam > mu:
        raise InputError("The counterexample needs lambda > mu, got {} <= {}.".format(lam, mu))
    theta = matrix_kernel.require_theta(theta)

    a = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    b = np.diag([lam, mu]).astype(complex)
    eig_b = matrix_kernel.eig_hermitian(b)
    left = (
        matrix_kernel.exp_hermitian(eig_b, theta)
        @ a
        @ matrix_kernel.exp_hermitian(eig_b, 1 - theta)
    )
    right = a @ matrix_kernel.exp_hermitian(eig_b, 1.0)
    left_profile = profile_of(left)
    right_profile = profile_of(right)

    left_expected, right_expected = counterexample_tr_values(lam, mu, theta)
    verdict = submajorizes(left_profile, right_profile)
    logger.debug(
        "Counterexample Tr: lambda={} mu={} theta={} margin={:.12g}.".format(
            lam, mu, theta, verdict.margin
        )
    )

    return combine_parts(
        "counterexample_tr",
        [submajorization_part("submajorization", verdict)],
        inputs_digest(a, b),
        theta=theta,
        expected_failure=True,
        extra={
            "lambda": lam,
            "mu": mu,
            "left_values": [float(v) for v in left_profile.values],
            "right_values": [float(v) for v in right_profile.values],
            "expected_margin": left_expected - right_expected,
        },
        required=[
            identity_part("left_profile", left_profile.values, [left_expected, 0.0]),
            identity_part("right_profile", right_profile.values, [right_expected, 0.0]),
        ],
    )


@dataclass(frozen=True)
class PointwiseSearchResult:
    """Outcome of the pointwise counterexample search. `witness` is the
    pair `(a, b)` or `None`.
    """

    found: bool
    witness: tuple = None
    trial_index: int = None
    excess: float = 0.0


def pointwise_excess(a, b):
    """Largest `s_i(b^{1/2} a b^{1/2}) - s_i(a b)` and its tolerance
    `rtol * (1 + ||ab||)`.
    """
    a = matrix_kernel.require_hermitian(a, "a")
    a, b, eig_b = _square_pair(a, b)
    root = matrix_kernel.psd_power(eig_b, 0.5)
    s_left = matrix_kernel.singular_values(root @ a @ root)
    s_right = matrix_kernel.singular_values(a @ b)
    excess = float((s_left - s_right).max())

    return excess, SETTINGS.rtol * (1.0 + float(s_right[0]))


def counterexample_pointwise_search(seed, trials=None):
    """Searches random 2x2 Hermitian `a` and PSD `b` for a pair where a
    singular value of `b^{1/2} a b^{1/2}` exceeds the matching singular
    value of `ab`, i.e. where the pointwise bound fails although the
    submajorization holds.

    :param seed: Integer seed or generator.
    :param trials: Search budget, `pointwise_search_trials` if not given.
    :return: `PointwiseSearchResult`.
    """
    if trials is None:
        trials = SETTINGS.pointwise_search_trials
    if int(trials) != trials or trials < 1:
        raise InputError("trials must be a positive integer, got {}.".format(trials))

    rng = np.random.default_rng(seed)
    for trial in range(int(trials)):
        a = generators.gen_hermitian(2, rng, norm_cap=1.0)
        b = generators.gen_psd(2, rng)
        excess, tolerance = pointwise_excess(a, b)
        if excess > tolerance:
            logger.info(
                "Pointwise Search: Witness found at trial {:,} with excess {:.3e}.".format(
                    trial, excess
                )
            )
            return PointwiseSearchResult(True, (a, b), trial, excess)

    logger.info("Pointwise Search: No witness in {:,} trials.".format(trials))
    return PointwiseSearchResult(False)


def witness_record(seed, result):
    """JSON record of a found witness: the search seed, the trial index
    and both matrices, so the search can be re-run and compared.
    """
    if not result.found:
        raise InputError("The search with seed {} found no witness.".format(seed))
    a, b = result.witness

    return {
        "seed": int(seed),
        "trial_index": int(result.trial_index),
        "excess": float(result.excess),
        "a": matrix_kernel.matrix_to_json(a),
        "b": matrix_kernel.matrix_to_json(b),
    }


def verify_pointwise_witness(a, b):
    """Re-checks a witness: the pointwise bound must fail (expected
    failure) while the submajorization of the main theorem holds.

    :return: A tuple `(pointwise_verdict, theorem_verdict)`.
    """
    excess, tolerance = pointwise_excess(a, b)
    pointwise = InequalityVerdict(
        name="pointwise_singular_values",
        holds=excess <= tolerance,
        margin=excess,
        tolerance=tolerance,
        theta=0.5,
        expected_failure=True,
        inputs_digest=inputs_digest(np.asarray(a), np.asarray(b)),
    )

    return pointwise, bik_theorem_selfadjoint(a, b, 0.5)


"""BLOCK COROLLARIES"""


def _block_inputs(a, b0, b1):
    a = matrix_kernel.require_square(a, "a")
    eig_b0 = matrix_kernel.require_psd(b0, "b0")
    eig_b1 = matrix_kernel.require_psd(b1, "b1")
    b0 = matrix_kernel.as_matrix(b0, "b0")
    b1 = matrix_kernel.as_matrix(b1, "b1")
    matrix_kernel.require_same_size(a, b0, b1)

    return a, b0, b1, eig_b0, eig_b1


def block_corollary_i(a, b0, b1, theta):
    """`b1^theta a b0^(1 - theta) <<< max{mu(a b0), mu(b1 a)}`.

    On `H + H` the operators `A = [[0, 0], [a, 0]]` and
    `B = diag(b0, b1)` satisfy `mu(AB) = mu(a b0)` and
    `mu(BA) = mu(b1 a)` (zero-padded); both identities are checked.
    """
    a, b0, b1, eig_b0, eig_b1 = _block_inputs(a, b0, b1)
    theta = matrix_kernel.require_theta(theta)
    n = a.shape[0]

    block_a = np.zeros((2 * n, 2 * n), dtype=complex)
    block_a[n:, :n] = a
    block_b = scipy.linalg.block_diag(b0, b1)
    mu_ab0 = profile_of(a @ b0)
    mu_b1a = profile_of(b1 @ a)

    left = profile_of(_sandwich(eig_b1, a, eig_b0, theta))
    verdict = submajorizes(left, rearrangement.profile_max(mu_ab0, mu_b1a))

    return combine_parts(
        "block_corollary_i",
        [
            submajorization_part("submajorization", verdict),
            identity_part("profile_AB", profile_of(block_a @ block_b).values, mu_ab0.values),
            identity_part("profile_BA", profile_of(block_b @ block_a).values, mu_b1a.values),
        ],
        inputs_digest(a, b0, b1),
        theta=theta,
    )


def block_corollary_ii(a, b0, b1, theta):
    """`mu(b0^theta a b1^(1-theta)) + mu(b1^theta a^* b0^(1-theta))
    <<< mu(a b1) + mu(b0 a)` with `+` the direct sum of profiles. For
    Hermitian `a` and theta = 1/2 the doubled form
    `sigma2(mu(b0^(1/2) a b1^(1/2))) <<< mu(a b1) + mu(a b0)` is checked
    as well.

    `details["direct_sum_strictly_tighter"]` records whether the direct
    sum bound is strictly below the doubled pointwise maximum
    `sigma2(max{mu(a b1), mu(b0 a)})` somewhere.
    """
    a, b0, b1, eig_b0, eig_b1 = _block_inputs(a, b0, b1)
    theta = matrix_kernel.require_theta(theta)

    mu_ab1 = profile_of(a @ b1)
    mu_b0a = profile_of(b0 @ a)
    left = rearrangement.profile_direct_sum(
        profile_of(_sandwich(eig_b0, a, eig_b1, theta)),
        profile_of(_sandwich(eig_b1, a.conj().T, eig_b0, theta)),
    )
    right = rearrangement.profile_direct_sum(mu_ab1, mu_b0a)
    parts = [submajorization_part("submajorization", submajorizes(left, right))]

    if theta == 0.5 and matrix_kernel.is_hermitian(a):
        doubled = rearrangement.sigma2(profile_of(_sandwich(eig_b0, a, eig_b1, 0.5)))
        doubled_right = rearrangement.profile_direct_sum(mu_ab1, profile_of(a @ b0))
        parts.append(submajorization_part("sigma2", submajorizes(doubled, doubled_right)))

    max_bound = rearrangement.sigma2(rearrangement.profile_max(mu_ab1, mu_b0a))
    tighter = not submajorizes(max_bound, right).holds

    return combine_parts(
        "block_corollary_ii",
        parts,
        inputs_digest(a, b0, b1),
        theta=theta,
        extra={"direct_sum_strictly_tighter": tighter},
    )


"""NORM INTERPOLATION"""


def holder_norm_interpolation(a, b0, b1, theta, spec):
    """`||b0^theta a b1^(1 - theta)|| <= ||b0 a||^theta ||a b1||^(1 - theta)`
    in a fully symmetric norm, together with the partial-sum form
    `K_x(k) <= K_{b0 a}(k)^theta K_{a b1}(k)^(1 - theta)` at every
    integer breakpoint k. Both sides scale alike under `b0 -> t b0`,
    so the relative margins are homogeneous.
    """
    a, b0, b1, eig_b0, eig_b1 = _block_inputs(a, b0, b1)
    theta = matrix_kernel.require_theta(theta)
    spec = rearrangement.parse_norm(spec)

    mu_x = profile_of(_sandwich(eig_b0, a, eig_b1, theta))
    mu_b0a = profile_of(b0 @ a)
    mu_ab1 = profile_of(a @ b1)
    lhs = rearrangement.symmetric_norm(mu_x, spec)
    rhs = (
        rearrangement.symmetric_norm(mu_b0a, spec) ** theta
        * rearrangement.symmetric_norm(mu_ab1, spec) ** (1.0 - theta)
    )
    parts = [relative_part("norm", lhs, rhs, SETTINGS.norm_rtol)]

    partial_parts = []
    for k in range(1, len(mu_x) + 1):
        left_k = rearrangement.ky_fan(mu_x, k)
        right_k = rearrangement.ky_fan(mu_b0a, k) ** theta * rearrangement.ky_fan(mu_ab1, k) ** (
            1.0 - theta
        )
        partial_parts.append(
            relative_part("partial_sums", left_k, right_k, SETTINGS.norm_rtol, float(k))
        )
    parts.append(max(partial_parts, key=lambda part: part.score))

    return combine_parts(
        "holder_norm_interpolation",
        parts,
        inputs_digest(a, b0, b1),
        theta=theta,
        p=str(spec),
        extra={"lhs": lhs, "rhs": rhs},
    )


def schatten_half_power(a, b0, b1, p):
    """`2 ||b0^(1/2) a b1^(1/2)||_p^p <= ||a b1||_p^p + ||b0 a||_p^p` for
    Hermitian `a`, PSD `b0`, `b1` and finite p >= 1.
    """
    a = matrix_kernel.require_hermitian(a, "a")
    a, b0, b1, eig_b0, eig_b1 = _block_inputs(a, b0, b1)
    p = float(p)
    if not 1.0 <= p < math.inf:
        raise InputError("schatten_half_power needs a finite p >= 1, got {}.".format(p))
    spec = rearrangement.schatten(p)

    x = _sandwich(eig_b0, a, eig_b1, 0.5)
    lhs = 2.0 * rearrangement.symmetric_norm(profile_of(x), spec) ** p
    rhs = (
        rearrangement.symmetric_norm(profile_of(a @ b1), spec) ** p
        + rearrangement.symmetric_norm(profile_of(b0 @ a), spec) ** p
    )

    return combine_parts(
        "schatten_half_power",
        [relative_part("norm", lhs, rhs, SETTINGS.norm_rtol)],
        inputs_digest(a, b0, b1),
        theta=0.5,
        p=str(spec),
        extra={"lhs": lhs, "rhs": rhs},
    )


"""GOLDEN-THOMPSON"""


def _hermitian_pair(a, b):
    a = matrix_kernel.require_hermitian(a, "a")
    b = matrix_kernel.require_hermitian(b, "b")
    matrix_kernel.require_same_size(a, b)

    return a, b


def _norm_spec_for_p(p):
    if isinstance(p, rearrangement.NormSpec):
        return p
    if isinstance(p, str):
        return rearrangement.parse_norm(p if ":" in p or p == "operator" else "schatten:" + p)

    return rearrangement.schatten(p)


def golden_thompson_symmetric(a, b, theta, spec):
    """`||e^{theta b} e^a e^{(1 - theta) b}|| <= ||e^a e^b||` in a fully
    symmetric norm, with the underlying submajorization
    `e^{theta b} e^a e^{(1 - theta) b} <<< e^a e^b`.
    """
    a, b = _hermitian_pair(a, b)
    theta = matrix_kernel.require_theta(theta)
    spec = rearrangement.parse_norm(spec)

    exp_a = matrix_kernel.exp_hermitian(a)
    eig_b = matrix_kernel.eig_hermitian(b)
    left = profile_of(
        matrix_kernel.exp_hermitian(eig_b, theta)
        @ exp_a
        @ matrix_kernel.exp_hermitian(eig_b, 1 - theta)
    )
    right = profile_of(exp_a @ matrix_kernel.exp_hermitian(eig_b, 1.0))
    lhs = rearrangement.symmetric_norm(left, spec)
    rhs = rearrangement.symmetric_norm(right, spec)

    return combine_parts(
        "golden_thompson_symmetric",
        [
            relative_part("norm", lhs, rhs, SETTINGS.golden_thompson_rtol),
            submajorization_part("submajorization", submajorizes(left, right)),
        ],
        inputs_digest(a, b),
        theta=theta,
        p=str(spec),
        extra={"lhs": lhs, "rhs": rhs},
    )


def golden_thompson_exp_sum(a, b, p):
    """`||e^{a+b}||_p <= ||e^a e^b||_p` for every 1 <= p <= inf.

    :param p: A real p >= 1, `inf`, or a norm descriptor.
    """
    a, b = _hermitian_pair(a, b)
    spec = _norm_spec_for_p(p)

    lhs = rearrangement.symmetric_norm(profile_of(matrix_kernel.exp_hermitian(a + b)), spec)
    rhs = rearrangement.symmetric_norm(
        profile_of(matrix_kernel.exp_hermitian(a) @ matrix_kernel.exp_hermitian(b)), spec
    )

    return combine_parts(
        "golden_thompson_exp_sum",
        [relative_part("norm", lhs, rhs, SETTINGS.golden_thompson_rtol)],
        inputs_digest(a, b),
        p=str(spec),
        extra={"lhs": lhs, "rhs": rhs},
    )


def golden_thompson_symmetrized(a, b, p):
    """`||e^{a+b}||_p <= ||e^{a/2} e^b e^{a/2}||_p` for every
    1 <= p <= inf.
    """
    a, b = _hermitian_pair(a, b)
    spec = _norm_spec_for_p(p)

    eig_a = matrix_kernel.eig_hermitian(a)
    half = matrix_kernel.exp_hermitian(eig_a, 0.5)
    lhs = rearrangement.symmetric_norm(profile_of(matrix_kernel.exp_hermitian(a + b)), spec)
    rhs = rearrangement.symmetric_norm(
        profile_of(half @ matrix_kernel.exp_hermitian(b) @ half), spec
    )

    return combine_parts(
        "golden_thompson_symmetrized",
        [relative_part("norm", lhs, rhs, SETTINGS.golden_thompson_rtol)],
        inputs_digest(a, b),
        p=str(spec),
        extra={"lhs": lhs, "rhs": rhs},
    )


def golden_thompson_trace(a, b):
    """The trace form `Tr e^{a+b} <= Tr(e^a e^b)`."""
    a, b = _hermitian_pair(a, b)

    lhs = float(np.trace(matrix_kernel.exp_hermitian(a + b)).real)
    product_trace = np.trace(matrix_kernel.exp_hermitian(a) @ matrix_kernel.exp_hermitian(b))
    rhs = float(product_trace.real)

    return combine_parts(
        "golden_thompson_trace",
        [relative_part("trace", lhs, rhs, SETTINGS.golden_thompson_rtol)],
        inputs_digest(a, b),
        p="schatten:1",
        extra={"lhs": lhs, "rhs": rhs, "imaginary_part": float(product_trace.imag)},
    )


"""REGISTRY"""

# Each verified inequality by name. The campaign suites of the same
# names draw inputs for them.
INEQUALITIES = {
    "bik_theorem_selfadjoint": bik_theorem_selfadjoint,
    "bik_theorem_general": bik_theorem_general,
    "bik_norm_corollary": bik_norm_corollary,
    "counterexample_tr": counterexample_tr,
    "counterexample_pointwise_search": counterexample_pointwise_search,
    "block_corollary_i": block_corollary_i,
    "block_corollary_ii": block_corollary_ii,
    "holder_norm_interpolation": holder_norm_interpolation,
    "schatten_half_power": schatten_half_power,
    "golden_thompson_symmetric": golden_thompson_symmetric,
    "golden_thompson_exp_sum": golden_thompson_exp_sum,
    "golden_thompson_symmetrized": golden_thompson_symmetrized,
    "golden_thompson_trace": golden_thompson_trace,
}
