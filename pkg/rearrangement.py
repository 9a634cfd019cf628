#!/usr/bin/env python3
# -*- coding: UTF-8 -*-
"""The rearrangement component works with singular value profiles: the
non-increasing rearrangement mu(x) viewed as a step function on
[0, infinity), its Ky Fan partial-sum function, submajorization
verdicts, the pointwise algebra of profiles and symmetric norms.

A note on exactness. Both Ky Fan functions of a comparison are
piecewise linear with breakpoints at the integers, so their difference
is piecewise linear with the same breakpoints and attains its maximum
over [0, infinity) at one of them (beyond the longer support both are
constant). `submajorizes` therefore evaluates only the integer
breakpoints 0..n and its verdict is exact, no grid search involved.
"""
import math
from dataclasses import dataclass

import numpy as np

import matrix_kernel
from common import InputError
from settings import SETTINGS


"""PROFILE TYPES"""


@dataclass(frozen=True, eq=False)
class SingularProfile:
    """Non-increasing sequence of non-negative reals. The step function
    it stands for is `mu(t) = values[n]` on `[n, n + 1)` and 0 beyond.
    """

    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float).reshape(-1)
        if not np.all(np.isfinite(values)):
            raise InputError("Profile values must be finite.")
        if values.size and values.min() < 0.0:
            raise InputError("Profile values must be non-negative.")
        if np.any(np.diff(values) > 0.0):
            raise InputError("Profile values must be non-increasing.")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __len__(self):
        return self.values.size

    def __eq__(self, other):
        if not isinstance(other, SingularProfile):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    def padded(self, length):
        """The values zero-padded to `length` entries."""
        padding = max(0, length - self.values.size)
        return np.concatenate([self.values, np.zeros(padding)])

    def to_json(self):
        return {"values": [float(v) for v in self.values]}

    @classmethod
    def from_json(cls, data):
        try:
            return cls(np.asarray(data["values"], dtype=float))
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, InputError):
                raise
            raise InputError("Profile JSON needs a numeric `values` list: {}".format(e))


@dataclass(frozen=True, eq=False)
class KyFanFunction:
    """`t -> integral_0^t mu(s) ds` stored by its values at the integer
    breakpoints 0..n. `partial_sums[k]` is the sum of the top k values.
    """

    breakpoints: np.ndarray
    partial_sums: np.ndarray

    def __call__(self, t):
        return _ky_fan_at(self.partial_sums, t)

    @property
    def increments(self):
        return np.diff(self.partial_sums)


@dataclass(frozen=True)
class SubmajorizationVerdict:
    """Outcome of `left <<< right`. `margin` is the exact maximum over
    t >= 0 of `K_left(t) - K_right(t)` and `worst_t` the first
    breakpoint attaining it.
    """

    holds: bool
    worst_t: float
    margin: float
    tolerance_used: float

    def to_json(self):
        return {
            "holds": self.holds,
            "worst_t": self.worst_t,
            "margin": self.margin,
            "tolerance": self.tolerance_used,
        }


@dataclass(frozen=True)
class NormSpec:
    """Descriptor of a symmetric norm: `schatten` with order p in
    [1, inf], `ky_fan` with integer order k >= 1, or `operator`.
    """

    kind: str
    order: float = math.inf

    def __str__(self):
        if self.kind == "operator":
            return "operator"
        if self.kind == "schatten" and math.isinf(self.order):
            return "schatten:inf"
        if self.kind == "ky_fan":
            return "ky_fan:{}".format(int(self.order))
        return "schatten:{:g}".format(self.order)


def schatten(p):
    p = float(p)
    if not p >= 1.0:
        raise InputError("Schatten order must be >= 1, got {}.".format(p))
    if math.isinf(p):
        return NormSpec("operator")

    return NormSpec("schatten", p)


def ky_fan_norm(k):
    if int(k) != k or k < 1:
        raise InputError("Ky Fan order must be an integer >= 1, got {}.".format(k))

    return NormSpec("ky_fan", int(k))


OPERATOR_NORM = NormSpec("operator")


def parse_norm(text):
    """Parses `schatten:P`, `ky_fan:K`, `operator` or `schatten:inf`.

    :param text: The descriptor as typed on the command line.
    :return: A `NormSpec`.
    """
    if isinstance(text, NormSpec):
        return text
    text = str(text).strip().lower()
    if text in ("operator", "operator_norm", "inf"):
        return OPERATOR_NORM

    kind, _, order = text.partition(":")
    try:
        if kind == "schatten":
            return schatten(float(order))
        if kind in ("ky_fan", "kyfan"):
            return ky_fan_norm(int(order))
    except ValueError as e:
        if isinstance(e, InputError):
            raise
        raise InputError("Bad norm order in `{}`.".format(text))

    raise InputError("Unknown norm descriptor `{}`.".format(text))


"""PROFILES"""


def profile_of(a):
    """Singular value profile of a matrix.

    :param a: Any finite matrix.
    :return: `SingularProfile` of its singular values.
    """
    values = np.sort(matrix_kernel.singular_values(a))[::-1]

    return SingularProfile(np.maximum(values, 0.0))


def load_profile(file_path):
    """Reads a profile file `{"values": [...]}`, or a matrix file whose
    singular values are taken.
    """
    data = matrix_kernel.load_json(file_path)
    if isinstance(data, dict) and "values" in data:
        return SingularProfile.from_json(data)

    return profile_of(matrix_kernel.matrix_from_json(data))


def ky_fan_function(p):
    partial_sums = np.concatenate([[0.0], np.cumsum(p.values)])

    return KyFanFunction(np.arange(len(p) + 1), partial_sums)


def _ky_fan_at(partial_sums, t):
    n = partial_sums.size - 1
    if t >= n:
        return float(partial_sums[n])
    k = int(math.floor(t))

    return float(partial_sums[k] + (t - k) * (partial_sums[k + 1] - partial_sums[k]))


def ky_fan(p, t):
    """Exact value of `integral_0^t mu(s) ds` for the step function of
    `p`. For integer k it is the sum of the top k values.

    :param p: A `SingularProfile`.
    :param t: A real `t >= 0`.
    :return: The partial integral.
    """
    t = float(t)
    if not t >= 0.0:
        raise InputError("ky_fan needs t >= 0, got {}.".format(t))

    return ky_fan_function(p)(t)


def default_tolerance(right):
    """Tolerance for matrix-derived comparisons:
    `submajorization_rtol * max(1, K_right(n))`.
    """
    return SETTINGS.submajorization_rtol * max(1.0, float(np.sum(right.values)))


def submajorizes(left, right, tol=None):
    """Verdict on `left <<< right`, i.e.
    `K_left(t) <= K_right(t) + tol` for every t >= 0.

    :param left: The profile claimed to be submajorized.
    :param right: The dominating profile.
    :param tol: Non-negative tolerance, `default_tolerance(right)` if
                not given.
    :return: `SubmajorizationVerdict`.
    """
    if tol is None:
        tol = default_tolerance(right)
    tol = float(tol)
    if not tol >= 0.0:
        raise InputError("Tolerance must be non-negative, got {}.".format(tol))

    length = max(len(left), len(right))
    k_left = ky_fan_function(SingularProfile(left.padded(length))).partial_sums
    k_right = ky_fan_function(SingularProfile(right.padded(length))).partial_sums
    difference = k_left - k_right
    worst = int(np.argmax(difference))
    margin = float(difference[worst])

    return SubmajorizationVerdict(margin <= tol, float(worst), margin, tol)


"""PROFILE ALGEBRA"""


def _common_grid(p, q):
    length = max(len(p), len(q))
    return p.padded(length), q.padded(length)


def profile_max(p, q):
    """Pointwise maximum on the common integer grid."""
    left, right = _common_grid(p, q)
    return SingularProfile(np.maximum(left, right))


def profile_product(p, q):
    """Pointwise product on the common integer grid."""
    left, right = _common_grid(p, q)
    return SingularProfile(left * right)


def profile_direct_sum(p, q):
    """Profile of a block-diagonal direct sum: both value lists merged
    and sorted non-increasing.
    """
    merged = np.concatenate([p.values, q.values])
    return SingularProfile(np.sort(merged)[::-1])


def sigma2(p):
    """Doubling operator `(a0, a1, ...) -> (a0, a0, a1, a1, ...)`."""
    return SingularProfile(np.repeat(p.values, 2))


"""SYMMETRIC NORMS"""


def symmetric_norm(p, spec):
    """Symmetric norm of a profile.

    :param p: A `SingularProfile`.
    :param spec: A `NormSpec` or a descriptor string.
    :return: `schatten(p)`: `(sum v^p)^(1/p)`; `ky_fan(k)`: top-k sum;
             `operator`: largest value (0 for an empty profile).
    """
    spec = parse_norm(spec)
    if len(p) == 0:
        return 0.0

    if spec.kind == "operator":
        return float(p.values[0])
    if spec.kind == "ky_fan":
        return ky_fan(p, spec.order)
    if spec.kind == "schatten":
        # Normalized by the largest value, so every term lies in [0, 1].
        top = float(p.values[0])
        if top == 0.0:
            return 0.0
        return top * float(np.linalg.norm(p.values / top, ord=spec.order))

    raise InputError("Unknown norm kind `{}`.".format(spec.kind))
