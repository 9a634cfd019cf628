#!/usr/bin/env python3
# -*- coding: UTF-8 -*-
"""The campaign component runs seeded verification campaigns: every
configured suite over every (size, trial) pair, with each trial drawing
its inputs from its own random stream (see `generators`). Trials run on
a thread pool and the report is sorted by trial descriptor, so the
verdicts do not depend on the number of workers.

A suite is a function of a `TrialContext` returning a list of
`InequalityVerdict`. Counterexample suites set `expected_failure` on
their verdicts; they pass when the violation is found.
"""
import contextlib
import csv
import io
import math
import operator
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

import duality
import generators
import inequality_suite
import interpolation
import rearrangement
import spectral_traces
import text
from common import InputError, closest_name, logger, name_sanitizer
from inequality_suite import ComparisonPart, InequalityVerdict, combine_parts, inputs_digest
from settings import SETTINGS, load_overrides
from timekeeping import elapsed_string, now_string

# Settings that a campaign configuration may override.
TOLERANCE_KEYS = (
    "rtol",
    "hermitian_tol",
    "psd_tol",
    "rank_threshold",
    "submajorization_rtol",
    "duality_rtol",
    "three_lines_rtol",
    "norm_rtol",
    "golden_thompson_rtol",
    "spectral_rtol",
    "trace_rtol",
)
_OVERRIDE_LOCK = threading.Lock()
CSV_COLUMNS = (
    "suite",
    "size",
    "trial",
    "name",
    "theta",
    "p",
    "holds",
    "passed",
    "expected_failure",
    "margin",
    "tolerance",
    "worst_t",
)


"""CONFIGURATION"""


def _parse_p(value):
    if isinstance(value, str) and value.strip().lower() in ("inf", "infinity", "operator"):
        return math.inf
    try:
        return float(value)
    except (TypeError, ValueError):
        raise InputError("Bad p value `{}`.".format(value))


@dataclass
class CampaignConfig:
    seed: int
    sizes: list
    trials_per_size: int
    theta_grid: list
    p_grid: list
    suites: list
    workers: int = 1
    tolerances: dict = field(default_factory=dict)

    def validate(self):
        """Checks every field and resolves suite names.

        :return: The config itself, with sanitized suite names.
        """
        if int(self.seed) != self.seed or not 0 <= self.seed < 2**64:
            raise InputError("Campaign seed must be a 64-bit unsigned integer.")
        if not all(int(n) == n and n >= 1 for n in self.sizes):
            raise InputError("Campaign sizes must be positive integers: {}.".format(self.sizes))
        if int(self.trials_per_size) != self.trials_per_size or self.trials_per_size < 1:
            raise InputError("trials_per_size must be a positive integer.")
        if not all(0.0 <= theta <= 1.0 for theta in self.theta_grid):
            raise InputError("Every theta must lie in [0, 1], got {}.".format(self.theta_grid))
        if not all(p >= 1.0 for p in self.p_grid):
            raise InputError("Every p must be >= 1, got {}.".format(self.p_grid))
        if int(self.workers) != self.workers or self.workers < 1:
            raise InputError("workers must be a positive integer.")
        for key, value in self.tolerances.items():
            if key not in TOLERANCE_KEYS:
                raise InputError("`{}` is not an overridable tolerance.".format(key))
            if not float(value) >= 0.0:
                raise InputError("Tolerance `{}` must be non-negative.".format(key))

        self.suites = [resolve_suite(name) for name in self.suites]
        self.sizes = [int(n) for n in self.sizes]
        self.trials_per_size = int(self.trials_per_size)
        self.workers = int(self.workers)

        return self

    @classmethod
    def from_settings(cls):
        return cls(
            seed=SETTINGS.campaign_seed,
            sizes=list(SETTINGS.campaign_sizes),
            trials_per_size=SETTINGS.campaign_trials,
            theta_grid=[float(t) for t in SETTINGS.campaign_thetas],
            p_grid=[_parse_p(p) for p in SETTINGS.campaign_p_grid],
            suites=list(SETTINGS.campaign_suites),
            workers=SETTINGS.campaign_workers,
        )

    @classmethod
    def from_mapping(cls, data, base=None):
        """Builds a config from a dictionary mirroring the fields,
        missing fields taken from `base` (the settings by default).
        """
        config = base or cls.from_settings()
        unknown = set(data) - set(config.__dataclass_fields__)
        if unknown:
            raise InputError("Unknown campaign fields: {}.".format(", ".join(sorted(unknown))))

        values = dict(config.__dict__)
        values.update(data)
        values["theta_grid"] = [float(t) for t in values["theta_grid"]]
        values["p_grid"] = [_parse_p(p) for p in values["p_grid"]]
        values["tolerances"] = dict(values.get("tolerances") or {})

        return cls(**values)

    @classmethod
    def from_file(cls, file_path):
        """Reads a YAML or JSON configuration file."""
        data = load_overrides(file_path)
        if not isinstance(data, dict):
            raise InputError("Campaign configuration must be a mapping.")

        return cls.from_mapping(data)

    def to_json(self):
        return {
            "seed": self.seed,
            "sizes": self.sizes,
            "trials_per_size": self.trials_per_size,
            "theta_grid": self.theta_grid,
            "p_grid": [inequality_suite.json_float(p) for p in self.p_grid],
            "suites": self.suites,
            "tolerances": self.tolerances,
        }


@contextlib.contextmanager
def tolerance_overrides(tolerances):
    """Temporarily replaces tolerance settings for the whole process."""
    with _OVERRIDE_LOCK:
        saved = {key: getattr(SETTINGS, key) for key in tolerances}
        for key, value in tolerances.items():
            setattr(SETTINGS, key, float(value))
        try:
            yield
        finally:
            for key, value in saved.items():
                setattr(SETTINGS, key, value)


"""SUITES"""


@dataclass(frozen=True)
class TrialContext:
    rng: np.random.Generator
    n: int
    trial: int
    config: CampaignConfig

    @property
    def singular(self):
        """Odd trials use rank-deficient PSD inputs."""
        return self.trial % 2 == 1

    def hermitian(self, norm_cap=None, n=None):
        cap = SETTINGS.hermitian_norm_cap if norm_cap is None else norm_cap
        return generators.gen_hermitian(n or self.n, self.rng, norm_cap=cap)

    def psd(self, n=None):
        return generators.gen_psd(n or self.n, self.rng, allow_singular=self.singular)

    def ginibre(self, n=None):
        return generators.gen_ginibre(n or self.n, self.rng)


@dataclass(frozen=True)
class Suite:
    name: str
    run: object
    generators: tuple


def _norm_specs(context, include_ky_fan=False):
    specs = [rearrangement.schatten(p) for p in context.config.p_grid]
    if include_ky_fan:
        n = context.n
        specs += [rearrangement.ky_fan_norm(k) for k in sorted({1, math.ceil(n / 2), n})]

    # Deduplicate while keeping order (p = inf and the operator norm coincide).
    return list(dict.fromkeys(specs))


def _suite_bik_selfadjoint(context):
    a = context.hermitian()
    b = context.psd()
    return [
        inequality_suite.bik_theorem_selfadjoint(a, b, theta)
        for theta in context.config.theta_grid
    ]


def _suite_bik_general(context):
    a = context.ginibre()
    b = context.psd()
    return [
        inequality_suite.bik_theorem_general(a, b, theta) for theta in context.config.theta_grid
    ]


def _suite_bik_norm(context):
    a = context.ginibre() if context.trial % 3 else context.hermitian()
    b = context.psd()
    return [
        inequality_suite.bik_norm_corollary(a, b, theta, spec)
        for theta in context.config.theta_grid
        for spec in _norm_specs(context)
    ]


def _suite_counterexample_tr(context):
    mu = float(context.rng.uniform(-1.0, 1.0))
    lam = mu + float(context.rng.uniform(0.1, 2.0))
    # theta = 0 leaves both sides equal, so there is nothing to find.
    return [
        inequality_suite.counterexample_tr(lam, mu, theta)
        for theta in context.config.theta_grid
        if theta > 0.0
    ]


def _suite_pointwise_search(context):
    """The witness search is always 2x2, so in a campaign it only runs at
    the smallest size and contributes no verdicts at the others.
    """
    sizes = context.config.sizes
    if context.n in sizes and context.n != min(sizes):
        return []
    search_seed = int(context.rng.integers(0, 2**63))
    result = inequality_suite.counterexample_pointwise_search(search_seed)
    if not result.found:
        return [
            InequalityVerdict(
                name="pointwise_singular_values",
                holds=True,
                margin=result.excess,
                tolerance=SETTINGS.rtol,
                theta=0.5,
                expected_failure=True,
                details={"search_seed": search_seed},
            )
        ]

    return list(inequality_suite.verify_pointwise_witness(*result.witness))


def _suite_block_i(context):
    a = context.ginibre()
    b0 = context.psd()
    b1 = context.psd()
    return [
        inequality_suite.block_corollary_i(a, b0, b1, theta) for theta in context.config.theta_grid
    ]


def _suite_block_ii(context):
    a = context.hermitian() if context.trial % 2 == 0 else context.ginibre()
    b0 = context.psd()
    b1 = context.psd()
    thetas = sorted(set(context.config.theta_grid) | {0.5})
    return [inequality_suite.block_corollary_ii(a, b0, b1, theta) for theta in thetas]


def _suite_holder(context):
    a = context.ginibre()
    b0 = context.psd()
    b1 = context.psd()
    return [
        inequality_suite.holder_norm_interpolation(a, b0, b1, theta, spec)
        for theta in context.config.theta_grid
        for spec in _norm_specs(context, include_ky_fan=True)
    ]


def _suite_half_power(context):
    a = context.hermitian()
    b0 = context.psd()
    b1 = context.psd()
    return [
        inequality_suite.schatten_half_power(a, b0, b1, p)
        for p in context.config.p_grid
        if not math.isinf(p)
    ]


def _golden_thompson_pair(context):
    n = min(context.n, SETTINGS.golden_thompson_max_size)
    cap = SETTINGS.golden_thompson_norm_cap
    return context.hermitian(cap, n), context.hermitian(cap, n)


def _suite_gt_symmetric(context):
    a, b = _golden_thompson_pair(context)
    return [
        inequality_suite.golden_thompson_symmetric(a, b, theta, spec)
        for theta in context.config.theta_grid
        for spec in _norm_specs(context)
    ]


def _suite_gt_exp_sum(context):
    a, b = _golden_thompson_pair(context)
    return [inequality_suite.golden_thompson_exp_sum(a, b, p) for p in context.config.p_grid]


def _suite_gt_symmetrized(context):
    a, b = _golden_thompson_pair(context)
    return [inequality_suite.golden_thompson_symmetrized(a, b, p) for p in context.config.p_grid]


def _suite_gt_trace(context):
    a, b = _golden_thompson_pair(context)
    return [inequality_suite.golden_thompson_trace(a, b)]


def _suite_duality(context):
    """Duality equality and the sampled upper-bound side for every k."""
    a = context.ginibre()
    profile = rearrangement.profile_of(a)
    equality_parts = []
    sampled_parts = []
    for k in range(context.n + 1):
        reference = rearrangement.ky_fan(profile, k)
        tolerance = SETTINGS.duality_rtol * (1.0 + reference)
        dual = duality.ky_fan_via_duality(a, k, seed=context.rng)
        equality_parts.append(
            ComparisonPart("equality", abs(dual - reference), tolerance, float(k))
        )
        if k:
            sampled = duality.random_contraction_bound(
                a, k, SETTINGS.duality_samples, context.rng
            )
            sampled_parts.append(
                ComparisonPart("sampled_bound", sampled - reference, SETTINGS.rtol, float(k))
            )
        certificate = duality.optimal_contraction(a, k)
        if not certificate.is_valid(k):
            raise RuntimeError("Optimal certificate for k={} violates its invariants.".format(k))

    digest = inputs_digest(a)
    worst = operator.attrgetter("score")
    return [
        combine_parts("ky_fan_duality", [max(equality_parts, key=worst)], digest),
        combine_parts("ky_fan_sampled_bound", [max(sampled_parts, key=worst)], digest),
    ]


def _suite_three_lines(context):
    n = context.n
    a = context.ginibre()
    b = context.hermitian(SETTINGS.three_lines_norm_cap)
    rank = int(context.rng.integers(1, n + 1))
    c = duality.random_contraction((n, n), rank, context.rng)
    padded_ymax = SETTINGS.strip_ymax + SETTINGS.strip_boundary_pad
    thetas, imag_values = interpolation.strip_axes(padded_ymax)
    grid = interpolation.strip_evaluate(a, b, c, thetas, imag_values)

    lines = interpolation.three_lines_check(grid, interior_ymax=SETTINGS.strip_ymax)
    holds, margin, tolerance = grid.boundedness()
    digest = inputs_digest(a, b, c)
    return [
        combine_parts(
            "three_lines",
            [ComparisonPart("interior", lines.interior_max - lines.boundary_max, lines.tolerance)],
            digest,
            extra={"interior_max": lines.interior_max, "boundary_max": lines.boundary_max},
        ),
        combine_parts(
            "strip_boundedness",
            [ComparisonPart("bound", margin, tolerance)],
            digest,
            extra={"bound_constant": grid.bound_constant, "max_abs": grid.max_abs},
        ),
    ]


def _suite_boundary(context):
    a = context.hermitian()
    general = context.ginibre()
    b = context.hermitian(SETTINGS.three_lines_norm_cap)
    verdicts = []
    for theta in context.config.theta_grid:
        bound = interpolation.boundary_submajorization_bound(a, b, theta)
        bound_max = interpolation.boundary_submajorization_max(general, b, theta)
        verdicts.append(
            combine_parts(
                "boundary_submajorization_bound",
                [inequality_suite.submajorization_part("submajorization", bound)],
                inputs_digest(a, b),
                theta=theta,
            )
        )
        verdicts.append(
            combine_parts(
                "boundary_submajorization_max",
                [inequality_suite.submajorization_part("submajorization", bound_max)],
                inputs_digest(general, b),
                theta=theta,
            )
        )

    return verdicts


def _suite_spectral(context):
    a = context.ginibre()
    b = context.psd()
    digest = inputs_digest(a, b)

    report = spectral_traces.lambda_ab_equals_ba(a, b)
    scale = 1.0 + float(abs(np.trace(a @ b)))
    verdicts = [
        combine_parts(
            "lambda_ab_equals_ba",
            [
                ComparisonPart("match", report.max_mismatch, report.tolerance),
                ComparisonPart(
                    "trace_sum", report.trace_sum_deviation, SETTINGS.spectral_rtol * scale
                ),
            ],
            digest,
            extra={"method": report.method, "ill_conditioned": report.ill_conditioned},
        )
    ]
    for theta in context.config.theta_grid:
        interpolated = spectral_traces.lambda_interpolated(a, b, theta)
        traces = spectral_traces.trace_theta_identity(a, b, theta)
        verdicts.append(
            combine_parts(
                "lambda_interpolated",
                [
                    ComparisonPart("match", interpolated.max_mismatch, interpolated.tolerance),
                    ComparisonPart("trace", max(traces.deviations), traces.tolerance),
                ],
                digest,
                theta=theta,
                extra={"ill_conditioned": interpolated.ill_conditioned},
            )
        )

    eigen_trace = spectral_traces.trace_eigenvalue_identity(a @ b)
    verdicts.append(
        combine_parts(
            "trace_eigenvalue_identity",
            [ComparisonPart("trace", eigen_trace.deviations[0], eigen_trace.tolerance)],
            digest,
        )
    )

    return verdicts


SUITES = {
    suite.name: suite
    for suite in (
        Suite("bik_theorem_selfadjoint", _suite_bik_selfadjoint, ("hermitian", "psd")),
        Suite("bik_theorem_general", _suite_bik_general, ("ginibre", "psd")),
        Suite("bik_norm_corollary", _suite_bik_norm, ("ginibre|hermitian", "psd")),
        Suite("counterexample_tr", _suite_counterexample_tr, ("uniform",)),
        Suite("counterexample_pointwise_search", _suite_pointwise_search, ("hermitian", "psd")),
        Suite("block_corollary_i", _suite_block_i, ("ginibre", "psd", "psd")),
        Suite("block_corollary_ii", _suite_block_ii, ("hermitian|ginibre", "psd", "psd")),
        Suite("holder_norm_interpolation", _suite_holder, ("ginibre", "psd", "psd")),
        Suite("schatten_half_power", _suite_half_power, ("hermitian", "psd", "psd")),
        Suite("golden_thompson_symmetric", _suite_gt_symmetric, ("hermitian", "hermitian")),
        Suite("golden_thompson_exp_sum", _suite_gt_exp_sum, ("hermitian", "hermitian")),
        Suite("golden_thompson_symmetrized", _suite_gt_symmetrized, ("hermitian", "hermitian")),
        Suite("golden_thompson_trace", _suite_gt_trace, ("hermitian", "hermitian")),
        Suite("ky_fan_duality", _suite_duality, ("ginibre", "haar")),
        Suite("three_lines", _suite_three_lines, ("ginibre", "hermitian", "haar")),
        Suite("boundary_submajorization", _suite_boundary, ("hermitian", "ginibre", "hermitian")),
        Suite("spectral_identities", _suite_spectral, ("ginibre", "psd")),
    )
}


def resolve_suite(name):
    """Sanitizes a suite name and checks that it exists.

    :param name: The name as typed, e.g. `Bik-Theorem-General`.
    :return: The registered suite name.
    """
    sanitized = name_sanitizer(name)
    if sanitized in SUITES:
        return sanitized

    suggestion = closest_name(sanitized, SUITES)
    if suggestion:
        raise InputError(text.MSG_UNKNOWN_SUITE_SUGGEST.format(name, suggestion))
    raise InputError(text.MSG_UNKNOWN_SUITE.format(name))


"""TRIALS"""


@dataclass(frozen=True)
class TrialReport:
    seed: int
    suite: str
    size: int
    trial: int
    generators: tuple
    verdicts: list
    wall_time: float = 0.0

    @property
    def descriptor(self):
        return "{}:{}:{}".format(self.suite, self.size, self.trial)

    @property
    def unexpected_violations(self):
        return [v for v in self.verdicts if not v.holds and not v.expected_failure]

    @property
    def missed_expected_failures(self):
        return [v for v in self.verdicts if v.expected_failure and not v.passed]

    def to_json(self, include_timing=True):
        data = {
            "seed": self.seed,
            "descriptor": self.descriptor,
            "suite": self.suite,
            "size": self.size,
            "trial": self.trial,
            "generators": list(self.generators),
            "verdicts": [verdict.to_json() for verdict in self.verdicts],
        }
        if include_timing:
            data["wall_time"] = self.wall_time

        return data


def parse_descriptor(descriptor):
    """Splits `suite:size:trial` into its parts."""
    parts = str(descriptor).strip().split(":")
    if len(parts) != 3:
        raise InputError(text.MSG_BAD_DESCRIPTOR.format(descriptor))
    try:
        size, trial = int(parts[1]), int(parts[2])
    except ValueError:
        raise InputError(text.MSG_BAD_DESCRIPTOR.format(descriptor))
    if size < 1 or trial < 0:
        raise InputError(text.MSG_BAD_DESCRIPTOR.format(descriptor))

    return resolve_suite(parts[0]), size, trial


def run_trial(config, suite_name, size, trial):
    """Runs one trial standalone. The result is identical to the same
    trial inside a full campaign with the same seed.
    """
    suite = SUITES[resolve_suite(suite_name)]
    rng = generators.trial_rng(config.seed, generators.suite_key(suite.name), size, trial)
    context = TrialContext(rng, size, trial, config)

    start = time.perf_counter()
    verdicts = suite.run(context)
    wall_time = time.perf_counter() - start

    return TrialReport(config.seed, suite.name, size, trial, suite.generators, verdicts, wall_time)


"""CAMPAIGNS"""


@dataclass(frozen=True)
class CampaignReport:
    config: CampaignConfig
    trials: list
    summary: dict
    started: str = ""
    wall_time: float = 0.0

    @property
    def passed(self):
        return all(
            entry["unexpected_violations"] == 0 and entry["missed_expected_failures"] == 0
            for entry in self.summary["suites"].values()
        )


def summarize(trials):
    """Counts verdicts per suite and finds the worst ordinary verdict.

    :param trials: A list of `TrialReport`.
    :return: A dictionary with `suites`, `verdicts` and `worst`.
    """
    suites = {}
    worst = None
    worst_score = -math.inf
    total = 0
    for report in trials:
        entry = suites.setdefault(
            report.suite,
            {
                "trials": 0,
                "verdicts": 0,
                "passed": 0,
                "unexpected_violations": 0,
                "expected_failures": 0,
                "missed_expected_failures": 0,
            },
        )
        entry["trials"] += 1
        for verdict in report.verdicts:
            total += 1
            entry["verdicts"] += 1
            entry["passed"] += int(verdict.passed)
            if verdict.expected_failure:
                entry["expected_failures"] += int(verdict.passed)
                entry["missed_expected_failures"] += int(not verdict.passed)
                continue

            entry["unexpected_violations"] += int(not verdict.holds)
            score = verdict.margin - verdict.tolerance
            if score > worst_score:
                worst_score = score
                worst = {
                    "descriptor": report.descriptor,
                    "name": verdict.name,
                    "theta": verdict.theta,
                    "p": verdict.p,
                    "margin": inequality_suite.json_float(verdict.margin),
                    "tolerance": inequality_suite.json_float(verdict.tolerance),
                }

    return {"suites": suites, "verdicts": total, "worst": worst}


def run_campaign(config):
    """Runs every configured suite over every (size, trial) pair.

    :param config: A `CampaignConfig`; validated before any trial runs.
    :return: `CampaignReport`.
    """
    config.validate()
    jobs = [
        (suite, size, trial)
        for suite in config.suites
        for size in config.sizes
        for trial in range(config.trials_per_size)
    ]
    started = now_string()
    start = time.perf_counter()
    logger.info(
        "Run Campaign: {:,} trials over {} suites with {} workers.".format(
            len(jobs), len(config.suites), config.workers
        )
    )

    with tolerance_overrides(config.tolerances):
        if config.workers > 1 and len(jobs) > 1:
            with ThreadPoolExecutor(max_workers=config.workers) as executor:
                trials = list(executor.map(lambda job: run_trial(config, *job), jobs))
        else:
            trials = [run_trial(config, *job) for job in jobs]

    trials.sort(key=lambda report: (report.suite, report.size, report.trial))
    summary = summarize(trials)
    wall_time = time.perf_counter() - start
    logger.info(
        "Run Campaign: {:,} verdicts in {}.".format(summary["verdicts"], elapsed_string(wall_time))
    )

    return CampaignReport(config, trials, summary, started, wall_time)


"""REPORTS"""


def report_to_json(report, include_timing=True):
    """The campaign report as a JSON-ready dictionary. With
    `include_timing` off, the output depends only on the configuration.
    """
    data = {
        "schema_version": SETTINGS.report_schema_version,
        "config": report.config.to_json(),
        "passed": report.passed,
        "summary": report.summary,
        "trials": [trial.to_json(include_timing) for trial in report.trials],
    }
    if include_timing:
        data["timing"] = {"started": report.started, "wall_time": report.wall_time}

    return data


def report_to_csv(report):
    """One row per verdict."""
    output = io.StringIO()
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for trial in report.trials:
        for verdict in trial.verdicts:
            row = (trial.suite, trial.size, trial.trial, verdict.name, verdict.theta, verdict.p)
            row += (verdict.holds, verdict.passed, verdict.expected_failure)
            row += (repr(verdict.margin), repr(verdict.tolerance), verdict.worst_t)
            writer.writerow(row)

    return output.getvalue()


def worst_verdicts(report, number=None):
    """The ordinary verdicts with the largest margin minus tolerance."""
    number = SETTINGS.num_display if number is None else number
    rows = [
        (verdict.margin - verdict.tolerance, trial, verdict)
        for trial in report.trials
        for verdict in trial.verdicts
        if not verdict.expected_failure
    ]
    rows.sort(key=lambda row: row[0], reverse=True)

    return [(trial, verdict) for _, trial, verdict in rows[:number]]
