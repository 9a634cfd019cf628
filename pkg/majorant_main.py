#!/usr/bin/env python3
# -*- coding: UTF-8 -*-
"""The main runtime of Majorant: the command-line surface over the
library modules.

    verify      run a seeded campaign (or replay one trial)
    check       submajorization verdict between two matrix or profile files
    certify     Ky Fan duality certificate of a matrix file
    strip       CSV grid of the strip function F(z)
    spectral    eigenvalue multiset match of ab and ba
    reproduce   the two counterexamples

Exit status is 0 when everything passes, 1 on an unexpected violation
(or an internal error, which also goes to the error log) and 2 on
invalid input.
"""
import argparse
import json
import os
import sys
import traceback

import numpy as np
import psutil

import database
import duality
import inequality_suite
import interpolation
import majorant_campaign
import matrix_kernel
import rearrangement
import spectral_traces
import text
from common import InputError, logger, main_error_log
from settings import INFO, SETTINGS
from timekeeping import elapsed_string

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2


"""HELPERS"""


def _int_list(value):
    try:
        return [int(x) for x in value.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected a comma-separated list of integers")


def _float_list(value):
    try:
        return [float(x) for x in value.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected a comma-separated list of numbers")


def _write_text(file_path, contents):
    with open(file_path, "w", encoding="utf-8") as f:
        f.write(contents)

    return


def _dump_json(data):
    return json.dumps(data, indent=2, sort_keys=True)


def _memory_usage():
    mem_num = psutil.Process(os.getpid()).memory_info().rss
    return "Memory usage: {:.2f} MB.".format(mem_num / (1024 * 1024))


def _status(holds):
    return text.STATUS_HOLDS if holds else text.STATUS_FAILS


"""VERIFY"""


def campaign_config_from_args(args):
    """Configuration file first, then explicit flags on top of it."""
    if args.config:
        config = majorant_campaign.CampaignConfig.from_file(args.config)
    else:
        config = majorant_campaign.CampaignConfig.from_settings()

    if args.suite is not None:
        config.suites = args.suite
    if args.seed is not None:
        config.seed = args.seed
    if args.sizes is not None:
        config.sizes = args.sizes
    if args.trials is not None:
        config.trials_per_size = args.trials
    if args.thetas is not None:
        config.theta_grid = args.thetas
    if args.workers is not None:
        config.workers = args.workers

    return config.validate()


def print_campaign_summary(report):
    summary = report.summary
    print(text.CAMPAIGN_HEADER.format(version=INFO.version_number, seed=report.config.seed))
    for suite, entry in sorted(summary["suites"].items()):
        print(
            text.CAMPAIGN_ROW.format(
                suite=suite,
                trials=entry["trials"],
                verdicts=entry["verdicts"],
                passed=entry["passed"],
                violations=entry["unexpected_violations"],
                expected=entry["expected_failures"],
                missed=entry["missed_expected_failures"],
            )
        )

    worst = majorant_campaign.worst_verdicts(report)
    if worst:
        print(text.CAMPAIGN_WORST_HEADER)
        for trial, verdict in worst:
            print(
                text.CAMPAIGN_WORST_ROW.format(
                    suite=trial.suite,
                    size=trial.size,
                    trial=trial.trial,
                    name=verdict.name,
                    theta=verdict.theta,
                    p=verdict.p,
                    margin=verdict.margin,
                    tolerance=verdict.tolerance,
                )
            )

    result = text.RESULT_PASS if report.passed else text.RESULT_FAIL
    print(
        text.CAMPAIGN_FOOTER.format(
            result=result, verdicts=summary["verdicts"], elapsed=elapsed_string(report.wall_time)
        )
    )

    return


def command_verify(args):
    config = campaign_config_from_args(args)

    if args.replay:
        trial = majorant_campaign.run_trial(
            config, *majorant_campaign.parse_descriptor(args.replay)
        )
        for verdict in trial.verdicts:
            print(
                text.VERDICT_LINE.format(
                    name=verdict.name,
                    status="passed" if verdict.passed else "FAILED",
                    margin=verdict.margin,
                    tolerance=verdict.tolerance,
                )
            )
        if args.json:
            _write_text(args.json, _dump_json(trial.to_json()))
        passed = all(verdict.passed for verdict in trial.verdicts)
        return EXIT_PASS if passed else EXIT_VIOLATION

    if not config.suites:
        print(text.CAMPAIGN_EMPTY)

    report = majorant_campaign.run_campaign(config)
    if config.suites:
        print_campaign_summary(report)
    if args.json:
        _write_text(args.json, _dump_json(majorant_campaign.report_to_json(report)))
    if args.csv:
        _write_text(args.csv, majorant_campaign.report_to_csv(report))
    if args.record:
        database.campaign_insert(config.seed, report.summary, report.passed)

    # Record memory usage at the end of a campaign.
    logger.info(
        "Verify: Campaign complete in {}. {}".format(
            elapsed_string(report.wall_time), _memory_usage()
        )
    )

    return EXIT_PASS if report.passed else EXIT_VIOLATION


"""SINGLE CHECKS"""


def command_check(args):
    left = rearrangement.load_profile(args.left)
    right = rearrangement.load_profile(args.right)
    verdict = rearrangement.submajorizes(left, right, args.tol)

    print(
        text.CHECK_RESULT.format(
            verdict=_status(verdict.holds),
            margin=verdict.margin,
            worst_t=verdict.worst_t,
            tolerance=verdict.tolerance_used,
        )
    )
    if args.json:
        _write_text(args.json, _dump_json(verdict.to_json()))

    return EXIT_PASS if verdict.holds else EXIT_VIOLATION


def command_certify(args):
    a = matrix_kernel.load_matrix(args.matrix)
    certificate, reference = duality.certify(a, args.k)
    data = certificate.to_json(reference)
    if args.samples:
        data["sampled_bound"] = duality.random_contraction_bound(
            a, args.k, args.samples, args.seed
        )
    print(_dump_json(data))

    return EXIT_PASS if certificate.is_valid(args.k) else EXIT_VIOLATION


def command_strip(args):
    a = matrix_kernel.load_matrix(args.a)
    b = matrix_kernel.load_matrix(args.b)
    c = matrix_kernel.load_matrix(args.c)
    thetas, imag_values = interpolation.strip_axes(args.ymax, args.ystep, args.thetas)
    grid = interpolation.strip_evaluate(a, b, c, thetas, imag_values, workers=args.workers)

    if args.output:
        _write_text(args.output, grid.to_csv())
    else:
        sys.stdout.write(grid.to_csv())

    holds = grid.boundedness()[0]
    if 0.0 in grid.thetas and 1.0 in grid.thetas:
        lines = interpolation.three_lines_check(grid)
        logger.info(
            "Strip: interior max {:.6g}, boundary max {:.6g}, three-lines {}.".format(
                lines.interior_max, lines.boundary_max, _status(lines.holds)
            )
        )
        holds = holds and lines.holds

    return EXIT_PASS if holds else EXIT_VIOLATION


def command_spectral(args):
    a = matrix_kernel.load_matrix(args.a)
    b = matrix_kernel.load_matrix(args.b)
    report = spectral_traces.lambda_ab_equals_ba(a, b, args.tol)
    data = {"lambda_ab_equals_ba": report.to_json()}
    holds = report.holds

    if args.theta is not None:
        interpolated = spectral_traces.lambda_interpolated(a, b, args.theta, args.tol)
        traces = spectral_traces.trace_theta_identity(a, b, args.theta)
        data["lambda_interpolated"] = interpolated.to_json()
        data["trace_theta_identity"] = traces.to_json()
        holds = holds and interpolated.holds and traces.holds
    print(_dump_json(data))

    return EXIT_PASS if holds else EXIT_VIOLATION


"""REPRODUCTIONS"""


def command_reproduce_tr(args):
    verdict = inequality_suite.counterexample_tr(args.lam, args.mu, args.theta)
    left = verdict.details["left_values"]
    right = verdict.details["right_values"]
    print(
        text.REPRODUCE_TR.format(
            lam=args.lam,
            mu=args.mu,
            theta=args.theta,
            left0=left[0],
            left1=left[1],
            right0=right[0],
            right1=right[1],
            margin=verdict.margin,
            verdict=_status(verdict.holds),
            closed_form="matches" if verdict.reproduced else "DIFFERS",
        )
    )

    return EXIT_PASS if verdict.passed else EXIT_VIOLATION


def command_reproduce_pointwise(args):
    result = inequality_suite.counterexample_pointwise_search(args.seed, args.trials)
    if not result.found:
        print(text.REPRODUCE_POINTWISE_NONE.format(trials=args.trials, seed=args.seed))
        return EXIT_VIOLATION

    a, b = result.witness
    pointwise, theorem = inequality_suite.verify_pointwise_witness(a, b)
    print(
        text.REPRODUCE_POINTWISE_FOUND.format(
            trial=result.trial_index,
            seed=args.seed,
            a=np.array2string(a, precision=6),
            b=np.array2string(b, precision=6),
            excess=result.excess,
            pointwise=_status(pointwise.holds),
            theorem=_status(theorem.holds),
        )
    )
    if args.record:
        database.witness_insert(args.seed, result.trial_index, a, b, result.excess)
    if args.save:
        _write_text(args.save, _dump_json(inequality_suite.witness_record(args.seed, result)))

    return EXIT_PASS if pointwise.passed and theorem.passed else EXIT_VIOLATION


"""ARGUMENTS"""


def build_parser():
    parser = argparse.ArgumentParser(
        prog="majorant", description="{} v{}".format(INFO.name, INFO.version_number)
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="run a seeded verification campaign")
    verify.add_argument("--suite", "--inequality", action="append", dest="suite")
    verify.add_argument("--seed", type=int)
    verify.add_argument("--sizes", type=_int_list)
    verify.add_argument("--trials", type=int)
    verify.add_argument("--thetas", type=_float_list)
    verify.add_argument("--workers", type=int)
    verify.add_argument("--config", help="YAML or JSON file mirroring the campaign config")
    verify.add_argument("--replay", metavar="SUITE:SIZE:TRIAL")
    verify.add_argument("--json")
    verify.add_argument("--csv")
    verify.add_argument("--record", action="store_true", help="store the summary")
    verify.set_defaults(handler=command_verify)

    check = commands.add_parser(
        "check", help="left <<< right for two matrix or profile files"
    )
    check.add_argument("left")
    check.add_argument("right")
    check.add_argument("--tol", type=float)
    check.add_argument("--json")
    check.set_defaults(handler=command_check)

    certify = commands.add_parser("certify", help="Ky Fan duality certificate")
    certify.add_argument("matrix")
    certify.add_argument("--k", type=int, required=True)
    certify.add_argument("--samples", type=int, default=0)
    certify.add_argument("--seed", type=int, default=0)
    certify.set_defaults(handler=command_certify)

    strip = commands.add_parser("strip", help="CSV grid of F(z) on the strip")
    strip.add_argument("a")
    strip.add_argument("b")
    strip.add_argument("c")
    strip.add_argument("--ymax", type=float, default=SETTINGS.strip_ymax)
    strip.add_argument("--ystep", type=float, default=SETTINGS.strip_ystep)
    strip.add_argument("--thetas", type=_float_list)
    strip.add_argument("--workers", type=int, default=1)
    strip.add_argument("--output")
    strip.set_defaults(handler=command_strip)

    spectral = commands.add_parser("spectral", help="Lambda(ab) versus Lambda(ba)")
    spectral.add_argument("a")
    spectral.add_argument("b")
    spectral.add_argument("--theta", type=float)
    spectral.add_argument("--tol", type=float)
    spectral.set_defaults(handler=command_spectral)

    reproduce = commands.add_parser("reproduce", help="reproduce a counterexample")
    examples = reproduce.add_subparsers(dest="example", required=True)
    tr = examples.add_parser("counterexample-tr")
    tr.add_argument("--lambda", dest="lam", type=float, default=SETTINGS.counterexample_lambda)
    tr.add_argument("--mu", type=float, default=SETTINGS.counterexample_mu)
    tr.add_argument("--theta", type=float, default=SETTINGS.counterexample_theta)
    tr.set_defaults(handler=command_reproduce_tr)
    pointwise = examples.add_parser("pointwise-search")
    pointwise.add_argument("--seed", type=int, default=SETTINGS.campaign_seed)
    pointwise.add_argument("--trials", type=int, default=SETTINGS.pointwise_search_trials)
    pointwise.add_argument("--record", action="store_true", help="store the witness")
    pointwise.add_argument("--save", help="write the witness record to a JSON file")
    pointwise.set_defaults(handler=command_reproduce_pointwise)

    return parser


def main(argv=None):
    """Runs one command.

    :param argv: Arguments without the program name, `sys.argv[1:]`
                 if not given.
    :return: The exit status.
    """
    args = build_parser().parse_args(argv)

    try:
        return args.handler(args)
    except InputError as e:
        logger.error("Input Error: {}".format(e))
        print("Input error: {}".format(e), file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as e:
        logger.error("Input Error: {}".format(e))
        print("Cannot read or write a file: {}".format(e), file=sys.stderr)
        return EXIT_INPUT_ERROR
    except Exception as e:
        # Unexpected internal errors get the full traceback in the
        # error log as well.
        error_entry = "\n### {} \n\n".format(e)
        error_entry += traceback.format_exc()
        logger.error(error_entry)
        main_error_log(error_entry)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
