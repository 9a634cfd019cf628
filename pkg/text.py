#!/usr/bin/env python3
# -*- coding: UTF-8 -*-
"""The text component is a collection of templates used by Majorant in
its command-line output and error messages.
"""

# These are messages about names the user typed.
MSG_UNKNOWN_SUITE = "Unknown suite `{}`."
MSG_UNKNOWN_SUITE_SUGGEST = "Unknown suite `{}`. Did you mean `{}`?"
MSG_BAD_DESCRIPTOR = (
    "Bad trial descriptor `{}`. Use `suite:size:trial`, "
    "for example `bik_theorem_general:8:17`."
)

# Campaign summary, printed as a Markdown table after `verify`.
CAMPAIGN_HEADER = """
### Majorant v{version} campaign (seed {seed})

| Suite | Trials | Verdicts | Passed | Unexpected violations | Expected failures | Missed |
|-------|--------|----------|--------|-----------------------|-------------------|--------|"""
CAMPAIGN_ROW = (
    "| {suite} | {trials:,} | {verdicts:,} | {passed:,} | "
    "{violations:,} | {expected:,} | {missed:,} |"
)
CAMPAIGN_FOOTER = """
**Result:** {result}. {verdicts:,} verdicts in {elapsed}.
"""
CAMPAIGN_WORST_HEADER = "\nWorst verdicts (margin minus tolerance):\n"
CAMPAIGN_WORST_ROW = (
    "* `{suite}:{size}:{trial}` {name} (theta={theta}, p={p}): "
    "margin {margin:.3e}, tolerance {tolerance:.3e}"
)
CAMPAIGN_EMPTY = "No suites selected; nothing to verify."

# Single-verdict and comparison results.
CHECK_RESULT = """Submajorization left <<< right: **{verdict}**
* margin: {margin:.12g} (at t = {worst_t:g})
* tolerance: {tolerance:.3e}
"""
VERDICT_LINE = "{name}: {status} (margin {margin:.6g}, tolerance {tolerance:.3e})"

# Reproductions.
REPRODUCE_TR = """Counterexample for non-self-adjoint a = [[0, 1], [0, 0]]
* b = diag({lam:g}, {mu:g}), theta = {theta:g}
* left profile  mu(e^(theta b) a e^((1 - theta) b)): [{left0:.12f}, {left1:.12f}]
* right profile mu(a e^b):                           [{right0:.12f}, {right1:.12f}]
* margin: {margin:.12f}
* verdict: submajorization {verdict}
* closed form: {closed_form}
"""
REPRODUCE_POINTWISE_FOUND = """Pointwise counterexample found at trial {trial:,} (seed {seed}).
* a = {a}
* b = {b}
* largest excess s_i(b^(1/2) a b^(1/2)) - s_i(ab): {excess:.6e}
* pointwise bound: {pointwise}
* submajorization of the main theorem: {theorem}
"""
REPRODUCE_POINTWISE_NONE = "No pointwise counterexample in {trials:,} trials (seed {seed})."

STATUS_HOLDS = "holds"
STATUS_FAILS = "fails"
RESULT_PASS = "PASS"
RESULT_FAIL = "FAIL"
