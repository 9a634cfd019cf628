#!/usr/bin/env python3
# -*- coding: UTF-8 -*-
"""The common component contains the logger, error logging, the input
error type, and name sanitizing functions that are used by both the
library modules and the command-line runtime.
There are no numerical functions in this component.
"""
import datetime
import logging
import re
import time

from rapidfuzz import process

from settings import INFO, FILE_ADDRESS

logger = None

"""INITIALIZATION INFORMATION"""


class InputError(ValueError):
    """Raised when an operation is handed inputs that violate its
    preconditions (shape, finiteness, Hermitian or positivity checks,
    parameter ranges, unknown names).
    """


def main_error_log(entry):
    """A function to save detailed errors to a log for later review.
    This is easier to check for issues than to search through the entire
    events log.

    :param entry: The text we wish to include in the error log entry.
                  Typically this is the traceback entry.
    :return: Nothing.
    """

    # Open the file for the error log in appending mode.
    # Then add the error entry formatted our way.
    with open(FILE_ADDRESS.error, "a+", encoding="utf-8") as f:
        error_date_format = datetime.datetime.now(datetime.timezone.utc).strftime(
            "%Y-%m-%dT%H:%M:%SZ"
        )
        program_format = "{} v{}".format(INFO.name, INFO.version_number)
        entry = entry.replace("\n", "\n    ")  # Indent the code.
        f.write(
            "\n---------------\n### {} ({})\n{}\n".format(error_date_format, program_format, entry)
        )

    return


"""LOGGER SETUP"""


def start_logger(file_path=FILE_ADDRESS.logs):
    """The main logging system used by the verifier. Allows for separate
    file paths to be passed to it.
    :param file_path: Expressed in terms of FILE_ADDRESS.xxx,
                      where xxx is the file name.
    :return: The logger.
    """

    global logger

    # Set up the logger. By default only display INFO or higher levels.
    log_format = "%(levelname)s: %(asctime)s - [{}] v{} %(message)s"
    logformatter = log_format.format(INFO.name, INFO.version_number)
    logging.basicConfig(format=logformatter, level=logging.INFO)

    # Set the logging time to UTC.
    logging.Formatter.converter = time.gmtime
    logger = logging.getLogger(__name__)

    # Define the logging handler (the file to write to.)
    # By default only log INFO level messages or higher.
    handler = logging.FileHandler(file_path, "a", "utf-8")
    handler.setLevel(logging.INFO)

    # Set the time format in the logging handler.
    d = "%Y-%m-%dT%H:%M:%SZ"
    handler.setFormatter(logging.Formatter(logformatter, datefmt=d))
    logger.addHandler(handler)

    return logger


"""OTHER FUNCTIONS"""


def name_sanitizer(text_to_parse):
    """Normalizes a user-supplied suite or inequality name so that
    `Bik-Theorem-General`, ` bik theorem general ` and
    `bik_theorem_general` all resolve to the same identifier.

    :param text_to_parse: The text we want to convert and clean up.
    :return: The sanitized identifier.
    """
    text_to_parse = text_to_parse.strip().lower()
    text_to_parse = re.sub(r"[\s\-]+", "_", text_to_parse)

    return text_to_parse


def closest_name(query, choices):
    """Returns the known name closest to an unknown one, to be quoted
    in error messages. `None` if nothing is remotely similar.

    :param query: The unknown name.
    :param choices: An iterable of known names.
    :return: The best match, or `None`.
    """
    choices = list(choices)
    if not choices:
        return None

    match = process.extractOne(query, choices)
    if match is None or match[1] < 50:
        return None

    return match[0]


start_logger()
