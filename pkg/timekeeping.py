#!/usr/bin/env python3
# -*- coding: UTF-8 -*-
"""The timekeeping component deals with time conversion and formatting
of report timestamps and elapsed times.
"""
import datetime
import time

"""DATE/TIME CONVERSION FUNCTIONS"""


def time_convert_to_string(unix_integer):
    """Converts a UNIX integer into a time formatted according to
    ISO 8601 for UTC time.

    :param unix_integer: Any UNIX time number.
    """
    i = int(unix_integer)
    utc_time = datetime.datetime.fromtimestamp(i, tz=datetime.timezone.utc).isoformat()[:19]
    utc_time = "{}Z".format(utc_time)

    return utc_time


def now_string():
    """The current UTC time as an ISO 8601 string."""
    return time_convert_to_string(time.time())


def elapsed_string(seconds):
    """Formats a duration in seconds for log lines, e.g. `2m 03.41s`.

    :param seconds: A non-negative duration.
    :return: The formatted duration.
    """
    minutes, seconds = divmod(float(seconds), 60)
    if minutes >= 60:
        hours, minutes = divmod(minutes, 60)
        return "{:d}h {:02d}m {:05.2f}s".format(int(hours), int(minutes), seconds)
    if minutes:
        return "{:d}m {:05.2f}s".format(int(minutes), seconds)

    return "{:.2f}s".format(seconds)
