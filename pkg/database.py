#!/usr/bin/env python3
# -*- coding: UTF-8 -*-
"""The database component contains functions to manage reading and
writing to the SQLite corpus database: summaries of recorded campaigns
and the witnesses found by the pointwise counterexample search.
"""
import json
import sqlite3
import time

import matrix_kernel
from common import logger
from settings import FILE_ADDRESS
from timekeeping import time_convert_to_string


"""BASE DEFINITIONS"""

CONN = None
CURSOR = None


"""DATABASE DEFINITIONS"""


def define_database(database_address=None):
    """This function connects to the corpus database, the default one
    unless another path is passed, and makes sure its tables exist.

    :param database_address: Path to a SQLite file, `None` for the
                             default `_data_corpus.db`.
    :return: The connection.
    """
    global CONN
    global CURSOR

    if database_address is None:
        database_address = FILE_ADDRESS.data_corpus
        logger.info("Define Database: Using default database.")
    else:
        logger.info("Define Database: Using database at `{}`.".format(database_address))

    CONN = sqlite3.connect(database_address, check_same_thread=False)
    CURSOR = CONN.cursor()
    table_creator()

    return CONN


def _connection():
    if CONN is None:
        define_database()

    return CONN, CURSOR


"""DATABASE CREATION"""


def table_creator():
    """This function creates the tables in the database if they do not
    already exist.

    :return: `None`.
    """
    CURSOR.execute(
        "CREATE TABLE IF NOT EXISTS campaigns "
        "(seed integer, recorded text, passed integer, summary text);"
    )
    CURSOR.execute(
        "CREATE TABLE IF NOT EXISTS witnesses "
        "(seed integer, trial integer, recorded text, excess real, matrices text);"
    )
    CONN.commit()

    return


"""DATABASE FUNCTIONS"""


def database_access(command, data, retries=3, fetch_many=False):
    """This is a wrapper function for reads. It will wait if it
    encounters a lock.

    :param command: The SQLite command to be run on the database.
    :param data: The data package for the search query. `None` if none
                 is needed.
    :param retries: The number of times the function will ask for data.
    :param fetch_many: Whether to fetch just one result or many.
    :return: The row or rows, `None` if nothing was found.
    """
    _, cursor = _connection()

    for attempt in range(retries):
        try:
            if data:
                cursor.execute(command, data)
            else:
                cursor.execute(command)

            if not fetch_many:
                result = cursor.fetchone()
            else:
                result = cursor.fetchall()

            if result is not None:
                return result
        except sqlite3.OperationalError:
            # Back off if there's a temporary lock on the database.
            time.sleep(attempt + 1)
            continue

    return


def campaign_insert(seed, summary, passed):
    """Records the summary of a finished campaign.

    :param seed: The campaign seed.
    :param summary: The summary dictionary of the campaign report.
    :param passed: Whether every suite of the campaign passed.
    :return: Nothing.
    """
    conn, cursor = _connection()
    cursor.execute(
        "INSERT INTO campaigns VALUES (?, ?, ?, ?)",
        (int(seed), time_convert_to_string(time.time()), int(passed), json.dumps(summary)),
    )
    conn.commit()
    logger.info("Campaign Insert: Recorded campaign with seed {}.".format(seed))

    return


def campaign_retrieve(seed=None):
    """Returns recorded campaigns, oldest first.

    :param seed: Only campaigns run with this seed, all if `None`.
    :return: A list of dictionaries with keys `seed`, `recorded`,
             `passed` and `summary`.
    """
    if seed is None:
        results = database_access("SELECT * FROM campaigns", None, fetch_many=True)
    else:
        results = database_access(
            "SELECT * FROM campaigns WHERE seed = ?", (int(seed),), fetch_many=True
        )

    return [
        {"seed": x[0], "recorded": x[1], "passed": bool(x[2]), "summary": json.loads(x[3])}
        for x in results or []
    ]


def witness_insert(seed, trial, a, b, excess):
    """Saves a pointwise counterexample witness, unless the same search
    seed and trial are already stored.

    :return: `True` if a row was inserted.
    """
    conn, cursor = _connection()
    cursor.execute("SELECT * FROM witnesses WHERE seed = ? AND trial = ?", (int(seed), trial))
    if cursor.fetchone() is not None:
        return False

    matrices = {"a": matrix_kernel.matrix_to_json(a), "b": matrix_kernel.matrix_to_json(b)}
    recorded = time_convert_to_string(time.time())
    cursor.execute(
        "INSERT INTO witnesses VALUES (?, ?, ?, ?, ?)",
        (int(seed), int(trial), recorded, float(excess), json.dumps(matrices)),
    )
    conn.commit()
    logger.info("Witness Insert: Stored witness of seed {}, trial {}.".format(seed, trial))

    return True


def witness_retrieve(seed=None):
    """Returns stored witnesses as dictionaries with the matrices
    decoded.
    """
    if seed is None:
        results = database_access("SELECT * FROM witnesses", None, fetch_many=True)
    else:
        results = database_access(
            "SELECT * FROM witnesses WHERE seed = ?", (int(seed),), fetch_many=True
        )

    witnesses = []
    for x in results or []:
        matrices = json.loads(x[4])
        witnesses.append(
            {
                "seed": x[0],
                "trial": x[1],
                "recorded": x[2],
                "excess": x[3],
                "a": matrix_kernel.matrix_from_json(matrices["a"]),
                "b": matrix_kernel.matrix_from_json(matrices["b"]),
            }
        )

    return witnesses
