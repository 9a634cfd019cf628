#!/usr/bin/env python3
# -*- coding: UTF-8 -*-
"""The settings component simply loads information from the relevant
YAML files, and transforms them into usable objects.
"""
import os
from types import SimpleNamespace

import yaml

# Define the location of the main files Majorant uses.
# They should all be in the same folder as the Python script itself.
# These addresses are then converted into a object for usage.
SOURCE_FOLDER = os.path.dirname(os.path.realpath(__file__))
FILE_PATHS = {
    "data_corpus": "/_data_corpus.db",
    "error": "/_error.md",
    "logs": "/_logs.md",
    "info": "/_info.yaml",
    "settings": "/_settings.yaml",
    "corpus": "/tests/corpus",
}
for file_type in FILE_PATHS:
    FILE_PATHS[file_type] = SOURCE_FOLDER + FILE_PATHS[file_type]
FILE_ADDRESS = SimpleNamespace(**FILE_PATHS)


"""LOAD IDENTITY & SETTINGS"""


def load_information():
    """Function that takes the identity of the verifier (name and
    version) from an external YAML file and loads it as a dictionary.
    It also loads the settings as a dictionary. Both are returned in a
    tuple.

    :return: A tuple containing two dictionaries, one for identity
             data and the other with settings.
    """
    with open(FILE_ADDRESS.info, "r", encoding="utf-8") as f:
        info_data = yaml.safe_load(f.read())
    with open(FILE_ADDRESS.settings, "r", encoding="utf-8") as f:
        settings_data = yaml.safe_load(f.read())

    return info_data, settings_data


def load_overrides(file_path):
    """Loads a campaign configuration document. JSON is a subset of
    YAML, so the same loader reads both kinds of file.

    :param file_path: Path to a YAML or JSON file.
    :return: A dictionary, empty if the file has no content.
    """
    with open(file_path, "r", encoding="utf-8") as f:
        override_data = yaml.safe_load(f.read())

    return override_data or {}


# Retrieve identity and settings data from the YAML files.
INFO = SimpleNamespace(**load_information()[0])
SETTINGS = SimpleNamespace(**load_information()[1])
