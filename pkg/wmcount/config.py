"""
This is the configuration module of wmcount
"""

import json
import logging
import os

from .analysis import DEFAULT_ALPHA
from .exceptions import ConfigurationError
from .oracle import DEFAULT_CAP
from .pwdp import DEFAULT_BIT_BUDGET
from .reduce import SMALL_PART_LIMIT

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)

TIE_BREAKS = ("lowest-id", "highest-id")

_DEFAULTS = {
    "alpha": DEFAULT_ALPHA,
    "brute_cap": 20,
    "small_part_limit": SMALL_PART_LIMIT,
    "width_cap": None,
    "tie_break": "lowest-id",
    "dense_bit_budget": DEFAULT_BIT_BUDGET,
    "oracle_cap": DEFAULT_CAP,
    "paranoid": False,
}


class SolverConfig:
    """
    Handles the solver parameters. Values come from the defaults, then from an optional JSON configuration file
    (read by read_json()), then from keyword overrides. Instance attributes can be accessed by provided getter
    functions.
    """

    def __init__(self, config_filename=None, **overrides):
        """
        Parameters
        ----------
        config_filename : string, optional
            Name of a JSON configuration file holding any subset of the keys alpha, brute_cap, small_part_limit,
            width_cap, tie_break, dense_bit_budget, oracle_cap and paranoid.
        overrides
            Values taking precedence over the file. None means "not given".
        """
        self._values = dict(_DEFAULTS)
        if config_filename is not None:
            self.read_json(config_filename)
        self._merge({key: value for key, value in overrides.items() if value is not None}, "keyword arguments")
        self._validate()

    def read_json(self, config_filename):
        """
        Reads a JSON configuration file and saves the data to the respective instance attributes.

        Parameters
        ----------
        config_filename : string
            Name of the JSON configuration file, relative to the working directory.
        """
        path = os.path.join(os.getcwd(), config_filename)
        try:
            with open(path, "r") as read_file:
                data = json.load(read_file)
        except (OSError, ValueError) as error:
            raise ConfigurationError("Cannot read configuration file {}: {}".format(path, error))
        if not isinstance(data, dict):
            raise ConfigurationError("Configuration file {} must hold a JSON object".format(path))
        self._merge(data, path)
        logger.debug("Read configuration from {}".format(path))

    def _merge(self, data, source):
        unknown = sorted(set(data) - set(_DEFAULTS))
        if unknown:
            raise ConfigurationError("Unknown configuration keys {} in {}".format(unknown, source))
        self._values.update(data)

    def _validate(self):
        v = self._values
        if not isinstance(v["alpha"], (int, float)) or not 0 < v["alpha"] < 1:
            raise ConfigurationError("alpha must lie in (0, 1), got {!r}".format(v["alpha"]))
        for key in ("brute_cap", "small_part_limit", "dense_bit_budget", "oracle_cap"):
            if not isinstance(v[key], int) or isinstance(v[key], bool) or v[key] < 0:
                raise ConfigurationError("{} must be a non-negative integer, got {!r}".format(key, v[key]))
        if v["small_part_limit"] > v["oracle_cap"]:
            raise ConfigurationError("small_part_limit {} exceeds oracle_cap {}"
                                     .format(v["small_part_limit"], v["oracle_cap"]))
        if v["brute_cap"] > v["oracle_cap"]:
            raise ConfigurationError("brute_cap {} exceeds oracle_cap {}".format(v["brute_cap"], v["oracle_cap"]))
        if v["width_cap"] is not None and (not isinstance(v["width_cap"], int) or v["width_cap"] < 0):
            raise ConfigurationError("width_cap must be null or a non-negative integer, got {!r}"
                                     .format(v["width_cap"]))
        if v["tie_break"] not in TIE_BREAKS:
            raise ConfigurationError("tie_break must be one of {}, got {!r}".format(TIE_BREAKS, v["tie_break"]))
        if not isinstance(v["paranoid"], bool):
            raise ConfigurationError("paranoid must be true or false, got {!r}".format(v["paranoid"]))

    def get_alpha(self):
        return self._values["alpha"]

    def get_brute_cap(self):
        return self._values["brute_cap"]

    def get_small_part_limit(self):
        return self._values["small_part_limit"]

    def get_width_cap(self):
        return self._values["width_cap"]

    def get_tie_break(self):
        return self._values["tie_break"]

    def get_dense_bit_budget(self):
        return self._values["dense_bit_budget"]

    def get_oracle_cap(self):
        return self._values["oracle_cap"]

    def is_paranoid(self):
        return self._values["paranoid"]
