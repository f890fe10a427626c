"""JSON configuration: dimension, pairing matrix, named graded spaces.

A configuration document is a single JSON object:

    {
      "dimension": 2,
      "pairing": [["1", "-1/2"], [0, 1]],
      "spaces": {"H": [[0, 1], [1, 2]]}
    }

Pairing entries are integers or exact rational strings "p/q"; floats are
rejected.  "spaces" maps labels to lists of [degree, dimension] pairs.
When no path is given and the HEISENFOCK_CONFIG environment variable is
unset, the default is dimension 1 with pairing [[1]].
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .graded import GradedDims
from .heisenberg import PairingMatrix

ENV_VAR = "HEISENFOCK_CONFIG"


class ConfigError(ValueError):
    """A configuration document that does not satisfy the schema."""


@dataclass(frozen=True)
class Config:
    dimension: int
    pairing: PairingMatrix
    spaces: dict[str, GradedDims] = field(default_factory=dict)


def default_config() -> Config:
    return Config(dimension=1, pairing=PairingMatrix([[1]]))


def parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise ConfigError("expected an exact rational, got %r" % value)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError("cannot parse rational %r: %s" % (value, exc)) from exc
    raise ConfigError("expected an integer or 'p/q' string, got %r" % (value,))


def config_from_dict(data: dict) -> Config:
    if not isinstance(data, dict):
        raise ConfigError("configuration must be a JSON object")
    unknown = set(data) - {"dimension", "pairing", "spaces"}
    if unknown:
        raise ConfigError("unknown configuration keys: %s" % ", ".join(sorted(unknown)))

    dimension = data.get("dimension", 1)
    if not isinstance(dimension, int) or isinstance(dimension, bool) or dimension < 0:
        raise ConfigError("dimension must be a nonnegative integer")

    raw_pairing = data.get("pairing")
    if raw_pairing is None:
        raw_pairing = [[1 if i == j else 0 for j in range(dimension)] for i in range(dimension)]
    if not isinstance(raw_pairing, list) or not all(isinstance(row, list) for row in raw_pairing):
        raise ConfigError("pairing must be a list of rows")
    try:
        pairing = PairingMatrix([[parse_rational(x) for x in row] for row in raw_pairing])
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if pairing.dim != dimension:
        raise ConfigError(
            "pairing is %dx%d but dimension is %d" % (pairing.dim, pairing.dim, dimension)
        )

    spaces: dict[str, GradedDims] = {}
    raw_spaces = data.get("spaces", {})
    if not isinstance(raw_spaces, dict):
        raise ConfigError("spaces must be an object mapping labels to [degree, dim] pairs")
    for label, pairs in raw_spaces.items():
        if not isinstance(pairs, list):
            raise ConfigError("space %r must be a list of [degree, dim] pairs" % label)
        dims = {}
        for entry in pairs:
            if (
                not isinstance(entry, list)
                or len(entry) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in entry)
            ):
                raise ConfigError("space %r has a malformed entry %r" % (label, entry))
            deg, d = entry
            if d < 0:
                raise ConfigError("space %r has negative dimension in degree %d" % (label, deg))
            dims[deg] = dims.get(deg, 0) + d
        spaces[label] = GradedDims(dims)

    return Config(dimension=dimension, pairing=pairing, spaces=spaces)


def load_config(path: str | None = None) -> Config:
    """Load a configuration file, falling back to the HEISENFOCK_CONFIG
    environment variable and then to the built-in default."""
    if path is None:
        path = os.environ.get(ENV_VAR) or None
    if path is None:
        return default_config()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ConfigError("cannot read configuration %s: %s" % (path, exc)) from exc
    except json.JSONDecodeError as exc:
        raise ConfigError("invalid JSON in %s: %s" % (path, exc)) from exc
    return config_from_dict(data)
