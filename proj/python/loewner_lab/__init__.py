"""Operator inequalities of Furuta type and their operator-equation characterizations.

Matrices are passed as square numpy arrays and symmetrized on entry.
"""

import json as _json

from ._loewner import (  # noqa: F401
    ConfigError,
    ConvergenceError,
    DomainError,
    NumericError,
    ParamError,
    ParamSet,
    PreconditionError,
    chaotic_geq,
    complete_params,
    eigh,
    evaluate,
    expm,
    loewner_geq,
    logm,
    power,
    random_pair,
    random_pd,
    solve,
    validate,
)
from . import _loewner


def run_campaign(config, include_wall_time=True):
    """Run a verification campaign; `config` is a dict mirroring the CLI config file."""
    text = config if isinstance(config, str) else _json.dumps(config)
    return _json.loads(_loewner.run_campaign(text, include_wall_time))


def search_counterexample(family, params, budget=10000, seed=0, dims=(2,)):
    return _json.loads(_loewner.search_counterexample(family, params, budget, seed, list(dims)))


__all__ = [name for name in dir() if not name.startswith("_")]
