"""Pade path tracker for polynomial homotopy continuation.

Systems and solutions are JSON documents; the helpers here accept either a
dict or JSON text and return dicts.
"""

import json

from ._core import (
    Config,
    InvalidStart,
    ParseError,
    SingularJacobian,
    pade_fit,
    poly_roots,
    random_gamma,
    singular_values,
)
from . import _core

__all__ = [
    "Config",
    "InvalidStart",
    "ParseError",
    "SingularJacobian",
    "eta",
    "experiment",
    "pade_fit",
    "poly_roots",
    "random_gamma",
    "residual",
    "singular_values",
    "solve",
    "taylor_series",
]


def _text(system):
    return system if isinstance(system, str) else json.dumps(system)


def solve(system, seed=1, config=None, workers=1):
    """Track every path of a system or homotopy document; returns the solution document."""
    return json.loads(_core.solve_json(_text(system), config or Config(), seed, workers))


def residual(system, z):
    return _core.residual(_text(system), list(z))


def eta(system, z, t):
    return _core.eta(_text(system), list(z), t)


def taylor_series(system, t_star, w, z0):
    return _core.taylor_series(_text(system), t_star, w, list(z0))


def experiment(name, config=None, **params):
    """Run one benchmark table: hyperbola, wilkinson, generic or cluster."""
    runners = {
        "hyperbola": _core.experiment_hyperbola,
        "wilkinson": _core.experiment_wilkinson,
        "generic": _core.experiment_generic,
        "cluster": _core.experiment_cluster,
    }
    if name not in runners:
        raise ValueError(f"unknown experiment {name!r}; expected one of {sorted(runners)}")
    return json.loads(runners[name](config=config or Config(), **params))
