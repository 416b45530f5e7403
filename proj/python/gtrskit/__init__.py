"""Generalized twisted Reed-Solomon code toolkit.

All field elements cross the boundary as canonical indices (plain ints):
index a_0 + a_1*p + ... + a_{m-1}*p^{m-1} of the coefficient tuple.
"""

import json as _json

from ._core import (
    Field,
    GuardExceededError,
    ParamWindowError,
    dual_rows,
    gtrs_generator,
    is_self_orthogonal,
    min_distance,
    rs_generator,
    run_command,
    schur_square_rows,
    self_orth_feasible,
    t_k_set,
)

__all__ = [
    "Field",
    "GuardExceededError",
    "ParamWindowError",
    "construct",
    "dual_rows",
    "gtrs_generator",
    "is_self_orthogonal",
    "min_distance",
    "rs_generator",
    "schur_square_rows",
    "search",
    "self_orth_feasible",
    "t_k_set",
    "verify",
]

__version__ = "0.1.0"


def _run(command, params, seed, workers):
    return _json.loads(run_command(command, _json.dumps(params), seed, workers))


def construct(family, seed=0, workers=1, **params):
    """Build a certified self-orthogonal code; returns the report dict.

    Example: construct("tc1", q=13, k=5, t=3, h=0, l=0)
    """
    return _run("construct", {"family": family, **params}, seed, workers)


def verify(suite, seed=0, workers=1, **params):
    """Run a verification suite (L31, L32, L34, powersum, rsdual, oracle)."""
    return _run("verify", {"suite": suite, **params}, seed, workers)


def search(seed=0, workers=1, **params):
    """Sample for self-orthogonal codes over a parameter grid."""
    return _run("search", params, seed, workers)
