"""Fractional calculus kernels and the fractional Zeeman mass fit."""

import json as _json

from ._core import (
    REFERENCE_PARAMS,
    DomainError,
    Error,
    FitError,
    FitParams,
    ParseError,
    builtin_table,
    casimir_L2,
    casimir_Lz,
    derive,
    evaluate,
    fit,
    frac_binomial,
    gamma,
    mass,
    objective,
    rgamma,
    rl_derivative_quad,
)
from ._core import verify as _verify


def verify(suite="all"):
    """Run an identity suite; returns the parsed report."""
    return _json.loads(_verify(suite))


__all__ = [
    "REFERENCE_PARAMS",
    "DomainError",
    "Error",
    "FitError",
    "FitParams",
    "ParseError",
    "builtin_table",
    "casimir_L2",
    "casimir_Lz",
    "derive",
    "evaluate",
    "fit",
    "frac_binomial",
    "gamma",
    "mass",
    "objective",
    "rgamma",
    "rl_derivative_quad",
    "verify",
]
