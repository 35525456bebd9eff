"""Hermite functions of complex degree, the generalized Hermite functional and
its real-line and contour integral representations."""

import json as _json

from ._core import (
    DegenerateDegree,
    DomainError,
    HermitiaError,
    NonConvergence,
    ParameterPole,
    PoleError,
    RangeError,
    SingularIntegrand,
    apply,
    contour_moment,
    gamma,
    gamma_via,
    hermite,
    hermite_derivative,
    kummer_1f1,
    moments,
    reciprocal_gamma,
    weight_integral,
)
from ._core import verify as verify_json


def verify(suite="all", tau_grid=None, tol=1e-8):
    """Run an identity suite and return the report as a dict."""
    return _json.loads(verify_json(suite, tau_grid, tol, True))


__all__ = [
    "DegenerateDegree",
    "DomainError",
    "HermitiaError",
    "NonConvergence",
    "ParameterPole",
    "PoleError",
    "RangeError",
    "SingularIntegrand",
    "apply",
    "contour_moment",
    "gamma",
    "gamma_via",
    "hermite",
    "hermite_derivative",
    "kummer_1f1",
    "moments",
    "reciprocal_gamma",
    "verify",
    "verify_json",
    "weight_integral",
]
