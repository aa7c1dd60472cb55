"""Exact potential-good-reduction analysis of degree-2 rational maps."""

import json

from ._pygrd import (
    NotConstructible,
    ParseError,
    k4_criterion,
    parse_map,
    resultant,
    sigma,
)
from . import _pygrd

__all__ = [
    "NotConstructible",
    "ParseError",
    "analyze",
    "k4_criterion",
    "parse_map",
    "quadpoly",
    "resultant",
    "roundtrip",
    "sigma",
]


def analyze(expr, primes=None, construct=True, verify=True):
    """Full report as a dict (same layout as `grd analyze --json`)."""
    return json.loads(_pygrd.analyze_json(expr, primes, construct, verify))


def quadpoly(k=None, c=None):
    return json.loads(_pygrd.quadpoly_json(k, None if c is None else str(c)))


def roundtrip(report):
    """Decode and re-encode a report dict through the C++ types."""
    return json.loads(_pygrd.roundtrip_json(json.dumps(report)))
