"""Exact log-convexity checks, recurrence criteria and q-log-convexity.

Thin wrapper over the compiled `_core` module: reports and certificates are
returned as plain dicts whose exact numbers are decimal or "p/q" strings.
"""

import json

from . import _core
from ._core import (
    LcxError,
    catalogue_names,
    generate,
    identity_names,
    poly_family_names,
    transform,
    triangle_names,
    triangle_row,
)

__all__ = [
    "LcxError",
    "analyze",
    "catalogue_names",
    "check",
    "generate",
    "identity_names",
    "poly_family_names",
    "q_check",
    "replay_matches",
    "transform",
    "triangle_names",
    "triangle_row",
    "verify_identity",
]


def check(terms, mode="logconvex", offset=0):
    """Log-convexity (or log-concavity) of a list of positive integers."""
    if mode not in ("logconvex", "logconcave"):
        raise ValueError(f"unknown mode {mode!r}")
    return json.loads(_core.check_json(list(terms), mode == "logconcave", offset))


def q_check(family, n, mode="qlogconvex"):
    """Coefficientwise q-log-convexity of a polynomial family up to P_n."""
    if mode not in ("qlogconvex", "qlogconcave"):
        raise ValueError(f"unknown mode {mode!r}")
    return json.loads(_core.q_check_json(family, n, mode == "qlogconcave"))


def analyze(target, theorem, n=100, mu=None, anchor=0):
    """Certificate of a recurrence criterion for a catalogue name or spec file."""
    return json.loads(_core.analyze_json(target, theorem, n, mu, anchor))


def verify_identity(name, n=50):
    return json.loads(_core.identity_json(name, n))


def replay_matches(certificate):
    """Re-runs the check recorded in a certificate dict and compares outcomes."""
    return _core.replay_matches(json.dumps(certificate))
