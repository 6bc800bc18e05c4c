"""Certified enclosures for k-Bonacci bases, Cantor-set thickness and expansion counts."""

import json

from . import _betacert
from ._betacert import (
    DomainError,
    InconsistencyError,
    MalformedInput,
    PrecisionError,
    PreconditionViolation,
    ResourceError,
    bonacci_root,
    dim_lower_bound,
    k_threshold,
    precision,
    set_precision,
    theorem_a_radius,
    theorem_b_radius,
)

__all__ = [
    "DomainError",
    "InconsistencyError",
    "MalformedInput",
    "PrecisionError",
    "PreconditionViolation",
    "ResourceError",
    "bonacci_root",
    "certify_a",
    "certify_b",
    "count",
    "dim_lower_bound",
    "k_threshold",
    "precision",
    "run_cli",
    "set_precision",
    "tables",
    "theorem_a_radius",
    "theorem_b_radius",
    "thickness",
]


def tables():
    return json.loads(_betacert.tables_json())


def certify_a(m, k, q=None):
    """q is a base string such as "qk:31" or "1.99"; None certifies the whole interval."""
    return json.loads(_betacert.certify_a_json(m, k, q))


def certify_b(k, q=None, run_count=True):
    return json.loads(_betacert.certify_b_json(k, q, run_count))


def thickness(q, s, depth):
    return json.loads(_betacert.thickness_json(str(q), s, depth))


def count(q, x, depth):
    return json.loads(_betacert.count_json(str(q), str(x), depth))


def run_cli(*args):
    """Returns (exit code, stdout, stderr)."""
    return _betacert.run_cli([str(a) for a in args])
