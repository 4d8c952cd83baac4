"""Exact pseudorepresentation and Eisenstein-tower toolkit.

Thin wrappers over the C++ core; reports come back as plain dictionaries.
"""

import json
import os

from ._pseudomod import (
    MANIFEST_SCHEMA,
    REPORT_SCHEMA,
    SCENARIO_SCHEMA,
    BudgetExceeded,
    InputError,
    fnv1a_hex,
)
from . import _pseudomod as _core

__all__ = [
    "BudgetExceeded",
    "InputError",
    "MANIFEST_SCHEMA",
    "REPORT_SCHEMA",
    "SCENARIO_SCHEMA",
    "audit_tower",
    "fnv1a_hex",
    "generate_corpus",
    "lenstra",
    "run_scenario",
]


def run_scenario(scenario, mode="pipeline", seed=None, budget=None):
    """Run a scenario given as a dict, JSON text or a path.

    Returns (exit_code, report) where exit_code is 0 or 1.
    Raises InputError for malformed input and BudgetExceeded when an enumeration is too large.
    """
    if isinstance(scenario, dict):
        code, text = _core.run_scenario_text(json.dumps(scenario), mode, seed, budget)
    elif isinstance(scenario, (str, os.PathLike)) and os.path.exists(scenario):
        code, text = _core.run_scenario_file(os.fspath(scenario), mode, seed, budget)
    else:
        code, text = _core.run_scenario_text(scenario, mode, seed, budget)
    return code, json.loads(text)


def generate_corpus(seed, reps=12, towers=8):
    """Deterministic scenario corpus: {"manifest": ..., "entries": [{"name", "scenario"}]}."""
    return json.loads(_core.generate_corpus_text(seed, reps, towers))


def audit_tower(kind, r, param=0, p=5, degree=1):
    """Condition table and Fitting replay for one synthetic Eisenstein tower."""
    text, failures = _core.tower_report_text(kind, r, param, p, degree)
    return json.loads(text), list(failures)


def lenstra(family, r=1, p=5, truncation=8):
    """Numerical criterion on the node, non_ci or trivial family."""
    text, failures = _core.lenstra_report_text(family, r, p, truncation)
    return json.loads(text), list(failures)
