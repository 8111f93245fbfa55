"""Python front end for the jumploci C++ core.

Documents and reports use the same JSON layout as the command-line tool.
"""
import json

from ._core import (
    DEFAULT_SEED,
    InputError,
    UnsupportedInput,
    __version__,
    euler_characteristic,
    resolve_theorem,
    support_locus,
    twisted_rank,
)
from . import _core


def _text(document):
    return document if isinstance(document, str) else json.dumps(document)


def invariants(document, seed=DEFAULT_SEED, max_torsion_order=12):
    """Invariants report for an input document (dict or JSON text)."""
    return json.loads(_core.invariants_json(_text(document), seed, max_torsion_order))


def check(document, theorems=(), seed=DEFAULT_SEED, max_torsion_order=12):
    """Run the theorem checkers; returns the report with its verdict list."""
    return json.loads(_core.check_json(_text(document), seed, max_torsion_order, list(theorems)))


__all__ = [
    "DEFAULT_SEED",
    "InputError",
    "UnsupportedInput",
    "__version__",
    "check",
    "euler_characteristic",
    "invariants",
    "resolve_theorem",
    "support_locus",
    "twisted_rank",
]
