"""Jordan types of modules over elementary abelian p-groups.

Modules are passed around as the JSON documents the command line reads and writes.
"""

import json

from ._core import (
    JordanType,
    JsonError,
    dominance,
    omega_dim,
)
from . import _core

__all__ = [
    "JordanType",
    "JsonError",
    "dominance",
    "omega_dim",
    "example",
    "check_constant",
    "generic_type",
    "jordan_at",
    "run",
]


def _text(module):
    return module if isinstance(module, str) else json.dumps(module)


def example(name, **params):
    return json.loads(_core.example(name, params))


def check_constant(module, max_e=2, exact=True, allow_large=False):
    return json.loads(_core.check_constant(_text(module), max_e, exact, allow_large))


def generic_type(module, allow_large=False):
    return _core.generic_type(_text(module), allow_large)


def jordan_at(module, point, ext=1):
    return _core.jordan_at(_text(module), list(point), ext)


def run(*args):
    """Run a CLI subcommand in-process; returns (exit code, parsed JSON or text)."""
    code, out, _ = _core.run(list(args))
    try:
        return code, json.loads(out)
    except ValueError:
        return code, out
