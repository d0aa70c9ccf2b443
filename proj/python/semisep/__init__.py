"""Python front end for the semisep checks.

Reports are plain dicts; see the command line tool for the full set of
commands.
"""

import json
from os import fspath

from . import _core
from ._core import SCHEMA_VERSION, BoundExceeded, InputError, PreconditionError

__all__ = [
    "SCHEMA_VERSION",
    "BoundExceeded",
    "InputError",
    "PreconditionError",
    "execute",
    "run",
    "verify_report",
]


def run(*args, base=""):
    """Run a command line. Returns (exit code, report dict or None, stderr)."""
    code, out, err = _core.run([fspath(a) for a in args], fspath(base))
    report = json.loads(out) if out.strip() else None
    return code, report, err


def execute(command, input, params=None):
    """Report for ``command`` ("cat decide", "ring-ext", ...) on an inline input."""
    return json.loads(_core.execute(command, json.dumps(input), json.dumps(params or {})))


def verify_report(report):
    """Re-check a report produced by :func:`run` or :func:`execute`."""
    return json.loads(_core.verify_report(json.dumps(report)))
