"""Python bindings for the redos analyzer."""

import json

from ._redos import (
    DEFAULT_BUDGET,
    DEFAULT_THRESHOLD,
    RegexError,
    SizeExceeded,
    __version__,
    classify,
    count_rejecting_paths,
    gen_attack,
    match,
)
from . import _redos

__all__ = [
    "DEFAULT_BUDGET",
    "DEFAULT_THRESHOLD",
    "RegexError",
    "SizeExceeded",
    "__version__",
    "analyze_program",
    "analyze_regex",
    "classify",
    "count_rejecting_paths",
    "gen_attack",
    "match",
]


def analyze_regex(regex, dynamic=True, threshold=DEFAULT_THRESHOLD, budget=DEFAULT_BUDGET):
    """Return (report dict, exit code) for one regex."""
    text, code = _redos.analyze_regex_json(regex, dynamic, threshold, budget)
    return json.loads(text), code


def analyze_program(source, subject="<string>", dynamic=True, threshold=DEFAULT_THRESHOLD, budget=DEFAULT_BUDGET):
    """Return (report dict, exit code) for a STRIMP program given as source text."""
    text, code = _redos.analyze_program_json(source, subject, dynamic, threshold, budget)
    return json.loads(text), code
