"""Defeasible argumentation: abstract semantics, rule-based arguments,
skeptical evaluation and minimal-model reasoning."""

import json as _json

from ._core import (
    CorpusError,
    CyclicRuleBaseError,
    Error,
    Framework,
    InputError,
    ParseError,
    PriorityCycleError,
    __version__,
    holds_in_all_minimal,
    horty,
    minimal_models,
)
from ._core import diff_json as _diff_json
from ._core import run_corpus_json as _run_corpus_json


def diff(rulebase_text, height_cap=32):
    """Cross-semantics status table of a rule base, as a dict."""
    return _json.loads(_diff_json(rulebase_text, height_cap))


def run_corpus(corpus_dir, prefixes=()):
    """Run corpus cases; returns (all_passed, report dict)."""
    ok, text = _run_corpus_json(str(corpus_dir), list(prefixes))
    return ok, _json.loads(text)


__all__ = [
    "CorpusError",
    "CyclicRuleBaseError",
    "Error",
    "Framework",
    "InputError",
    "ParseError",
    "PriorityCycleError",
    "__version__",
    "diff",
    "holds_in_all_minimal",
    "horty",
    "minimal_models",
    "run_corpus",
]
