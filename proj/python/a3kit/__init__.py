"""Exact checks for A3-associative algebras.

Documents are the JSON algebra files used by the command line tool. Every
function here accepts a path, a JSON string or an already-parsed dict.
"""

import json
import os
from fractions import Fraction

try:
    from . import _a3kit
except ImportError:  # in-tree build: the extension sits next to the package
    import _a3kit

A3Error = _a3kit.A3Error
SCHEMA = _a3kit.SCHEMA
LAWS = ("A3", "Associative", "AdmissiblePoisson", "Admissible", "LeftSymmetric", "RightSymmetric",
        "LieAdmissible")


def _text(doc):
    if isinstance(doc, dict):
        return json.dumps(doc, default=lambda q: str(q) if isinstance(q, Fraction) else q)
    if isinstance(doc, (str, os.PathLike)) and os.path.exists(doc):
        with open(doc, encoding="utf-8") as fh:
            return fh.read()
    return doc


def load(doc):
    """Canonical dict form of a document (zeros dropped, keys sorted)."""
    return json.loads(_a3kit.normalize(_text(doc)))


def check_law(doc, law):
    rep = _a3kit.check_law(_text(doc), law)
    for f in rep["failures"]:
        f["residual"] = [Fraction(q) for q in f["residual"]]
    return rep


def classify(doc):
    return _a3kit.classify(_text(doc))


def aybe_residual(doc, tensor):
    return {k: Fraction(v) for k, v in _a3kit.aybe_residual(_text(doc), tensor).items()}


def rb_to_ybe(doc, map_name):
    return json.loads(_a3kit.rb_to_ybe(_text(doc), map_name))


def cli(*args):
    """Run the a3kit tool in-process. Returns (exit code, stdout, stderr)."""
    return _a3kit.run_cli([str(a) for a in args])
