"""Exact chromatic polynomials, bound checks and conjecture verification.

Results come back as plain dicts; rationals are "num/den" strings and
polynomial coefficients are listed from the constant term upwards.
"""

import json
from fractions import Fraction

from . import _core
from ._core import ChromaboundError, canonical_form, chromatic_number, enumerate_connected, run_cli

__all__ = [
    "ChromaboundError",
    "bound",
    "canonical_form",
    "certify",
    "chromatic",
    "chromatic_number",
    "coefficients",
    "conjectured_bound",
    "count_colorings",
    "enumerate_connected",
    "family",
    "run_cli",
    "sk4_remark",
    "verify",
]


def coefficients(poly):
    """Coefficient list of an encoded polynomial as Fractions, constant term first."""
    return [Fraction(c) for c in poly["coefficients"]]


def chromatic(graph6):
    return json.loads(_core.chromatic(graph6))


def count_colorings(graph6, colors):
    return int(_core.count_colorings(graph6, colors))


def conjectured_bound(n, k=4):
    return json.loads(_core.conjectured_bound(n, k))


def family(kind, spec):
    return json.loads(_core.family(kind, json.dumps(spec)))


def bound(lemma, spec, x):
    return json.loads(_core.bound(lemma, json.dumps(spec), str(Fraction(x))))


def certify(which, parameter=None):
    return json.loads(_core.certify(which, parameter))


def verify(which, order, k=4, workers=1):
    return json.loads(_core.verify(which, order, k, workers))


def sk4_remark():
    return json.loads(_core.sk4_remark())
