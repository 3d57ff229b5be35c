"""Exact loop operations on a punctured disk through formal expansions.

Expansions, series and results are plain dicts in the JSON formats written
by the ``gtlab`` command-line tool; rationals are "num/den" strings.
"""

import json
from fractions import Fraction

from . import _gtlab
from ._gtlab import ParseError

__all__ = [
    "ParseError",
    "bernoulli",
    "bernoulli_coeffs",
    "boundary_defect",
    "cobracket",
    "eta",
    "goldman",
    "mu",
    "necklace",
    "parse_word",
    "series_s",
    "solve_special",
    "theta",
    "to_fraction",
    "validate_assoc",
    "verify",
]


def to_fraction(text):
    return Fraction(text)


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def series_s(n):
    return [Fraction(c) for c in _gtlab.series_s(n)]


def bernoulli(n):
    return Fraction(_gtlab.bernoulli(n))


def bernoulli_coeffs(max_index, even_value="0/1"):
    return json.loads(_gtlab.bernoulli_coeffs(max_index, str(even_value)))


def validate_assoc(coeffs, max_j):
    return _gtlab.validate_assoc(_dump(coeffs), max_j)


def parse_word(text, max_generator=0):
    """Returns (reduced word, winding)."""
    return _gtlab.parse_word(text, max_generator)


def solve_special(p, deg, seed=None):
    return json.loads(_gtlab.solve_special(p, deg, seed))


def boundary_defect(expansion):
    return json.loads(_gtlab.boundary_defect(_dump(expansion)))


def theta(expansion, word):
    return json.loads(_gtlab.theta(_dump(expansion), word))


def eta(expansion, a, b):
    return json.loads(_gtlab.eta(_dump(expansion), a, b))


def mu(expansion, word, coeffs=None, even=False):
    assoc = None if coeffs is None else _dump(coeffs)
    return json.loads(_gtlab.mu(_dump(expansion), word, assoc, even))


def goldman(expansion, a, b):
    return json.loads(_gtlab.goldman(_dump(expansion), a, b))


def necklace(expansion, a, b):
    return json.loads(_gtlab.necklace(_dump(expansion), a, b))


def cobracket(expansion, word):
    return json.loads(_gtlab.cobracket(_dump(expansion), word))


def verify(suite="all", p=2, deg=8, trials=50, seed=1, mutation=None):
    return json.loads(_gtlab.verify(suite, p, deg, trials, seed, mutation))
