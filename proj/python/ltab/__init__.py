"""Python interface to the ltab tableau library.

Tableaux, words and RSK pairs are plain dicts in the same JSON layout the
``ltab`` command-line tool reads and writes. Counts are Python ints.
"""

import json

from . import _ltab
from ._ltab import TableauError

__all__ = [
    "TableauError",
    "enumerate_l",
    "enumerate_restricted_l",
    "enumerate_lprime",
    "count_l",
    "count_lprime",
    "integral_l",
    "integral_lprime",
    "castelnuovo_number",
    "word",
    "l_to_word",
    "word_to_l",
    "truncate",
    "phi",
    "phi_inverse",
    "phi_i",
    "rsk",
    "rsk_inverse",
    "psi",
    "lprime_to_binary",
    "binary_to_lprime",
    "to_ascii",
    "verify",
]


def _load(items):
    return [json.loads(s) for s in items]


def _call(fn, obj, *args):
    return json.loads(fn(json.dumps(obj), *args))


def enumerate_l(g, r, d):
    return _load(_ltab.enumerate_l(g, r, d))


def enumerate_restricted_l(g, r, i):
    return _load(_ltab.enumerate_restricted_l(g, r, i))


def enumerate_lprime(g, d, k, sign="positive"):
    return _load(_ltab.enumerate_lprime(g, d, k, sign))


def count_l(g, r, d):
    return len(_ltab.enumerate_l(g, r, d))


def count_lprime(g, d, k):
    raw = _ltab.count_lprime(g, d, k)
    return {key: (None if value is None else int(value)) for key, value in raw.items()}


def integral_l(g, r, d):
    return int(_ltab.integral_l(g, r, d))


def integral_lprime(g, d, k):
    return int(_ltab.integral_lprime(g, d, k))


def castelnuovo_number(g, r):
    return int(_ltab.castelnuovo_number(g, r))


def word(letters, r):
    """Build a word over {0..r}."""
    return {"r": r, "letters": list(letters)}


def l_to_word(tableau):
    return _call(_ltab.l_to_word, tableau)


def word_to_l(w):
    return _call(_ltab.word_to_l, w)


def truncate(tableau):
    return _call(_ltab.truncate, tableau)


def phi(red, g, r):
    return _call(_ltab.phi, red, g, r)


def phi_inverse(purple, r):
    return _call(_ltab.phi_inverse, purple, r)


def phi_i(red, g, r, i):
    return _call(_ltab.phi_i, red, g, r, i)


def rsk(w):
    return _call(_ltab.rsk, w)


def rsk_inverse(pair, r):
    return _call(_ltab.rsk_inverse, pair, r)


def psi(tableau):
    return _call(_ltab.psi, tableau)


def lprime_to_binary(tableau):
    return _call(_ltab.lprime_to_binary, tableau)


def binary_to_lprime(w, d, k):
    return _call(_ltab.binary_to_lprime, w, d, k)


def to_ascii(tableau):
    return _ltab.to_ascii_l(json.dumps(tableau))


def verify(suite="all", g_max=3, r_max=2, d_slack=2, k_max=4, threads=1):
    """Run the self-check suite; returns {check name: passed}."""
    return dict(_ltab.verify(suite, g_max, r_max, d_slack, k_max, threads))
