"""Boundary dynamics of free-group automorphisms.

Thin wrapper over the C++ core: structured results come back as dicts.

    >>> import fgdyn
    >>> phi = fgdyn.Automorphism.load("phi_k:k=1")
    >>> phi.iterate("b d^-1", 2)
    'b c^-1 c^-1 d^-1'
"""

import json

from ._core import Automorphism, GrowthOverflow, classify_twist, reduce_word
from . import _core

__all__ = [
    "Automorphism",
    "GrowthOverflow",
    "classify_twist",
    "graph",
    "growth",
    "omega",
    "parabolic",
    "reduce_word",
]


def omega(aut, word, backward=False, **config):
    """omega-limit of `word`; config keys: max_iter, prefix, window, max_len."""
    return json.loads(_core.omega_json(aut, word, backward, **config))


def parabolic(aut, seed):
    return json.loads(_core.parabolic_json(aut, seed))


def graph(aut, seeds=None):
    """Dynamics graph as a dict, with the DOT rendering under "dot"."""
    text, dot = _core.graph(aut, seeds)
    g = json.loads(text)
    g["dot"] = dot
    return g


def growth(aut, word, p_max=40):
    return json.loads(_core.growth_json(aut, word, p_max))
