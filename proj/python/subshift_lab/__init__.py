"""Sofic shift derivatives and two-dimensional SFT constructions.

Graphs, tile sets and posets are plain dicts in the same JSON layout the
command-line tool reads. Patterns are lists of row strings, top row first,
or configuration-window text as written by the generators.
"""

import json

from . import _core
from ._core import BudgetError

__all__ = [
    "BudgetError",
    "approx_derivative_member",
    "chain_point",
    "context_classes",
    "count_admissible",
    "countable",
    "cylinder_class",
    "cylinder_growth",
    "derive",
    "diamond_core",
    "diamond_shift",
    "extend",
    "grid_shift",
    "grid_window",
    "language_equal",
    "locally_admissible",
    "phi",
    "poset_stats",
    "rank",
    "simulate",
    "verify_chain",
    "verify_embedding",
]

DEFAULT_MAX_STATES = 10_000_000
DEFAULT_TIMEOUT_S = 60.0


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def _pattern(p):
    if isinstance(p, str):
        return p
    return "\n".join(p) + "\n"


def _rows(text):
    return [line for line in text.splitlines() if line]


def rank(graph):
    """Return (rank, countable) for a LabeledGraph dict."""
    return _core.rank(_dump(graph))


def countable(graph):
    return _core.is_countable(_dump(graph))


def derive(graph):
    return json.loads(_core.derive(_dump(graph)))


def language_equal(a, b):
    return _core.language_equal(_dump(a), _dump(b))


def context_classes(graph, probe_len=8):
    """Return ([(representative, [(p, q), ...]), ...], stabilized)."""
    return _core.context_classes(_dump(graph), probe_len)


def cylinder_class(graph, word):
    return _core.cylinder_class(_dump(graph), word)


def cylinder_growth(graph, word, k_max):
    return _core.cylinder_growth(_dump(graph), word, k_max)


def count_admissible(tileset, w, h, max_states=DEFAULT_MAX_STATES, timeout_s=DEFAULT_TIMEOUT_S):
    return _core.count_admissible(_dump(tileset), w, h, max_states, timeout_s)


def locally_admissible(tileset, pattern):
    return _core.locally_admissible(_dump(tileset), _pattern(pattern))


def extend(tileset, pattern, r, max_states=DEFAULT_MAX_STATES, timeout_s=DEFAULT_TIMEOUT_S):
    """Rows of an extension by r cells on every side, or None."""
    out = _core.extend(_dump(tileset), _pattern(pattern), r, max_states, timeout_s)
    return None if out is None else _rows(out)


def approx_derivative_member(tileset, pattern, n, m, max_states=DEFAULT_MAX_STATES, timeout_s=DEFAULT_TIMEOUT_S):
    return _core.approx_derivative_member(_dump(tileset), _pattern(pattern), n, m, max_states, timeout_s)


def grid_shift():
    return json.loads(_core.grid_shift())


def diamond_shift():
    return json.loads(_core.diamond_shift())


def grid_window(side, x0, y0, w, h):
    return _core.grid_window(side, x0, y0, w, h)


def diamond_core(n, m):
    return _core.diamond_core(n, m)


def chain_point(i, x0, y0, w, h):
    return _core.chain_point(i, x0, y0, w, h)


def verify_chain(i, j, small=8, big=256):
    return _core.verify_chain(i, j, small, big)


def poset_stats(poset):
    """Return ({element: (r, predecessors, k)}, minimal elements)."""
    return _core.poset_stats(_dump(poset))


def phi(n, r):
    return _core.phi(n, r)


def verify_embedding(poset, small=4, big=512):
    return _core.verify_embedding(_dump(poset), small, big)


def simulate(machine, steps, choices=()):
    """Run a counter machine dict (None for the doubling machine)."""
    return _core.simulate("" if machine is None else _dump(machine), steps, list(choices))
