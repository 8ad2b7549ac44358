"""Python bindings for the pgst library.

Graphs are passed as dicts (or JSON strings) in the same format the ``pgst``
command-line tool reads. Vertices are 1-indexed throughout.
"""

import json

from . import _core
from ._core import PgstError

__all__ = [
    "PgstError",
    "certify",
    "involutions",
    "decompose",
    "fidelity",
    "search_transfer_time",
    "path_plus_minus",
    "path_coprimality",
]


def _text(graph):
    return graph if isinstance(graph, str) else json.dumps(graph)


def _q(q_value):
    return None if q_value is None else str(q_value)


def certify(graph, u=None, sigma=None, q_value=None, precision=60, height_bound=50):
    return json.loads(_core.certify(_text(graph), u, sigma, _q(q_value), precision, height_bound))


def involutions(graph):
    return json.loads(_core.involutions(_text(graph)))["involutions"]


def decompose(graph, sigma=None, u=None):
    return json.loads(_core.decompose(_text(graph), sigma, u))


def fidelity(graph, u, v, times, q_value=None, precision=60):
    return _core.fidelity(_text(graph), u, v, list(times), _q(q_value), precision)


def search_transfer_time(graph, u, v, epsilon=0.01, t_max=1000.0, q_value=None, precision=60):
    """Returns (t, fidelity, reached)."""
    return _core.search_transfer_time(_text(graph), u, v, epsilon, t_max, _q(q_value), precision)


def path_plus_minus(n):
    plus, minus = _core.path_plus_minus(n)
    return json.loads(plus), json.loads(minus)


def path_coprimality(n):
    return json.loads(_core.path_coprimality(n))
