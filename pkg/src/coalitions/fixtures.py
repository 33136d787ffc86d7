"""Loaders for the shipped graph6 fixture corpora.

Every loader re-validates the advertised degree/connectivity claims instead
of trusting the files.
"""

from __future__ import annotations

from importlib import resources

from .errors import FixtureError
from .graph import Graph, degree_stats, is_connected
from .graph6 import parse_graph6

CUBIC_ORDERS = (4, 6, 8, 10)
FOUR_REGULAR_ORDERS = (5, 6, 7, 8, 9)


def _load(name: str) -> list[Graph]:
    ref = resources.files("coalitions.data").joinpath(name)
    try:
        text = ref.read_text()
    except FileNotFoundError as exc:
        raise FixtureError(f"missing fixture file {name}") from exc
    graphs = [parse_graph6(line) for line in text.splitlines() if line.strip()]
    if not graphs:
        raise FixtureError(f"fixture file {name} is empty")
    return graphs


def _validated(name: str, n: int, regular: int | None, min_degree: int) -> list[Graph]:
    graphs = _load(name)
    for idx, g in enumerate(graphs):
        delta, Delta, _ = degree_stats(g)
        if g.n != n:
            raise FixtureError(f"{name}[{idx}]: order {g.n}, expected {n}")
        if regular is not None and not delta == Delta == regular:
            raise FixtureError(f"{name}[{idx}]: not {regular}-regular")
        if delta < min_degree:
            raise FixtureError(f"{name}[{idx}]: minimum degree {delta} < {min_degree}")
        if not is_connected(g):
            raise FixtureError(f"{name}[{idx}]: not connected")
    return graphs


def cubic(n: int) -> list[Graph]:
    if n not in CUBIC_ORDERS:
        raise FixtureError(f"no cubic corpus for n={n}")
    return _validated(f"cubic_n{n}.g6", n, regular=3, min_degree=3)


def four_regular(n: int) -> list[Graph]:
    if n not in FOUR_REGULAR_ORDERS:
        raise FixtureError(f"no 4-regular corpus for n={n}")
    return _validated(f"four_regular_n{n}.g6", n, regular=4, min_degree=4)


def order7_min_degree2() -> list[Graph]:
    return _validated("order7_min_degree2.g6", 7, regular=None, min_degree=2)
