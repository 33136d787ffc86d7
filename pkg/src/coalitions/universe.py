"""Exhaustive small-graph universes and set partition enumeration.

The graph enumerator walks every edge mask on n labeled vertices (there are
2^(n(n-1)/2) of them), filtering by connectivity and minimum degree; it is
the ground truth behind the conjecture scans and oracle-equivalence checks.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .graph import Graph, is_connected


def labeled_graphs(
    n: int, min_degree: int = 0, connected: bool = True
) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices passing the filters."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        m = mask
        idx = 0
        while m:
            if m & 1:
                u, v = pairs[idx]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            m >>= 1
            idx += 1
        if min_degree and any(row.bit_count() < min_degree for row in adj):
            continue
        g = Graph(n, tuple(adj))
        if connected and not is_connected(g):
            continue
        yield g


def universe(
    n_max: int, min_degree: int = 0, n_min: int = 3, connected: bool = True
) -> Iterator[Graph]:
    """Labeled graphs for every order n_min..n_max."""
    for n in range(n_min, n_max + 1):
        yield from labeled_graphs(n, min_degree=min_degree, connected=connected)


def bounded_degree_graphs(
    n: int, max_degree: int, min_degree: int = 0, connected: bool = True
) -> Iterator[Graph]:
    """Every labeled graph with degrees in [min_degree, max_degree].

    Depth-first over the pair list with degree pruning; unlike the raw edge
    mask walk this stays feasible for sparse regimes like subcubic n=8.
    Minimum degree is enforced as soon as a vertex's pair list is exhausted
    (pairs are lexicographic, so that happens when the first coordinate moves
    past the vertex).
    """
    pairs = list(combinations(range(n), 2))
    deg = [0] * n
    adj = [0] * n

    def recurse(idx: int) -> Iterator[Graph]:
        if idx == len(pairs):
            # the final two vertices never trigger the first-coordinate check
            if min(deg[n - 2 :], default=0) >= min_degree:
                g = Graph(n, tuple(adj))
                if not connected or is_connected(g):
                    yield g
            return
        u, v = pairs[idx]
        if idx and pairs[idx - 1][0] != u and deg[pairs[idx - 1][0]] < min_degree:
            return
        # remaining pairs touching u all have first coordinate u
        remaining_u = n - 1 - v
        if deg[u] + remaining_u + 1 >= min_degree and deg[u] < max_degree and deg[v] < max_degree:
            deg[u] += 1
            deg[v] += 1
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            yield from recurse(idx + 1)
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            deg[u] -= 1
            deg[v] -= 1
        if deg[u] + remaining_u >= min_degree:
            yield from recurse(idx + 1)

    yield from recurse(0)


def _rgs_partitions(n: int) -> Iterator[tuple[int, ...]]:
    # restricted growth: vertex v may open block b only if 0..b-1 are open
    blocks: list[int] = []

    def recurse(v: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(blocks)
            return
        for b in range(len(blocks)):
            blocks[b] |= 1 << v
            yield from recurse(v + 1)
            blocks[b] &= ~(1 << v)
        blocks.append(1 << v)
        yield from recurse(v + 1)
        blocks.pop()

    yield from recurse(0)


@lru_cache(maxsize=8)
def _cached_partitions(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_rgs_partitions(n))


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All set partitions of {0..n-1} as tuples of bitmasks.

    Small orders are cached because the oracle revisits them for thousands of
    graphs; larger orders stream.
    """
    if n <= 8:
        return iter(_cached_partitions(n))
    return _rgs_partitions(n)
