"""Bit-packed simple undirected graphs and the standard generators.

Vertices are integers 0..n-1.  A vertex set is a plain Python int used as a
bitmask, so |N(v) & S| is just a popcount.  Graphs are immutable after
construction and safe to share across threads.

Labeling conventions (fixed so fixtures and graph6 output are byte-stable):
  - cycle(n): 0-1-...-(n-1)-0
  - complete_multipartite(sizes): parts in given order, vertices numbered
    part by part
  - star(l): center 0, leaves 1..l
  - join(a, b): left block numbered first
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .errors import ConstructionError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_to_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with bit-packed adjacency rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency table length must equal n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row < 0 or row & ~full:
                raise ValueError(f"adjacency row {v} has out-of-range bits")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in iter_bits(self.adj[v]):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in iter_bits(self.adj[v] >> (v + 1)):
                yield (v, u + v + 1)

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate pairs collapse."""
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge endpoint out of range: ({u},{v})")
        if u == v:
            raise ValueError(f"loop edge ({u},{u}) not allowed in a simple graph")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def degree_stats(g: Graph) -> tuple[int, int, list[int]]:
    """(minimum degree, maximum degree, degree sequence by vertex)."""
    if g.n < 1:
        raise ValueError("degree_stats needs at least one vertex")
    degs = g.degrees()
    return min(degs), max(degs), degs


def is_connected(g: Graph) -> bool:
    """One breadth-first sweep from vertex 0 reaches everything."""
    if g.n < 1:
        raise ValueError("is_connected needs at least one vertex")
    seen = 1
    frontier = 1
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= g.adj[v]
        frontier = grow & ~seen
        seen |= frontier
    return seen == g.full_mask


# ---------------------------------------------------------------------------
# Generators


def cycle(n: int) -> Graph:
    if n < 3:
        raise ConstructionError("cycle needs n >= 3 to stay a simple graph")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ConstructionError("complete needs n >= 1")
    return from_edges(n, combinations(range(n), 2))


def complete_multipartite(sizes: Iterable[int]) -> Graph:
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ConstructionError("multipartite part sizes must all be >= 1")
    n = sum(sizes)
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    return from_edges(
        n, ((u, v) for u, v in combinations(range(n), 2) if part[u] != part[v])
    )


def star(leaves: int) -> Graph:
    if leaves < 1:
        raise ConstructionError("star needs at least one leaf")
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union of a and b plus all edges between the two blocks."""
    if a.n == 0 or b.n == 0:
        raise ConstructionError("join operands must be nonempty")
    n = a.n + b.n
    edges = list(a.edges())
    edges += [(u + a.n, v + a.n) for u, v in b.edges()]
    edges += [(u, v + a.n) for u in range(a.n) for v in range(b.n)]
    return from_edges(n, edges)


def petersen() -> Graph:
    """The Petersen graph (outer cycle 0..4, inner pentagram 5..9)."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, edges)


# ---------------------------------------------------------------------------
# Family specs (tagged descriptions of the generator families, with a tiny
# text syntax used by the CLI, e.g. "join(complete(2),multipartite(1,1,1))")


@dataclass(frozen=True)
class FamilySpec:
    kind: str  # "cycle" | "complete" | "multipartite" | "star" | "join"
    sizes: tuple[int, ...] = ()
    left: Optional["FamilySpec"] = None
    right: Optional["FamilySpec"] = None

    def __post_init__(self):
        if self.kind == "join":
            if self.left is None or self.right is None:
                raise ConstructionError("join spec needs two operands")
        elif self.kind in ("cycle", "complete", "star"):
            if len(self.sizes) != 1 or self.sizes[0] < 1:
                raise ConstructionError(f"{self.kind} needs one size parameter >= 1")
        elif self.kind == "multipartite":
            if not self.sizes or any(s < 1 for s in self.sizes):
                raise ConstructionError("multipartite sizes must all be >= 1")
        else:
            raise ConstructionError(f"unknown family kind {self.kind!r}")


def generate(spec: FamilySpec) -> Graph:
    if spec.kind == "cycle":
        return cycle(spec.sizes[0])
    if spec.kind == "complete":
        return complete(spec.sizes[0])
    if spec.kind == "multipartite":
        return complete_multipartite(spec.sizes)
    if spec.kind == "star":
        return star(spec.sizes[0])
    return join(generate(spec.left), generate(spec.right))


_TOKEN = re.compile(r"\s*([A-Za-z_]+|\d+|[(),])")

_KIND_ALIASES = {
    "cycle": "cycle",
    "complete": "complete",
    "multipartite": "multipartite",
    "completemultipartite": "multipartite",
    "complete_multipartite": "multipartite",
    "star": "star",
    "join": "join",
}


def parse_family(text: str) -> FamilySpec:
    """Parse a family description like ``cycle(7)`` or ``join(a,b)``."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ConstructionError(f"bad family syntax near {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()

    def parse(i: int) -> tuple[FamilySpec, int]:
        if i >= len(tokens):
            raise ConstructionError("unexpected end of family spec")
        name = _KIND_ALIASES.get(tokens[i].lower())
        if name is None:
            raise ConstructionError(f"unknown family name {tokens[i]!r}")
        if i + 1 >= len(tokens) or tokens[i + 1] != "(":
            raise ConstructionError(f"expected '(' after {tokens[i]!r}")
        i += 2
        if name == "join":
            left, i = parse(i)
            if tokens[i : i + 1] != [","]:
                raise ConstructionError("join needs two comma-separated operands")
            right, i = parse(i + 1)
            if tokens[i : i + 1] != [")"]:
                raise ConstructionError("missing ')' in join spec")
            return FamilySpec("join", left=left, right=right), i + 1
        sizes = []
        while True:
            if i >= len(tokens) or not tokens[i].isdigit():
                raise ConstructionError(f"expected integer parameter in {name} spec")
            sizes.append(int(tokens[i]))
            i += 1
            if tokens[i : i + 1] == [","]:
                i += 1
                continue
            if tokens[i : i + 1] == [")"]:
                return FamilySpec(name, sizes=tuple(sizes)), i + 1
            raise ConstructionError(f"bad parameter list in {name} spec")

    spec, end = parse(0)
    if end != len(tokens):
        raise ConstructionError(f"trailing garbage in family spec: {tokens[end:]}")
    return spec
