"""Executable constructive proofs: witness partitions and extremal families.

Every constructor verifies its own output before returning, so a
CertifiedInstance is a machine-checked witness, not a claim.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coalition import is_coalition, verify_partition
from .domination import (
    Mode,
    closed_tuple,
    max_domatic_partition,
    open_total,
    require_admissible,
    shrink_to_minimal,
)
from .errors import ConstructionError, NotConnectedError
from .graph import Graph, degree_stats, from_edges, is_connected, iter_bits, set_to_list
from .graph6 import write_graph6


@dataclass(frozen=True)
class CertifiedInstance:
    """A graph together with a verified coalition partition of claimed size."""

    graph: Graph
    blocks: tuple[int, ...]
    mode: Mode
    claimed_value: int
    provenance: str

    def __post_init__(self):
        if len(self.blocks) != self.claimed_value:
            raise ConstructionError(
                f"partition has {len(self.blocks)} blocks, claimed {self.claimed_value}"
            )
        report = verify_partition(self.graph, list(self.blocks), self.mode)
        if not report.valid:
            raise ConstructionError(
                f"construction {self.provenance} failed verification: {report.violations}"
            )

    def to_json(self) -> dict:
        return {
            "graph6": write_graph6(self.graph).decode("ascii"),
            "mode": "closed" if self.mode.closed else "open",
            "k": self.mode.k,
            "blocks": [set_to_list(b) for b in self.blocks],
            "claimedValue": self.claimed_value,
            "provenance": self.provenance,
        }


def _split_alternating(mask: int) -> tuple[int, int]:
    """Split a set into two halves by alternating over sorted indices."""
    members = list(iter_bits(mask))
    if len(members) < 2:
        raise ConstructionError("cannot split a set with fewer than two vertices")
    a = sum(1 << v for v in members[0::2])
    b = sum(1 << v for v in members[1::2])
    return a, b


def partition_from_domatic(
    g: Graph, mode: Mode, guard: int = 16, force: bool = False
) -> list[int]:
    """Coalition partition with at least twice as many blocks as the maximum
    domatic partition.

    Procedure: shrink all but the last domatic block to minimal dominating
    sets, dump the leftovers into the last block, split each minimal block in
    two (each pair is a coalition), then resolve the last block by cases:
    already minimal -> split it too; otherwise split its minimal core and
    either keep the residue as its own block (when it has a partner among the
    two halves) or merge it into the first half.
    """
    require_admissible(g, mode)
    if not is_connected(g):
        raise NotConnectedError("partition_from_domatic requires a connected graph")
    omega = max_domatic_partition(g, mode, guard=guard, force=force)
    m = len(omega)

    blocks: list[int] = []
    last = omega[-1]
    for blk in omega[:-1]:
        core = shrink_to_minimal(g, blk, mode)
        last |= blk & ~core
        blocks.extend(_split_alternating(core))

    core = shrink_to_minimal(g, last, mode)
    if core == last:
        blocks.extend(_split_alternating(last))
    else:
        residue = last & ~core
        half_a, half_b = _split_alternating(core)
        if is_coalition(g, residue, half_a, mode) or is_coalition(
            g, residue, half_b, mode
        ):
            blocks.extend((half_a, half_b, residue))
        else:
            # residue pairs with neither half, so the merged half still fails
            # to dominate and is a partner of the other half
            blocks.extend((half_a | residue, half_b))

    report = verify_partition(g, blocks, mode)
    if not report.valid:
        raise ConstructionError(
            f"domatic-derived partition failed verification: {report.violations}"
        )
    return blocks


def min_degree_partition(g: Graph, k: int) -> list[int]:
    """Partition with exactly delta-k+2 blocks: singletons on delta-k+1
    neighbors of a minimum-degree vertex, plus the complement block."""
    if k < 1:
        raise ConstructionError("k must be positive")
    if not is_connected(g):
        raise NotConnectedError("min_degree_partition requires a connected graph")
    delta, _, degs = degree_stats(g)
    if delta < k:
        raise ConstructionError(f"need minimum degree >= {k}, graph has {delta}")
    v = degs.index(delta)
    nbrs = set_to_list(g.adj[v])[: delta - k + 1]
    blocks = [1 << u for u in nbrs]
    blocks.append(g.full_mask & ~sum(blocks))
    report = verify_partition(g, blocks, open_total(k))
    if not report.valid:
        raise ConstructionError(
            f"min-degree partition failed verification: {report.violations}"
        )
    return blocks


def universal_clique_count(g: Graph) -> int:
    """Number of vertices adjacent to all others."""
    if g.n < 1:
        raise ValueError("universal_clique_count needs at least one vertex")
    return sum(1 for v in range(g.n) if g.adj[v] == g.full_mask ^ (1 << v))


# ---------------------------------------------------------------------------
# Extremal families


def build_extremal_tc(d: int, ell: int) -> CertifiedInstance:
    """Tripartite-block family attaining the gated TC_2 upper bound.

    d stars K_{1,ell} chained together, one complete tripartite K_{d,d,d}
    hung on every star vertex (2d-1 attachment points each), and the witness
    partition of d*(ell+1) blocks.
    """
    if d < 2:
        raise ConstructionError("need d >= 2")
    if ell < 2 * d - 1:
        raise ConstructionError("need ell >= 2d-1")

    n = d * ell + d + 3 * d * d * ell + 3 * d * d
    x = lambda i, j: (i - 1) * ell + (j - 1)
    y = lambda i: d * ell + (i - 1)
    blob_base = d * ell + d

    def blob_xy(i, j):  # base of the K_{d,d,d} hung on x(i,j)
        return blob_base + ((i - 1) * ell + (j - 1)) * 3 * d

    def blob_y(i):  # base of the K_{d,d,d} hung on y(i)
        return blob_base + d * ell * 3 * d + (i - 1) * 3 * d

    edges: list[tuple[int, int]] = []
    for i in range(1, d + 1):
        for j in range(1, ell + 1):
            edges.append((y(i), x(i, j)))
    for i in range(1, d):
        col = 1 if i % 2 == 1 else 2
        edges.append((x(i, col), x(i + 1, col)))

    def add_blob(base: int, anchor: int, attach_all: bool = False):
        # complete tripartite K_{d,d,d}: parts are [base+p*d, base+(p+1)*d)
        for p in range(3):
            for q in range(p + 1, 3):
                for a in range(d):
                    for b in range(d):
                        edges.append((base + p * d + a, base + q * d + b))
        # attachment set: part 0 plus part 1 minus its last vertex
        for a in range(d):
            edges.append((anchor, base + a))
        for a in range(d - 1):
            edges.append((anchor, base + d + a))

    for i in range(1, d + 1):
        for j in range(1, ell + 1):
            add_blob(blob_xy(i, j), x(i, j))
        add_blob(blob_y(i), y(i))

    g = from_edges(n, edges)

    c = d * (ell + 1)
    blocks = [0] * c

    def assign_blob(base: int, owner: int):
        # part vertices go to blocks 0..d-1 positionally; in part 1 the
        # unattached last vertex swaps into the owner's block
        for p in range(3):
            for q in range(d):
                target = q
                if p == 1:
                    if q == d - 1:
                        target = owner - 1
                    elif q == owner - 1:
                        target = d - 1
                blocks[target] |= 1 << (base + p * d + q)

    for i in range(1, d + 1):
        blocks[i - 1] |= 1 << y(i)
        assign_blob(blob_y(i), i)
        for j in range(1, ell + 1):
            assign_blob(blob_xy(i, j), i)
            blocks[d + (i - 1) * ell + (j - 1)] = 1 << x(i, j)

    return CertifiedInstance(
        g, tuple(blocks), open_total(2), c, f"extremal-tc(d={d},l={ell})"
    )


def build_extremal_dc(r: int, t: int) -> CertifiedInstance:
    """Clique-block family whose double coalition number exceeds Delta+1.

    Same chassis as the TC family but every hung block is a clique K_{2r};
    witness partition of r*(t+1) blocks under double (closed, k=2) semantics.
    """
    if r < 2:
        raise ConstructionError("need r >= 2")
    if t < 4 or t < 2 * r - 1:
        raise ConstructionError("need t >= 4 and t >= 2r-1")

    n = r * t + r + 2 * r * r * t + 2 * r * r
    x = lambda i, j: (i - 1) * t + (j - 1)
    y = lambda i: r * t + (i - 1)
    blob_base = r * t + r

    def blob_xy(i, j):
        return blob_base + ((i - 1) * t + (j - 1)) * 2 * r

    def blob_y(i):
        return blob_base + r * t * 2 * r + (i - 1) * 2 * r

    edges: list[tuple[int, int]] = []
    for i in range(1, r + 1):
        for j in range(1, t + 1):
            edges.append((y(i), x(i, j)))
    for i in range(1, r):
        col = 1 if i % 2 == 1 else 2
        edges.append((x(i, col), x(i + 1, col)))

    def add_clique(base: int):
        for a in range(2 * r):
            for b in range(a + 1, 2 * r):
                edges.append((base + a, base + b))

    for i in range(1, r + 1):
        for j in range(1, t + 1):
            base = blob_xy(i, j)
            add_clique(base)
            for a in range(2 * r):
                edges.append((x(i, j), base + a))
        base = blob_y(i)
        add_clique(base)
        for a in range(2 * r - 2):  # the last two clique vertices stay unattached
            edges.append((y(i), base + a))

    g = from_edges(n, edges)

    c = r * (t + 1)
    blocks = [0] * c

    def assign_clique(base: int, owner: int | None):
        # consecutive pairs go to blocks 0..r-1; in an owner clique the
        # unattached last pair swaps into the owner's block
        for q in range(2 * r):
            target = q // 2
            if owner is not None:
                if target == r - 1:
                    target = owner - 1
                elif target == owner - 1:
                    target = r - 1
            blocks[target] |= 1 << (base + q)

    for i in range(1, r + 1):
        blocks[i - 1] |= 1 << y(i)
        assign_clique(blob_y(i), i)
        for j in range(1, t + 1):
            assign_clique(blob_xy(i, j), None)
            blocks[r + (i - 1) * t + (j - 1)] = 1 << x(i, j)

    return CertifiedInstance(
        g, tuple(blocks), closed_tuple(2), c, f"extremal-dc(r={r},t={t})"
    )
