"""Coalition pairs, partition verification, and the coalition graph.

Two disjoint nonempty sets form a coalition when neither dominates on its own
but their union does.  A coalition partition is a vertex partition in which
every block has at least one coalition partner among the other blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .domination import DominationTable, Mode, require_admissible
from .errors import GuardExceededError, NotConnectedError
from .graph import Graph, from_edges, is_connected, iter_bits

VERTEX_COVER_GUARD = 40

# Violation kinds reported by verify_partition
OVERLAP = "Overlap"
NOT_COVERING = "NotCovering"
EMPTY_BLOCK = "EmptyBlock"
BLOCK_IS_DOMINATING = "BlockIsDominating"
NO_PARTNER = "NoPartner"


@dataclass
class VerificationReport:
    valid: bool
    violations: list[tuple[str, tuple[int, ...]]]
    partner_matrix: list[list[bool]]

    def partner_counts(self) -> list[int]:
        return [sum(row) for row in self.partner_matrix]

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [
                {"kind": kind, "blocks": list(blocks)}
                for kind, blocks in self.violations
            ],
            "partnerMatrix": self.partner_matrix,
        }


def is_coalition(g: Graph, a: int, b: int, mode: Mode) -> bool:
    """True iff neither a nor b dominates but a|b does."""
    if a == 0 or b == 0:
        raise ValueError("coalition members must be nonempty")
    if a & b:
        raise ValueError("coalition members must be disjoint")
    table = DominationTable(g, mode)
    return not table.dominates(a) and not table.dominates(b) and table.dominates(a | b)


def verify_partition(
    g: Graph, blocks: list[int], mode: Mode, table: DominationTable | None = None
) -> VerificationReport:
    """Full verdict on a candidate coalition partition.

    All violations are reported, not just the first, so broken fixtures can be
    debugged in one pass.  Requires a connected graph and an admissible mode.
    """
    require_admissible(g, mode)
    if not is_connected(g):
        raise NotConnectedError("verify_partition requires a connected graph")
    if table is None:
        table = DominationTable(g, mode)

    c = len(blocks)
    violations: list[tuple[str, tuple[int, ...]]] = []

    union = 0
    for i, blk in enumerate(blocks):
        if blk == 0:
            violations.append((EMPTY_BLOCK, (i,)))
        union |= blk
    for i in range(c):
        for j in range(i + 1, c):
            if blocks[i] & blocks[j]:
                violations.append((OVERLAP, (i, j)))
    if union != g.full_mask:
        violations.append((NOT_COVERING, tuple(range(c))))

    dominating = [blk != 0 and table.dominates(blk) for blk in blocks]
    matrix = [[False] * c for _ in range(c)]
    for i in range(c):
        for j in range(i + 1, c):
            if (
                blocks[i]
                and blocks[j]
                and not blocks[i] & blocks[j]
                and not dominating[i]
                and not dominating[j]
                and table.dominates(blocks[i] | blocks[j])
            ):
                matrix[i][j] = matrix[j][i] = True

    for i in range(c):
        if dominating[i]:
            violations.append((BLOCK_IS_DOMINATING, (i,)))
        elif blocks[i] and not any(matrix[i]):
            violations.append((NO_PARTNER, (i,)))
    if c == 1 and not violations:
        # a single block covers V, hence dominates; unreachable, kept as guard
        violations.append((NO_PARTNER, (0,)))

    return VerificationReport(not violations, violations, matrix)


@dataclass
class CoalitionGraph:
    """Graph on block indices: edge iff the two blocks form a coalition."""

    base: Graph
    max_degree: int
    vertex_cover_number: int


def coalition_graph(g: Graph, blocks: list[int], mode: Mode) -> CoalitionGraph:
    report = verify_partition(g, blocks, mode)
    if not report.valid:
        raise ValueError(f"not a valid coalition partition: {report.violations}")
    c = len(blocks)
    base = from_edges(
        c,
        (
            (i, j)
            for i in range(c)
            for j in range(i + 1, c)
            if report.partner_matrix[i][j]
        ),
    )
    return CoalitionGraph(base, max(base.degrees()), vertex_cover_number(base))


def vertex_cover_number(h: Graph, guard: int = VERTEX_COVER_GUARD, force: bool = False) -> int:
    """Exact minimum vertex cover size by edge branching.

    A greedy maximal matching supplies the lower bound for pruning.  Meant for
    coalition graphs, which stay tiny at desk scale.
    """
    if h.n > guard and not force:
        raise GuardExceededError(
            f"vertex cover search guarded at n <= {guard} (got {h.n}); force to override"
        )

    best = h.n

    def matching_bound(adj: list[int], alive: int) -> int:
        used = 0
        size = 0
        for v in iter_bits(alive):
            if (used >> v) & 1:
                continue
            cand = adj[v] & alive & ~used
            if cand:
                u = (cand & -cand).bit_length() - 1
                used |= (1 << v) | (1 << u)
                size += 1
        return size

    def branch(adj: list[int], alive: int, taken: int) -> None:
        nonlocal best
        if taken >= best:
            return
        # drop vertices whose edges are all gone
        edges_left = False
        pick = -1
        pick_deg = -1
        for v in iter_bits(alive):
            d = (adj[v] & alive).bit_count()
            if d > pick_deg:
                pick_deg = d
                pick = v
            if d:
                edges_left = True
        if not edges_left:
            best = min(best, taken)
            return
        if taken + matching_bound(adj, alive) >= best:
            return
        if pick_deg == 1:
            # cover a pendant edge by its other endpoint, no branching needed
            u = (adj[pick] & alive).bit_length() - 1
            branch(adj, alive & ~((1 << pick) | (1 << u)), taken + 1)
            return
        # branch: take pick, or take all of pick's alive neighbors
        branch(adj, alive & ~(1 << pick), taken + 1)
        nbrs = adj[pick] & alive
        branch(adj, alive & ~nbrs & ~(1 << pick), taken + nbrs.bit_count())

    branch(list(h.adj), h.full_mask, 0)
    return best
