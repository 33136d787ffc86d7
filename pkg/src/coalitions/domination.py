"""Domination predicates in both neighborhood semantics, minimal-set
reduction, and exact maximum domatic partitions for small graphs.

A mode selects the semantics: open total k-domination (every vertex needs k
neighbors inside the set) or closed k-tuple domination (every vertex needs k
of its closed neighborhood inside the set; k=2 is double domination).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import GuardExceededError, InadmissibleModeError
from .graph import Graph, iter_bits, mask_of

DOMATIC_GUARD = 16


@dataclass(frozen=True)
class Mode:
    """Neighborhood semantics for domination and coalitions."""

    k: int
    closed: bool = False

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("mode parameter k must be positive")

    @property
    def min_degree_required(self) -> int:
        return self.k - 1 if self.closed else self.k

    def label(self) -> str:
        return f"{'closed' if self.closed else 'open'}-{self.k}"


def open_total(k: int) -> Mode:
    return Mode(k, closed=False)


def closed_tuple(k: int) -> Mode:
    return Mode(k, closed=True)


DOUBLE = closed_tuple(2)


def require_admissible(g: Graph, mode: Mode) -> None:
    if g.n == 0:
        raise InadmissibleModeError("empty graph admits no mode")
    delta = min(g.degrees())
    if delta < mode.min_degree_required:
        raise InadmissibleModeError(
            f"mode {mode.label()} needs minimum degree >= "
            f"{mode.min_degree_required}, graph has {delta}"
        )


def is_admissible(g: Graph, mode: Mode) -> bool:
    return g.n > 0 and min(g.degrees()) >= mode.min_degree_required


def coverage(g: Graph, v: int, s: int, mode: Mode) -> int:
    """How many of v's (closed) neighborhood lie in s."""
    c = (g.adj[v] & s).bit_count()
    if mode.closed:
        c += (s >> v) & 1
    return c


def is_dominating(g: Graph, s: int, mode: Mode) -> bool:
    """True iff every vertex has at least k of its neighborhood in s.

    Raises InadmissibleModeError (distinct from a False verdict) when the
    graph's minimum degree is too small for the mode.
    """
    require_admissible(g, mode)
    return _dominates(g, s, mode)


def _dominates(g: Graph, s: int, mode: Mode) -> bool:
    # internal fast path: admissibility already checked by the caller
    k = mode.k
    if mode.closed:
        for v in range(g.n):
            if (g.adj[v] & s).bit_count() + ((s >> v) & 1) < k:
                return False
    else:
        for v in range(g.n):
            if (g.adj[v] & s).bit_count() < k:
                return False
    return True


class DominationTable:
    """Memoized per-graph domination verdicts, keyed by vertex-set mask.

    Used by the solver and the brute-force oracle, where the same blocks and
    block unions recur across thousands of candidate partitions.
    """

    def __init__(self, g: Graph, mode: Mode):
        require_admissible(g, mode)
        self.g = g
        self.mode = mode
        self._cache: dict[int, bool] = {}

    def dominates(self, mask: int) -> bool:
        hit = self._cache.get(mask)
        if hit is None:
            hit = _dominates(self.g, mask, self.mode)
            self._cache[mask] = hit
        return hit


def shrink_to_minimal(g: Graph, s: int, mode: Mode) -> int:
    """Greedy reduction of a dominating set to a minimal one.

    Candidates are dropped in descending index order, repeating until stable,
    so the result is deterministic.
    """
    if not is_dominating(g, s, mode):
        raise ValueError("shrink_to_minimal requires a dominating input set")
    changed = True
    while changed:
        changed = False
        for v in sorted(iter_bits(s), reverse=True):
            trial = s & ~(1 << v)
            if _dominates(g, trial, mode):
                s = trial
                changed = True
    return s


def min_dominating_size(g: Graph, mode: Mode) -> int:
    """Cardinality of a smallest dominating set under the mode (exact)."""
    require_admissible(g, mode)
    for size in range(mode.k, g.n + 1):
        for combo in combinations(range(g.n), size):
            if _dominates(g, mask_of(combo), mode):
                return size
    raise AssertionError("V(G) itself must dominate an admissible graph")


def max_domatic_partition(
    g: Graph, mode: Mode, guard: int = DOMATIC_GUARD, force: bool = False
) -> list[int]:
    """A partition of V into the maximum number of dominating blocks.

    Exact search: try target cardinalities downward, assigning vertices in
    index order with restricted-growth symmetry breaking; a branch dies when
    some block cannot reach domination even with all unassigned vertices.
    The first certificate found is the lexicographically least one.
    """
    require_admissible(g, mode)
    if g.n > guard and not force:
        raise GuardExceededError(
            f"domatic search guarded at n <= {guard} (got {g.n}); force to override"
        )
    n = g.n
    full = g.full_mask
    gamma = min_dominating_size(g, mode)
    for c in range(max(n // gamma, 1), 1, -1):
        hit = _domatic_backtrack(g, mode, c)
        if hit is not None:
            return hit
    return [full]


def _domatic_backtrack(g: Graph, mode: Mode, c: int) -> list[int] | None:
    n = g.n
    blocks = [0] * c
    full = g.full_mask

    def feasible(opened: int, unassigned: int) -> bool:
        for b in range(opened):
            if not _dominates(g, blocks[b] | unassigned, mode):
                return False
        return True

    def recurse(v: int, opened: int) -> bool:
        if v == n:
            return opened == c and all(_dominates(g, blocks[b], mode) for b in range(c))
        remaining = n - v
        if remaining < c - opened:
            return False
        unassigned_after = full & ~((1 << (v + 1)) - 1)
        limit = min(opened + 1, c)
        for b in range(limit):
            blocks[b] |= 1 << v
            new_opened = max(opened, b + 1)
            if feasible(new_opened, unassigned_after):
                if recurse(v + 1, new_opened):
                    return True
            blocks[b] &= ~(1 << v)
        return False

    if recurse(0, 0):
        return list(blocks)
    return None
