import pytest
from hypothesis import given, strategies as st

from coalitions import (
    NotConnectedError,
    coalition_graph,
    complete,
    cycle,
    from_edges,
    is_coalition,
    mask_of,
    open_total,
    star,
    verify_partition,
    vertex_cover_number,
)
from coalitions.coalition import (
    BLOCK_IS_DOMINATING,
    EMPTY_BLOCK,
    NOT_COVERING,
    NO_PARTNER,
    OVERLAP,
)


def blocks_of(*vertex_lists):
    return [mask_of(vs) for vs in vertex_lists]


def test_is_coalition_on_c4(c4):
    assert is_coalition(c4, mask_of([0, 2]), mask_of([1, 3]), open_total(2))
    with pytest.raises(ValueError):
        is_coalition(c4, 0, mask_of([1]), open_total(2))
    with pytest.raises(ValueError):
        is_coalition(c4, mask_of([0, 1]), mask_of([1, 2]), open_total(2))


def test_is_coalition_rejects_dominating_member(k5):
    # {0,1,2} already dominates K_5, so it cannot be a coalition member
    assert not is_coalition(k5, mask_of([0, 1, 2]), mask_of([3]), open_total(2))


def test_verify_valid_partition(k5):
    report = verify_partition(k5, blocks_of([0, 1], [2], [3], [4]), open_total(2))
    assert report.valid
    assert report.violations == []
    assert report.partner_counts() == [3, 1, 1, 1]


def test_verify_reports_all_violations(k5):
    report = verify_partition(
        k5, blocks_of([0, 1], [1, 2], [], [0, 1, 2, 3, 4]), open_total(2)
    )
    assert not report.valid
    kinds = {kind for kind, _ in report.violations}
    assert {OVERLAP, EMPTY_BLOCK, BLOCK_IS_DOMINATING} <= kinds
    assert (OVERLAP, (0, 1)) in report.violations
    assert (EMPTY_BLOCK, (2,)) in report.violations


def test_verify_not_covering(k5):
    report = verify_partition(k5, blocks_of([0, 1], [2]), open_total(2))
    assert not report.valid
    assert any(kind == NOT_COVERING for kind, _ in report.violations)


def test_verify_no_partner(c4):
    # {0,1} and {2,3} pair up, in C_4 a lone stranded split cannot: force it
    report = verify_partition(c4, blocks_of([0], [1], [2], [3]), open_total(2))
    assert not report.valid
    assert all(kind == NO_PARTNER for kind, _ in report.violations)


def test_verify_requires_connected():
    g = from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    with pytest.raises(NotConnectedError):
        verify_partition(g, [g.full_mask], open_total(2))


@given(st.permutations(range(4)))
def test_verify_invariant_under_block_order(perm):
    k5 = complete(5)
    blocks = blocks_of([0, 1], [2], [3], [4])
    shuffled = [blocks[i] for i in perm]
    report = verify_partition(k5, shuffled, open_total(2))
    assert report.valid
    assert sorted(report.partner_counts()) == [1, 1, 1, 3]


def test_coalition_graph_on_k5(k5):
    cg = coalition_graph(k5, blocks_of([0, 1], [2], [3], [4]), open_total(2))
    assert cg.base.n == 4
    assert cg.max_degree == 3
    assert cg.vertex_cover_number == 1


def test_coalition_graph_rejects_invalid(k5):
    with pytest.raises(ValueError):
        coalition_graph(k5, blocks_of([0, 1, 2, 3, 4]), open_total(2))


def test_vertex_cover_examples():
    assert vertex_cover_number(cycle(5)) == 3
    assert vertex_cover_number(complete(2)) == 1
    assert vertex_cover_number(star(3)) == 1
    assert vertex_cover_number(complete(6)) == 5
    assert vertex_cover_number(cycle(6)) == 3


def test_vertex_cover_matches_brute_force():
    from itertools import combinations

    g = from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (1, 4)])

    def brute(h):
        for size in range(h.n + 1):
            for combo in combinations(range(h.n), size):
                cover = mask_of(combo)
                if all((cover >> u) & 1 or (cover >> v) & 1 for u, v in h.edges()):
                    return size

    assert vertex_cover_number(g) == brute(g)
