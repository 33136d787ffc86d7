from math import comb

import pytest

from coalitions import (
    FixtureError,
    bounded_degree_graphs,
    degree_stats,
    is_connected,
    labeled_graphs,
    set_partitions,
    universe,
    write_graph6,
)
from coalitions import fixtures

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140]


def test_labeled_graph_counts():
    # connected labeled graphs: 1, 4, 38 for n = 3, 4, 5 (classic values)
    assert sum(1 for _ in labeled_graphs(3)) == 4
    assert sum(1 for _ in labeled_graphs(4)) == 38
    assert sum(1 for _ in labeled_graphs(4, connected=False)) == 2 ** comb(4, 2)


def test_universe_is_union_over_orders():
    got = sum(1 for _ in universe(5, min_degree=2))
    parts = sum(
        sum(1 for _ in labeled_graphs(n, min_degree=2)) for n in (3, 4, 5)
    )
    assert got == parts


def test_bounded_degree_matches_filtered_bruteforce():
    for n in (4, 5):
        fast = {write_graph6(g) for g in bounded_degree_graphs(n, 3, min_degree=2)}
        slow = {
            write_graph6(g)
            for g in labeled_graphs(n, min_degree=2)
            if degree_stats(g)[1] <= 3
        }
        assert fast == slow


def test_bounded_degree_respects_filters():
    for g in bounded_degree_graphs(6, 3, min_degree=2):
        delta, Delta, _ = degree_stats(g)
        assert 2 <= delta and Delta <= 3
        assert is_connected(g)


def test_set_partition_counts():
    for n in range(1, 9):
        assert sum(1 for _ in set_partitions(n)) == BELL[n]


def test_set_partitions_are_partitions():
    full = (1 << 5) - 1
    seen = set()
    for blocks in set_partitions(5):
        union = 0
        for b in blocks:
            assert b and not (union & b)
            union |= b
        assert union == full
        seen.add(frozenset(blocks))
    assert len(seen) == BELL[5]


def test_cubic_fixture_counts():
    for n, count in zip(fixtures.CUBIC_ORDERS, (1, 2, 5, 19)):
        graphs = fixtures.cubic(n)
        assert len(graphs) == count
        assert len({write_graph6(g) for g in graphs}) == count


def test_four_regular_fixture_counts():
    for n, count in zip(fixtures.FOUR_REGULAR_ORDERS, (1, 1, 2, 6, 16)):
        assert len(fixtures.four_regular(n)) == count


def test_order7_fixture():
    graphs = fixtures.order7_min_degree2()
    assert len(graphs) == 507
    for g in graphs[::50]:
        assert g.n == 7 and degree_stats(g)[0] >= 2 and is_connected(g)


def test_fixture_loaders_reject_unknown_orders():
    with pytest.raises(FixtureError):
        fixtures.cubic(5)
    with pytest.raises(FixtureError):
        fixtures.four_regular(4)
