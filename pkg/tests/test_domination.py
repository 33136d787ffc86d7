import pytest
from hypothesis import given, strategies as st

from coalitions import (
    DOUBLE,
    DominationTable,
    GuardExceededError,
    InadmissibleModeError,
    Mode,
    closed_tuple,
    complete,
    cycle,
    is_admissible,
    is_dominating,
    mask_of,
    max_domatic_partition,
    min_dominating_size,
    open_total,
    petersen,
    set_to_list,
    shrink_to_minimal,
)


def test_mode_labels_and_requirements():
    assert open_total(2).label() == "open-2"
    assert closed_tuple(2).label() == "closed-2"
    assert open_total(3).min_degree_required == 3
    assert closed_tuple(3).min_degree_required == 2
    assert DOUBLE == closed_tuple(2)
    with pytest.raises(ValueError):
        Mode(0)


def test_admissibility(c4):
    assert is_admissible(c4, open_total(2))
    assert not is_admissible(c4, open_total(3))
    assert is_admissible(c4, closed_tuple(3))
    with pytest.raises(InadmissibleModeError):
        is_dominating(c4, c4.full_mask, open_total(3))


def test_open_vs_closed_semantics(c4):
    # C_4: a single edge double-dominates nothing, but {0,1,2} does closed
    assert is_dominating(c4, c4.full_mask, open_total(2))
    assert not is_dominating(c4, mask_of([0, 1]), DOUBLE)
    assert is_dominating(c4, mask_of([0, 1, 2]), DOUBLE)
    # open-2 on C_4 needs both neighbors of every vertex: only V works
    assert not is_dominating(c4, mask_of([0, 1, 2]), open_total(2))


def test_domination_table_agrees_with_predicate(k5):
    mode = open_total(2)
    table = DominationTable(k5, mode)
    for mask in range(1 << 5):
        assert table.dominates(mask) == is_dominating(k5, mask, mode)
    # memoized verdicts are stable
    assert table.dominates(0b111) is table.dominates(0b111)


def test_shrink_to_minimal_examples(k4, k5):
    assert set_to_list(shrink_to_minimal(k5, k5.full_mask, open_total(2))) == [0, 1, 2]
    assert set_to_list(shrink_to_minimal(k4, k4.full_mask, DOUBLE)) == [0, 1]
    with pytest.raises(ValueError):
        shrink_to_minimal(k4, 0b11, open_total(2))


def test_shrink_output_is_minimal(pete):
    mode = open_total(2)
    s = shrink_to_minimal(pete, pete.full_mask, mode)
    assert is_dominating(pete, s, mode)
    for v in set_to_list(s):
        assert not is_dominating(pete, s & ~(1 << v), mode)


def test_min_dominating_size():
    # members of S need 2 *other* vertices of S as neighbors, so 3 not 2
    assert min_dominating_size(complete(5), open_total(2)) == 3
    assert min_dominating_size(cycle(4), open_total(2)) == 4
    assert min_dominating_size(complete(4), DOUBLE) == 2
    assert min_dominating_size(cycle(5), DOUBLE) == 4


def test_max_domatic_examples(c4):
    assert max_domatic_partition(c4, open_total(2)) == [c4.full_mask]
    parts = max_domatic_partition(complete(7), open_total(2))
    assert len(parts) == 2
    assert parts[0] | parts[1] == complete(7).full_mask
    for p in parts:
        assert is_dominating(complete(7), p, open_total(2))


def test_max_domatic_guard():
    with pytest.raises(GuardExceededError):
        max_domatic_partition(cycle(17), open_total(2))
    # force overrides
    assert max_domatic_partition(cycle(17), open_total(2), force=True) == [
        cycle(17).full_mask
    ]


@given(st.integers(min_value=0, max_value=(1 << 10) - 1), st.integers(0, (1 << 10) - 1))
def test_domination_monotone_under_supersets(mask, extra):
    g = petersen()
    mode = open_total(2)
    if is_dominating(g, mask, mode):
        assert is_dominating(g, mask | extra, mode)


@given(st.integers(min_value=0, max_value=(1 << 10) - 1))
def test_closed_implied_by_open(mask):
    g = petersen()
    if is_dominating(g, mask, open_total(2)):
        assert is_dominating(g, mask, closed_tuple(2))
