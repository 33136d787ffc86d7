import pytest
from hypothesis import given, strategies as st

from coalitions import (
    Graph,
    Graph6Error,
    complete,
    cycle,
    parse_graph6,
    petersen,
    write_graph6,
)


def test_known_records():
    assert parse_graph6("@") == Graph(1, (0,))
    assert parse_graph6("C~") == complete(4)
    c4 = parse_graph6("Cl")
    assert c4.n == 4 and c4.num_edges() == 4
    assert c4.degrees() == [2, 2, 2, 2]


def test_write_known_records():
    assert write_graph6(complete(4)) == b"C~"
    assert write_graph6(Graph(1, (0,))) == b"@"


def test_optional_prefix_and_str_input():
    assert parse_graph6(">>graph6<<C~") == complete(4)
    assert parse_graph6(b"C~\n") == complete(4)


def test_rejects_bad_bytes():
    with pytest.raises(Graph6Error):
        parse_graph6("")
    with pytest.raises(Graph6Error):
        parse_graph6("C~!")
    with pytest.raises(Graph6Error):
        parse_graph6("C")  # truncated body
    with pytest.raises(Graph6Error):
        parse_graph6("C~~")  # excess body


def test_rejects_nonzero_padding():
    # n=2 needs 1 edge bit; set a padding bit too
    record = bytes([2 + 63, 0b011111 + 63])
    with pytest.raises(Graph6Error):
        parse_graph6(record)


def test_rejects_eight_byte_header():
    with pytest.raises(Graph6Error):
        parse_graph6(bytes([126, 126, 63, 63, 63, 63, 63, 63]))


def test_extended_header_round_trip():
    g = cycle(100)
    rec = write_graph6(g)
    assert rec[0] == 126 and len(rec) == 4 + (100 * 99 // 2 + 5) // 6
    assert parse_graph6(rec) == g


def test_round_trip_named_graphs():
    for g in (cycle(3), cycle(7), complete(9), petersen()):
        assert parse_graph6(write_graph6(g)) == g


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(min_value=1, max_value=max_n))
    bits = draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if (bits >> idx) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(adj))


@given(graphs())
def test_round_trip_is_identity(g):
    assert parse_graph6(write_graph6(g)) == g
