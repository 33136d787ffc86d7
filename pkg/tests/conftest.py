import pytest

from coalitions import Graph, complete, cycle, from_edges, petersen

# K_{2,3} and C_5 plus one chord: the two landmark subcubic instances
K23_EDGES = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
C5_CHORD_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]


@pytest.fixture
def c4() -> Graph:
    return cycle(4)


@pytest.fixture
def k4() -> Graph:
    return complete(4)


@pytest.fixture
def k5() -> Graph:
    return complete(5)


@pytest.fixture
def pete() -> Graph:
    return petersen()


@pytest.fixture
def k23() -> Graph:
    return from_edges(5, K23_EDGES)


@pytest.fixture
def c5_chord() -> Graph:
    return from_edges(5, C5_CHORD_EDGES)
