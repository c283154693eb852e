from fractions import Fraction

import pytest

from lexopt.harness import Instance
from lexopt.matching import WeightedGraph
from lexopt.matroid import PartitionMatroid

# (criterion, passed, detail) rows filled by test_acceptance.py
ACCEPTANCE_RESULTS = []


def path_graph(x):
    """The 3-edge path: e1 = {1,3}, e2 = {2,3}, e3 = {2,4} (vertices shifted to 0..3)."""
    return WeightedGraph(4, ((0, 2, 1), (1, 2, x), (1, 3, 1)))


def path_bipartite(x):
    """Same instance as two partition matroids (left ends {0,1}, right ends {2,3})."""
    m1 = PartitionMatroid(3, [[0], [1, 2]], [1, 1])
    m2 = PartitionMatroid(3, [[0, 1], [2]], [1, 1])
    return m1, m2, (Fraction(1), Fraction(x), Fraction(1))


@pytest.fixture
def graph_32():
    return path_graph(Fraction(3, 2))


@pytest.fixture
def graph_2():
    return path_graph(Fraction(2))


@pytest.fixture
def bipartite_32():
    return path_bipartite(Fraction(3, 2))


@pytest.fixture
def bipartite_2():
    return path_bipartite(Fraction(2))


@pytest.fixture
def abc_instance():
    """a:10, b:1, c:1 with blocks {a,b},{c} and {a,c},{b} (capacity 1)."""
    m1 = PartitionMatroid(3, [[0, 1], [2]], [1, 1])
    m2 = PartitionMatroid(3, [[0, 2], [1]], [1, 1])
    return Instance("intersection", (10, 1, 1), matroids=(m1, m2))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
