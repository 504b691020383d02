import sys

import pytest

from cograph_hc import Graph, exhaustive_cographs


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def small_cographs():
    """All labeled cographs on 1..5 vertices (1+2+8+52+472 graphs)."""
    out = []
    for n in range(1, 6):
        out.extend(exhaustive_cographs(n))
    return out


@pytest.fixture(scope="session")
def k2_k1_k1():
    """One edge a-b plus two isolated vertices c, d; chi = 2."""
    return Graph(4, [(0, 1)], names=("a", "b", "c", "d"))


@pytest.fixture
def coloring_a():
    """Greedy coloring of k2_k1_k1 from the order a,b,c,d."""
    return {0: 1, 1: 2, 2: 1, 3: 1}


@pytest.fixture
def coloring_b():
    """hc but not greedy: the two singleton components differ in color."""
    return {0: 1, 1: 2, 2: 1, 3: 2}
