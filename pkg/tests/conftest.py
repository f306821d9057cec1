from itertools import combinations

import pytest
from hypothesis import strategies as st

from localizability import build_network


def complete_network(n, anchors):
    return build_network(combinations(range(n), 2), anchors, n)


@pytest.fixture
def k4():
    """Three mutually adjacent anchors plus one agent adjacent to all of them."""
    return complete_network(4, {0, 1, 2})


@st.composite
def networks(draw, min_nodes=1, max_nodes=10):
    n = draw(st.integers(min_nodes, max_nodes))
    pairs = list(combinations(range(n), 2))
    edges = [p for p, keep in zip(pairs, draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))) if keep]
    anchors = draw(st.sets(st.integers(0, n - 1), max_size=min(n, 5))) if n else set()
    return build_network(edges, anchors, n)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
