import os
import sys

import pytest
from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from centrality_lab.graph import Graph  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    slots = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << slots) - 1)) if slots else 0
    return Graph.from_mask(n, mask)


@st.composite
def graphs_with_permutation(draw, min_n=1, max_n=7):
    g = draw(graphs(min_n, max_n))
    pi = draw(st.permutations(list(range(g.n))))
    return g, tuple(pi)


@pytest.fixture
def star5():
    return Graph(5, [(2, 0), (2, 1), (2, 3), (2, 4)])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
