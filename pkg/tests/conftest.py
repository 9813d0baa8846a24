import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from alexgroups.poset import Poset, poset_from_pairs  # noqa: E402


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow exhaustive checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@st.composite
def posets(draw, max_size=8):
    """Random finite posets: a random DAG on a shuffled carrier, closed up."""
    k = draw(st.integers(1, max_size))
    perm = draw(st.permutations(range(k)))
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            if draw(st.booleans()):
                edges.append((perm[i], perm[j]))
    return poset_from_pairs(k, edges)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok in sorted(results):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}")
