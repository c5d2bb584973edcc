import sys

import pytest

from bei.constructions import build_named
from bei.graph import validate_graph


@pytest.fixture(autouse=True)
def _no_cache(monkeypatch):
    # tests opt into the on-disk cache explicitly
    monkeypatch.delenv("BEI_CACHE_DIR", raising=False)


@pytest.fixture
def H():
    return build_named("H")


@pytest.fixture
def P3():
    return build_named("P3")


@pytest.fixture
def P5():
    return build_named("P5")


@pytest.fixture
def T3():
    return build_named("T3")


def diamond():
    """Two triangles sharing the edge {2, 3}."""
    return validate_graph(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])


def cycle(n):
    return validate_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])



def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "LINES", None)
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
