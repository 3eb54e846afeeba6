import pytest

from dmtool.matroid import fano, graphic, uniform

SIX_VERTICES = (1, 2, 3, 4)
SIX_EDGES = [(1, 1, 1), (2, 1, 3), (3, 2, 1), (4, 3, 2), (5, 3, 4), (6, 4, 3)]

DIAMOND_VERTICES = (1, 2, 3, 4)
DIAMOND_EDGES = [(1, 1, 4), (2, 4, 3), (3, 3, 2), (4, 2, 1), (5, 4, 2)]

K4_EDGES = [(1, 1, 2), (2, 1, 3), (3, 1, 4), (4, 2, 3), (5, 2, 4), (6, 3, 4)]


def sets(*words):
    """'235' -> {2, 3, 5}; '' -> empty set."""
    return [frozenset(int(c) for c in w) for w in words]


@pytest.fixture
def six():
    return graphic(SIX_VERTICES, SIX_EDGES)


@pytest.fixture
def diamond():
    return graphic(DIAMOND_VERTICES, DIAMOND_EDGES)


@pytest.fixture
def f7():
    return fano()


@pytest.fixture
def k4():
    return graphic((1, 2, 3, 4), K4_EDGES)


def binary_fixtures():
    return {
        "six": graphic(SIX_VERTICES, SIX_EDGES),
        "diamond": graphic(DIAMOND_VERTICES, DIAMOND_EDGES),
        "fano": fano(),
        "fano*": fano().dual(),
        "k4": graphic((1, 2, 3, 4), K4_EDGES),
        "u23": uniform(2, 3),
    }


def quaternary_fixtures():
    return {"u25": uniform(2, 5), "u35": uniform(3, 5), "u24": uniform(2, 4)}


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in range(1, 13):
        # a criterion with no line crashed before reaching its checks
        terminalreporter.write_line(mod.RESULTS.get(n, f"FAIL criterion {n}: did not complete"))
