import pytest

from fourmaps import RootedMap

# 1-based edges (1,10)(2,12)(3,5)(4,7)(6,8)(9,11) shifted to 0-based darts
FIGURE_PAIRS = [(0, 9), (1, 11), (2, 4), (3, 6), (5, 7), (8, 10)]


@pytest.fixture
def figure_map():
    return RootedMap.from_pairs(12, FIGURE_PAIRS)


@pytest.fixture
def torus_map():
    return RootedMap.from_alpha(4, [2, 3, 0, 1])


@pytest.fixture
def edge_tree():
    return RootedMap.from_alpha(2, [1, 0])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
