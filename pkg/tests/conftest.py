import pytest

from turan_forge import build_graph, derive_params

GRID = [(2, 3), (2, 5), (2, 13), (2, 29), (2, 61), (4, 7), (4, 13), (4, 37), (6, 11), (6, 31), (8, 29)]
SMALL_GRID = [tp for tp in GRID if tp[1] <= 31]

_ACCEPTANCE_LINES = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def graph_cache():
    cache = {}

    def get(t, p):
        if (t, p) not in cache:
            cache[(t, p)] = build_graph(derive_params(t, p))
        return cache[(t, p)]

    return get
