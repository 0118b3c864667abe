import pytest

from extremal_betti import Instance, new_graph

WORKED_EDGES = [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7)]


def graph(n, *edges):
    return new_graph(n, edges)


@pytest.fixture
def worked_graph():
    """Two triangles sharing edge 23, with a tail 4-5-6-7; vertex 8 isolated."""
    return new_graph(8, WORKED_EDGES)


@pytest.fixture
def worked(worked_graph):
    return lambda a, b: Instance(8, a, b, worked_graph)


_CRITERIA: list[str] = []


def record_criterion(line: str) -> None:
    _CRITERIA.append(line)


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERIA):
            terminalreporter.write_line(line)
