import pytest

from chromabij.graph import Graph
from chromabij.verify import FIG1, enumerate_graphs

# running example: u=0, v=1, w=2, x=3; e1=uw, e2=uv, e3=vw, e4=vx
U, V, W, X = 0, 1, 2, 3
E1, E2, E3, E4 = 0, 1, 2, 3


@pytest.fixture
def fig1() -> Graph:
    return FIG1


def triangle() -> Graph:
    return Graph(3, ((0, 1), (0, 2), (1, 2)))


def k2() -> Graph:
    return Graph(2, ((0, 1),))


def path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def graphs_upto(n_max: int):
    for n in range(1, n_max + 1):
        yield from enumerate_graphs(n)


# acceptance lines, printed at the end of the run whatever the capture mode
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
