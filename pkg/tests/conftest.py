import itertools
import random

import networkx as nx
import pytest

from sunfinder import families as F
from sunfinder.graph import Graph, from_edges


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def brute_triangles(G: Graph):
    return [t for t in itertools.combinations(range(G.n), 3)
            if G.has_edge(t[0], t[1]) and G.has_edge(t[0], t[2]) and G.has_edge(t[1], t[2])]


def small_random_graphs(count, n_range=(1, 9), seed=0):
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(*n_range)
        yield F.random_gnp(n, rng.choice([0.2, 0.4, 0.6, 0.8]), seed * 100003 + i)


@pytest.fixture(scope="session")
def catalog7():
    return F.catalog(7, connected=True)


@pytest.fixture(scope="session")
def catalog8():
    return F.catalog(8, connected=True)


@pytest.fixture
def three_sun():
    return F.sun(3)


@pytest.fixture
def house():
    return F.house()


STRONGLY_CHORDAL_FIXTURES = {
    "K1": F.complete(1),
    "K4": F.complete(4),
    "P5": F.path(5),
    "star5": F.star(5),
    "tree": from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]),
    "fan": from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]),
    "interval": from_edges(6, [(0, 1), (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]),
    "K4-minus-edge": from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
}


# one pass/fail line per acceptance criterion, printed in the terminal summary
ACCEPTANCE: dict[int, str] = {}


def record(criterion: int, ok: bool, detail: str) -> None:
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'} ({detail})"
    ACCEPTANCE[criterion] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[key])
