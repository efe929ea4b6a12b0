from __future__ import annotations

from functools import lru_cache

import networkx as nx
import pytest
from hypothesis import strategies as st

from barnette4.alpha_generator import octahedron, random_instance
from barnette4.planar_core import PlanarGraph, build_graph, dual_graph

ACCEPTANCE_KEY = pytest.StashKey[list]()


def from_networkx(nxg: nx.Graph) -> PlanarGraph:
    """Rotation system from networkx's planar embedding, relabelled to 1..n."""
    ok, emb = nx.check_planarity(nxg)
    assert ok
    ids = {v: i + 1 for i, v in enumerate(sorted(nxg.nodes))}
    return build_graph({ids[v]: [ids[w] for w in emb.neighbors_cw_order(v)] for v in nxg.nodes})


def to_networkx(g: PlanarGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


@lru_cache(maxsize=None)
def cached_instance(ops: int, seed: int):
    return random_instance(ops, seed)


# small generated instances; ops <= 10 keeps |G| <= 26
instance_params = st.tuples(st.integers(0, 10), st.integers(0, 2**32 - 1))


@pytest.fixture
def oct_fixed():
    return octahedron()


@pytest.fixture
def octa():
    return octahedron()[0]


@pytest.fixture
def cube():
    return dual_graph(octahedron()[0])[0]


@pytest.fixture
def k4():
    return build_graph({1: [2, 3, 4], 2: [1, 4, 3], 3: [1, 2, 4], 4: [1, 3, 2]})


@pytest.fixture
def c4():
    return build_graph({1: [2, 4], 2: [3, 1], 3: [4, 2], 4: [1, 3]})


@pytest.fixture
def icosahedron():
    return from_networkx(nx.icosahedral_graph())


@pytest.fixture
def dodecahedron():
    return from_networkx(nx.dodecahedral_graph())


@pytest.fixture
def acceptance_report(request):
    return request.config.stash.setdefault(ACCEPTANCE_KEY, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
