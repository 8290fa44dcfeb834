import random

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from clustcolor import kernels
from clustcolor.graph import Graph, make_graph

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

BACKENDS = sorted(kernels.BACKENDS)


@st.composite
def graphs(draw, min_n=1, max_n=8, max_degree=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    if max_degree is not None:
        deg = [0] * n
        kept = []
        for u, v in chosen:
            if deg[u] < max_degree and deg[v] < max_degree:
                kept.append((u, v))
                deg[u] += 1
                deg[v] += 1
        chosen = kept
    return make_graph(n, chosen)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param
