import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clustcolor.graph import GraphError, Society, complete_graph, cycle_graph, make_graph
from clustcolor.vortex import boundary_intervals, disjoint_paths, vortex_order_check

from conftest import graphs, random_graph, to_nx


def _nx_count(g, sources, sinks):
    """Vertex-disjoint path count via networkx node connectivity on an
    augmented graph."""
    h = to_nx(g)
    s, t = "s", "t"
    h.add_edges_from((s, x) for x in sources)
    h.add_edges_from((x, t) for x in sinks)
    if not sources or not sinks:
        return 0
    return nx.node_connectivity(h, s, t)


def _check_paths(g, paths, sources, sinks):
    used = set()
    for p in paths:
        assert p[0] in sources and p[-1] in sinks
        for a, b in zip(p, p[1:]):
            assert g.has_edge(a, b)
        assert not used & set(p)
        used |= set(p)


@settings(max_examples=150)
@given(graphs(min_n=2, max_n=10), st.data())
def test_disjoint_paths_match_networkx(g, data):
    vs = list(range(g.n))
    sources = data.draw(st.sets(st.sampled_from(vs), min_size=1))
    sinks = data.draw(st.sets(st.sampled_from(vs), min_size=1))
    paths = disjoint_paths(g, sources, sinks)
    _check_paths(g, paths, sources, sinks)
    assert len(paths) == _nx_count(g, sources, sinks)


def test_shared_endpoint_is_a_trivial_path():
    g = make_graph(3, [(0, 1), (1, 2)])
    assert disjoint_paths(g, [1], [1]) == [[1]]
    # any 0-2 route needs vertex 1, already used by the trivial path
    assert disjoint_paths(g, [0, 1], [1, 2]) == [[1]]
    h = make_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert disjoint_paths(h, [0, 1], [1, 2]) == [[0, 2], [1]]


def test_boundary_intervals():
    omega = (10, 11, 12, 13, 14)
    assert boundary_intervals(omega, 0, 2) == ([11], [13, 14])
    assert boundary_intervals(omega, 3, 1) == ([14, 10], [12])


def test_path_society():
    soc = Society(make_graph(3, [(0, 1), (1, 2)]), (0, 2))
    assert vortex_order_check(soc, 1).holds
    rep = vortex_order_check(soc, 0)
    assert not rep.holds
    assert (rep.u, rep.v, rep.paths) == (0, 2, ((0, 1, 2),))


def test_k4_witness():
    rep = vortex_order_check(Society(complete_graph(4), (0, 1, 2, 3)), 1)
    assert not rep.holds
    assert (rep.u, rep.v) == (0, 2)
    assert rep.paths == ((0, 2), (1, 3))
    assert vortex_order_check(Society(complete_graph(4), (0, 1, 2, 3)), 2).holds


def test_cycle_boundary():
    g = cycle_graph(6)
    soc = Society(g, tuple(range(6)))
    assert not vortex_order_check(soc, 1).holds
    assert vortex_order_check(soc, 3).holds


def test_rejects_bad_arguments():
    soc = Society(cycle_graph(4), (0,))
    with pytest.raises(GraphError):
        vortex_order_check(soc, 1)
    with pytest.raises(ValueError):
        vortex_order_check(Society(cycle_graph(4), (0, 1)), -1)


def test_monotone_in_rho():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(3, 9)
        g = random_graph(n, 0.4, rng)
        omega = tuple(rng.sample(range(n), rng.randint(2, n)))
        soc = Society(g, omega)
        verdicts = [vortex_order_check(soc, rho).holds for rho in range(0, n + 1)]
        assert verdicts == sorted(verdicts)
        assert verdicts[-1]
        first = verdicts.index(True)
        assert vortex_order_check(soc, first).max_paths == first
