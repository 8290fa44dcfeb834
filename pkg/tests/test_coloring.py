import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clustcolor.coloring import (BudgetExceeded, Coloring, Predicate, canonical_count,
                                 check_recolor_bound, exact_min_max_mono,
                                 forall_colorings_check, mono_components, td_two_coloring)
from clustcolor.decomp import DecompositionError, TreeDecomposition
from clustcolor.graph import (complete_graph, component_diameter, components, cycle_graph,
                              make_graph, max_degree, path_graph, triangular_grid)
from clustcolor.treewidth import SizeLimitError, heuristic_td

from conftest import BACKENDS, graphs, random_graph, to_nx
from oracles import all_colorings, brute_min_max, max_mono


@st.composite
def colored_graphs(draw, max_n=9, max_k=3):
    g = draw(graphs(max_n=max_n))
    k = draw(st.integers(1, max_k))
    colors = tuple(draw(st.lists(st.integers(1, k), min_size=g.n, max_size=g.n)))
    return g, Coloring(k, colors)


@given(colored_graphs())
def test_mono_components_partition(gc):
    g, c = gc
    rep = mono_components(g, c)
    seen = sorted(v for _, vs in rep.components for v in vs)
    assert seen == list(range(g.n))
    h = to_nx(g)
    for color, vs in rep.components:
        assert all(c.colors[v] == color for v in vs)
        assert nx.is_connected(h.subgraph(vs))
        # maximal: no same-coloured neighbour outside
        assert all(c.colors[w] != color for v in vs for w in g.adj[v] if w not in vs)
    firsts = [vs[0] for _, vs in rep.components]
    assert firsts == sorted(firsts)
    assert rep.max_size == max((len(vs) for _, vs in rep.components), default=0)


def test_coloring_validation():
    with pytest.raises(ValueError):
        Coloring(2, (1, 3))
    with pytest.raises(ValueError):
        Coloring(0, ())
    with pytest.raises(ValueError):
        mono_components(path_graph(3), Coloring(2, (1, 2)))
    c = Coloring(3, (1, 3, 2))
    assert Coloring.from_dict(c.to_dict()) == c


def test_predicate_parsing():
    assert Predicate.parse("size:3") == Predicate("size", 3)
    assert Predicate.parse("diam:2") == Predicate("diameter", 2)
    assert str(Predicate("diameter", 2)) == "diameter>2"
    for bad in ("size", "size:x", "color:3"):
        with pytest.raises(ValueError):
            Predicate.parse(bad)


def _canonical_brute(n, k):
    count = 0
    for col in all_colorings(n, k):
        firsts = [col.index(c) for c in sorted(set(col))]
        if firsts == sorted(firsts) and sorted(set(col)) == list(range(1, len(set(col)) + 1)):
            count += 1
    return count


@pytest.mark.parametrize("n,k", [(1, 1), (4, 2), (5, 3), (6, 4), (3, 5)])
def test_canonical_count_matches_enumeration(n, k):
    assert canonical_count(n, k) == _canonical_brute(n, k)


def test_canonical_count_hex4():
    assert canonical_count(16, 2) == 2 ** 15


@settings(max_examples=80)
@given(graphs(max_n=7), st.integers(1, 3), st.data())
def test_exact_min_max_matches_brute_force(g, k, data):
    pre = {}
    if g.n:
        pre = data.draw(st.dictionaries(st.integers(0, g.n - 1), st.integers(1, k), max_size=3))
    for be in BACKENDS:
        best, witness = exact_min_max_mono(g, k, pre, backend=be)
        assert best == (brute_min_max(g, k, pre) if g.n else 0)
        assert max_mono(g, witness.colors) == best if g.n else True
        assert all(witness.colors[v] == c for v, c in pre.items())
        # lexicographically least optimal colouring
        lex = next((col for col in all_colorings(g.n, k)
                    if all(col[v] == c for v, c in pre.items()) and max_mono(g, col) <= best),
                   ())
        assert witness.colors == tuple(lex)


@settings(max_examples=40)
@given(graphs(min_n=1, max_n=8))
def test_min_max_nonincreasing_in_k(g):
    values = [exact_min_max_mono(g, k)[0] for k in range(1, g.n + 1)]
    assert values == sorted(values, reverse=True)
    assert values[-1] == 1


def test_min_max_examples():
    best, w = exact_min_max_mono(complete_graph(4), 2)
    assert best == 2 and w.colors == (1, 1, 2, 2)
    assert exact_min_max_mono(triangular_grid(3), 2)[0] == 3
    assert exact_min_max_mono(cycle_graph(5), 2)[0] == 2
    with pytest.raises(SizeLimitError):
        exact_min_max_mono(path_graph(17), 2)
    with pytest.raises(ValueError):
        exact_min_max_mono(path_graph(3), 2, {0: 3})


@settings(max_examples=80)
@given(graphs(min_n=1, max_n=7), st.integers(1, 3), st.sampled_from(["size", "diameter"]),
       st.integers(1, 4))
def test_forall_matches_brute_force(g, k, kind, value):
    pred = Predicate(kind, value)

    def meets(col):
        for c in set(col):
            for comp in components(g, [v for v in range(g.n) if col[v] == c]):
                if (len(comp) >= value if kind == "size"
                        else component_diameter(g, comp) > value):
                    return True
        return False

    counter = next((col for col in all_colorings(g.n, k) if not meets(col)), None)
    res = forall_colorings_check(g, k, pred)
    assert res.holds == (counter is None)
    if counter is not None:
        assert res.witness.colors == counter


@given(graphs(min_n=1, max_n=9), st.integers(1, 3))
def test_size_one_always_holds(g, k):
    assert forall_colorings_check(g, k, Predicate("size", 1)).holds


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded) as info:
        forall_colorings_check(triangular_grid(4), 2, Predicate("size", 4), budget=2 ** 15 - 1)
    assert info.value.count == 2 ** 15
    assert forall_colorings_check(triangular_grid(4), 2, Predicate("size", 4),
                                  budget=2 ** 15).holds


def test_thread_count_does_not_change_answers():
    rng = random.Random(9)
    for _ in range(25):
        g = random_graph(rng.randint(4, 11), 0.35, rng)
        k = rng.choice([2, 3])
        pred = Predicate(rng.choice(["size", "diameter"]), rng.randint(2, 4))
        a = forall_colorings_check(g, k, pred, threads=1)
        b = forall_colorings_check(g, k, pred, threads=4)
        assert a == b
        assert exact_min_max_mono(g, k, threads=1) == exact_min_max_mono(g, k, threads=4)


# --- recolouring ---------------------------------------------------------------


def _recolor_instance(rng, n_max=40, delta_max=5, z_max=5):
    n = rng.randint(1, n_max)
    deg = [0] * n
    edges = []
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < 3 / n and deg[u] < delta_max and deg[v] < delta_max:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    g = make_graph(n, edges)
    k = rng.randint(1, 3)
    base = Coloring(k, tuple(rng.randint(1, k) for _ in range(n)))
    k_size = mono_components(g, base).max_size
    z = rng.sample(range(n), rng.randint(0, min(z_max, n)))
    new = list(base.colors)
    for v in z:
        new[v] = rng.randint(1, k)
    return g, base, k_size, z, Coloring(k, tuple(new))


@settings(max_examples=200)
@given(st.integers(0, 2 ** 32))
def test_recolor_bound_holds(seed):
    g, base, k_size, z, new = _recolor_instance(random.Random(seed))
    rep = check_recolor_bound(g, base, k_size, z, new)
    assert rep.passed
    assert rep.budget == len(z) * (max_degree(g) * k_size + 1)


def test_recolor_preconditions():
    g = path_graph(4)
    base = Coloring(2, (1, 1, 2, 2))
    with pytest.raises(ValueError, match="outside Z"):
        check_recolor_bound(g, base, 2, [0], Coloring(2, (2, 1, 1, 2)))
    with pytest.raises(ValueError, match="larger than"):
        check_recolor_bound(g, base, 1, [0], base)
    rep = check_recolor_bound(g, base, 2, [1], Coloring(2, (1, 2, 2, 2)))
    assert rep.union_size == 3 and rep.budget == 1 * (2 * 2 + 1) and rep.passed


# --- layered 2-colouring -------------------------------------------------------


@given(graphs(min_n=2, max_n=12, max_degree=4))
def test_td_two_coloring_is_total(g):
    if not g.edges:
        with pytest.raises(ValueError):
            td_two_coloring(g, heuristic_td(g))
        return
    col, rep = td_two_coloring(g, heuristic_td(g))
    assert col.k == 2 and len(col.colors) == g.n
    assert set(col.colors) <= {1, 2}
    assert rep.max_component == mono_components(g, col).max_size
    assert rep.bound == 24 * rep.width * rep.max_degree
    assert rep.passed == (rep.max_component <= rep.bound)


def test_td_two_coloring_path():
    g = path_graph(10)
    td = TreeDecomposition.path([{i, i + 1} for i in range(9)])
    col, rep = td_two_coloring(g, td)
    # vertices 0 and 1 both first appear in the root bag
    assert col.colors == (1, 1, 2, 1, 2, 1, 2, 1, 2, 1)
    assert rep.max_component == 2 and rep.block_size == 1 and rep.bound == 48


def test_td_two_coloring_rejects_invalid_td():
    with pytest.raises(DecompositionError):
        td_two_coloring(path_graph(3), TreeDecomposition.path([{0, 1}]))
