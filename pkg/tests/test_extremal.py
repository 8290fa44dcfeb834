import random

import pytest

from clustcolor.coloring import exact_min_max_mono
from clustcolor.extremal import (GadgetParams, SizeCapExceeded, build_gadget, build_line_family,
                                 gadget_size, hex_check, tree_nodes, verify_gadget,
                                 verify_line_family)
from clustcolor.graph import (GraphError, complete_graph, cycle_graph, girth, is_regular,
                              max_degree, path_graph, petersen_graph,
                              triangular_grid)
from clustcolor.treewidth import exact_treewidth


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_hex_holds(k):
    res = hex_check(k)
    assert res.holds and res.witness is None


def test_hex_canonical_counts():
    assert [hex_check(k).canonical_colorings for k in range(1, 5)] == [1, 8, 256, 2 ** 15]


@pytest.mark.parametrize("k", [2, 3, 4])
def test_hex_is_tight(k):
    # some 2-colouring keeps every component at exactly k vertices
    assert exact_min_max_mono(triangular_grid(k), 2)[0] == k


def test_tree_nodes():
    assert tree_nodes(3, 0) == 1
    assert tree_nodes(3, 1) == 4
    assert tree_nodes(2, 2) == 7


def test_gadget_level_one_is_path():
    assert build_gadget(GadgetParams(1, 3)) == path_graph(5)
    assert build_gadget(GadgetParams(1, 3, base_path_length=3)) == path_graph(3)


def test_gadget_level_two_structure():
    g = build_gadget(GadgetParams(2, 1))
    assert g.n == 13 == gadget_size(GadgetParams(2, 1))
    apex = 12
    assert sorted(g.adj[apex]) == [0, 1, 2]
    # vertex j of the root copy sees the whole copy on child j+1
    assert sorted(g.adj[0]) == [1, 3, 4, 5, 12]
    assert sorted(g.adj[2]) == [1, 9, 10, 11, 12]
    assert exact_treewidth(g).width == 2


@pytest.mark.parametrize("level,d", [(1, 1), (1, 2), (1, 3), (2, 1)])
def test_gadget_treewidth_at_most_level(level, d):
    assert exact_treewidth(build_gadget(GadgetParams(level, d))).width <= level


@pytest.mark.parametrize("level,d", [(1, 1), (1, 2), (1, 3), (2, 1)])
def test_gadget_verifies(level, d):
    assert verify_gadget(build_gadget(GadgetParams(level, d)), level, d).holds


def test_literal_base_length_fails_at_level_one():
    # a path on d vertices has diameter d - 1
    g = build_gadget(GadgetParams(1, 3, base_path_length=3))
    res = verify_gadget(g, 1, 3)
    assert not res.holds and res.witness.colors == (1, 1, 1)


def test_gadget_size_cap():
    p = GadgetParams(3, 2)
    with pytest.raises(SizeCapExceeded) as info:
        build_gadget(p)
    assert info.value.predicted == gadget_size(p) > 5000
    with pytest.raises(SizeCapExceeded):
        build_gadget(GadgetParams(2, 2, size_cap=50))
    with pytest.raises(GraphError):
        build_gadget(GadgetParams(0, 1))


def test_verify_is_relabel_invariant():
    rng = random.Random(4)
    g = build_gadget(GadgetParams(2, 1))
    for _ in range(3):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert verify_gadget(g.relabel(perm), 2, 1).holds
    lg = build_line_family(1, 5, base=cycle_graph(5)).graph
    perm = [4, 2, 0, 3, 1]
    assert verify_line_family(lg.relabel(perm), 1, 5).holds


def test_line_family_c5():
    fam = build_line_family(1, 5, base=cycle_graph(5))
    assert is_regular(fam.graph, 2)
    assert verify_line_family(fam.graph, 1, 5).holds
    assert not verify_line_family(fam.graph, 1, 6).holds


def test_line_family_k5():
    fam = build_line_family(2, 3, base=complete_graph(5))
    assert fam.graph.n == 10 and is_regular(fam.graph, 6)
    assert fam.provenance["base_girth"] == 3
    assert verify_line_family(fam.graph, 2, 3).holds


@pytest.mark.parametrize("k,N", [(1, 3), (1, 7), (2, 4), (2, 5), (3, 3)])
def test_line_family_degree(k, N):
    fam = build_line_family(k, N, seed=1)
    assert is_regular(fam.base, 2 * k) and girth(fam.base) >= N
    assert max_degree(fam.graph) == 4 * k - 2 and is_regular(fam.graph, 4 * k - 2)


def test_line_family_rejects_bad_base():
    with pytest.raises(GraphError):
        build_line_family(2, 3, base=petersen_graph())
    with pytest.raises(GraphError):
        build_line_family(1, 6, base=cycle_graph(5))
