"""Corpus generators and enumerations used by the verification suite."""

from random import Random

from graphchomp.corpus import (
    cycle_with_trees,
    disjoint_union,
    path_multisets,
    random_bipartite,
    random_graph,
    rooted_trees,
    subgraph_positions,
    tree_size,
)
from graphchomp.graph import build_graph, is_bipartite


def test_rooted_tree_counts():
    # the classic rooted-tree counting sequence
    assert [len(rooted_trees(n)) for n in range(1, 8)] == [1, 1, 2, 4, 9, 20, 48]


def test_rooted_tree_sizes():
    for n in range(1, 7):
        assert all(tree_size(code) == n for code in rooted_trees(n))


def _all_children_distinct(code):
    if len(set(code)) != len(code):
        return False
    return all(_all_children_distinct(c) for c in code)


def test_distinct_children_variant():
    for n in range(1, 8):
        for code in rooted_trees(n, distinct_children=True):
            assert _all_children_distinct(code)
    # the twin-leaf star is excluded, the path is not
    assert len(rooted_trees(3, distinct_children=True)) == 1


def test_cycle_with_trees_shape():
    G = cycle_with_trees([(((),),)], cycle_len=5)  # a 2-edge path hung at 0
    assert G.n == 7 and G.edge_count == 7
    assert G.degree(0) == 3


def test_path_multisets():
    ms = list(path_multisets(3))
    assert ms == [(), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]
    assert all(len(p) <= 2 for p in path_multisets(4, max_parts=2))


def test_subgraph_positions_triangle():
    tri = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    reps = list(subgraph_positions(tri))
    # empty, K1, 2K1, K2, 3K1, K2+K1, path, triangle
    assert len(reps) == 8
    assert sum(count for _, count in reps) == 18


def test_subgraph_positions_budget():
    import pytest
    from graphchomp.engine import BudgetExhausted

    tri = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(BudgetExhausted):
        list(subgraph_positions(tri, budget=5))


def test_random_bipartite_is_bipartite():
    rng = Random(77)
    assert all(is_bipartite(random_bipartite(rng)) for _ in range(300))


def test_random_graph_bounds():
    rng = Random(78)
    for _ in range(200):
        G = random_graph(rng, max_vertices=6, max_edges=5)
        assert G.n <= 6 and G.edge_count <= 5


def test_disjoint_union_counts():
    a = build_graph(2, [(0, 1)])
    b = build_graph(1, [(0, 0)])
    u = disjoint_union(a, b)
    assert u.n == 3 and u.edges == ((0, 1, 1),) and u.loops == ((2, 1),)
