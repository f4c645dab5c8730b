"""Multigraph construction, moves, components, parity, text format."""

import pytest
from hypothesis import given, strategies as st

from graphchomp.graph import (
    DeleteEdge,
    DeleteVertex,
    GraphInputError,
    apply_move,
    build_graph,
    components,
    components_with_vertices,
    format_graph,
    is_bipartite,
    parse_graph,
    phi,
)

TRIANGLE = [(0, 1), (1, 2), (2, 0)]


@st.composite
def graphs(draw, max_n=8, max_edges=12):
    n = draw(st.integers(0, max_n))
    if n == 0:
        return build_graph(0)
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    return build_graph(n, draw(st.lists(pairs, max_size=max_edges)))


def test_build_empty():
    G = build_graph(0)
    assert G.n == 0 and G.edge_count == 0


def test_build_triangle():
    G = build_graph(3, TRIANGLE)
    assert G.n == 3 and G.edge_count == 3
    assert G.degrees() == (2, 2, 2)


def test_build_loop_vertex():
    G = build_graph(1, [(0, 0)])
    assert G.loops == ((0, 1),)
    assert G.degree(0) == 2


def test_build_rejects_bad_endpoint():
    with pytest.raises(GraphInputError):
        build_graph(2, [(0, 2)])


def test_parallel_edges_accumulate():
    G = build_graph(2, [(0, 1), (1, 0), (0, 1)])
    assert G.edges == ((0, 1, 3),)
    assert G.edge_count == 3


def test_apply_move_vertex_compacts():
    G = build_graph(3, TRIANGLE)
    H = apply_move(G, DeleteVertex(1))
    assert H == build_graph(2, [(0, 1)])


def test_apply_move_edge_instances():
    G = build_graph(3, TRIANGLE)
    H = apply_move(G, DeleteEdge(0, 1))
    assert H.n == 3 and H.edge_count == 2


def test_apply_move_loop():
    G = build_graph(1, [(0, 0)])
    assert apply_move(G, DeleteEdge(0, 0)) == build_graph(1)


def test_apply_move_missing_target():
    G = build_graph(2, [(0, 1)])
    with pytest.raises(GraphInputError):
        apply_move(G, DeleteVertex(5))
    with pytest.raises(GraphInputError):
        apply_move(G, DeleteEdge(0, 1, instance=1))


def test_components():
    assert components(build_graph(0)) == []
    G = build_graph(4, TRIANGLE)  # triangle plus isolated vertex
    comps = components(G)
    assert sorted(c.n for c in comps) == [1, 3]
    pieces = components_with_vertices(G)
    assert [vs for _, vs in pieces] == [(0, 1, 2), (3,)]


def test_components_single_connected():
    G = build_graph(3, TRIANGLE)
    assert components(G) == [G]


@pytest.mark.parametrize("edges, expect", [
    ([(0, 1), (1, 2), (2, 3)], True),         # tree
    (TRIANGLE, False),                          # odd cycle
    ([(0, 1), (0, 1)], True),                   # parallel pair is fine
    ([(0, 1), (1, 2), (2, 3), (3, 0)], True),   # even cycle
])
def test_is_bipartite(edges, expect):
    n = max(max(e) for e in edges) + 1
    assert is_bipartite(build_graph(n, edges)) is expect


def test_loop_breaks_bipartiteness():
    assert not is_bipartite(build_graph(1, [(0, 0)]))


def test_phi_examples():
    assert phi(build_graph(0)) == 0
    # a tree always has phi = (|E| mod 2) + 1, the value of the position
    five_edges = build_graph(6, [(i, i + 1) for i in range(5)])
    assert phi(five_edges) == 2
    four_edges = build_graph(5, [(i, i + 1) for i in range(4)])
    assert phi(four_edges) == 1
    assert phi(build_graph(3, TRIANGLE)) == 3


@given(graphs())
def test_moves_make_strict_progress(G):
    for v in range(G.n):
        H = apply_move(G, DeleteVertex(v))
        assert H.size < G.size
    for u, v, _ in G.edges:
        assert apply_move(G, DeleteEdge(u, v)).size < G.size
    for v, _ in G.loops:
        assert apply_move(G, DeleteEdge(v, v)).size < G.size


@given(graphs(max_n=5, max_edges=7), graphs(max_n=5, max_edges=7))
def test_phi_xor_over_disjoint_union(G, H):
    from graphchomp.corpus import disjoint_union

    assert phi(disjoint_union(G, H)) == phi(G) ^ phi(H)


@given(graphs())
def test_bipartite_means_no_loops_or_odd_cycles(G):
    if not is_bipartite(G):
        return
    assert not G.loops
    # explicit 2-coloring check over every edge
    color = {}
    adj = G.adjacency()
    for start in range(G.n):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for y, _ in adj[x]:
                if y not in color:
                    color[y] = color[x] ^ 1
                    stack.append(y)
    assert all(color[u] != color[v] for u, v, _ in G.edges)


# --- text format ---------------------------------------------------------------

def test_format_round_trip():
    G = build_graph(4, TRIANGLE + [(0, 0), (1, 2)])
    assert parse_graph(format_graph(G)) == G


def test_parse_comments_and_loops():
    text = "# a triangle with a loop\nv 3\ne 0 1\ne 1 2\ne 2 0\ne 2 2  # loop\n"
    G = parse_graph(text)
    assert G.loops == ((2, 1),)


@pytest.mark.parametrize("bad, fragment", [
    ("e 0 1\n", "before 'v'"),
    ("v 2\nv 3\n", "duplicate"),
    ("v 2\nedge 0 1\n", "unrecognized"),
    ("v 2\ne 0 5\n", "out of range"),
    ("v two\n", "expected 'v N'"),
    ("", "missing 'v N'"),
])
def test_parse_rejects_garbage(bad, fragment):
    with pytest.raises(GraphInputError) as err:
        parse_graph(bad)
    assert fragment in str(err.value)


def test_parse_error_names_line_number():
    with pytest.raises(GraphInputError) as err:
        parse_graph("v 3\ne 0 1\ne 9 9\n")
    assert ":3:" in str(err.value)
