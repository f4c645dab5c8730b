"""Reductions: multiplicity parity, pendant cancellation, involutions."""

from random import Random

import pytest

from graphchomp.canon import canonical_key
from graphchomp.corpus import random_graph
from graphchomp.engine import grundy
from graphchomp.graph import build_graph
from graphchomp.reducer import (
    InvolutionError,
    apply_involution,
    cancel_once,
    pendant_pieces,
    reduce,
    reduce_with_log,
    simplify_multiedges,
)

TRIANGLE = [(0, 1), (1, 2), (2, 0)]


def test_simplify_double_edge():
    assert simplify_multiedges(build_graph(2, [(0, 1), (0, 1)])) == build_graph(2)


def test_simplify_triple_loop():
    G = build_graph(1, [(0, 0)] * 3)
    assert simplify_multiedges(G) == build_graph(1, [(0, 0)])


def test_simplify_leaves_simple_graphs_alone():
    G = build_graph(3, TRIANGLE)
    assert simplify_multiedges(G) is G


def test_simplify_idempotent():
    rng = Random(31)
    for _ in range(100):
        G = random_graph(rng)
        once = simplify_multiedges(G)
        assert simplify_multiedges(once) == once


def test_pendant_pieces_star():
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    pieces = pendant_pieces(star, 0)
    assert len(pieces) == 3
    assert len({p.piece_key for p in pieces}) == 1


def test_pendant_pieces_cycle_vertex():
    c5 = build_graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert pendant_pieces(c5, 0) == []


def test_pendant_piece_excludes_double_bridge():
    # a doubled connection is not a single bridge edge
    G = build_graph(2, [(0, 1), (0, 1)])
    assert pendant_pieces(G, 0) == []


def test_cancel_p3_to_k1():
    assert cancel_once(build_graph(3, [(0, 1), (1, 2)])) is not None
    assert reduce(build_graph(3, [(0, 1), (1, 2)])) == build_graph(1)


def test_cancel_triangle_none():
    assert cancel_once(build_graph(3, TRIANGLE)) is None


def test_cancel_two_matching_branches():
    # three matching branches at 0: one step cancels a pair, leaving one
    # branch, and the fixpoint collapses the remaining path too
    G = build_graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    one_step = cancel_once(G)
    assert one_step.n == 3 and one_step.edge_count == 2
    assert reduce(G) == build_graph(1)


def test_reduce_already_reduced_tree():
    G = build_graph(4, [(0, 1), (1, 2), (1, 3)])  # distinct-depth branches?
    # two leaves at vertex 1 cancel; spine survives
    assert reduce(G).n == 2
    H = build_graph(4, [(0, 1), (1, 2), (2, 3)])  # plain path, ends cancel at 1? no
    # P_4 has cancellation at no vertex: each inner vertex has two
    # non-isomorphic sides
    assert reduce(H) == H


def test_reduce_log_reports_anchors_in_input_labels():
    G = build_graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    # leaves 0 and 2 cancel at vertex 1; the surviving path then cancels at 3
    reduced, steps, mapping = reduce_with_log(G)
    assert [s.anchor for s in steps] == [1, 3]
    assert [s.piece_size for s in steps] == [1, 1]
    assert mapping == (3,)
    assert reduced.n == 1


def test_reduce_preserves_value(table):
    rng = Random(32)
    for _ in range(200):
        G = random_graph(rng)
        assert grundy(reduce(G), table) == grundy(G, table)


def test_reduce_confluent(table):
    rng = Random(33)
    for _ in range(120):
        G = random_graph(rng)
        a = reduce(G, order="first")
        b = reduce(G, order="last")
        assert canonical_key(a) == canonical_key(b)


def test_reduce_idempotent():
    rng = Random(34)
    for _ in range(120):
        G = random_graph(rng)
        R = reduce(G)
        assert reduce(R) == R


def test_reduced_tree_has_no_matching_sibling_subtrees():
    # on trees, a reduced graph has no vertex with two matching pendant pieces
    rng = Random(35)
    for _ in range(150):
        n = rng.randint(1, 9)
        edges = [(rng.randrange(v), v) for v in range(1, n)]
        T = build_graph(n, edges)
        R = reduce(T)
        for s in range(R.n):
            pieces = pendant_pieces(R, s)
            keys = [p.piece_key for p in pieces]
            assert len(keys) == len(set(keys))


# --- involutions ---------------------------------------------------------------

def _wheel(n):
    return build_graph(n + 1, [(0, i) for i in range(1, n + 1)]
                       + [(i, i % n + 1) for i in range(1, n + 1)])


def test_involution_wheel_reflection(table):
    w6 = _wheel(6)
    fixed = apply_involution(w6, [0, 1, 6, 5, 4, 3, 2])
    assert fixed.n == 3 and fixed.edge_count == 2  # a 2-edge path
    assert grundy(fixed, table) == grundy(w6, table) == 1


def test_involution_wheel_antipodal(table):
    w6 = _wheel(6)
    fixed = apply_involution(w6, [0, 4, 5, 6, 1, 2, 3])
    assert fixed == build_graph(1)
    assert grundy(fixed, table) == 1


def test_involution_identity():
    G = build_graph(4, TRIANGLE + [(0, 3)])
    assert apply_involution(G, [0, 1, 2, 3]) == G


def test_involution_validation_errors():
    G = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(InvolutionError, match="permutation"):
        apply_involution(G, [0, 0, 2, 3])
    with pytest.raises(InvolutionError, match="involution"):
        apply_involution(G, [1, 2, 0, 3])
    with pytest.raises(InvolutionError, match="automorphism"):
        apply_involution(build_graph(3, [(0, 1)]), [0, 2, 1])
    with pytest.raises(InvolutionError, match="adjacent"):
        apply_involution(G, [1, 0, 3, 2])


def test_involution_preserves_value(table):
    # swap two matching pendant leaves
    G = build_graph(5, [(0, 1), (0, 2), (1, 3), (2, 4)])
    fixed = apply_involution(G, [0, 2, 1, 4, 3])
    assert fixed == build_graph(1)
    assert grundy(G, table) == grundy(fixed, table)


def test_parity_loops_example(table):
    # doubled loop disappears, single loop stays
    G = build_graph(2, [(0, 1), (0, 0), (0, 0), (1, 1)])
    R = simplify_multiedges(G)
    assert R.loops == ((1, 1),)
    assert grundy(G, table) == grundy(R, table)
