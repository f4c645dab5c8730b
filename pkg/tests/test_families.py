"""Family constructors: shapes, counts, determinism, spec strings, goldens."""

import pytest

from graphchomp.canon import canonical_key
from graphchomp.engine import grundy
from graphchomp.families import (
    complete,
    complete_multipartite,
    complete_with_loops,
    cycle,
    exceptional,
    fan,
    fan_handle_minus_spokes,
    fan_handle_spokes,
    fan_with_handle,
    g1,
    g2,
    generate,
    golden_graph,
    h_graph,
    odd_cycle_bouquet,
    parse_spec,
    path,
    q_graph,
    r_graph,
    two_hub_paths,
    wheel,
)
from graphchomp.graph import GraphInputError, phi


def test_wheel_counts():
    for n in range(3, 26):
        W = wheel(n)
        assert W.n == n + 1 and W.edge_count == 2 * n


def test_fan_counts():
    for n in range(3, 26):
        F = fan(n)
        assert F.n == n + 1 and F.edge_count == 2 * n - 1
    for n in range(4, 26):
        FH = fan_with_handle(n)
        assert FH.n == n + 1 and FH.edge_count == 2 * n - 2
        assert FH.degree(1) == 1  # the handle vertex


def test_fan7_shape():
    F = fan(7)
    assert F.n == 8 and F.edge_count == 13


def test_cycle_small():
    assert cycle(1).loops == ((0, 1),)
    assert cycle(2).edges == ((0, 1, 2),)
    assert cycle(5).edge_count == 5


def test_complete_and_multipartite():
    assert complete(4).edge_count == 6
    K23 = complete_multipartite([2, 3])
    assert K23.n == 5 and K23.edge_count == 6
    assert complete_with_loops(3, 2).loops == ((0, 1), (1, 1))


def test_r_graph_shape():
    R = r_graph([7, 6, 5, 3])
    # hub B has one branch per path plus the bridge; A keeps degree 3
    assert R.degree(3) == 5
    assert R.degree(0) == 3
    assert R.n == 3 + 1 + 21


def test_q_graph_shape():
    Q = q_graph(9)
    assert Q.n == 10 and Q.edge_count == 14
    assert Q.degree(9) == 0                  # the free vertex
    assert Q.degree(0) == 7                  # hub misses one spoke
    assert Q.multiplicity(0, 5) == 0         # the missing spoke


def test_bouquet_shape():
    B = odd_cycle_bouquet([3, 3, 5], [2])
    assert B.n == 1 + 2 + 2 + 4 + 2
    assert B.degree(0) == 7


def test_two_hub_parallel_edges():
    G = two_hub_paths([], [], [1, 1, 1])
    assert G.multiplicity(0, 1) == 3


def test_g_families():
    assert g1(4).edge_count == 5
    assert g2(1).loops == ((0, 1),)
    assert g2(4).n == 4 and g2(4).edge_count == 4


def test_exceptional_shapes():
    assert exceptional(1, 6) == complete(6)
    K25 = exceptional(2, 5)
    assert K25.n == 6 and K25.edge_count == 11
    K34 = exceptional(3, 4)
    assert K34.n == 6 and K34.edge_count == 9 and phi(K34) == 2
    with pytest.raises(GraphInputError):
        exceptional(3, 3)


def test_generate_is_deterministic():
    for spec in ["wheel:7", "r:3:7,6,5,3", "q:9", "exceptional:3,4",
                 "xyz:1,1:2:2,2", "h:1:4", "rodd:3,3:1"]:
        assert generate(spec) == generate(spec)


def test_parse_spec_round_trips():
    spec = parse_spec("r:3:7,6,5,3")
    assert spec.family == "r" and spec.args == ((3,), (7, 6, 5, 3))
    spec = parse_spec("rodd:3,3:")
    assert spec.args == ((3, 3), ())
    with pytest.raises(GraphInputError):
        parse_spec("nosuch:3")
    with pytest.raises(GraphInputError):
        parse_spec("wheel:many")


def test_spec_examples_match_constructors():
    assert generate("wheel:7") == wheel(7)
    assert generate("exceptional:3,4") == exceptional(3, 4)
    assert generate("q:9") == q_graph(9)
    assert generate("fanhandle-spokes:8,3,5") == fan_handle_minus_spokes(8, 3, 5)


def test_fan_handle_spokes_listing():
    assert fan_handle_spokes(5) == [(0, 2), (0, 3), (0, 4), (0, 5)]
    with pytest.raises(GraphInputError):
        fan_handle_minus_spokes(6, 1, 3)  # the handle edge is not a spoke


def test_h_graphs_match_golden_files():
    for i in (1, 2, 3):
        assert canonical_key(h_graph(i, 1)) == \
            canonical_key(golden_graph(f"h{i}_k1.graph"))


def test_h_graph_tail_grows():
    base = h_graph(1, 0)
    longer = h_graph(1, 3)
    assert longer.n == base.n + 3
    assert longer.edge_count == base.edge_count + 3


def test_path_family():
    assert path(0).n == 0
    assert path(4).edge_count == 3


def test_q_graph_values(table):
    # frozen second-player-win checks at the small odd sizes
    for n in (3, 5):
        assert grundy(q_graph(n), table) == 0


def test_h3_values_follow_parity(table):
    # the no-telescoping variant alternates with the parity value
    for k in (1, 2):
        G = h_graph(3, k)
        assert grundy(G, table) == phi(G) == (0 if k % 2 == 1 else 3)
