"""Verification suite: every solved claim about the game, checked by engine.

Each claim pairs a closed-form or frozen-reference expectation with an
exact engine computation at desk scale. Claims report pass/fail with both
values, or skipped when a search budget runs out; they never weaken a
check to pass. The suite is deterministic: corpora are seeded and
enumeration orders fixed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from random import Random
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import families, formulas
from .canon import canonical_key
from .corpus import (
    cycle_with_trees,
    disjoint_union,
    path_multisets,
    random_bipartite,
    random_graph,
    rooted_trees,
    subgraph_positions,
    tree_size,
)
from .engine import (
    DEFAULT_BUDGET,
    BudgetExhausted,
    GrundyTable,
    grundy,
    mex,
    move_values,
)
from .formulas import Predicted, e_set, ell_val
from .graph import DeleteEdge, DeleteVertex, Graph, build_graph, format_graph, phi
from .reducer import reduce as reduce_graph
from .structure import distance_layers, find_telescoping, unicyclic_info

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class VerificationReport:
    """Outcome of one claim: both sides of the comparison plus runtime."""

    claim_id: str
    status: str
    expected: str
    observed: str
    runtime: float
    statement: str

    def to_record(self) -> Dict[str, object]:
        return {
            "claim": self.claim_id,
            "status": self.status,
            "expected": self.expected,
            "observed": self.observed,
            "runtime": round(self.runtime, 3),
            "statement": self.statement,
        }


class _Check:
    """Collects mismatches; a claim passes when none survive."""

    def __init__(self) -> None:
        self.bad: List[str] = []
        self.cases = 0

    def take(self, label: str, expected: object, observed: object) -> None:
        self.cases += 1
        if expected != observed:
            self.bad.append(f"{label}: expected {expected}, got {observed}")

    def take_pred(self, label: str, pred: Predicted, observed: int) -> None:
        self.cases += 1
        if not pred.matches(observed):
            self.bad.append(f"{label}: predicted {pred}, engine {observed}")

    def ok(self) -> bool:
        return not self.bad

    def observed(self) -> str:
        if self.ok():
            return f"all {self.cases} cases agree"
        shown = "; ".join(self.bad[:4])
        more = f" (+{len(self.bad) - 4} more)" if len(self.bad) > 4 else ""
        return f"{len(self.bad)}/{self.cases} mismatches: {shown}{more}"


ClaimFn = Callable[[GrundyTable, int], Tuple[bool, str, str]]

_CLAIMS: List[Tuple[str, str, ClaimFn]] = []


def _claim(claim_id: str, statement: str):
    def register(fn: ClaimFn) -> ClaimFn:
        _CLAIMS.append((claim_id, statement, fn))
        return fn
    return register


def claim_ids() -> List[str]:
    return [cid for cid, _, _ in _CLAIMS]


def run_claim(claim_id: str, table: Optional[GrundyTable] = None,
              budget: int = DEFAULT_BUDGET) -> VerificationReport:
    for cid, statement, fn in _CLAIMS:
        if cid == claim_id:
            table = table if table is not None else GrundyTable()
            start = time.perf_counter()
            try:
                ok, expected, observed = fn(table, budget)
                status = PASS if ok else FAIL
            except BudgetExhausted as exc:
                status, expected, observed = SKIPPED, "", f"budget exhausted: {exc}"
            return VerificationReport(cid, status, expected, observed,
                                      time.perf_counter() - start, statement)
    raise KeyError(f"unknown claim {claim_id!r}; known: {', '.join(claim_ids())}")


def run_suite(selection: Optional[Sequence[str]] = None,
              table: Optional[GrundyTable] = None,
              budget: int = DEFAULT_BUDGET) -> List[VerificationReport]:
    """Run the selected claims (default: all) sharing one value table."""
    table = table if table is not None else GrundyTable()
    ids = list(selection) if selection else claim_ids()
    return [run_claim(cid, table, budget) for cid in ids]


# --- the claims ---------------------------------------------------------------

_TRIANGLE = [(0, 1), (1, 2), (2, 0)]


@_claim("triangle-and-pendant",
        "the triangle has value 0; the triangle with a pendant edge has "
        "value 4 and its options take exactly the values {0,1,2,3}")
def _c_triangle(table: GrundyTable, budget: int):
    chk = _Check()
    tri = build_graph(3, _TRIANGLE)
    chk.take("triangle", 0, grundy(tri, table, budget))
    pend = build_graph(4, _TRIANGLE + [(2, 3)])
    chk.take("triangle+pendant", 4, grundy(pend, table, budget))
    opts = sorted({mv.value for mv in move_values(pend, table, budget)})
    chk.take("option values", [0, 1, 2, 3], opts)
    return chk.ok(), "g=0; g=4 with options {0,1,2,3}", chk.observed()


@_claim("bipartite-parity",
        "every bipartite position has value (V mod 2) + 2*(E mod 2): "
        "1000 seeded random bipartite graphs on at most 9 vertices")
def _c_bipartite(table: GrundyTable, budget: int):
    chk = _Check()
    rng = Random(2024)
    for i in range(1000):
        G = random_bipartite(rng)
        chk.take(f"case {i} {G!r}", phi(G), grundy(G, table, budget))
    return chk.ok(), "g = phi on all 1000", chk.observed()


@_claim("disjoint-union",
        "values of disjoint unions combine by xor: 300 seeded random pairs")
def _c_union(table: GrundyTable, budget: int):
    chk = _Check()
    rng = Random(2025)
    for i in range(300):
        G = random_graph(rng, max_vertices=5, max_edges=7)
        H = random_graph(rng, max_vertices=5, max_edges=7)
        want = grundy(G, table, budget) ^ grundy(H, table, budget)
        chk.take(f"case {i}", want, grundy(disjoint_union(G, H), table, budget))
    return chk.ok(), "g(G|H) = g(G) xor g(H) on all 300", chk.observed()


@_claim("reduction-invariance",
        "parity simplification plus pendant cancellation preserves the value "
        "(1000 seeded graphs), and the reduced form is unique up to "
        "isomorphism whatever the cancellation order (200 of them)")
def _c_reduce(table: GrundyTable, budget: int):
    chk = _Check()
    rng = Random(2026)
    for i in range(1000):
        G = random_graph(rng)
        R = reduce_graph(G)
        chk.take(f"value {i}", grundy(G, table, budget), grundy(R, table, budget))
        if i < 200:
            R2 = reduce_graph(G, order="last")
            chk.take(f"confluence {i}", canonical_key(R), canonical_key(R2))
    return chk.ok(), "g(reduce(G)) = g(G); both orders isomorphic", chk.observed()


@_claim("complete-graphs",
        "the complete graph on n vertices has value n mod 3 (n = 1..6)")
def _c_complete(table: GrundyTable, budget: int):
    chk = _Check()
    for n in range(1, 7):
        chk.take_pred(f"K_{n}", formulas.predict_complete(n),
                      grundy(families.complete(n), table, budget))
    return chk.ok(), "g(K_n) = n mod 3", chk.observed()


@_claim("complete-with-loops",
        "the complete graph on n vertices with loops on m of them has value "
        "(m + n) mod 3 (n <= 5, 0 <= m <= n)")
def _c_complete_loops(table: GrundyTable, budget: int):
    chk = _Check()
    for n in range(0, 6):
        for m in range(0, n + 1):
            chk.take_pred(f"K_{n}({m})", formulas.predict_complete_loops(n, m),
                          grundy(families.complete_with_loops(n, m), table, budget))
    return chk.ok(), "g = (m+n) mod 3 on all 21 cases", chk.observed()


@_claim("cycles-and-loop",
        "cycles of length 2..8 have value 0; a single vertex with a loop "
        "has value 2")
def _c_cycles(table: GrundyTable, budget: int):
    chk = _Check()
    for n in range(2, 9):
        chk.take(f"C_{n}", 0, grundy(families.cycle(n), table, budget))
    chk.take("loop vertex", 2, grundy(families.cycle(1), table, budget))
    return chk.ok(), "g(C_n) = 0, loop vertex 2", chk.observed()


@_claim("unbounded-families",
        "the edge-glued double triangle with a tail on n vertices has value "
        "2*lam(n-3) (n = 4..12) and the path with an end loop on n vertices "
        "has value 2*lam(n) (n = 1..12)")
def _c_unbounded(table: GrundyTable, budget: int):
    chk = _Check()
    for n in range(4, 13):
        chk.take_pred(f"double-triangle {n}", formulas.predict_G1(n),
                      grundy(families.g1(n), table, budget))
    for n in range(1, 13):
        chk.take_pred(f"loop-path {n}", formulas.predict_G2(n),
                      grundy(families.g2(n), table, budget))
    return chk.ok(), "both staircase formulas hold", chk.observed()


@_claim("branch-paths",
        "cycle, bridge edge, and branch paths xs: parity value for an odd "
        "number of paths, xor of ell(x_i) plus 4 for an even number; every "
        "multiset with total at most 8, including the bare base with value 4")
def _c_branch_paths(table: GrundyTable, budget: int):
    chk = _Check()
    for xs in path_multisets(8):
        G = families.r_graph(xs)
        chk.take_pred(f"xs={xs}", formulas.predict_R(xs),
                      grundy(G, table, budget))
    return chk.ok(), "predictor = engine on all 67 multisets", chk.observed()


@_claim("cycle-bouquets",
        "r triangles and pendant paths glued at one vertex: 0 when r is odd "
        "and the alternating path sum is 0, 4 when it is 1, parity value "
        "otherwise; r <= 3, path totals at most 6")
def _c_bouquets(table: GrundyTable, budget: int):
    chk = _Check()
    for r in (1, 2, 3):
        for xs in path_multisets(6):
            G = families.odd_cycle_bouquet([3] * r, xs)
            chk.take_pred(f"r={r} xs={xs}", formulas.predict_rodd(r, xs),
                          grundy(G, table, budget))
    return chk.ok(), "predictor = engine on all cases", chk.observed()


@_claim("two-hub-paths",
        "k paths joining two hubs plus pendant paths: 0 when k is even, Z "
        "odd, alternating sums cancel; 4 when they total 1; parity value "
        "otherwise; k <= 4, Z <= 6, pendant totals at most 4")
def _c_two_hubs(table: GrundyTable, budget: int):
    chk = _Check()
    zsets = [zs for zs in path_multisets(6, max_parts=4)]
    pend = list(path_multisets(4))
    for zs in zsets:
        for xs in pend:
            for ys in pend:
                if sum(xs) + sum(ys) > 4:
                    continue
                G = families.two_hub_paths(xs, ys, zs)
                chk.take_pred(
                    f"zs={zs} xs={xs} ys={ys}",
                    formulas.predict_xyz(xs, ys, zs),
                    grundy(G, table, budget))
    return chk.ok(), "predictor = engine on all cases", chk.observed()


def _one_attachment_instances(max_tree: int):
    """Reduced trees on a 3-cycle: distinct sibling subtrees everywhere."""
    for size in range(1, max_tree + 1):
        for code in rooted_trees(size, distinct_children=True):
            yield code, cycle_with_trees([code])


@_claim("one-attachment-split",
        "single tree on an odd cycle, reduced: value 0 for the bare cycle, "
        "at least 4 with an odd-degree telescoping vertex, parity value "
        "otherwise; telescoping vertices are unique and satisfy the layer "
        "parity conditions (exhaustive, tree size <= 7 on a triangle)")
def _c_one_attachment(table: GrundyTable, budget: int):
    chk = _Check()
    for code, G in _one_attachment_instances(7):
        value = grundy(G, table, budget)
        pred = formulas.predict_one_attachment(G)
        chk.take_pred(f"tree={code}", pred, value)
        t = find_telescoping(G)  # raises if uniqueness ever fails
        if not pred.exact:
            chk.take(f"tree={code} bound", True, value >= 4)
        if t is not None and tree_size(code) > 1:
            layers = distance_layers(G, 0)
            degs = G.degrees()
            dist = _tree_distance(G, 0, t)
            chk.take(f"tree={code} degA<=4", True, degs[0] <= 4)
            chk.take(f"tree={code} degA=3 iff d=1",
                     degs[0] == 3, dist == 1)
            chk.take(f"tree={code} even layers", True,
                     all(s % 2 == 0 for s in layers.sizes[:dist - 1]))
            chk.take(f"tree={code} odd layer", 1, layers.sizes[dist - 1] % 2)
            layer_vertices = _layer(G, 0, dist)
            rest = sum(degs[v] for v in layer_vertices if v != t)
            chk.take(f"tree={code} rest degree even", 0, rest % 2)
    return chk.ok(), "case split, uniqueness and layer conditions", chk.observed()


def _tree_distance(G: Graph, root: int, target: int) -> int:
    adj = G.adjacency()
    info = unicyclic_info(G)
    on_cycle = set(info.cycle_vertices)
    dist = {root: 0}
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for u, _ in adj[v]:
                if u in dist or (u in on_cycle and u != root):
                    continue
                dist[u] = dist[v] + 1
                nxt.append(u)
        frontier = nxt
    return dist[target]


def _layer(G: Graph, root: int, d: int) -> List[int]:
    adj = G.adjacency()
    info = unicyclic_info(G)
    on_cycle = set(info.cycle_vertices)
    dist = {root: 0}
    frontier = [root]
    out: List[int] = []
    depth = 0
    while frontier and depth < d:
        depth += 1
        nxt = []
        for v in frontier:
            for u, _ in adj[v]:
                if u in dist or (u in on_cycle and u != root):
                    continue
                dist[u] = depth
                nxt.append(u)
        frontier = nxt
    return frontier


@_claim("two-attachment-parity",
        "two trees on two vertices of an odd cycle, reduced: the value is "
        "always the parity value (exhaustive, at most 6 tree vertices)")
def _c_two_attachment(table: GrundyTable, budget: int):
    chk = _Check()
    by_size: Dict[int, List] = {}
    for s in range(2, 7):
        by_size[s] = list(rooted_trees(s, distinct_children=True))
    for s1 in range(2, 7):
        for s2 in range(s1, 7):
            if (s1 - 1) + (s2 - 1) > 6:
                continue
            for i, c1 in enumerate(by_size[s1]):
                starts = by_size[s2][i:] if s1 == s2 else by_size[s2]
                for c2 in starts:
                    G = cycle_with_trees([c1, c2])
                    chk.take_pred(
                        f"trees={c1},{c2}",
                        formulas.predict_multi_attachment(G),
                        grundy(G, table, budget))
    return chk.ok(), "g = phi on every instance", chk.observed()


@_claim("staircase-mex",
        "ell(k) equals the least value excluded from "
        "{ell(k-1), ell(k-1)^1} | {ell(i)^1, ell(i)^2 : i <= k-2} "
        "for k = 1..50")
def _c_staircase(table: GrundyTable, budget: int):
    chk = _Check()
    for k in range(1, 51):
        chk.take(f"k={k}", ell_val(k), mex(e_set(k)))
    return chk.ok(), "identity holds for k = 1..50", chk.observed()


@_claim("wheels-small",
        "wheels on rims of 3..8 vertices all have value 1")
def _c_wheels(table: GrundyTable, budget: int):
    chk = _Check()
    for n in range(3, 9):
        chk.take(f"W_{n}", 1, grundy(families.wheel(n), table, budget))
    return chk.ok(), "g(W_n) = 1 for n = 3..8", chk.observed()


@_claim("punctured-wheels",
        "the wheel remnant with one spoke and one far rim vertex removed, "
        "plus a free vertex, has value 0 for n in {3, 5, 7}")
def _c_punctured(table: GrundyTable, budget: int):
    chk = _Check()
    for n in (3, 5, 7):
        chk.take(f"Q_{n}", 0, grundy(families.q_graph(n), table, budget))
    return chk.ok(), "g(Q_n) = 0", chk.observed()


def load_golden_table(name: str) -> Dict[str, object]:
    """Parse a golden per-move table shipped under data/golden."""
    from importlib import resources

    text = resources.files("graphchomp.data.golden").joinpath(
        f"{name}.table").read_text()
    out: Dict[str, object] = {"vertices": {}, "edges": {}}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        f = line.split()
        if f[0] == "g":
            out["g"] = int(f[1])
        elif f[0] == "phi":
            out["phi"] = int(f[1])
        elif f[0] == "vertex":
            out["vertices"][int(f[1])] = int(f[2])
        elif f[0] == "edge":
            out["edges"][(int(f[1]), int(f[2]))] = int(f[3])
        else:
            raise ValueError(f"bad golden table line: {line!r}")
    return out


def compare_option_table(G: Graph, golden: Dict[str, object],
                         table: GrundyTable, budget: int,
                         chk: _Check, label: str) -> None:
    chk.take(f"{label} value", golden["g"], grundy(G, table, budget))
    chk.take(f"{label} parity", golden["phi"], phi(G))
    for mv in move_values(G, table, budget):
        if isinstance(mv.move, DeleteVertex):
            want = golden["vertices"][mv.move.vertex]
            chk.take(f"{label} vertex {mv.move.vertex}", want, mv.value)
        else:
            want = golden["edges"][(mv.move.u, mv.move.v)]
            chk.take(f"{label} edge {mv.move.u}-{mv.move.v}", want, mv.value)


@_claim("fan-option-tables",
        "full per-move value tables of the 7-rim fan, the 6-rim fan, and "
        "the 8-rim fan with a handle match the transcribed golden data")
def _c_fan_tables(table: GrundyTable, budget: int):
    chk = _Check()
    compare_option_table(families.fan(7), load_golden_table("fan7"),
                         table, budget, chk, "fan7")
    compare_option_table(families.fan(6), load_golden_table("fan6"),
                         table, budget, chk, "fan6")
    compare_option_table(families.fan_with_handle(8),
                         load_golden_table("fanhandle8"),
                         table, budget, chk, "fanhandle8")
    return chk.ok(), "all three tables match", chk.observed()


@_claim("clique-amalgams",
        "the three 6-vertex graphs made of two cliques sharing a vertex "
        "(sizes summing to 7) have parity value 2, values 0, 1, 0, and no "
        "edge removal reaching value 0")
def _c_amalgams(table: GrundyTable, budget: int):
    chk = _Check()
    expected = {(1, 6): 0, (2, 5): 1, (3, 4): 0}
    for (i, j), want in expected.items():
        G = families.exceptional(i, j)
        chk.take(f"({i},{j}) parity", 2, phi(G))
        chk.take(f"({i},{j}) value", want, grundy(G, table, budget))
        edge_zero = [
            mv for mv in move_values(G, table, budget)
            if isinstance(mv.move, DeleteEdge) and mv.value == 0
        ]
        chk.take(f"({i},{j}) zero edge moves", [], edge_zero)
    return chk.ok(), "phi = 2; g = 0,1,0; no zero edge moves", chk.observed()


def scan_phi2_subgraphs(n: int, table: Optional[GrundyTable] = None,
                        budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Check every subgraph H of the n-rim wheel with parity value 2.

    The claim: some edge removal from H reaches value 0. Subgraphs are
    deduplicated canonically; the report lists any counterexample verbatim.
    """
    table = table if table is not None else GrundyTable()
    start = time.perf_counter()
    statement = ("every subgraph of the wheel with an even vertex count and "
                 "odd edge count has an edge move to value 0")
    checked = 0
    counterexamples: List[Graph] = []
    try:
        for H, _count in subgraph_positions(families.wheel(n), budget=budget):
            if phi(H) != 2:
                continue
            checked += 1
            zero = any(
                mv.value == 0
                for mv in move_values(H, table, budget)
                if isinstance(mv.move, DeleteEdge)
            )
            if not zero:
                counterexamples.append(H)
    except BudgetExhausted as exc:
        return VerificationReport(
            f"phi2-edge-scan-{n}", SKIPPED, "no counterexample",
            f"budget exhausted after {checked} candidates: {exc}",
            time.perf_counter() - start, statement)
    if counterexamples:
        shown = "\n".join(format_graph(H) for H in counterexamples)
        observed = f"{len(counterexamples)} counterexample(s):\n{shown}"
    else:
        observed = f"{checked} subgraphs with parity 2 checked"
    return VerificationReport(
        f"phi2-edge-scan-{n}", PASS if not counterexamples else FAIL,
        "no counterexample", observed,
        time.perf_counter() - start, statement)


@_claim("phi2-edge-scan",
        "no subgraph of the 3-, 4- or 5-rim wheel with parity value 2 "
        "lacks an edge move to value 0 (canonical deduplication)")
def _c_scan(table: GrundyTable, budget: int):
    chk = _Check()
    for n in (3, 4, 5):
        rep = scan_phi2_subgraphs(n, table, budget)
        if rep.status == SKIPPED:
            raise BudgetExhausted(rep.observed)
        chk.take(f"wheel {n}", PASS, rep.status)
    return chk.ok(), "scan passes for rims 3, 4, 5", chk.observed()


def check_fstar_minus_spokes(n: int, table: Optional[GrundyTable] = None,
                             budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Remove every spoke pair from the even fan with a handle: value 1."""
    if n % 2 != 0:
        raise ValueError("defined for even rim sizes")
    table = table if table is not None else GrundyTable()
    start = time.perf_counter()
    statement = ("the even fan with a handle keeps value 1 after removing "
                 "any two spokes")
    chk = _Check()
    spokes = families.fan_handle_spokes(n)
    try:
        for a in range(len(spokes)):
            for b in range(a + 1, len(spokes)):
                G = families.fan_handle_minus_spokes(
                    n, spokes[a][1], spokes[b][1])
                chk.take(f"spokes {spokes[a][1]},{spokes[b][1]}",
                         1, grundy(G, table, budget))
    except BudgetExhausted as exc:
        return VerificationReport(
            f"fstar-spokes-{n}", SKIPPED, "value 1 for all pairs",
            f"budget exhausted: {exc}", time.perf_counter() - start, statement)
    return VerificationReport(
        f"fstar-spokes-{n}", PASS if chk.ok() else FAIL,
        "value 1 for all pairs", chk.observed(),
        time.perf_counter() - start, statement)


@_claim("tail-sequence",
        "the first tail-sequence family alternates 18, 17 as the tail grows "
        "(checked for tail lengths 8..11); transcribed sequence kept if the "
        "budget is exhausted")
def _c_tail(table: GrundyTable, budget: int):
    chk = _Check()
    for k in range(8, 12):
        want = 18 if k % 2 == 0 else 17
        chk.take(f"tail {k}", want,
                 grundy(families.h_graph(1, k), table, budget))
    return chk.ok(), "values 18,17,18,17 at tails 8..11", chk.observed()
