"""Deterministic constructors for the named graph families.

Every constructor documents its labeling so per-move tables and golden data
can refer to vertices by index. Wheels put the hub at index 0 with rim
vertices 1..n clockwise; fans are wheels minus one rim edge (the rim becomes
the path 1..n); fans with a handle drop both rim edges at vertex 1, leaving
it joined to the hub alone.

``generate`` accepts a compact spec string ("wheel:7", "r:3:7,6,5,3",
"q:9", "exceptional:3,4", ...) used by the CLI and tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import List, Sequence, Tuple

from .graph import Graph, GraphInputError, build_graph, parse_graph


@dataclass(frozen=True)
class FamilySpec:
    """A parsed family name with its integer-tuple arguments."""

    family: str
    args: Tuple[Tuple[int, ...], ...]


def path(n: int) -> Graph:
    """Path on n vertices 0..n-1."""
    if n < 0:
        raise GraphInputError("n must be non-negative")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle on n vertices: a loop for n = 1, a parallel pair for n = 2."""
    if n < 1:
        raise GraphInputError("cycles start at length 1")
    if n == 1:
        return build_graph(1, [(0, 0)])
    if n == 2:
        return build_graph(2, [(0, 1), (0, 1)])
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph; class c starts at sum(parts[:c])."""
    if any(p < 1 for p in parts):
        raise GraphInputError("part sizes must be positive")
    starts = [0]
    for p in parts:
        starts.append(starts[-1] + p)
    n = starts[-1]
    edges = []
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            for u in range(starts[a], starts[a + 1]):
                for v in range(starts[b], starts[b + 1]):
                    edges.append((u, v))
    return build_graph(n, edges)


def complete_with_loops(n: int, m: int) -> Graph:
    """Complete graph on n vertices with one loop at each of vertices 0..m-1."""
    if not (0 <= m <= n):
        raise GraphInputError(f"need 0 <= m <= n, got m={m}, n={n}")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges.extend((v, v) for v in range(m))
    return build_graph(n, edges)


def wheel(n: int) -> Graph:
    """Hub 0 joined to every vertex of the rim cycle 1..n."""
    if n < 3:
        raise GraphInputError("wheels start at n = 3")
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, i % n + 1) for i in range(1, n + 1)]
    return build_graph(n + 1, edges)


def fan(n: int) -> Graph:
    """Wheel minus the rim edge (n, 1); the rim is the path 1..n."""
    if n < 3:
        raise GraphInputError("fans start at n = 3")
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, i + 1) for i in range(1, n)]
    return build_graph(n + 1, edges)


def fan_with_handle(n: int) -> Graph:
    """Wheel minus the adjacent rim edges (n, 1) and (1, 2).

    Vertex 1 keeps only its spoke and acts as the handle; the rim is the
    path 2..n.
    """
    if n < 4:
        raise GraphInputError("fans with a handle start at n = 4")
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, i + 1) for i in range(2, n)]
    return build_graph(n + 1, edges)


def fan_handle_spokes(n: int) -> List[Tuple[int, int]]:
    """The removable spokes of the fan with a handle: hub to 2..n.

    The hub-to-1 edge holds the handle on and is not counted as a spoke.
    """
    return [(0, i) for i in range(2, n + 1)]


def fan_handle_minus_spokes(n: int, s1: int, s2: int) -> Graph:
    """Fan with a handle, minus the two spokes at rim vertices s1 and s2."""
    if not (2 <= s1 <= n and 2 <= s2 <= n and s1 != s2):
        raise GraphInputError(
            f"spokes are at rim vertices 2..{n}, need two distinct, "
            f"got {s1}, {s2}")
    G = fan_with_handle(n)
    drop = {(0, s1), (0, s2)}
    edges = [(u, v) for u, v, m in G.edges for _ in range(m)
             if (u, v) not in drop]
    return build_graph(G.n, edges)


def q_graph(n: int) -> Graph:
    """Wheel remnant with an extra isolated vertex, for odd n.

    Hub c = 0, rim path v(1)..v(n-1) at indices 1..n-1, spokes from the hub
    to every rim vertex except v((n+1)/2), and the isolated vertex at index
    n.
    """
    if n < 3 or n % 2 == 0:
        raise GraphInputError("defined for odd n >= 3")
    missing = (n + 1) // 2
    edges = [(i, i + 1) for i in range(1, n - 1)]
    edges += [(0, i) for i in range(1, n) if i != missing]
    return build_graph(n + 1, edges)


def r_graph(xs: Sequence[int], cycle_len: int = 3) -> Graph:
    """Odd cycle 0..c-1, bridge edge (0, c), branch paths of lengths xs at c."""
    if cycle_len < 3 or cycle_len % 2 == 0:
        raise GraphInputError("cycle length must be odd and at least 3")
    if any(x < 1 for x in xs):
        raise GraphInputError("branch path lengths must be at least 1")
    c = cycle_len
    edges = [(i, (i + 1) % c) for i in range(c)]
    edges.append((0, c))
    nxt = c + 1
    for x in xs:
        prev = c
        for _ in range(x):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges)


def odd_cycle_bouquet(cycle_lens: Sequence[int], xs: Sequence[int] = ()) -> Graph:
    """Odd cycles and pendant paths all sharing the single vertex 0."""
    if not cycle_lens:
        raise GraphInputError("need at least one cycle")
    if any(c < 3 or c % 2 == 0 for c in cycle_lens):
        raise GraphInputError("cycle lengths must be odd and at least 3")
    if any(x < 1 for x in xs):
        raise GraphInputError("path lengths must be at least 1")
    edges = []
    nxt = 1
    for c in cycle_lens:
        ring = [0] + list(range(nxt, nxt + c - 1))
        nxt += c - 1
        edges += [(ring[i], ring[(i + 1) % c]) for i in range(c)]
    for x in xs:
        prev = 0
        for _ in range(x):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges)


def two_hub_paths(xs: Sequence[int], ys: Sequence[int],
                  zs: Sequence[int]) -> Graph:
    """Hubs P = 0 and Q = 1: linking paths zs, pendants xs at P and ys at Q.

    A linking path of length 1 is a direct edge, so repeated 1s in zs give
    parallel edges.
    """
    if any(z < 1 for z in zs):
        raise GraphInputError("linking path lengths must be at least 1")
    if any(x < 1 for x in list(xs) + list(ys)):
        raise GraphInputError("pendant path lengths must be at least 1")
    edges = []
    nxt = 2
    for z in zs:
        prev = 0
        for _ in range(z - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    for hub, paths in ((0, xs), (1, ys)):
        for x in paths:
            prev = hub
            for _ in range(x):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
    return build_graph(nxt, edges)


def g1(n: int) -> Graph:
    """Two triangles sharing an edge, with a path tail; n vertices total.

    Vertices 0,1 are the shared edge, 2 and 3 the triangle apexes, and the
    tail continues 3,4,...,n-1.
    """
    if n < 4:
        raise GraphInputError("family starts at n = 4")
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]
    edges += [(i, i + 1) for i in range(3, n - 1)]
    return build_graph(n, edges)


def g2(n: int) -> Graph:
    """Path on n vertices with a loop at vertex 0."""
    if n < 1:
        raise GraphInputError("family starts at n = 1")
    edges = [(0, 0)] + [(i, i + 1) for i in range(n - 1)]
    return build_graph(n, edges)


def exceptional(i: int, j: int) -> Graph:
    """Two complete graphs on i and j vertices sharing the single vertex 0.

    Defined for i + j = 7; the (1, 6) member degenerates to the complete
    graph on 6 vertices.
    """
    if i + j != 7 or i < 1 or j < 1:
        raise GraphInputError("defined for positive i + j = 7")
    edges = []
    left = [0] + list(range(1, i))
    right = [0] + list(range(i, i + j - 1))
    for block in (left, right):
        for a in range(len(block)):
            for b in range(a + 1, len(block)):
                edges.append((block[a], block[b]))
    return build_graph(i + j - 1, edges)


# --- the three tail-sequence graphs ------------------------------------------
#
# Fixed reference adjacency, also frozen in data/golden/h*.graph; a test
# keeps the two in sync. Each has a 3-cycle {0,1,2} attached to a fixed tree
# at vertex 0, with a tail of length k appended at a marked spine vertex.
# Appending to the tail drives the eventually-periodic value sequences the
# verification suite checks.

_H_BASE = {
    1: ([(0, 1), (1, 2), (2, 0),
         (0, 3), (3, 4),
         (3, 5), (5, 6), (5, 7), (7, 8), (8, 9),
         (5, 10), (10, 11), (11, 12), (12, 13)], 14, 10),
    2: ([(0, 1), (1, 2), (2, 0),
         (0, 3), (3, 4), (4, 5), (5, 6),
         (0, 7), (7, 8), (8, 9), (7, 10), (10, 11), (11, 12),
         (7, 13), (13, 14),
         (13, 15), (15, 16), (16, 17), (17, 18), (18, 19)], 20, 15),
    3: ([(0, 1), (1, 2), (2, 0),
         (0, 3), (3, 4), (4, 5), (5, 6),
         (0, 7), (7, 8), (8, 9), (7, 10), (10, 11), (11, 12),
         (7, 13), (13, 14), (14, 15),
         (13, 16), (16, 17), (17, 18), (18, 19), (19, 20)], 21, 16),
}


def h_graph(i: int, k: int) -> Graph:
    """Tail-sequence family member i in {1,2,3} with tail length k >= 0."""
    if i not in _H_BASE:
        raise GraphInputError("family index must be 1, 2 or 3")
    if k < 0:
        raise GraphInputError("tail length must be non-negative")
    edges, base_n, tail_at = _H_BASE[i]
    edges = list(edges)
    prev = tail_at
    for step in range(k):
        edges.append((prev, base_n + step))
        prev = base_n + step
    return build_graph(base_n + k, edges)


def golden_graph(name: str) -> Graph:
    """Parse one of the frozen graphs shipped under data/golden."""
    text = resources.files("graphchomp.data.golden").joinpath(name).read_text()
    return parse_graph(text, source=name)


# --- spec strings -------------------------------------------------------------
#
# Fields are colon-separated; "n" fields are single integers (a field may
# also pack several integers with commas, so "exceptional:3,4" works), and
# "list" fields are comma-separated integers, possibly empty.

_FAMILIES = {
    "path": (("n",), path),
    "cycle": (("n",), cycle),
    "kn": (("n",), complete),
    "multipartite": (("list",), complete_multipartite),
    "kloops": (("n", "n"), complete_with_loops),
    "wheel": (("n",), wheel),
    "fan": (("n",), fan),
    "fanhandle": (("n",), fan_with_handle),
    "fanhandle-spokes": (("n", "n", "n"), fan_handle_minus_spokes),
    "q": (("n",), q_graph),
    "r": (("n", "list"), lambda c, xs: r_graph(xs, cycle_len=c)),
    "rodd": (("list", "list"), odd_cycle_bouquet),
    "xyz": (("list", "list", "list"), two_hub_paths),
    "g1": (("n",), g1),
    "g2": (("n",), g2),
    "h": (("n", "n"), h_graph),
    "exceptional": (("n", "n"), exceptional),
}


def parse_spec(text: str) -> FamilySpec:
    """Parse a family spec like "wheel:7", "r:3:7,6,5,3" or "rodd:3,3:1"."""
    fields = text.strip().split(":")
    name = fields[0]
    if name not in _FAMILIES:
        raise GraphInputError(
            f"unknown family {name!r}; known: {', '.join(sorted(_FAMILIES))}")
    shapes, _ = _FAMILIES[name]
    raw = fields[1:]
    if all(s == "n" for s in shapes) and len(raw) == 1 and "," in raw[0]:
        raw = raw[0].split(",")
    if len(raw) != len(shapes):
        raise GraphInputError(
            f"family {name!r} takes {len(shapes)} argument field(s), "
            f"got {len(raw)}")
    args: List[Tuple[int, ...]] = []
    try:
        for shape, field in zip(shapes, raw):
            if shape == "n":
                args.append((int(field),))
            else:
                stripped = field.strip()
                args.append(tuple(int(p) for p in stripped.split(",")) if stripped else ())
    except ValueError:
        raise GraphInputError(
            f"bad arguments for family {name!r}: {text!r}") from None
    return FamilySpec(name, tuple(args))


def generate(spec: FamilySpec | str) -> Graph:
    """Build the family member named by a FamilySpec or a spec string."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    shapes, builder = _FAMILIES[spec.family]
    flat = [arg[0] if shape == "n" else arg
            for shape, arg in zip(shapes, spec.args)]
    return builder(*flat)
