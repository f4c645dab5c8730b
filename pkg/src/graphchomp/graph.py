"""Multigraph game positions.

A position is a finite undirected multigraph with loops. Vertices are dense
indices 0..n-1; parallel edges are stored as a multiplicity per unordered
pair and loops as a per-vertex count. Graphs are immutable and hashable so
they can back memoization tables directly.

A move either deletes one edge instance or deletes a vertex together with
every incident edge. Deleting a vertex compacts the remaining indices,
preserving their relative order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple


class GraphInputError(ValueError):
    """Raised for malformed graph data: bad endpoints, bad moves, bad files."""


class Graph:
    """Immutable multigraph with loops.

    ``edges`` is a sorted tuple of ``(u, v, mult)`` with ``u < v`` and
    ``mult >= 1``; ``loops`` is a sorted tuple of ``(v, mult)``. Use
    :func:`build_graph` to construct from a plain edge list.
    """

    __slots__ = ("n", "edges", "loops", "_hash", "_adj", "_deg")

    n: int
    edges: Tuple[Tuple[int, int, int], ...]
    loops: Tuple[Tuple[int, int], ...]

    def __init__(self, n: int, edges: Tuple[Tuple[int, int, int], ...] = (),
                 loops: Tuple[Tuple[int, int], ...] = ()):
        self.n = n
        self.edges = edges
        self.loops = loops
        self._hash = hash((n, edges, loops))
        self._adj: Optional[Tuple[Tuple[Tuple[int, int], ...], ...]] = None
        self._deg: Optional[Tuple[int, ...]] = None

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self.edges == other.edges
                and self.loops == other.loops)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges!r}, loops={self.loops!r})"

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        """Total number of edge instances, loops and parallels counted."""
        return sum(m for _, _, m in self.edges) + sum(m for _, m in self.loops)

    @property
    def size(self) -> int:
        """Vertices plus edge instances; strictly decreases under any move."""
        return self.n + self.edge_count

    def is_empty(self) -> bool:
        return self.n == 0

    def adjacency(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        """Per-vertex tuple of (neighbor, multiplicity); loops excluded."""
        if self._adj is None:
            lists: List[List[Tuple[int, int]]] = [[] for _ in range(self.n)]
            for u, v, m in self.edges:
                lists[u].append((v, m))
                lists[v].append((u, m))
            self._adj = tuple(tuple(sorted(l)) for l in lists)
        return self._adj

    def loop_count(self, v: int) -> int:
        for w, m in self.loops:
            if w == v:
                return m
        return 0

    def multiplicity(self, u: int, v: int) -> int:
        if u == v:
            return self.loop_count(u)
        if u > v:
            u, v = v, u
        for a, b, m in self.edges:
            if a == u and b == v:
                return m
        return 0

    def degree(self, v: int) -> int:
        """Classic degree: incident edge instances, each loop counting twice."""
        return self.degrees()[v]

    def degrees(self) -> Tuple[int, ...]:
        if self._deg is None:
            deg = [0] * self.n
            for u, v, m in self.edges:
                deg[u] += m
                deg[v] += m
            for v, m in self.loops:
                deg[v] += 2 * m
            self._deg = tuple(deg)
        return self._deg

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """Distinct neighbors of v (excluding v itself)."""
        return tuple(u for u, _ in self.adjacency()[v])


EMPTY_GRAPH = Graph(0)


@dataclass(frozen=True, order=True)
class DeleteVertex:
    """Delete a vertex and every incident edge (loops included)."""

    vertex: int


@dataclass(frozen=True, order=True)
class DeleteEdge:
    """Delete one instance of the edge between u and v (u == v names a loop).

    ``instance`` selects one copy among parallels; all copies have the same
    effect, the ordinal only makes move identities distinct when counting.
    """

    u: int
    v: int
    instance: int = 0

    def __post_init__(self) -> None:
        if self.u > self.v:
            object.__setattr__(self, "u", self.v)
            object.__setattr__(self, "v", self.u)


Move = DeleteVertex | DeleteEdge


def build_graph(n: int, edges: Iterable[Tuple[int, int]] = ()) -> Graph:
    """Build a graph on vertices 0..n-1 from a list of endpoint pairs.

    Duplicate pairs accumulate multiplicity; a pair (v, v) is a loop. The
    empty graph (n == 0) is a valid terminal position.
    """
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    pair_mult: dict[Tuple[int, int], int] = {}
    loop_mult: dict[int, int] = {}
    for pair in edges:
        u, v = pair
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphInputError(f"edge {pair!r} has an endpoint outside 0..{n - 1}")
        if u == v:
            loop_mult[u] = loop_mult.get(u, 0) + 1
        else:
            if u > v:
                u, v = v, u
            pair_mult[(u, v)] = pair_mult.get((u, v), 0) + 1
    return Graph(
        n,
        tuple((u, v, m) for (u, v), m in sorted(pair_mult.items())),
        tuple(sorted(loop_mult.items())),
    )


def delete_vertex(G: Graph, v: int) -> Graph:
    """Remove v and all incident edges; remaining indices are compacted."""
    if not (0 <= v < G.n):
        raise GraphInputError(f"vertex {v} not in graph on {G.n} vertices")
    edges = tuple(
        (u - (u > v), w - (w > v), m)
        for u, w, m in G.edges
        if u != v and w != v
    )
    loops = tuple((u - (u > v), m) for u, m in G.loops if u != v)
    return Graph(G.n - 1, edges, loops)


def delete_edge(G: Graph, u: int, v: int) -> Graph:
    """Remove one instance of the edge (or loop) between u and v."""
    if u > v:
        u, v = v, u
    if u == v:
        for i, (w, m) in enumerate(G.loops):
            if w == u:
                loops = (G.loops[:i] + ((w, m - 1),) + G.loops[i + 1:]
                         if m > 1 else G.loops[:i] + G.loops[i + 1:])
                return Graph(G.n, G.edges, loops)
        raise GraphInputError(f"no loop at vertex {u}")
    for i, (a, b, m) in enumerate(G.edges):
        if a == u and b == v:
            edges = (G.edges[:i] + ((a, b, m - 1),) + G.edges[i + 1:]
                     if m > 1 else G.edges[:i] + G.edges[i + 1:])
            return Graph(G.n, edges, G.loops)
    raise GraphInputError(f"no edge between {u} and {v}")


def apply_move(G: Graph, move: Move) -> Graph:
    """Apply a legal move; raises GraphInputError if the target is missing."""
    if isinstance(move, DeleteVertex):
        return delete_vertex(G, move.vertex)
    if isinstance(move, DeleteEdge):
        mult = G.multiplicity(move.u, move.v)
        if not (0 <= move.instance < mult):
            raise GraphInputError(
                f"edge instance {move.instance} of ({move.u},{move.v}) "
                f"does not exist (multiplicity {mult})")
        return delete_edge(G, move.u, move.v)
    raise GraphInputError(f"unknown move {move!r}")


def component_vertex_sets(G: Graph) -> List[Tuple[int, ...]]:
    """Vertex sets of the connected components, sorted by smallest member."""
    adj = G.adjacency()
    seen = [False] * G.n
    comps: List[Tuple[int, ...]] = []
    for start in range(G.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = [start]
        while stack:
            x = stack.pop()
            for y, _ in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comp.sort()
        comps.append(tuple(comp))
    return comps


def induced_subgraph(G: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on the given vertices, relabeled in sorted order."""
    vs = sorted(vertices)
    index = {v: i for i, v in enumerate(vs)}
    edges = tuple(
        (index[u], index[v], m)
        for u, v, m in G.edges
        if u in index and v in index
    )
    loops = tuple((index[v], m) for v, m in G.loops if v in index)
    return Graph(len(vs), edges, loops)


def components(G: Graph) -> List[Graph]:
    """Maximal connected subgraphs; empty list for the empty graph."""
    sets = component_vertex_sets(G)
    if len(sets) == 1 and len(sets[0]) == G.n:
        return [G]
    return [induced_subgraph(G, vs) for vs in sets]


def components_with_vertices(G: Graph) -> List[Tuple[Graph, Tuple[int, ...]]]:
    """Components paired with their original vertex indices."""
    return [(induced_subgraph(G, vs), vs) for vs in component_vertex_sets(G)]


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(component_vertex_sets(G)) == 1


def is_bipartite(G: Graph) -> bool:
    """True iff G has no loop and no odd cycle; parallels are harmless."""
    if G.loops:
        return False
    adj = G.adjacency()
    color = [-1] * G.n
    for start in range(G.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for y, _ in adj[x]:
                if color[y] == -1:
                    color[y] = color[x] ^ 1
                    stack.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def phi(G: Graph) -> int:
    """Parity value (|V| mod 2) + 2*(|E| mod 2), loops and parallels counted."""
    return (G.n % 2) + 2 * (G.edge_count % 2)


# --- text format -----------------------------------------------------------
#
# Line-based format: '#' starts a comment, a single header line "v N"
# declares vertices 0..N-1, and each subsequent line "e U V" adds one edge
# instance ("e U U" is a loop). Anything else is rejected.

def parse_graph(text: str, source: str = "<string>") -> Graph:
    n: Optional[int] = None
    edges: List[Tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "v":
            if n is not None:
                raise GraphInputError(f"{source}:{lineno}: duplicate 'v' header")
            if len(fields) != 2 or not fields[1].isdigit():
                raise GraphInputError(f"{source}:{lineno}: expected 'v N'")
            n = int(fields[1])
        elif fields[0] == "e":
            if n is None:
                raise GraphInputError(f"{source}:{lineno}: 'e' line before 'v' header")
            if len(fields) != 3 or not fields[1].isdigit() or not fields[2].isdigit():
                raise GraphInputError(f"{source}:{lineno}: expected 'e U V'")
            u, v = int(fields[1]), int(fields[2])
            if u >= n or v >= n:
                raise GraphInputError(
                    f"{source}:{lineno}: endpoint out of range 0..{n - 1}")
            edges.append((u, v))
        else:
            raise GraphInputError(f"{source}:{lineno}: unrecognized line {line!r}")
    if n is None:
        raise GraphInputError(f"{source}: missing 'v N' header line")
    return build_graph(n, edges)


def parse_graph_file(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read(), source=path)


def format_graph(G: Graph, comment: str = "") -> str:
    """Serialize a graph; the output parses back to an equal graph."""
    lines: List[str] = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    lines.append(f"v {G.n}")
    for u, v, m in G.edges:
        lines.extend([f"e {u} {v}"] * m)
    for v, m in G.loops:
        lines.extend([f"e {v} {v}"] * m)
    return "\n".join(lines) + "\n"
