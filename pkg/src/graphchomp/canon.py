"""Canonical keys for graphs up to isomorphism.

Two graphs get equal keys if and only if they are isomorphic (respecting a
distinguished root vertex when one is given). Keys are deterministic byte
strings, suitable as memoization keys and stable across runs and platforms.

Connected trees are encoded with the classic rooted-subtree encoding,
rooted at the given root or at the tree center. Other unrooted graphs are
split into their 2-core plus hanging trees: each hanging tree collapses to
a rooted code attached as a color of its core vertex, and the core alone
goes through iterative color refinement with exhaustive individualization
inside the remaining cells, taking the lexicographically least relabeling.
The fallback is exponential in the worst case but cores here stay small and
refinement usually leaves few cells.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .graph import Graph


@dataclass(frozen=True)
class CanonKey:
    """Canonical byte encoding of a graph; ``rooted`` marks root-preserving keys."""

    data: bytes
    rooted: bool = False

    def hex(self) -> str:
        return self.data.hex()

    @classmethod
    def from_hex(cls, text: str) -> "CanonKey":
        data = bytes.fromhex(text)
        return cls(data, rooted=data.startswith(b"R"))

    def __lt__(self, other: "CanonKey") -> bool:
        return self.data < other.data


_cache: Dict[Tuple[Graph, Optional[int]], CanonKey] = {}


def clear_cache() -> None:
    _cache.clear()


def cache_size() -> int:
    return len(_cache)


def canonical_key(G: Graph, root: Optional[int] = None) -> CanonKey:
    """Isomorphism-invariant key of G, optionally fixing a root vertex."""
    if root is not None and not (0 <= root < G.n):
        raise ValueError(f"root {root} not a vertex of a graph on {G.n} vertices")
    ck = _cache.get((G, root))
    if ck is None:
        ck = _compute(G, root)
        _cache[(G, root)] = ck
    return ck


def _compute(G: Graph, root: Optional[int]) -> CanonKey:
    rooted = root is not None
    prefix = b"R" if rooted else b"U"
    if G.n == 0:
        return CanonKey(prefix + b"0", rooted)
    if _is_tree(G):
        adj = G.adjacency()
        if root is not None:
            body = _rooted_code(adj, root)
        else:
            body = min(_rooted_code(adj, c) for c in _tree_centers(adj, G.n))
        return CanonKey(prefix + b"T" + body, rooted)
    if root is None:
        return CanonKey(prefix + b"G" + _core_code(G), rooted)
    return CanonKey(prefix + b"G" + _plain_code(G, root), rooted)


def _is_tree(G: Graph) -> bool:
    # connected, loop-free, simple and |E| = |V| - 1
    if G.loops or G.n == 0:
        return False
    if any(m != 1 for _, _, m in G.edges):
        return False
    if len(G.edges) != G.n - 1:
        return False
    adj = G.adjacency()
    seen = [False] * G.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for y, _ in adj[x]:
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == G.n


# --- trees ------------------------------------------------------------------

def _rooted_code(adj, root: int) -> bytes:
    # iterative post-order; code(v) = "(" + sorted child codes + ")"
    codes: Dict[int, bytes] = {}
    stack: List[Tuple[int, int, bool]] = [(root, -1, False)]
    while stack:
        v, parent, expanded = stack.pop()
        if expanded:
            child_codes = sorted(codes[u] for u, _ in adj[v] if u != parent)
            codes[v] = b"(" + b"".join(child_codes) + b")"
        else:
            stack.append((v, parent, True))
            for u, _ in adj[v]:
                if u != parent:
                    stack.append((u, v, False))
    return codes[root]


def _tree_centers(adj, n: int) -> List[int]:
    if n == 1:
        return [0]
    deg = [len(adj[v]) for v in range(n)]
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt: List[int] = []
        for v in layer:
            deg[v] = 0
            for u, _ in adj[v]:
                if deg[u] > 0:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return layer


# --- core plus hanging trees -------------------------------------------------

def _core_code(G: Graph) -> bytes:
    """Encode an unrooted non-tree graph via its 2-core.

    Vertices of degree at most 1 are stripped repeatedly. What remains is
    the core; every stripped piece is a simple tree hanging off one core
    vertex by a single edge (or a free tree component, for disconnected
    input). Hanging trees become part of their anchor's color, so only the
    core needs the expensive search.
    """
    n = G.n
    adj = G.adjacency()
    deg = list(G.degrees())
    in_core = [True] * n
    stack = [v for v in range(n) if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if not in_core[v]:
            continue
        in_core[v] = False
        for u, _ in adj[v]:
            if in_core[u]:
                deg[u] -= 1
                if deg[u] <= 1:
                    stack.append(u)

    core = [v for v in range(n) if in_core[v]]
    hang: Dict[int, List[bytes]] = {}
    free_trees: List[bytes] = []
    seen = [False] * n
    for start in range(n):
        if in_core[start] or seen[start]:
            continue
        comp = [start]
        seen[start] = True
        anchor_child = -1
        anchor = -1
        stack = [start]
        while stack:
            x = stack.pop()
            for y, _ in adj[x]:
                if in_core[y]:
                    anchor, anchor_child = y, x
                elif not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        sub_adj = {v: [u for u, _ in adj[v] if not in_core[u]] for v in comp}
        if anchor == -1:
            centers = _strip_centers(sub_adj, comp)
            free_trees.append(min(_rooted_code_dict(sub_adj, c) for c in centers))
        else:
            hang.setdefault(anchor, []).append(
                _rooted_code_dict(sub_adj, anchor_child))

    if not core:
        return b"F" + b"".join(sorted(free_trees))

    hang_code = {v: b"".join(sorted(codes)) for v, codes in hang.items()}
    pos_of = {v: i for i, v in enumerate(core)}
    core_adj: List[List[Tuple[int, int]]] = [[] for _ in core]
    for u, v, m in G.edges:
        if in_core[u] and in_core[v]:
            core_adj[pos_of[u]].append((pos_of[v], m))
            core_adj[pos_of[v]].append((pos_of[u], m))
    loops = [0] * len(core)
    for v, m in G.loops:
        loops[pos_of[v]] = m
    init = [
        (loops[i], len(core_adj[i]), sum(m for _, m in core_adj[i]),
         hang_code.get(v, b""))
        for i, v in enumerate(core)
    ]
    core_edges = tuple(
        (pos_of[u], pos_of[v], m)
        for u, v, m in G.edges
        if in_core[u] and in_core[v]
    )
    extras = tuple(sorted(hang_code.items()))
    body = _search_min(
        len(core), core_adj, core_edges,
        tuple((pos_of[v], m) for v, m in G.loops),
        init, None,
        extra=lambda pos: tuple(sorted(
            (pos[pos_of[v]], code) for v, code in extras)),
    )
    return repr((body, tuple(sorted(free_trees)))).encode("ascii")


def _strip_centers(sub_adj: Dict[int, List[int]], comp: List[int]) -> List[int]:
    if len(comp) == 1:
        return comp
    deg = {v: len(sub_adj[v]) for v in comp}
    layer = [v for v in comp if deg[v] <= 1]
    remaining = len(comp)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for u in sub_adj[v]:
                if deg[u] > 0:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return layer


def _rooted_code_dict(sub_adj: Dict[int, List[int]], root: int) -> bytes:
    codes: Dict[int, bytes] = {}
    stack: List[Tuple[int, int, bool]] = [(root, -1, False)]
    while stack:
        v, parent, expanded = stack.pop()
        if expanded:
            child_codes = sorted(codes[u] for u in sub_adj[v] if u != parent)
            codes[v] = b"(" + b"".join(child_codes) + b")"
        else:
            stack.append((v, parent, True))
            for u in sub_adj[v]:
                if u != parent:
                    stack.append((u, v, False))
    return codes[root]


# --- refinement search --------------------------------------------------------

def _plain_code(G: Graph, root: Optional[int]) -> bytes:
    """Whole-graph search, used for rooted non-tree keys."""
    n = G.n
    adj = [list(pairs) for pairs in G.adjacency()]
    loop = [0] * n
    for v, m in G.loops:
        loop[v] = m
    deg = G.degrees()
    init = [(1 if v == root else 0, loop[v], deg[v]) for v in range(n)]
    body = _search_min(n, adj, G.edges, G.loops, init, root, extra=None)
    return repr(body).encode("ascii")


def _search_min(n: int, adj, edges, loops, init, root, extra) -> Tuple:
    """Minimal leaf encoding over all refinement-compatible labelings."""
    rank = {sig: i for i, sig in enumerate(sorted(set(init)))}
    colors = _refine([rank[sig] for sig in init], adj, n)
    best: Optional[Tuple] = None
    stack = [colors]
    while stack:
        cols = stack.pop()
        cell = _first_nonsingleton(cols, n)
        if cell is None:
            pos = [0] * n
            for p, v in enumerate(sorted(range(n), key=cols.__getitem__)):
                pos[v] = p
            enc_edges = []
            for u, v, m in edges:
                a, b = pos[u], pos[v]
                if a > b:
                    a, b = b, a
                enc_edges.append((a, b, m))
            enc_edges.sort()
            enc_loops = sorted((pos[v], m) for v, m in loops)
            cand = (
                n,
                -1 if root is None else pos[root],
                tuple(enc_edges),
                tuple(enc_loops),
                extra(pos) if extra is not None else (),
            )
            if best is None or cand < best:
                best = cand
            continue
        for v in cell:
            branched = cols.copy()
            branched[v] = -1
            stack.append(_refine(branched, adj, n))
    assert best is not None
    return best


def _refine(colors: List[int], adj, n: int) -> List[int]:
    ncolors = len(set(colors))
    while ncolors < n:
        sigs = [
            (colors[v], tuple(sorted((colors[u], m) for u, m in adj[v])))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            break
        ncolors = len(rank)
    return colors


def _first_nonsingleton(colors: List[int], n: int) -> Optional[List[int]]:
    cells: Dict[int, List[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    for c in sorted(cells):
        if len(cells[c]) > 1:
            return cells[c]
    return None
