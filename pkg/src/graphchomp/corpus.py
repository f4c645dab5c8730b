"""Test corpora: seeded random graphs and exhaustive small enumerations.

The random corpus keeps edge counts modest so exact evaluation stays cheap;
the bipartite generator builds random forests and then only adds chords
between opposite color classes, which can only create even cycles.

Rooted trees are enumerated as canonical nested codes: a code is the sorted
tuple of child codes. With ``distinct_children`` every sibling multiset is
duplicate-free, which for a tree hanging off a cycle is exactly the
no-cancellation (reduced) condition.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from random import Random
from typing import Iterator, List, Optional, Sequence, Tuple

from .canon import canonical_key
from .graph import Graph, build_graph, induced_subgraph

TreeCode = Tuple  # nested tuples; the empty tuple is a single vertex


def random_graph(rng: Random, max_vertices: int = 9, max_edges: int = 12,
                 allow_loops: bool = True) -> Graph:
    """Random small multigraph; parallels and loops arise naturally."""
    n = rng.randint(0, max_vertices)
    if n == 0:
        return build_graph(0)
    edges = []
    for _ in range(rng.randint(0, max_edges)):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v and not allow_loops:
            continue
        edges.append((u, v))
    return build_graph(n, edges)


def random_bipartite(rng: Random, max_vertices: int = 9) -> Graph:
    """Random forest plus random cross-class chords: always bipartite."""
    n = rng.randint(0, max_vertices)
    if n == 0:
        return build_graph(0)
    edges = []
    color = [0] * n
    for v in range(1, n):
        if rng.random() < 0.85:
            parent = rng.randrange(v)
            edges.append((parent, v))
            color[v] = color[parent] ^ 1
        else:
            color[v] = rng.randint(0, 1)
    sides = [[v for v in range(n) if color[v] == 0],
             [v for v in range(n) if color[v] == 1]]
    if sides[0] and sides[1]:
        for _ in range(rng.randint(0, 4)):
            edges.append((rng.choice(sides[0]), rng.choice(sides[1])))
    return build_graph(n, edges)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """G and H side by side; H's vertices are shifted up by G.n."""
    off = G.n
    edges = G.edges + tuple((u + off, v + off, m) for u, v, m in H.edges)
    loops = G.loops + tuple((v + off, m) for v, m in H.loops)
    return Graph(G.n + H.n, edges, loops)


# --- rooted trees -------------------------------------------------------------

def _partitions(n: int, cap: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of n into parts <= cap, non-increasing."""
    if n == 0:
        yield ()
        return
    cap = n if cap is None else min(cap, n)
    for first in range(cap, 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def rooted_trees(size: int, distinct_children: bool = False) -> Tuple[TreeCode, ...]:
    """All rooted trees with ``size`` vertices, as canonical codes."""
    if size < 1:
        return ()
    if size == 1:
        return ((),)
    out: List[TreeCode] = []
    for part in _partitions(size - 1):
        counts: dict[int, int] = {}
        for s in part:
            counts[s] = counts.get(s, 0) + 1
        pools = []
        for s, c in sorted(counts.items()):
            opts = rooted_trees(s, distinct_children)
            chooser = combinations if distinct_children else combinations_with_replacement
            pools.append(list(chooser(opts, c)))
        for combo in product(*pools):
            children: List[TreeCode] = []
            for group in combo:
                children.extend(group)
            out.append(tuple(sorted(children)))
    return tuple(sorted(set(out)))


def tree_size(code: TreeCode) -> int:
    return 1 + sum(tree_size(c) for c in code)


def tree_edges(code: TreeCode, root: int, next_index: int) -> Tuple[List[Tuple[int, int]], int]:
    """Edges of the coded tree with the given root index; returns next free index."""
    edges: List[Tuple[int, int]] = []
    for child in code:
        idx = next_index
        next_index += 1
        edges.append((root, idx))
        sub, next_index = tree_edges(child, idx, next_index)
        edges.extend(sub)
    return edges, next_index


def cycle_with_trees(codes: Sequence[TreeCode], cycle_len: int = 3) -> Graph:
    """An odd cycle with the coded trees hung at cycle vertices 0, 1, ...

    Tree i is rooted at cycle vertex i; cycle vertices are 0..cycle_len-1
    and tree vertices follow.
    """
    if len(codes) > cycle_len:
        raise ValueError("more trees than cycle vertices")
    edges = [(i, (i + 1) % cycle_len) for i in range(cycle_len)]
    nxt = cycle_len
    for i, code in enumerate(codes):
        sub, nxt = tree_edges(code, i, nxt)
        edges.extend(sub)
    return build_graph(nxt, edges)


# --- multisets of path lengths -------------------------------------------------

def path_multisets(max_total: int, max_parts: Optional[int] = None
                   ) -> Iterator[Tuple[int, ...]]:
    """All multisets of positive path lengths with bounded total (incl. empty)."""
    for total in range(max_total + 1):
        for part in _partitions(total):
            if max_parts is None or len(part) <= max_parts:
                yield part


# --- subgraph enumeration -------------------------------------------------------

def subgraph_positions(G: Graph, budget: Optional[int] = None
                       ) -> Iterator[Tuple[Graph, int]]:
    """Subgraphs of G up to isomorphism, paired with their labeled count.

    Every vertex subset is combined with every sub-multiset of its induced
    edges; canonical keys collapse duplicates. ``budget`` caps the number of
    labeled subgraphs inspected and raises BudgetExhausted beyond it.
    """
    from .engine import BudgetExhausted

    seen: dict = {}
    order: List[Graph] = []
    counts: List[int] = []
    inspected = 0
    for mask in range(1 << G.n):
        vs = [v for v in range(G.n) if mask >> v & 1]
        H = induced_subgraph(G, vs)
        classes = [(u, v, m) for u, v, m in H.edges]
        classes += [(v, v, m) for v, m in H.loops]
        for choice in product(*(range(m + 1) for _, _, m in classes)):
            inspected += 1
            if budget is not None and inspected > budget:
                raise BudgetExhausted(
                    f"subgraph enumeration budget exhausted after "
                    f"{inspected - 1} labeled subgraphs")
            pairs = []
            for (u, v, _), c in zip(classes, choice):
                pairs.extend([(u, v)] * c)
            S = build_graph(H.n, pairs)
            key = canonical_key(S)
            idx = seen.get(key)
            if idx is None:
                seen[key] = len(order)
                order.append(S)
                counts.append(1)
            else:
                counts[idx] += 1
    yield from zip(order, counts)
