"""Value-preserving simplifications.

Three rewrites that never change the game value of a position:

* parity reduction: m parallel edges between a pair (or m loops at a vertex)
  become m mod 2 copies;
* pendant cancellation: two isomorphic pieces hanging off the same vertex by
  single bridge edges are deleted together;
* fixing an involution: an order-2 automorphism that never maps a vertex to
  a neighbor lets the position be replaced by its fixed subgraph.

``reduce`` drives the first two to a fixpoint; the result is unique up to
isomorphism no matter the cancellation order. Involutions are validated and
applied only when supplied by the caller; they are never searched for.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .canon import CanonKey, canonical_key
from .graph import Graph, induced_subgraph


class InvolutionError(ValueError):
    """Raised when a supplied vertex map fails one of the required conditions."""


@dataclass(frozen=True)
class PendantPiece:
    """A subgraph hanging off ``anchor`` by the single bridge edge anchor-gate.

    ``vertices`` is the gate's side of the bridge (gate included, anchor
    excluded) and contains no other neighbor of the anchor. ``piece_key`` is
    the canonical key of that side rooted at the gate, so equal keys mean the
    pieces match under a gate-preserving isomorphism.
    """

    anchor: int
    gate: int
    vertices: Tuple[int, ...]
    piece_key: CanonKey


@dataclass(frozen=True)
class CancelStep:
    """One cancellation: both pieces at ``anchor`` had ``piece_size`` vertices."""

    anchor: int
    piece_size: int
    piece_key: CanonKey


def simplify_multiedges(G: Graph) -> Graph:
    """Reduce every parallel class and loop count mod 2; vertices unchanged."""
    edges = tuple((u, v, 1) for u, v, m in G.edges if m % 2 == 1)
    loops = tuple((v, 1) for v, m in G.loops if m % 2 == 1)
    if edges == G.edges and loops == G.loops:
        return G
    return Graph(G.n, edges, loops)


def pendant_pieces(G: Graph, s: int) -> List[PendantPiece]:
    """All pendant pieces at s, ordered by gate vertex."""
    if not (0 <= s < G.n):
        raise ValueError(f"vertex {s} not in graph on {G.n} vertices")
    adj = G.adjacency()
    out: List[PendantPiece] = []
    nbrs = [v for v, _ in adj[s]]
    for v, m in adj[s]:
        if m != 1:
            continue
        # flood from v with s removed
        seen = {v}
        stack = [v]
        ok = True
        while stack and ok:
            x = stack.pop()
            for y, _ in adj[x]:
                if y == s or y in seen:
                    continue
                seen.add(y)
                stack.append(y)
        if any(w in seen for w in nbrs if w != v):
            continue  # not a bridge, or the side reaches s another way
        vertices = tuple(sorted(seen))
        piece = induced_subgraph(G, vertices)
        key = canonical_key(piece, root=vertices.index(v))
        out.append(PendantPiece(s, v, vertices, key))
    return out


def _find_cancellation(G: Graph, order: str) -> Optional[Tuple[int, PendantPiece, PendantPiece]]:
    best: Optional[Tuple[int, bytes]] = None
    best_pair: Optional[Tuple[int, PendantPiece, PendantPiece]] = None
    pick_last = order == "last"
    vertex_range = range(G.n - 1, -1, -1) if pick_last else range(G.n)
    for s in vertex_range:
        groups: Dict[CanonKey, List[PendantPiece]] = {}
        for piece in pendant_pieces(G, s):
            groups.setdefault(piece.piece_key, []).append(piece)
        for key, pieces in groups.items():
            if len(pieces) < 2:
                continue
            rank = (s, key.data)
            if best is None or (rank > best if pick_last else rank < best):
                best = rank
                chosen = pieces[-2:] if pick_last else pieces[:2]
                best_pair = (s, chosen[0], chosen[1])
        if best_pair is not None:
            # vertices are scanned in preference order, so the first hit wins
            break
    return best_pair


def cancel_once(G: Graph, order: str = "first") -> Optional[Graph]:
    """Apply one cancellation if any vertex has two matching pendant pieces.

    Returns None when the graph has no cancellation. The choice is
    deterministic: smallest (anchor, piece key) with ``order='first'``,
    largest with ``order='last'``.
    """
    found = _find_cancellation(G, order)
    if found is None:
        return None
    _, p1, p2 = found
    removed = set(p1.vertices) | set(p2.vertices)
    keep = [v for v in range(G.n) if v not in removed]
    return induced_subgraph(G, keep)


def reduce(G: Graph, order: str = "first") -> Graph:
    """Simplify multiplicities, then cancel pendant pairs until none remain."""
    reduced, _, _ = reduce_with_log(G, order)
    return reduced


def reduce_with_log(G: Graph, order: str = "first"
                    ) -> Tuple[Graph, List[CancelStep], Tuple[int, ...]]:
    """Like :func:`reduce`, also reporting each cancellation.

    Returns ``(reduced, steps, mapping)`` where ``steps`` lists every
    cancellation with its anchor expressed in the labels of the input graph,
    and ``mapping[i]`` is the input label of vertex i of the result.
    """
    current = simplify_multiedges(G)
    to_orig = tuple(range(G.n))
    steps: List[CancelStep] = []
    while True:
        found = _find_cancellation(current, order)
        if found is None:
            return current, steps, to_orig
        s, p1, p2 = found
        steps.append(CancelStep(to_orig[s], len(p1.vertices), p1.piece_key))
        removed = set(p1.vertices) | set(p2.vertices)
        keep = [v for v in range(current.n) if v not in removed]
        current = induced_subgraph(current, keep)
        to_orig = tuple(to_orig[v] for v in keep)


def apply_involution(G: Graph, tau: Union[Sequence[int], Dict[int, int]]) -> Graph:
    """Replace G by the subgraph fixed by the involution tau.

    ``tau`` must be a graph automorphism of order at most 2 that never maps
    a vertex to one of its neighbors. The result keeps exactly the vertices
    with tau(v) == v, the edges between them, and their loops; its value
    equals the value of G.
    """
    if isinstance(tau, dict):
        mapping = [tau.get(v, -1) for v in range(G.n)]
    else:
        mapping = list(tau)
    if sorted(mapping) != list(range(G.n)):
        raise InvolutionError("not a permutation of the vertex set")
    for v in range(G.n):
        if mapping[mapping[v]] != v:
            raise InvolutionError(f"not an involution: square moves vertex {v}")
    # automorphism: relabeling by tau must reproduce the same graph
    pair_mult: Dict[Tuple[int, int], int] = {}
    for u, v, m in G.edges:
        a, b = mapping[u], mapping[v]
        if a > b:
            a, b = b, a
        pair_mult[(a, b)] = pair_mult.get((a, b), 0) + m
    mapped_edges = tuple((u, v, m) for (u, v), m in sorted(pair_mult.items()))
    mapped_loops = tuple(sorted((mapping[v], m) for v, m in G.loops))
    if mapped_edges != G.edges or mapped_loops != G.loops:
        raise InvolutionError("not an automorphism: edge structure not preserved")
    for v in range(G.n):
        if mapping[v] != v and G.multiplicity(v, mapping[v]) > 0:
            raise InvolutionError(
                f"vertex {v} is adjacent to its image {mapping[v]}")
    fixed = [v for v in range(G.n) if mapping[v] == v]
    return induced_subgraph(G, fixed)
