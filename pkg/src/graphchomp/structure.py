"""Structure of positions with a single odd cycle.

For a connected, loop-free graph with exactly one cycle, of odd length, this
module locates the cycle, the attachment vertices (cycle vertices of degree
above 2), the trees hanging from them, and the distance layers of a tree
from its attachment vertex.

A tree vertex is *telescoping* when deleting it and reducing leaves nothing
of the tree attached to the cycle: the cycle's component of the reduced
position is the bare cycle. A reduced one-attachment graph has at most one
telescoping vertex; ``find_telescoping`` checks that while searching and
treats a second hit as an internal consistency failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .graph import DeleteVertex, Graph, apply_move, components_with_vertices
from .reducer import cancel_once, simplify_multiedges, reduce as _reduce


class StructureError(ValueError):
    """Raised when a graph is outside the one-odd-cycle shape expected here."""


class TelescopingUniquenessError(RuntimeError):
    """Two distinct telescoping vertices were found; this should be impossible."""


@dataclass(frozen=True)
class UnicyclicInfo:
    """The cycle, its attachment vertices, and the tree hanging at each one.

    ``tree_parts[a]`` holds the non-cycle vertices of the tree attached at
    ``a``; the tree meets the cycle only at ``a`` itself.
    """

    cycle_vertices: Tuple[int, ...]
    attachment_vertices: Tuple[int, ...]
    tree_parts: Dict[int, Tuple[int, ...]]


@dataclass(frozen=True)
class LayerProfile:
    """Sizes |S_1|..|S_h| and degree sums of the tree layers at distance x."""

    sizes: Tuple[int, ...]
    total_degrees: Tuple[int, ...]


def unicyclic_info(G: Graph) -> UnicyclicInfo:
    """Locate the unique odd cycle of a connected loop-free graph.

    Raises StructureError when the graph is disconnected, has loops, has no
    cycle or more than one independent cycle, or the cycle is even (a
    parallel pair counts as a 2-cycle).
    """
    if G.n == 0:
        raise StructureError("empty graph has no cycle")
    if G.loops:
        raise StructureError("graph has loops")
    comps = components_with_vertices(G)
    if len(comps) != 1:
        raise StructureError("graph is not connected")
    extra = G.edge_count - (G.n - 1)
    if extra < 1:
        raise StructureError("graph has no cycle")
    if extra > 1:
        raise StructureError("graph has more than one independent cycle")
    if any(m > 1 for _, _, m in G.edges):
        raise StructureError("parallel pair forms an even 2-cycle")

    cycle = _find_cycle(G)
    if len(cycle) % 2 == 0:
        raise StructureError(f"cycle has even length {len(cycle)}")

    on_cycle = set(cycle)
    degs = G.degrees()
    attachments = tuple(v for v in cycle if degs[v] > 2)

    # removing the cycle vertices leaves the hanging trees; each tree touches
    # the cycle at exactly one attachment vertex
    adj = G.adjacency()
    seen = set(on_cycle)
    tree_parts: Dict[int, List[int]] = {a: [] for a in attachments}
    for a in attachments:
        stack = [u for u, _ in adj[a] if u not in on_cycle]
        for u in stack:
            seen.add(u)
        part = list(stack)
        while stack:
            x = stack.pop()
            for y, _ in adj[x]:
                if y not in seen:
                    seen.add(y)
                    part.append(y)
                    stack.append(y)
        tree_parts[a] = sorted(part)
    return UnicyclicInfo(
        cycle_vertices=tuple(cycle),
        attachment_vertices=attachments,
        tree_parts={a: tuple(p) for a, p in tree_parts.items()},
    )


def _find_cycle(G: Graph) -> List[int]:
    adj = G.adjacency()
    parent = [-1] * G.n
    state = [0] * G.n  # 0 unseen, 1 on stack, 2 done
    stack: List[Tuple[int, int]] = [(0, -1)]
    while stack:
        v, par = stack.pop()
        if v < 0:
            state[~v] = 2
            continue
        if state[v]:
            continue
        state[v] = 1
        parent[v] = par
        stack.append((~v, 0))
        for u, _ in adj[v]:
            if state[u] == 0:
                stack.append((u, v))
            elif state[u] == 1 and u != par:
                # back edge closes the unique cycle
                path = [v]
                x = v
                while x != u:
                    x = parent[x]
                    path.append(x)
                return path
    raise StructureError("no cycle found")


def distance_layers(G: Graph, A: int) -> LayerProfile:
    """BFS layers of the hanging tree from the unique attachment vertex A.

    A bare cycle has no attachments and an empty profile; A must then simply
    be a cycle vertex.
    """
    info = unicyclic_info(G)
    if info.attachment_vertices == ():
        if A not in info.cycle_vertices:
            raise StructureError(f"{A} is not a cycle vertex")
    elif info.attachment_vertices != (A,):
        raise StructureError(
            f"expected {A} to be the unique attachment vertex, "
            f"got {info.attachment_vertices}")
    on_cycle = set(info.cycle_vertices)
    adj = G.adjacency()
    degs = G.degrees()
    sizes: List[int] = []
    total_degrees: List[int] = []
    seen = {A}
    frontier = [u for u, _ in adj[A] if u not in on_cycle]
    while frontier:
        seen.update(frontier)
        sizes.append(len(frontier))
        total_degrees.append(sum(degs[v] for v in frontier))
        nxt: List[int] = []
        for v in frontier:
            for u, _ in adj[v]:
                if u not in seen:
                    nxt.append(u)
        frontier = nxt
    return LayerProfile(tuple(sizes), tuple(total_degrees))


def _check_reduced(G: Graph) -> None:
    if simplify_multiedges(G) != G or cancel_once(G) is not None:
        raise StructureError("graph is not reduced")


def _cycle_component_is_bare(R: Graph, cycle_len: int) -> bool:
    for comp, _ in components_with_vertices(R):
        if comp.edge_count >= comp.n and comp.n > 0:
            # the unique cycle lives here
            return (comp.n == cycle_len
                    and comp.edge_count == cycle_len
                    and all(d == 2 for d in comp.degrees()))
    raise StructureError("cycle disappeared during reduction")


def is_telescoping(G: Graph, v: int) -> bool:
    """Does deleting v and reducing strip the tree down to the cycle?

    G must be reduced, with a single odd cycle and exactly one attachment
    vertex; v must be a tree vertex.
    """
    info = unicyclic_info(G)
    if len(info.attachment_vertices) != 1:
        raise StructureError(
            f"expected exactly one attachment vertex, got "
            f"{len(info.attachment_vertices)}")
    _check_reduced(G)
    A = info.attachment_vertices[0]
    if v in set(info.cycle_vertices):
        raise StructureError(f"vertex {v} is on the cycle, not in the tree")
    if v not in set(info.tree_parts[A]):
        raise StructureError(f"vertex {v} is not a tree vertex")
    R = _reduce(apply_move(G, DeleteVertex(v)))
    return _cycle_component_is_bare(R, len(info.cycle_vertices))


def find_telescoping(G: Graph) -> Optional[int]:
    """The unique telescoping vertex of G, or None.

    Every tree vertex is tested; finding two positives raises
    TelescopingUniquenessError since uniqueness is a proved property of
    reduced one-attachment graphs.
    """
    info = unicyclic_info(G)
    if len(info.attachment_vertices) == 0:
        _check_reduced(G)
        return None
    if len(info.attachment_vertices) != 1:
        raise StructureError(
            f"expected at most one attachment vertex, got "
            f"{len(info.attachment_vertices)}")
    A = info.attachment_vertices[0]
    hits = [v for v in info.tree_parts[A] if is_telescoping(G, v)]
    if len(hits) > 1:
        raise TelescopingUniquenessError(
            f"distinct telescoping vertices {hits}: uniqueness violated")
    return hits[0] if hits else None
