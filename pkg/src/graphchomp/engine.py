"""Exact game values by memoized search.

The value of a position is the minimal excludant (mex) of the values of its
options; disconnected positions split into components whose values combine
by xor (nim-addition). Components are memoized under their canonical keys,
so isomorphic positions are evaluated once.

Values are exact or the search raises :class:`BudgetExhausted`; there is no
approximation path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Set

from .canon import CanonKey, canonical_key
from .graph import (
    DeleteEdge,
    DeleteVertex,
    Graph,
    Move,
    apply_move,
    component_vertex_sets,
    delete_edge,
    delete_vertex,
    induced_subgraph,
)

DEFAULT_BUDGET = 10 ** 8

VALUE_LIMIT = 2 ** 32  # values are asserted, not silently assumed, to fit 32 bits


class BudgetExhausted(RuntimeError):
    """Raised when a call exceeds its table-lookup budget; no value is returned."""


class GrundyTable:
    """Persistent store CanonKey -> game value, with hit/miss/insert counters.

    A key, once bound, is never rebound to a different value. The table also
    keeps a transparent per-labeling front cache so that repeated identical
    labelings skip canonicalization.
    """

    def __init__(self) -> None:
        self.entries: Dict[CanonKey, int] = {}
        self._raw: Dict[Graph, int] = {}
        self.hits = 0
        self.misses = 0
        self.inserts = 0

    def __len__(self) -> int:
        return len(self.entries)

    def bind(self, key: CanonKey, value: int) -> None:
        assert 0 <= value < VALUE_LIMIT, f"value {value} exceeds 32-bit width"
        old = self.entries.get(key)
        if old is not None:
            if old != value:
                raise RuntimeError(
                    f"table rebind: key bound to {old}, refusing {value}")
            return
        self.entries[key] = value
        self.inserts += 1

    def stats(self) -> Dict[str, int]:
        return {
            "entries": len(self.entries),
            "hits": self.hits,
            "misses": self.misses,
            "inserts": self.inserts,
        }


class _Budget:
    __slots__ = ("remaining",)

    def __init__(self, limit: int) -> None:
        self.remaining = limit

    def spend(self) -> None:
        self.remaining -= 1
        if self.remaining < 0:
            raise BudgetExhausted(
                "table-lookup budget exhausted; result would be incomplete")


def mex(values: Iterable[int]) -> int:
    """Smallest non-negative integer not in ``values``."""
    present = set(values)
    m = 0
    while m in present:
        m += 1
    return m


def nim_sum(values: Iterable[int]) -> int:
    """Xor fold (binary addition without carry); empty input gives 0."""
    total = 0
    for v in values:
        total ^= v
    return total


def legal_moves(G: Graph) -> List[Move]:
    """All moves, one per distinct effect.

    One vertex deletion per vertex; one edge deletion per parallel class and
    per loop class (parallel copies act identically, so a single
    representative with instance 0 stands for the class).
    """
    moves: List[Move] = [DeleteVertex(v) for v in range(G.n)]
    moves.extend(DeleteEdge(u, v) for u, v, _ in G.edges)
    moves.extend(DeleteEdge(v, v) for v, _ in G.loops)
    return moves


def edge_instance_moves(G: Graph) -> List[Move]:
    """Variant generator with one move per edge instance (no deduplication)."""
    moves: List[Move] = [DeleteVertex(v) for v in range(G.n)]
    for u, v, m in G.edges:
        moves.extend(DeleteEdge(u, v, i) for i in range(m))
    for v, m in G.loops:
        moves.extend(DeleteEdge(v, v, i) for i in range(m))
    return moves


@dataclass(frozen=True)
class MoveValuation:
    """A legal move together with the exact value of the resulting position."""

    move: Move
    value: int


def grundy(G: Graph, table: Optional[GrundyTable] = None,
           budget: int = DEFAULT_BUDGET) -> int:
    """Exact game value of G; empty graph is 0."""
    if table is None:
        table = GrundyTable()
    return _evaluate(G, table, _Budget(budget))


def move_values(G: Graph, table: Optional[GrundyTable] = None,
                budget: int = DEFAULT_BUDGET) -> List[MoveValuation]:
    """Every legal move of G with the exact value of its option."""
    if table is None:
        table = GrundyTable()
    b = _Budget(budget)
    return [
        MoveValuation(move, _evaluate(apply_move(G, move), table, b))
        for move in legal_moves(G)
    ]


def winning_moves(G: Graph, table: Optional[GrundyTable] = None,
                  budget: int = DEFAULT_BUDGET) -> List[Move]:
    """Moves to value-0 options; empty exactly when G itself has value 0."""
    return [mv.move for mv in move_values(G, table, budget) if mv.value == 0]


# --- internals ---------------------------------------------------------------

def _evaluate(G: Graph, table: GrundyTable, budget: _Budget) -> int:
    if G.n == 0:
        return 0
    sets = component_vertex_sets(G)
    if len(sets) == 1:
        return _component_value(G, table, budget)
    total = 0
    for vs in sets:
        total ^= _component_value(induced_subgraph(G, vs), table, budget)
    return total


def _component_value(C: Graph, table: GrundyTable, budget: _Budget) -> int:
    budget.spend()
    cached = table._raw.get(C)
    if cached is not None:
        table.hits += 1
        return cached
    key = canonical_key(C)
    value = table.entries.get(key)
    if value is not None:
        table.hits += 1
        table._raw[C] = value
        return value
    table.misses += 1

    values: Set[int] = set()
    for child in _option_graphs(C):
        values.add(_evaluate(child, table, budget))
    value = mex(values)
    table.bind(key, value)
    table._raw[C] = value
    return value


def _option_graphs(C: Graph) -> List[Graph]:
    """Distinct option positions of a connected C, in deterministic order.

    Vertex deletions first (ascending surviving size, then index), then one
    edge deletion per parallel or loop class. Options that coincide as
    labeled graphs are emitted once; the order cannot affect values.
    """
    children: List[Graph] = []
    seen: Set[Graph] = set()
    degs = C.degrees()
    loop = dict(C.loops)
    order = sorted(
        range(C.n),
        key=lambda v: (C.n - 1 + C.edge_count - degs[v] + loop.get(v, 0), v),
    )
    for v in order:
        child = delete_vertex(C, v)
        if child not in seen:
            seen.add(child)
            children.append(child)
    for u, v, _ in C.edges:
        child = delete_edge(C, u, v)
        if child not in seen:
            seen.add(child)
            children.append(child)
    for v, _ in C.loops:
        child = delete_edge(C, v, v)
        if child not in seen:
            seen.add(child)
            children.append(child)
    return children
