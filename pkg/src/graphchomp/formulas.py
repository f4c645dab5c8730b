"""Closed-form value predictions for solved families.

Each predictor returns a :class:`Predicted`: an exact value, or the lower
bound "4 or more" in the one case where only that much is known (a
telescoping vertex of odd degree). Predictors for parameterized families
take the construction parameters; the graph-driven ones (bipartite, one- or
two-attachment, winner) take a graph and validate its shape.

The staircase sequences:

    lam(3m) = 2m,  lam(3m+1) = 2m+1,  lam(3m+2) = 2m
    ell(x)  = 2 * lam(x - 1)

drive both the path-with-loop family and the branch-path family, via the
identity ell(k) = mex(E(k)) with

    E(k) = {ell(k-1), ell(k-1)^1} | {ell(i)^1, ell(i)^2 : 1 <= i <= k-2}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Set, Tuple

from .engine import nim_sum
from .graph import Graph, components_with_vertices, is_bipartite, is_connected, phi
from .structure import find_telescoping, unicyclic_info
from .reducer import cancel_once, simplify_multiedges

THEOREM = "theorem"
CONJECTURE = "conjecture"


class DomainError(ValueError):
    """Input outside the family a predictor is valid for."""


@dataclass(frozen=True)
class Predicted:
    """An exact predicted value, or a lower bound when ``exact`` is False."""

    value: int
    exact: bool = True

    @classmethod
    def exactly(cls, value: int) -> "Predicted":
        return cls(value, True)

    @classmethod
    def at_least(cls, bound: int) -> "Predicted":
        return cls(bound, False)

    def matches(self, observed: int) -> bool:
        return observed == self.value if self.exact else observed >= self.value

    def __str__(self) -> str:
        return str(self.value) if self.exact else f">={self.value}"


@dataclass(frozen=True)
class PathMultiset:
    """A multiset of path lengths, sorted descending.

    ``total`` is the plain sum and ``alternating`` the signed sum
    x1 - x2 + x3 - ..., which is non-negative for sorted input.
    """

    lengths: Tuple[int, ...]

    @classmethod
    def of(cls, lengths: Iterable[int]) -> "PathMultiset":
        ls = tuple(sorted((int(x) for x in lengths), reverse=True))
        if any(x < 0 for x in ls):
            raise DomainError("path lengths must be non-negative")
        return cls(ls)

    @property
    def total(self) -> int:
        return sum(self.lengths)

    @property
    def alternating(self) -> int:
        return sum(x if i % 2 == 0 else -x for i, x in enumerate(self.lengths))


def lambda_val(k: int) -> int:
    """The period-3 staircase 0,1,0,2,3,2,4,5,4,..."""
    if k < 0:
        raise DomainError(f"lambda is defined for k >= 0, got {k}")
    m, r = divmod(k, 3)
    return 2 * m + (1 if r == 1 else 0)


def ell_val(x: int) -> int:
    """Doubled staircase 0,2,0,4,6,4,8,10,8,... starting at x = 1."""
    if x < 1:
        raise DomainError(f"ell is defined for x >= 1, got {x}")
    return 2 * lambda_val(x - 1)


def e_set(k: int) -> Set[int]:
    """The excluded set whose mex reproduces ell(k); empty for k = 1."""
    if k < 1:
        raise DomainError(f"e_set is defined for k >= 1, got {k}")
    if k == 1:
        return set()
    out = {ell_val(k - 1), ell_val(k - 1) ^ 1}
    for i in range(1, k - 1):
        out.add(ell_val(i) ^ 1)
        out.add(ell_val(i) ^ 2)
    return out


# --- graph-driven predictors -------------------------------------------------

def predict_bipartite(G: Graph) -> Predicted:
    """Bipartite positions have value phi(G) exactly."""
    if not is_bipartite(G):
        raise DomainError("graph is not bipartite")
    return Predicted.exactly(phi(G))


def _one_odd_cycle_shape(G: Graph):
    """Validate: reduced, one odd cycle, no other cycles or loops.

    Disconnected trees are allowed alongside the cycle component. Returns
    (cycle_component_info, attachment_count, odd_telescoping) computed on the
    cycle component.
    """
    if G.loops:
        raise DomainError("graph has loops")
    if simplify_multiedges(G) != G or cancel_once(G) is not None:
        raise DomainError("graph is not reduced")
    cycle_comp = None
    for comp, _ in components_with_vertices(G):
        extra = comp.edge_count - (comp.n - 1)
        if extra == 0:
            continue  # a tree
        if cycle_comp is not None or extra != 1:
            raise DomainError("expected exactly one cycle overall")
        cycle_comp = comp
    if cycle_comp is None:
        raise DomainError("no cycle present")
    info = unicyclic_info(cycle_comp)  # validates odd length
    return cycle_comp, info


def predict_one_attachment(G: Graph) -> Predicted:
    """Cycle alone: 0. Odd-degree telescoping vertex: at least 4. Else phi."""
    if not is_connected(G):
        raise DomainError("graph must be connected")
    cycle_comp, info = _one_odd_cycle_shape(G)
    if len(info.attachment_vertices) > 1:
        raise DomainError(
            f"expected at most one attachment vertex, got "
            f"{len(info.attachment_vertices)}")
    if not info.attachment_vertices:
        return Predicted.exactly(0)
    t = find_telescoping(cycle_comp)
    if t is not None and cycle_comp.degree(t) % 2 == 1:
        return Predicted.at_least(4)
    return Predicted.exactly(phi(G))


def predict_multi_attachment(G: Graph) -> Predicted:
    """Two or more attachment vertices force the parity value phi(G)."""
    _, info = _one_odd_cycle_shape(G)
    if len(info.attachment_vertices) < 2:
        raise DomainError(
            f"expected at least two attachment vertices, got "
            f"{len(info.attachment_vertices)}")
    return Predicted.exactly(phi(G))


FIRST_PLAYER = "first"
SECOND_PLAYER = "second"


def winner_one_odd_cycle(G: Graph) -> str:
    """Who wins a reduced position with one odd cycle and no other cycles.

    The second player wins exactly when (i) the cycle is bare and phi = 3,
    (ii) there is one attachment vertex, phi = 0, and no odd-degree
    telescoping vertex, or (iii) there are two or more attachment vertices
    and phi = 0.
    """
    cycle_comp, info = _one_odd_cycle_shape(G)
    attach = len(info.attachment_vertices)
    p = phi(G)
    if attach == 0:
        second = p == 3
    elif attach == 1:
        t = find_telescoping(cycle_comp)
        odd_tel = t is not None and cycle_comp.degree(t) % 2 == 1
        second = p == 0 and not odd_tel
    else:
        second = p == 0
    return SECOND_PLAYER if second else FIRST_PLAYER


# --- parameterized families --------------------------------------------------

def predict_complete(n: int) -> Predicted:
    """Complete graph on n vertices: n mod 3."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return Predicted.exactly(n % 3)


def predict_multipartite(parts: Sequence[int]) -> Predicted:
    """Complete multipartite value: (sum of part parities) mod 3."""
    if any(p < 0 for p in parts):
        raise DomainError("part sizes must be non-negative")
    return Predicted.exactly(sum(p % 2 for p in parts) % 3)


def predict_complete_loops(n: int, m: int) -> Predicted:
    """Complete graph with loops on m of the n vertices: (m + n) mod 3."""
    if not (0 <= m <= n):
        raise DomainError(f"need 0 <= m <= n, got m={m}, n={n}")
    return Predicted.exactly((m + n) % 3)


def predict_G1(n: int) -> Predicted:
    """Two triangles sharing an edge plus a tail, n vertices: 2*lam(n-3)."""
    if n < 4:
        raise DomainError("family starts at n = 4")
    return Predicted.exactly(2 * lambda_val(n - 3))


def predict_G2(n: int) -> Predicted:
    """Path on n vertices with a loop at one end: 2*lam(n)."""
    if n < 1:
        raise DomainError("family starts at n = 1")
    return Predicted.exactly(2 * lambda_val(n))


def predict_R(xs: Iterable[int] | PathMultiset) -> Predicted:
    """Odd cycle, bridge edge, and branch paths of lengths xs at its far end.

    Odd count of paths: the parity value. Even count (0 included):
    ell(x1) xor ... xor ell(xn), plus 4. Cycle length does not matter as
    long as it is odd.
    """
    ms = xs if isinstance(xs, PathMultiset) else PathMultiset.of(xs)
    if any(x < 1 for x in ms.lengths):
        raise DomainError("branch path lengths must be at least 1")
    n = len(ms.lengths)
    if n % 2 == 1:
        return Predicted.exactly(3 * (ms.total % 2))
    return Predicted.exactly(nim_sum(ell_val(x) for x in ms.lengths) + 4)


def predict_rodd(r: int, xs: Iterable[int] | PathMultiset) -> Predicted:
    """r odd cycles and pendant paths xs glued at one vertex.

    0 when r is odd and the alternating path sum is 0; 4 when r is odd and
    it is 1; the parity value otherwise.
    """
    if r < 1:
        raise DomainError("need at least one cycle")
    ms = xs if isinstance(xs, PathMultiset) else PathMultiset.of(xs)
    X = ms.total
    if r % 2 == 1:
        if ms.alternating == 0:
            return Predicted.exactly(0)
        if ms.alternating == 1:
            return Predicted.exactly(4)
    return Predicted.exactly((X + 1) % 2 + 2 * ((X + r) % 2))


def predict_xyz(xs: Iterable[int] | PathMultiset,
                ys: Iterable[int] | PathMultiset,
                zs: Sequence[int]) -> Predicted:
    """Two hubs joined by k internal paths zs, with pendant paths xs and ys.

    0 when k is even, Z is odd, and the alternating sums cancel; 4 when k is
    even, Z is odd, and they total 1; the parity value otherwise.
    """
    msx = xs if isinstance(xs, PathMultiset) else PathMultiset.of(xs)
    msy = ys if isinstance(ys, PathMultiset) else PathMultiset.of(ys)
    if any(z < 1 for z in zs):
        raise DomainError("linking path lengths must be at least 1")
    k = len(zs)
    Z = sum(zs)
    X, Y = msx.total, msy.total
    hat = msx.alternating + msy.alternating
    if k % 2 == 0 and Z % 2 == 1:
        if hat == 0:
            return Predicted.exactly(0)
        if hat == 1:
            return Predicted.exactly(4)
    return Predicted.exactly((X + Y + Z + k) % 2 + 2 * ((X + Y + Z) % 2))


def predict_wheel(n: int) -> Tuple[Predicted, str]:
    """Wheels have value 1: proved for even n and for n up to 25."""
    if n < 3:
        raise DomainError("wheels start at n = 3")
    status = THEOREM if (n % 2 == 0 or n <= 25) else CONJECTURE
    return Predicted.exactly(1), status


FAN = "fan"
FAN_HANDLE = "fanhandle"


def predict_fan(n: int, variant: str = FAN) -> Tuple[Predicted, str]:
    """Fans: 2 for odd n (proved), 3 for even n (conjectured).

    Fans with a handle: 1 for even n (proved), 4 for odd n (conjectured).
    """
    if variant == FAN:
        if n < 3:
            raise DomainError("fans start at n = 3")
        if n % 2 == 1:
            return Predicted.exactly(2), THEOREM
        return Predicted.exactly(3), CONJECTURE
    if variant == FAN_HANDLE:
        if n < 4:
            raise DomainError("fans with a handle start at n = 4")
        if n % 2 == 0:
            return Predicted.exactly(1), THEOREM
        return Predicted.exactly(4), CONJECTURE
    raise DomainError(f"unknown variant {variant!r}")
