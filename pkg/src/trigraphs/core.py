"""Trigraph data model.

A trigraph on vertices ``0..n-1`` assigns to every unordered pair one of
three values: strongly adjacent (+1), semi-adjacent (0) or strongly
anti-adjacent (-1).  A pair is *adjacent* when its value is >= 0 and
*anti-adjacent* when it is <= 0, so semi-adjacent pairs are both.

Values are immutable.  Induced subtrigraphs remember where their vertices
came from (``origin``) so witnesses can be reported in host coordinates.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator, NamedTuple, Sequence

from ._bits import bits, component_masks, is_connected_mask, to_mask


class AdjValue(IntEnum):
    STRONG_ANTI = -1
    SEMI = 0
    STRONG = 1

    @property
    def symbol(self) -> str:
        return {1: "+", 0: "0", -1: "-"}[int(self)]

    @classmethod
    def from_symbol(cls, s: str) -> "AdjValue":
        try:
            return cls({"+": 1, "0": 0, "-": -1}[s])
        except KeyError:
            raise ValueError(f"unknown adjacency symbol {s!r}") from None


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_rank(n: int, u: int, v: int) -> int:
    """Row-major rank of the unordered pair {u, v} among all pairs of 0..n-1."""
    if u > v:
        u, v = v, u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def pairs_of(n: int) -> Iterator[tuple[int, int]]:
    """All pairs u < v in lexicographic (= rank) order."""
    return itertools.combinations(range(n), 2)


class Trigraph:
    """Immutable trigraph with dense integer vertices.

    ``theta`` is the flat row-major triangular array of pair values.  The
    constructor also builds three per-vertex bitmasks: ``nbr`` (value >= 0),
    ``strong`` (value == +1) and ``semi`` (value == 0).
    """

    __slots__ = ("n", "theta", "origin", "nbr", "strong", "semi", "_hash")

    def __init__(self, n: int, theta: Sequence[int], origin: Sequence[int] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        theta = tuple(int(x) for x in theta)
        if len(theta) != pair_count(n):
            raise ValueError(f"expected {pair_count(n)} pair values for n={n}, got {len(theta)}")
        nbr = [0] * n
        strong = [0] * n
        semi = [0] * n
        i = 0
        for u in range(n):
            for v in range(u + 1, n):
                t = theta[i]
                i += 1
                if t == 1:
                    strong[u] |= 1 << v
                    strong[v] |= 1 << u
                    nbr[u] |= 1 << v
                    nbr[v] |= 1 << u
                elif t == 0:
                    semi[u] |= 1 << v
                    semi[v] |= 1 << u
                    nbr[u] |= 1 << v
                    nbr[v] |= 1 << u
                elif t != -1:
                    raise ValueError(f"adjacency values must be -1, 0 or 1, got {t}")
        if origin is not None:
            origin = tuple(origin)
            if len(origin) != n:
                raise ValueError("origin map must have one entry per vertex")
        self.n = n
        self.theta = theta
        self.origin = origin
        self.nbr = nbr
        self.strong = strong
        self.semi = semi
        self._hash = None

    # construction helpers

    @classmethod
    def from_pairs(
        cls,
        n: int,
        strong: Iterable[tuple[int, int]] = (),
        semi: Iterable[tuple[int, int]] = (),
    ) -> "Trigraph":
        """Build from lists of strongly adjacent and semi-adjacent pairs; the rest are -1."""
        theta = [-1] * pair_count(n)
        for value, pairs in ((1, strong), (0, semi)):
            for u, v in pairs:
                if u == v or not (0 <= u < n and 0 <= v < n):
                    raise ValueError(f"bad pair ({u}, {v}) for n={n}")
                theta[pair_rank(n, u, v)] = value
        return cls(n, theta)

    @classmethod
    def from_function(cls, n: int, f) -> "Trigraph":
        return cls(n, [f(u, v) for u, v in pairs_of(n)])

    def with_values(self, changes: dict[tuple[int, int], int]) -> "Trigraph":
        theta = list(self.theta)
        for (u, v), val in changes.items():
            theta[pair_rank(self.n, u, v)] = val
        return _make(self.n, theta)

    # queries

    def value(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("adjacency is defined on distinct vertices only")
        return self.theta[pair_rank(self.n, u, v)]

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.nbr[u] >> v & 1)

    def strongly_adjacent(self, u: int, v: int) -> bool:
        return bool(self.strong[u] >> v & 1)

    def anti_adjacent(self, u: int, v: int) -> bool:
        return u != v and not (self.strong[u] >> v & 1)

    def strongly_anti_adjacent(self, u: int, v: int) -> bool:
        return u != v and not (self.nbr[u] >> v & 1)

    def degree(self, v: int) -> int:
        """Number of neighbours; semi-adjacent pairs count."""
        return self.nbr[v].bit_count()

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def pairs(self) -> Iterator[tuple[int, int, int]]:
        for (u, v), t in zip(pairs_of(self.n), self.theta):
            yield u, v, t

    def semi_pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, t in self.pairs() if t == 0]

    @property
    def is_graph(self) -> bool:
        return not any(self.semi)

    def host_vertex(self, v: int) -> int:
        return v if self.origin is None else self.origin[v]

    def host_vertices(self, vs: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self.host_vertex(v) for v in vs))

    def is_strong_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        m = to_mask(vs)
        return all((m & ~(1 << v)) & ~self.strong[v] == 0 for v in vs)

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        m = to_mask(vs)
        return all((m & ~(1 << v)) & ~self.nbr[v] == 0 for v in vs)

    def is_stable(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        m = to_mask(vs)
        return all(m & self.strong[v] == 0 for v in vs)

    def is_strongly_stable(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        m = to_mask(vs)
        return all(m & self.nbr[v] == 0 for v in vs)

    # dunder

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Trigraph):
            return NotImplemented
        return self.n == other.n and self.theta == other.theta

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.theta))
        return self._hash

    def __repr__(self) -> str:
        body = "".join(AdjValue(t).symbol for t in self.theta)
        return f"{type(self).__name__}({self.n}, {body!r})"

    def __setattr__(self, name, value):
        if name != "_hash" and hasattr(self, "_hash"):
            raise AttributeError("Trigraph is immutable")
        object.__setattr__(self, name, value)


class SimpleGraph(Trigraph):
    """A trigraph with no semi-adjacent pairs."""

    __slots__ = ()

    def __init__(self, n: int, theta: Sequence[int], origin: Sequence[int] | None = None):
        super().__init__(n, theta, origin)
        if any(self.semi):
            raise ValueError("a SimpleGraph has no semi-adjacent pairs")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        theta = [-1] * pair_count(n)
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bad edge ({u}, {v}) for n={n}")
            theta[pair_rank(n, u, v)] = 1
        return cls(n, theta)

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "SimpleGraph":
        n = len(adj)
        return cls(n, [1 if adj[u] >> v & 1 else -1 for u, v in pairs_of(n)])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, t in self.pairs() if t == 1]


def _make(n: int, theta: Sequence[int], origin: Sequence[int] | None = None) -> Trigraph:
    cls = SimpleGraph if 0 not in theta else Trigraph
    return cls(n, theta, origin)


def as_graph(g: Trigraph) -> SimpleGraph:
    if isinstance(g, SimpleGraph):
        return g
    return SimpleGraph(g.n, g.theta, g.origin)


# operations

def complement(g: Trigraph) -> Trigraph:
    return _make(g.n, [-t for t in g.theta], g.origin)


def induced(g: Trigraph, x: Iterable[int]) -> Trigraph:
    """Subtrigraph induced by ``x``; vertices relabelled in increasing order.

    The result's ``origin`` maps each new vertex to its vertex in the
    outermost host (composing through nested inductions).
    """
    xs = sorted(set(x))
    for v in xs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in trigraph on {g.n} vertices")
    theta = [g.theta[pair_rank(g.n, u, v)] for u, v in itertools.combinations(xs, 2)]
    origin = [g.host_vertex(v) for v in xs]
    return _make(len(xs), theta, origin)


def delete(g: Trigraph, x: Iterable[int]) -> Trigraph:
    drop = set(x)
    return induced(g, [v for v in range(g.n) if v not in drop])


def full_realization(g: Trigraph) -> SimpleGraph:
    return SimpleGraph(g.n, [1 if t >= 0 else -1 for t in g.theta], g.origin)


def null_realization(g: Trigraph) -> SimpleGraph:
    return SimpleGraph(g.n, [1 if t > 0 else -1 for t in g.theta], g.origin)


def realization(g: Trigraph, choice: dict[tuple[int, int], int]) -> SimpleGraph:
    """The realization deciding each semi-adjacent pair as given (missing pairs -> -1)."""
    theta = list(g.theta)
    for i, (u, v) in enumerate(pairs_of(g.n)):
        if theta[i] == 0:
            c = choice.get((u, v), -1)
            if c not in (1, -1):
                raise ValueError("realization choices must be +1 or -1")
            theta[i] = c
    return SimpleGraph(g.n, theta, g.origin)


def realizations(g: Trigraph) -> Iterator[SimpleGraph]:
    """All 2^m realizations.

    Semi-adjacent pairs are taken in lexicographic order and decided by a
    binary counter whose least significant bit is the first pair (bit set ->
    edge).  Counter value 0 is the null realization.
    """
    idx = [i for i, t in enumerate(g.theta) if t == 0]
    base = list(g.theta)
    for i in idx:
        base[i] = -1
    for code in range(1 << len(idx)):
        theta = base[:]
        for j, i in enumerate(idx):
            if code >> j & 1:
                theta[i] = 1
        yield SimpleGraph(g.n, theta, g.origin)


def semi_realizations(g: Trigraph) -> Iterator[Trigraph]:
    idx = [i for i, t in enumerate(g.theta) if t == 0]
    for combo in itertools.product((-1, 0, 1), repeat=len(idx)):
        theta = list(g.theta)
        for i, c in zip(idx, combo):
            theta[i] = c
        yield _make(g.n, theta, g.origin)


def is_semi_realization(candidate: Trigraph, g: Trigraph) -> bool:
    return candidate.n == g.n and all(
        t == 0 or t == c for t, c in zip(g.theta, candidate.theta)
    )


def components(g: Trigraph) -> list[frozenset[int]]:
    """Components of the full realization, ordered by least vertex."""
    return [frozenset(bits(c)) for c in component_masks(g.nbr, g.full_mask)]


def is_connected(g: Trigraph) -> bool:
    return is_connected_mask(g.nbr, g.full_mask)


@dataclass(frozen=True)
class NarrowPath:
    order: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.order) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return self.order[0], self.order[-1]

    @property
    def interior(self) -> frozenset[int]:
        return frozenset(self.order[1:-1])

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.order)

    @property
    def mask(self) -> int:
        return to_mask(self.order)

    def reversed(self) -> "NarrowPath":
        return NarrowPath(self.order[::-1])

    def normalized(self) -> "NarrowPath":
        return self if self.order[0] <= self.order[-1] else self.reversed()


def is_narrow_path(g: Trigraph, order: Sequence[int]) -> bool:
    """Consecutive vertices adjacent, all other pairs strongly anti-adjacent."""
    if not order or len(set(order)) != len(order):
        return False
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        if not 0 <= v < g.n:
            return False
    for i, u in enumerate(order):
        for j in range(i + 1, len(order)):
            adj = g.adjacent(u, order[j])
            if adj != (j == i + 1):
                return False
    return bool(pos)


def narrow_path_order(g: Trigraph, vs: Iterable[int]) -> NarrowPath | None:
    """Order the vertex set ``vs`` as a narrow path of ``g``, if it is one."""
    vs = sorted(set(vs))
    if not vs:
        return None
    m = to_mask(vs)
    if len(vs) == 1:
        return NarrowPath((vs[0],))
    ends = [v for v in vs if (g.nbr[v] & m).bit_count() == 1]
    if len(ends) != 2:
        return None
    order = [ends[0]]
    prev_mask = 1 << ends[0]
    cur = ends[0]
    while len(order) < len(vs):
        nxt = g.nbr[cur] & m & ~prev_mask
        if nxt.bit_count() != 1:
            return None
        cur = nxt.bit_length() - 1
        order.append(cur)
        prev_mask |= 1 << cur
    if not is_narrow_path(g, order):
        return None
    return NarrowPath(tuple(order)).normalized()


def find_narrow_path(g: Trigraph, a: int, b: int) -> NarrowPath | None:
    """A shortest path of the full realization from a to b (hence narrow), if any."""
    if not (0 <= a < g.n and 0 <= b < g.n):
        raise ValueError("endpoints must be vertices of g")
    if a == b:
        return NarrowPath((a,))
    parent = {a: None}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        for w in bits(g.nbr[u]):
            if w not in parent:
                parent[w] = u
                if w == b:
                    order = [b]
                    while parent[order[-1]] is not None:
                        order.append(parent[order[-1]])
                    return NarrowPath(tuple(reversed(order)))
                queue.append(w)
    return None


class BranchStructure(NamedTuple):
    branch_vertices: frozenset[int]
    branches: tuple[NarrowPath, ...]
    flat: tuple[bool, ...]

    def flat_branches(self) -> list[NarrowPath]:
        return [p for p, f in zip(self.branches, self.flat) if f]


def _in_triangle(g: Trigraph, u: int, v: int) -> bool:
    return bool(g.nbr[u] & g.nbr[v])


def branch_structure(g: Trigraph) -> BranchStructure:
    """Branch vertices (degree >= 3), branches between them, and flatness flags.

    A branch is a narrow path between two distinct branch vertices whose
    interior vertices are not branch vertices.  It is flat when none of its
    adjacent pairs lies in a triangle of ``g``.
    """
    deg = [g.degree(v) for v in range(g.n)]
    bv = [v for v in range(g.n) if deg[v] >= 3]
    seen: set[tuple[int, ...]] = set()
    found: list[NarrowPath] = []
    for b in bv:
        for w in bits(g.nbr[b]):
            order = [b, w]
            ok = True
            while deg[order[-1]] < 3:
                cur = order[-1]
                if deg[cur] != 2:
                    ok = False
                    break
                nxt = g.nbr[cur] & ~(1 << order[-2])
                order.append(nxt.bit_length() - 1)
                if order[-1] == b:
                    ok = False
                    break
            if not ok or order[-1] == b:
                continue
            path = NarrowPath(tuple(order)).normalized()
            if path.order in seen:
                continue
            if not is_narrow_path(g, path.order):
                continue
            seen.add(path.order)
            found.append(path)
    found.sort(key=lambda p: p.order)
    flat = tuple(
        not any(_in_triangle(g, p.order[i], p.order[i + 1]) for i in range(p.length))
        for p in found
    )
    return BranchStructure(frozenset(bv), tuple(found), flat)


def strong_triangles(g: Trigraph) -> list[tuple[int, int, int]]:
    out = []
    for u in range(g.n):
        for v in bits(g.strong[u] >> (u + 1) << (u + 1)):
            for w in bits(g.strong[u] & g.strong[v] >> (v + 1) << (v + 1)):
                out.append((u, v, w))
    return out


def triangles(g: Trigraph) -> list[tuple[int, int, int]]:
    """Triples of pairwise adjacent vertices."""
    out = []
    for u in range(g.n):
        for v in bits(g.nbr[u] >> (u + 1) << (u + 1)):
            for w in bits(g.nbr[u] & g.nbr[v] >> (v + 1) << (v + 1)):
                out.append((u, v, w))
    return out
