"""Recognizers for the basic classes and for the graph classes behind them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

from ._bits import bits, lowest, to_mask
from .core import (
    NarrowPath,
    SimpleGraph,
    Trigraph,
    branch_structure,
    full_realization,
    is_narrow_path,
    strong_triangles,
    triangles,
)
from . import graphalgo


# complete bipartite

@dataclass(frozen=True)
class Bipartition:
    a: frozenset[int]
    b: frozenset[int]

    @property
    def thick(self) -> bool:
        return min(len(self.a), len(self.b)) >= 3

    def to_dict(self) -> dict:
        return {"a": sorted(self.a), "b": sorted(self.b), "thick": self.thick}


def as_complete_bipartite(g: Trigraph) -> Bipartition | None:
    """Split into two non-empty strongly stable sets strongly complete to each other.

    Vertex 0 fixes the split: its side is itself plus everything strongly
    anti-adjacent to it, and every other pair is then checked.
    """
    n = g.n
    if n < 2:
        return None
    a = 1 | (g.full_mask & ~g.nbr[0] & ~1)
    b = g.full_mask & ~a
    if not b:
        return None
    for v in bits(a):
        if g.nbr[v] & a or g.strong[v] != b:
            return None
    for v in bits(b):
        if g.nbr[v] & b or g.strong[v] != a:
            return None
    return Bipartition(frozenset(bits(a)), frozenset(bits(b)))


def is_thick_complete_bipartite(g: Trigraph) -> bool:
    bp = as_complete_bipartite(g)
    return bp is not None and bp.thick


def is_strong_k33(g: Trigraph) -> bool:
    bp = as_complete_bipartite(g)
    return bp is not None and len(bp.a) == 3 and len(bp.b) == 3


# series-parallel

def is_series_parallel(g: Trigraph) -> bool:
    """No subdivision of K4 as a subgraph of the full realization."""
    return graphalgo.series_parallel_reduces(g.nbr, g.n)


# prisms

@dataclass(frozen=True)
class PrismPieces:
    """Triangles ``t1``/``t2`` and branches ``px, py, pz``.

    ``px`` runs from ``t1[0]`` to ``t2[0]``, and likewise for the others.
    """

    t1: tuple[int, int, int]
    t2: tuple[int, int, int]
    px: NarrowPath
    py: NarrowPath
    pz: NarrowPath

    @property
    def branches(self) -> tuple[NarrowPath, NarrowPath, NarrowPath]:
        return self.px, self.py, self.pz

    def pieces(self) -> list[frozenset[int]]:
        return [frozenset(self.t1), frozenset(self.t2)] + [p.vertices for p in self.branches]

    def to_dict(self) -> dict:
        return {
            "triangles": [list(self.t1), list(self.t2)],
            "branches": [list(p.order) for p in self.branches],
        }


def _trace(g: Trigraph, start: int, first: int) -> list[int]:
    """Walk from ``start`` through ``first`` along degree-2 vertices."""
    order = [start, first]
    while g.degree(order[-1]) == 2:
        nxt = g.nbr[order[-1]] & ~(1 << order[-2])
        order.append(nxt.bit_length() - 1)
        if order[-1] == start:
            break
    return order


def as_prism(g: Trigraph) -> PrismPieces | None:
    if g.n < 6:
        return None
    deg = [g.degree(v) for v in range(g.n)]
    if sorted(deg)[-6:] != [3] * 6 or any(d not in (2, 3) for d in deg):
        return None
    for t1 in strong_triangles(g):
        t1mask = to_mask(t1)
        paths = []
        for x in t1:
            out = g.nbr[x] & ~t1mask
            if out.bit_count() != 1:
                break
            order = _trace(g, x, lowest(out))
            if deg[order[-1]] != 3 or order[-1] in t1:
                break
            paths.append(order)
        if len(paths) != 3:
            continue
        t2 = tuple(p[-1] for p in paths)
        if len(set(t2)) != 3 or not g.is_strong_clique(t2) or min(t2) < min(t1):
            continue
        used = set()
        for p in paths:
            used.update(p)
        if len(used) != g.n or sum(len(p) for p in paths) != g.n:
            continue
        pieces = PrismPieces(t1, t2, *(NarrowPath(tuple(p)) for p in paths))
        if _prism_valid(g, pieces):
            return pieces
    return None


def _prism_valid(g: Trigraph, pc: PrismPieces) -> bool:
    allowed = {}
    for t in (pc.t1, pc.t2):
        for u, v in itertools.combinations(t, 2):
            allowed[(min(u, v), max(u, v))] = 1
    for p in pc.branches:
        if not is_narrow_path(g, p.order):
            return False
        for u, v in zip(p.order, p.order[1:]):
            allowed.setdefault((min(u, v), max(u, v)), 0)
    for u, v, t in g.pairs():
        need = allowed.get((u, v))
        if need is None:
            if t != -1:
                return False
        elif need == 1 and t != 1:
            return False
        elif t == -1:
            return False
    bs = branch_structure(g)
    flat = {p.order for p in bs.flat_branches()}
    return all(p.normalized().order in flat for p in pc.branches)


# line trigraphs

def line_graph(h: SimpleGraph) -> tuple[SimpleGraph, list[tuple[int, int]]]:
    """Line graph of ``h``; vertex i is the i-th edge of ``h`` in lexicographic order."""
    edges = h.edges()
    n = len(edges)
    theta = []
    for i in range(n):
        for j in range(i + 1, n):
            theta.append(1 if set(edges[i]) & set(edges[j]) else -1)
    return SimpleGraph(n, theta), edges


@dataclass(frozen=True)
class RootGraph:
    """A root ``h`` with ``edge_of[v]`` the edge of ``h`` behind vertex v."""

    h: SimpleGraph
    edge_of: tuple[tuple[int, int], ...]

    @property
    def vertex_of(self) -> dict[tuple[int, int], int]:
        return {e: v for v, e in enumerate(self.edge_of)}

    def to_dict(self) -> dict:
        return {
            "n": self.h.n,
            "edges": [list(e) for e in self.h.edges()],
            "edge_of_vertex": [list(e) for e in self.edge_of],
        }


def _krausz(adj: list[int], n: int) -> list[int] | None:
    """Partition the edges into cliques with every vertex in at most two of them."""
    unc = list(adj)
    count = [0] * n
    cliques: list[int] = []

    def is_clique(m: int) -> bool:
        return all(m & ~(1 << v) & ~unc[v] == 0 for v in bits(m))

    def options(u: int, v: int):
        pool = unc[u] & ~(1 << v)
        subs = []
        sub = pool
        while True:
            subs.append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & pool
        subs.sort(key=lambda s: (-s.bit_count(), s))
        for s in subs:
            x = s | (1 << v)
            if count[u] == 1 and x != unc[u]:
                continue
            if not is_clique(x):
                continue
            if count[u] == 0 and not is_clique(unc[u] & ~x):
                continue
            yield x | (1 << u)

    def rec() -> bool:
        u = next((w for w in range(n) if unc[w]), None)
        if u is None:
            return True
        v = lowest(unc[u])
        for q in options(u, v):
            members = list(bits(q))
            if any(count[w] >= 2 for w in members):
                continue
            saved = [unc[w] for w in members]
            for w in members:
                unc[w] &= ~q
                count[w] += 1
            cliques.append(q)
            if rec():
                return True
            cliques.pop()
            for w, s in zip(members, saved):
                unc[w] = s
                count[w] -= 1
        return False

    return cliques if rec() else None


def _root_from_cliques(n: int, cliques: list[int]) -> tuple[SimpleGraph, list[tuple[int, int]]]:
    ends: list[list[int]] = [[] for _ in range(n)]
    for i, q in enumerate(cliques):
        for v in bits(q):
            ends[v].append(i)
    nodes = len(cliques)
    for v in range(n):
        while len(ends[v]) < 2:
            ends[v].append(nodes)
            nodes += 1
    edge_of = [(min(e), max(e)) for e in ends]
    return SimpleGraph.from_edges(nodes, edge_of), edge_of


def as_line_trigraph(g: Trigraph) -> RootGraph | None:
    """Root graph of ``g`` if every triangle is strong and the full realization is a line graph.

    A triangle component comes back with a claw (not a triangle) as its root.
    """
    for t in triangles(g):
        if not g.is_strong_clique(t):
            return None
    cliques = _krausz(list(g.nbr), g.n)
    if cliques is None:
        return None
    h, edge_of = _root_from_cliques(g.n, cliques)
    # round trip: the line graph under this edge map must be the full realization
    f = full_realization(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            meet = bool(set(edge_of[u]) & set(edge_of[v]))
            if meet != f.adjacent(u, v):
                raise AssertionError("line graph reconstruction failed its round-trip check")
    return RootGraph(h, tuple(edge_of))


class RootQualification(NamedTuple):
    chordless: bool
    cyclically_3_connected: bool
    max_degree_3: bool

    @property
    def qualified(self) -> bool:
        return self.chordless and self.cyclically_3_connected and self.max_degree_3


def qualify_root(h: SimpleGraph) -> RootQualification:
    return RootQualification(
        graphalgo.is_chordless(h.nbr, h.n),
        graphalgo.is_cyclically_3_connected(h.nbr, h.n),
        graphalgo.max_degree(h.nbr) <= 3,
    )


def is_qualified_line_trigraph(g: Trigraph) -> bool:
    root = as_line_trigraph(g)
    return root is not None and qualify_root(root.h).qualified


# graph classes

def is_theta(h: SimpleGraph) -> bool:
    return graphalgo.is_theta(h.nbr, h.n)


def is_subdivision_of_3connected(h: SimpleGraph) -> bool:
    return graphalgo.is_subdivision_of_3_connected(h.nbr, h.n)


def is_cyclically_3_connected(h: SimpleGraph) -> bool:
    return graphalgo.is_cyclically_3_connected(h.nbr, h.n)


# line trigraphs of K4 subdivisions

@dataclass(frozen=True)
class K4LinePieces:
    """Named pieces of a line trigraph of a subdivided K4.

    ``triangles[x]`` is the strong triangle of the three root edges at the
    root's branch vertex x (x = 0..3 in the order of the root's branch
    vertices); ``paths[(x, y)]`` is the narrow path of line vertices along
    the root branch between x and y, running from ``triangles[x]`` to
    ``triangles[y]``.
    """

    triangles: tuple[tuple[int, int, int], ...]
    paths: dict[tuple[int, int], NarrowPath]

    def prism_hosts(self, host: frozenset[int]) -> dict[tuple[int, int], frozenset[int]]:
        return {key: host - p.vertices for key, p in self.paths.items()}

    def pieces(self) -> list[frozenset[int]]:
        return [frozenset(t) for t in self.triangles] + [p.vertices for p in self.paths.values()]

    def to_dict(self) -> dict:
        return {
            "triangles": [list(t) for t in self.triangles],
            "paths": {f"{x}{y}": list(p.order) for (x, y), p in self.paths.items()},
        }
