"""Detection of forbidden induced structures.

All searches run directly on trigraphs.  A vertex set X induces an
H-trigraph iff some graph on X isomorphic to H has an edge only where the
pair value is >= 0 and a non-edge only where it is <= 0.  Every pair of X is
looked at exactly once by the searches below, so the per-pair choices they
make always assemble into one realization.  On graphs this is ordinary
induced-subgraph search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from ._bits import bits, to_mask
from .core import SimpleGraph, Trigraph
from . import graphalgo


class Pattern(str, Enum):
    ISK4 = "isk4"
    WHEEL = "wheel"
    DIAMOND = "diamond"
    K4 = "k4"
    K33 = "k33"


@dataclass(frozen=True)
class Witness:
    """A forbidden structure found in a host trigraph.

    ``vertices`` are in host coordinates.  ``edges`` are the pairs of
    ``vertices`` realized as edges; ``realization`` decides every
    semi-adjacent pair of the host (pairs inside the witness as required,
    the rest as non-edges).
    """

    kind: Pattern
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    realization: tuple[tuple[tuple[int, int], int], ...] = ()
    detail: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
            "realization": [[u, v, c] for (u, v), c in self.realization],
            **({"detail": self.detail} if self.detail else {}),
        }


def _witness(g: Trigraph, kind: Pattern, xmask: int, edges, detail=None) -> Witness:
    edge_set = {(min(u, v), max(u, v)) for u, v in edges}
    choice = []
    for u, v in g.semi_pairs():
        inside = xmask >> u & 1 and xmask >> v & 1
        choice.append(((u, v), 1 if inside and (u, v) in edge_set else -1))
    host = g.host_vertex
    return Witness(
        kind=kind,
        vertices=tuple(sorted(host(v) for v in bits(xmask))),
        edges=tuple(sorted((min(host(u), host(v)), max(host(u), host(v))) for u, v in edge_set)),
        realization=tuple(choice),
        detail=detail or {},
    )


# induced cycles

def induced_cycles(g: Trigraph, min_length: int = 4, within: int | None = None) -> Iterator[tuple[int, ...]]:
    """Vertex sequences that some realization makes a chordless cycle.

    Yields each cycle once per vertex sequence (least vertex first, second
    vertex smaller than the last).  ``min_length`` 4 gives holes, 3 also
    gives triangles.
    """
    nbr, strong = g.nbr, g.strong
    allowed_all = g.full_mask if within is None else within
    for s in bits(allowed_all):
        above = allowed_all & ~((1 << (s + 1)) - 1)
        path = [s]
        yield from _cycles_from(nbr, strong, s, above, path, 1 << s, min_length)


def _cycles_from(nbr, strong, s, above, path, pmask, min_length):
    tip = path[-1]
    inner = pmask & ~(1 << tip) & ~(1 << s)
    for w in bits(nbr[tip] & above & ~pmask):
        if strong[w] & inner:
            continue
        if len(path) == 1:
            path.append(w)
            yield from _cycles_from(nbr, strong, s, above, path, pmask | (1 << w), min_length)
            path.pop()
            continue
        closes = nbr[w] >> s & 1
        must_close = strong[w] >> s & 1
        if closes and len(path) + 1 >= min_length and path[1] < w:
            yield tuple(path) + (w,)
        if not must_close:
            path.append(w)
            yield from _cycles_from(nbr, strong, s, above, path, pmask | (1 << w), min_length)
            path.pop()


def _cycle_edges(order):
    k = len(order)
    return [(order[i], order[(i + 1) % k]) for i in range(k)]


# wheel

def _find_wheel(g: Trigraph, triangle_rims: bool = False) -> Witness | None:
    if triangle_rims:
        k4 = _k4_local(g)
        if k4 is not None:
            return _witness(g, Pattern.WHEEL, to_mask(k4), itertools.combinations(k4, 2),
                            {"rim": [g.host_vertex(v) for v in k4[:3]], "hub": g.host_vertex(k4[3])})
    deg3 = [v for v in range(g.n) if g.degree(v) >= 3]
    if not deg3:
        return None
    hubs = to_mask(deg3)
    for rim in induced_cycles(g, 4):
        rmask = to_mask(rim)
        for h in bits(hubs & ~rmask):
            spokes = g.nbr[h] & rmask
            if spokes.bit_count() >= 3:
                edges = _cycle_edges(rim) + [(h, r) for r in bits(spokes)]
                return _witness(g, Pattern.WHEEL, rmask | (1 << h), edges,
                                {"rim": [g.host_vertex(v) for v in rim], "hub": g.host_vertex(h)})
    return None


# ISK4

def _find_isk4(g: Trigraph) -> Witness | None:
    """Induced cycle Z (a face of the subdivision) plus a tripod outside it.

    The tripod is a centre d and legs: induced paths from d whose last vertex
    (the port, possibly d itself) sees exactly one vertex of Z, distinct for
    the three legs, with every other tripod vertex anti-adjacent to Z.
    """
    nbr, strong = g.nbr, g.strong
    if sum(1 for v in range(g.n) if nbr[v].bit_count() >= 3) < 4:
        return None
    allm = g.full_mask
    for z_order in induced_cycles(g, 3):
        zmask = to_mask(z_order)
        outside = allm & ~zmask
        port = {}
        clean = 0
        for u in bits(outside):
            s = strong[u] & zmask
            if s == 0:
                clean |= 1 << u
                port[u] = nbr[u] & zmask
            elif s & (s - 1) == 0:
                port[u] = s
            else:
                port[u] = 0
        for d in bits(outside):
            must = strong[d] & zmask
            may = nbr[d] & zmask
            if must.bit_count() > 3:
                continue
            if may.bit_count() >= 3:
                dset = must
                for z in bits(may & ~must):
                    if dset.bit_count() == 3:
                        break
                    dset |= 1 << z
                edges = _cycle_edges(z_order) + [(d, z) for z in bits(dset)]
                return _witness(g, Pattern.ISK4, zmask | (1 << d), edges,
                                {"cycle": [g.host_vertex(v) for v in z_order], "centre": g.host_vertex(d)})
            free = may & ~must
            for extra in _submasks(free):
                dset = must | extra
                need = 3 - dset.bit_count()
                found = _legs(nbr, strong, port, clean, outside, d, 1 << d, d, need, dset, -1, [])
                if found is not None:
                    tmask, legs_edges = found
                    edges = _cycle_edges(z_order) + [(d, z) for z in bits(dset)] + legs_edges
                    return _witness(g, Pattern.ISK4, zmask | tmask, edges,
                                    {"cycle": [g.host_vertex(v) for v in z_order], "centre": g.host_vertex(d)})
    return None


def _submasks(m: int):
    sub = m
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & m


def _legs(nbr, strong, port, clean, outside, d, tmask, tip, need, used, last_target, edges):
    for w in bits(nbr[tip] & outside & ~tmask):
        if strong[w] & tmask & ~(1 << tip):
            continue
        edges.append((tip, w))
        targets = port[w] & ~used & ~((1 << (last_target + 1)) - 1)
        for z in bits(targets):
            edges.append((w, z))
            if need == 1:
                return tmask | (1 << w), list(edges)
            r = _legs(nbr, strong, port, clean, outside, d, tmask | (1 << w), d, need - 1, used | (1 << z), z, edges)
            if r is not None:
                return r
            edges.pop()
        if clean >> w & 1:
            r = _legs(nbr, strong, port, clean, outside, d, tmask | (1 << w), w, need, used, last_target, edges)
            if r is not None:
                return r
        edges.pop()
    return None


# fixed-size patterns

def _k4_local(g: Trigraph) -> tuple[int, int, int, int] | None:
    nbr = g.nbr
    for a in range(g.n):
        for b in bits(nbr[a] >> (a + 1) << (a + 1)):
            for c in bits(nbr[a] & nbr[b] >> (b + 1) << (b + 1)):
                for d in bits(nbr[a] & nbr[b] & nbr[c] >> (c + 1) << (c + 1)):
                    return a, b, c, d
    return None


def _find_k4(g: Trigraph) -> Witness | None:
    xs = _k4_local(g)
    if xs is None:
        return None
    return _witness(g, Pattern.K4, to_mask(xs), itertools.combinations(xs, 2))


def _find_diamond(g: Trigraph) -> Witness | None:
    nbr, strong = g.nbr, g.strong
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if strong[a] >> b & 1:
                continue
            common = nbr[a] & nbr[b]
            for c in bits(common):
                for d in bits(common & nbr[c] >> (c + 1) << (c + 1)):
                    edges = [(a, c), (a, d), (b, c), (b, d), (c, d)]
                    return _witness(g, Pattern.DIAMOND, to_mask((a, b, c, d)), edges)
    return None


def _find_k33(g: Trigraph) -> Witness | None:
    nbr, strong = g.nbr, g.strong
    for side in itertools.combinations(range(g.n), 3):
        a, b, c = side
        if strong[a] >> b & 1 or strong[a] >> c & 1 or strong[b] >> c & 1:
            continue
        common = nbr[a] & nbr[b] & nbr[c] & ~to_mask(side)
        if common.bit_count() < 3:
            continue
        cand = list(bits(common))
        for other in itertools.combinations(cand, 3):
            x, y, z = other
            if min(other) < a:
                continue
            if strong[x] >> y & 1 or strong[x] >> z & 1 or strong[y] >> z & 1:
                continue
            edges = [(p, q) for p in side for q in other]
            return _witness(g, Pattern.K33, to_mask(side + other), edges)
    return None


# public API

def trigraph_is_free(g: Trigraph, pattern: Pattern | str, triangle_rims: bool = False) -> Witness | None:
    """None if every realization of ``g`` is free of ``pattern``, else a witness.

    ``triangle_rims`` lets a wheel's rim be a triangle as well (which makes
    every K4 a wheel).
    """
    pattern = Pattern(pattern)
    if pattern is Pattern.ISK4:
        return _find_isk4(g)
    if pattern is Pattern.WHEEL:
        return _find_wheel(g, triangle_rims)
    if pattern is Pattern.DIAMOND:
        return _find_diamond(g)
    if pattern is Pattern.K4:
        return _find_k4(g)
    return _find_k33(g)


def is_free(g: Trigraph, patterns, triangle_rims: bool = False) -> bool:
    return all(trigraph_is_free(g, p, triangle_rims) is None for p in patterns)


def first_witness(g: Trigraph, patterns, triangle_rims: bool = False) -> Witness | None:
    for p in patterns:
        w = trigraph_is_free(g, p, triangle_rims)
        if w is not None:
            return w
    return None


def find_ISK4(h: SimpleGraph) -> Witness | None:
    """An induced subdivision of K4 in ``h``, or None."""
    return _find_isk4(h)


def find_wheel(h: SimpleGraph, triangle_rims: bool = False) -> Witness | None:
    """A hole (length >= 4) plus a hub with at least three neighbours on it, or None."""
    return _find_wheel(h, triangle_rims)


def find_diamond(h: Trigraph) -> Witness | None:
    return _find_diamond(h)


def find_K4(h: Trigraph) -> Witness | None:
    return _find_k4(h)


def find_K33(h: Trigraph) -> Witness | None:
    return _find_k33(h)


def is_subdivision_of_K4(h: SimpleGraph) -> bool:
    return graphalgo.is_subdivision_of_k4(h.nbr, h.n)


def is_chordless(h: SimpleGraph) -> bool:
    return graphalgo.is_chordless(h.nbr, h.n)
