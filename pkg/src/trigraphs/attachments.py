"""How outside parts attach to a host induced subtrigraph.

The host is given as a vertex set of ``g``; its strong triangles and flat
branches are those of the induced subtrigraph ``g[host]``, reported in the
coordinates of ``g``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from ._bits import bits, component_masks, is_connected_mask, to_mask
from .core import NarrowPath, Trigraph, branch_structure, induced, is_narrow_path, strong_triangles
from .structure import K4LinePieces, as_line_trigraph, qualify_root
from . import graphalgo


class InternalConsistencyError(RuntimeError):
    """A construction that must succeed on valid inputs did not."""


@dataclass(frozen=True)
class HostStructure:
    vertices: frozenset[int]
    triangles: tuple[frozenset[int], ...]
    flat_branches: tuple[NarrowPath, ...]

    @property
    def mask(self) -> int:
        return to_mask(self.vertices)


def host_structure(g: Trigraph, host: Iterable[int]) -> HostStructure:
    hl = sorted(set(host))
    k = induced(g, hl)
    tris = tuple(frozenset(hl[v] for v in t) for t in strong_triangles(k))
    flats = tuple(
        NarrowPath(tuple(hl[v] for v in p.order)) for p in branch_structure(k).flat_branches()
    )
    return HostStructure(frozenset(hl), tris, flats)


@dataclass(frozen=True)
class AttachmentReport:
    over: frozenset[int]
    type_triangle: bool
    type_branch: bool

    @property
    def typed(self) -> bool:
        return self.type_triangle or self.type_branch

    def to_dict(self) -> dict:
        return {"over": sorted(self.over), "type_triangle": self.type_triangle, "type_branch": self.type_branch}


def _check_disjoint(g: Trigraph, host: Iterable[int], part: Iterable[int]) -> tuple[int, int]:
    hm, pm = to_mask(host), to_mask(part)
    if hm & pm:
        raise ValueError("host and part must be disjoint")
    if (hm | pm) >> g.n:
        raise ValueError("host and part must be vertex sets of g")
    return hm, pm


def _attachment_mask(g: Trigraph, hmask: int, pmask: int) -> int:
    over = 0
    for v in bits(pmask):
        over |= g.nbr[v] & hmask
    return over


def _report(hs: HostStructure, over: frozenset[int]) -> AttachmentReport:
    tri = any(over <= t for t in hs.triangles)
    br = any(over <= p.vertices for p in hs.flat_branches)
    return AttachmentReport(over, tri, br)


def attachment(g: Trigraph, host: Iterable[int], part: Iterable[int],
               structure: HostStructure | None = None) -> AttachmentReport:
    host, part = frozenset(host), frozenset(part)
    hm, pm = _check_disjoint(g, host, part)
    hs = structure if structure is not None else host_structure(g, host)
    return _report(hs, frozenset(bits(_attachment_mask(g, hm, pm))))


@dataclass(frozen=True)
class AugmentingPathCertificate:
    path: NarrowPath
    endpoint_triangles: tuple[tuple[int, int, int], tuple[int, int, int]]
    host_branches: tuple[NarrowPath, NarrowPath]

    def to_dict(self) -> dict:
        return {
            "path": list(self.path.order),
            "endpoint_triangles": [list(t) for t in self.endpoint_triangles],
            "host_branches": [list(p.order) for p in self.host_branches],
        }


def is_augmenting_path(g: Trigraph, host: Iterable[int], path: NarrowPath | Sequence[int],
                       structure: HostStructure | None = None) -> AugmentingPathCertificate | None:
    order = tuple(path.order if isinstance(path, NarrowPath) else path)
    host = frozenset(host)
    hm, pm = _check_disjoint(g, host, order)
    if len(order) < 2 or not is_narrow_path(g, order):
        return None
    for v in order[1:-1]:
        if g.nbr[v] & hm:
            return None
    hs = structure if structure is not None else host_structure(g, host)
    tris = []
    branch_options = []
    for x in (order[0], order[-1]):
        nb = g.nbr[x] & hm
        if nb.bit_count() != 2:
            return None
        x1, x2 = bits(nb)
        if not g.is_strong_clique((x, x1, x2)):
            return None
        tris.append((x, x1, x2))
        branch_options.append([p for p in hs.flat_branches if x1 in p.vertices and x2 in p.vertices])
    for fa, fb in itertools.product(*branch_options):
        if fa != fb:
            return AugmentingPathCertificate(NarrowPath(order), (tris[0], tris[1]), (fa, fb))
    return None


# minimal violators

def _supported_host(g: Trigraph, host: frozenset[int]) -> None:
    root = as_line_trigraph(induced(g, host))
    if root is None or not qualify_root(root.h).qualified:
        raise ValueError("host must induce a line trigraph of a cyclically 3-connected, "
                         "chordless graph of maximum degree at most three")


def minimize_violator(g: Trigraph, hs: HostStructure, start: int) -> int:
    """Greedily shrink the untyped connected set ``start`` to an inclusion-minimal one."""
    hm = hs.mask
    s = start
    changed = True
    while changed:
        changed = False
        for v in bits(s):
            t = s & ~(1 << v)
            if not is_connected_mask(g.nbr, t):
                continue
            if not _report(hs, frozenset(bits(_attachment_mask(g, hm, t)))).typed:
                s = t
                changed = True
                break
    return s


def minimal_violator(g: Trigraph, host: Iterable[int], check_host: bool = True) -> frozenset[int] | None:
    """Inclusion-minimal connected outside set of neither type, or None.

    Typedness is inherited by subsets, so only components of g - host need
    to be examined; the first untyped one is shrunk in ascending vertex order.
    """
    host = frozenset(host)
    if check_host:
        _supported_host(g, host)
    hs = host_structure(g, host)
    hm = hs.mask
    for comp in component_masks(g.nbr, g.full_mask & ~hm):
        if not _report(hs, frozenset(bits(_attachment_mask(g, hm, comp)))).typed:
            return frozenset(bits(minimize_violator(g, hs, comp)))
    return None


# line trigraphs of K4 subdivisions

def pieces_of_K4_line(g: Trigraph, host: Iterable[int]) -> K4LinePieces | None:
    hl = sorted(set(host))
    k = induced(g, hl)
    root = as_line_trigraph(k)
    if root is None:
        return None
    h = root.h
    if not graphalgo.is_subdivision_of_k4(h.nbr, h.n) or not graphalgo.is_chordless(h.nbr, h.n):
        return None
    vertex_of = root.vertex_of
    branch = [v for v in range(h.n) if h.degree(v) == 3]
    index = {b: i for i, b in enumerate(branch)}

    def line_vertex(a: int, b: int) -> int:
        return hl[vertex_of[(min(a, b), max(a, b))]]

    triangles = tuple(
        tuple(sorted(line_vertex(b, w) for w in bits(h.nbr[b]))) for b in branch
    )
    paths: dict[tuple[int, int], NarrowPath] = {}
    for b in branch:
        for w in bits(h.nbr[b]):
            walk = [b, w]
            while walk[-1] not in index:
                nxt = h.nbr[walk[-1]] & ~(1 << walk[-2])
                walk.append(nxt.bit_length() - 1)
            x, y = index[b], index[walk[-1]]
            if x < y:
                paths[(x, y)] = NarrowPath(tuple(line_vertex(p, q) for p, q in zip(walk, walk[1:])))
    if len(paths) != 6:
        return None
    return K4LinePieces(triangles, dict(sorted(paths.items())))


def _cubic(h) -> int:
    return sum(1 for v in range(h.n) if h.degree(v) == 3)


def extend_line_trigraph(g: Trigraph, host: Iterable[int], aug: AugmentingPathCertificate) -> frozenset[int]:
    """host plus the augmenting path, re-recognized as a line trigraph.

    The new root is the old one plus a path between two degree-2 vertices, so
    it has len(path) more edges and two more cubic vertices.  It need not be
    qualified again: on a prism with one-edge branches the new root has
    adjacent cubic vertices, hence chords.
    """
    host = frozenset(host)
    if is_augmenting_path(g, host, aug.path) is None:
        raise ValueError("certificate does not describe an augmenting path of this host")
    old = as_line_trigraph(induced(g, host))
    if old is None or not qualify_root(old.h).qualified:
        raise ValueError("host must induce a line trigraph with a qualified root")
    new = host | aug.path.vertices
    root = as_line_trigraph(induced(g, new))
    if root is None:
        raise InternalConsistencyError("extended host is not a line trigraph")
    if len(root.edge_of) != len(old.edge_of) + len(aug.path.order) or _cubic(root.h) != _cubic(old.h) + 2:
        raise InternalConsistencyError("extended root does not have the expected shape")
    return new
