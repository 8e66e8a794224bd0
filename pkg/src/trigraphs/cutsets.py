"""Cut-partitions, clique-cutsets and stable 2-cutsets.

A set C is a cutset when deleting it leaves at least two components.  Ties
are broken by cut size, then lexicographically by sorted vertex list.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from ._bits import bits, component_masks, to_mask
from .core import Trigraph


class CutKind(str, Enum):
    CLIQUE = "CliqueCutset"
    STABLE2 = "Stable2Cutset"


@dataclass(frozen=True)
class CutPartition:
    a: frozenset[int]
    b: frozenset[int]
    c: frozenset[int]

    def is_valid_for(self, g: Trigraph) -> bool:
        """Partitions V(g), a and b non-empty, a strongly anti-complete to b."""
        if not self.a or not self.b:
            return False
        if self.a & self.b or self.a & self.c or self.b & self.c:
            return False
        if self.a | self.b | self.c != frozenset(range(g.n)):
            return False
        bmask = to_mask(self.b)
        return all(g.nbr[u] & bmask == 0 for u in self.a)

    def to_dict(self) -> dict:
        return {"a": sorted(self.a), "b": sorted(self.b), "c": sorted(self.c)}


@dataclass(frozen=True)
class CutsetReport:
    kind: CutKind
    cut: frozenset[int]
    partition: CutPartition

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "cut": sorted(self.cut), "partition": self.partition.to_dict()}


def cut_partition_for(g: Trigraph, cut: Iterable[int]) -> CutPartition | None:
    """(first component, the other components, cut) if deleting ``cut`` disconnects g."""
    cut = frozenset(cut)
    for v in cut:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in trigraph on {g.n} vertices")
    comps = component_masks(g.nbr, g.full_mask & ~to_mask(cut))
    if len(comps) < 2:
        return None
    a = comps[0]
    b = 0
    for c in comps[1:]:
        b |= c
    part = CutPartition(frozenset(bits(a)), frozenset(bits(b)), cut)
    if not part.is_valid_for(g):
        raise AssertionError("cut partition failed re-validation")
    return part


def _is_cut(g: Trigraph, cmask: int) -> bool:
    return len(component_masks(g.nbr, g.full_mask & ~cmask)) >= 2


def strong_cliques_by_size(g: Trigraph, limit: int | None = None) -> Iterator[tuple[int, ...]]:
    """Strong cliques (the empty one first) by size, lexicographic within a size."""
    layer: list[tuple[int, ...]] = [()]
    size = 0
    while layer and (limit is None or size <= limit):
        yield from layer
        nxt = []
        for q in layer:
            common = g.full_mask
            for v in q:
                common &= g.strong[v]
            start = q[-1] + 1 if q else 0
            for w in bits(common >> start << start):
                nxt.append(q + (w,))
        layer = nxt
        size += 1


def find_clique_cutset(g: Trigraph) -> CutsetReport | None:
    for q in strong_cliques_by_size(g, limit=g.n - 2):
        if _is_cut(g, to_mask(q)):
            return CutsetReport(CutKind.CLIQUE, frozenset(q), cut_partition_for(g, q))
    return None


def find_stable_2_cutset(g: Trigraph) -> CutsetReport | None:
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.strong[u] >> v & 1:
                continue
            if _is_cut(g, (1 << u) | (1 << v)):
                return CutsetReport(CutKind.STABLE2, frozenset((u, v)), cut_partition_for(g, (u, v)))
    return None


def find_cutset(g: Trigraph) -> CutsetReport | None:
    """Clique-cutset if there is one, else a stable 2-cutset."""
    return find_clique_cutset(g) or find_stable_2_cutset(g)


def has_cut_vertex(g: Trigraph) -> bool:
    return any(_is_cut(g, 1 << v) for v in range(g.n))
