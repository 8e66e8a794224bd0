"""Classification into the decomposition outcomes, and recursive decomposition trees."""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Union

from .core import Trigraph, induced
from .cutsets import CutsetReport, find_clique_cutset, find_stable_2_cutset
from .structure import (
    Bipartition,
    RootGraph,
    RootQualification,
    as_complete_bipartite,
    as_line_trigraph,
    is_series_parallel,
    qualify_root,
)


class ClassLabel(str, Enum):
    SERIES_PARALLEL = "SeriesParallel"
    THICK_COMPLETE_BIPARTITE = "ThickCompleteBipartite"
    LINE_TRIGRAPH_BASIC = "LineTrigraphBasic"
    CLIQUE_CUTSET = "CliqueCutset"
    STABLE_2_CUTSET = "Stable2Cutset"

    def __str__(self) -> str:
        return self.value


BASIC = frozenset({
    ClassLabel.SERIES_PARALLEL,
    ClassLabel.THICK_COMPLETE_BIPARTITE,
    ClassLabel.LINE_TRIGRAPH_BASIC,
})

LABEL_ORDER = list(ClassLabel)


def sorted_labels(labels) -> list[ClassLabel]:
    return sorted(labels, key=LABEL_ORDER.index)


@dataclass(frozen=True)
class Classification:
    """Everything ``classify`` looked at.

    ``complete_bipartite`` and ``line_trigraph`` are the unqualified (weak)
    outcomes; ``labels`` is the strong-form label set.
    """

    labels: frozenset[ClassLabel]
    series_parallel: bool
    bipartition: Bipartition | None
    root: RootGraph | None
    root_flags: RootQualification | None
    clique_cutset: CutsetReport | None
    stable_2_cutset: CutsetReport | None

    @property
    def complete_bipartite(self) -> bool:
        return self.bipartition is not None

    @property
    def line_trigraph(self) -> bool:
        return self.root is not None

    @property
    def weak_labels(self) -> frozenset[str]:
        out = set()
        if self.series_parallel:
            out.add("SeriesParallel")
        if self.complete_bipartite:
            out.add("CompleteBipartite")
        if self.line_trigraph:
            out.add("LineTrigraph")
        if self.clique_cutset is not None:
            out.add("CliqueCutset")
        if self.stable_2_cutset is not None:
            out.add("Stable2Cutset")
        return frozenset(out)

    def to_dict(self) -> dict:
        return {
            "labels": [str(x) for x in sorted_labels(self.labels)],
            "weak_labels": sorted(self.weak_labels),
            "root_flags": self.root_flags._asdict() if self.root_flags else None,
        }


def classify_detail(g: Trigraph, cutsets: bool = True) -> Classification:
    sp = is_series_parallel(g)
    bp = as_complete_bipartite(g)
    root = as_line_trigraph(g)
    flags = qualify_root(root.h) if root is not None else None
    cc = find_clique_cutset(g) if cutsets else None
    s2 = find_stable_2_cutset(g) if cutsets else None
    labels = set()
    if sp:
        labels.add(ClassLabel.SERIES_PARALLEL)
    if bp is not None and bp.thick:
        labels.add(ClassLabel.THICK_COMPLETE_BIPARTITE)
    if flags is not None and flags.qualified:
        labels.add(ClassLabel.LINE_TRIGRAPH_BASIC)
    if cc is not None:
        labels.add(ClassLabel.CLIQUE_CUTSET)
    if s2 is not None:
        labels.add(ClassLabel.STABLE_2_CUTSET)
    return Classification(frozenset(labels), sp, bp, root, flags, cc, s2)


def classify(g: Trigraph) -> frozenset[ClassLabel]:
    """Every outcome of the decomposition theorem that holds for ``g``."""
    return classify_detail(g).labels


def basic_labels(g: Trigraph) -> frozenset[ClassLabel]:
    return classify_detail(g, cutsets=False).labels


# trees

@dataclass(frozen=True)
class Leaf:
    labels: frozenset[ClassLabel]
    trigraph: Trigraph

    @property
    def irreducible(self) -> bool:
        """No basic label and no cutset: impossible for {ISK4, wheel}-free input."""
        return not self.labels

    def host_vertices(self) -> list[int]:
        return list(self.trigraph.host_vertices(range(self.trigraph.n)))


@dataclass(frozen=True)
class Split:
    report: CutsetReport
    trigraph: Trigraph
    children: tuple["DecompositionTree", "DecompositionTree"]

    def host_vertices(self) -> list[int]:
        return list(self.trigraph.host_vertices(range(self.trigraph.n)))


DecompositionTree = Union[Leaf, Split]


def decompose(g: Trigraph) -> DecompositionTree:
    """Leaf if a basic outcome holds, else split on a clique-cutset, else on a stable 2-cutset.

    Children are the subtrigraphs induced on a + c and b + c; their ``origin``
    keeps the input's vertex numbers.
    """
    labels = basic_labels(g)
    if labels:
        return Leaf(labels, g)
    report = find_clique_cutset(g) or find_stable_2_cutset(g)
    if report is None:
        return Leaf(frozenset(), g)
    p = report.partition
    left = induced(g, p.a | p.c)
    right = induced(g, p.b | p.c)
    return Split(report, g, (decompose(left), decompose(right)))


def leaves(tree: DecompositionTree):
    if isinstance(tree, Leaf):
        yield tree
    else:
        for child in tree.children:
            yield from leaves(child)


def splits(tree: DecompositionTree):
    if isinstance(tree, Split):
        yield tree
        for child in tree.children:
            yield from splits(child)


def tree_to_dict(tree: DecompositionTree) -> dict:
    """Nested record with every vertex list in the coordinates of the root input."""
    if isinstance(tree, Leaf):
        return {
            "leaf": True,
            "labels": [str(x) for x in sorted_labels(tree.labels)],
            "irreducible": tree.irreducible,
            "vertices": tree.host_vertices(),
        }
    host = tree.trigraph.host_vertex
    p = tree.report.partition
    return {
        "leaf": False,
        "cut_kind": tree.report.kind.value,
        "cut": sorted(host(v) for v in tree.report.cut),
        "partition": {
            "a": sorted(host(v) for v in p.a),
            "b": sorted(host(v) for v in p.b),
            "c": sorted(host(v) for v in p.c),
        },
        "vertices": tree.host_vertices(),
        "children": [tree_to_dict(c) for c in tree.children],
    }


def tree_to_json(tree: DecompositionTree, indent: int | None = 2) -> str:
    return json.dumps(tree_to_dict(tree), indent=indent)
