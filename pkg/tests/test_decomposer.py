from __future__ import annotations

import json
import random

from hypothesis import given

from trigraphs.core import Trigraph, as_graph
from trigraphs.decomposer import (
    BASIC,
    ClassLabel,
    Leaf,
    Split,
    basic_labels,
    classify,
    classify_detail,
    decompose,
    leaves,
    splits,
    tree_to_dict,
    tree_to_json,
)
from trigraphs.freeness import Pattern, is_free
from trigraphs.generators import (
    cycle,
    enumerate_trigraphs,
    k33,
    prism,
    random_free_trigraph,
    random_trigraph,
)

from conftest import trigraphs
from helpers import graph_labels

FREE = (Pattern.ISK4, Pattern.WHEEL)


def test_classify_examples():
    assert classify(k33()) == {ClassLabel.THICK_COMPLETE_BIPARTITE}
    assert classify(prism(1, 1, 1)) == {ClassLabel.LINE_TRIGRAPH_BASIC}
    # deleting two non-adjacent vertices of C5 disconnects it, so the stable
    # 2-cutset outcome holds as well
    assert classify(cycle(5)) == {ClassLabel.SERIES_PARALLEL, ClassLabel.STABLE_2_CUTSET}


def test_basic_bowtie_is_not_split():
    g = Trigraph.from_pairs(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    assert ClassLabel.CLIQUE_CUTSET in classify(g)
    tree = decompose(g)
    assert isinstance(tree, Leaf) and tree.labels == {ClassLabel.SERIES_PARALLEL}


def test_split_on_shared_vertex():
    # two strong K33s glued at vertex 0
    left = [(a, b) for a in (0, 1, 2) for b in (3, 4, 5)]
    right = [(a, b) for a in (0, 6, 7) for b in (8, 9, 10)]
    tree = decompose(Trigraph.from_pairs(11, left + right))
    assert isinstance(tree, Split) and tree.report.cut == {0}
    assert all(isinstance(c, Leaf) and c.labels == {ClassLabel.THICK_COMPLETE_BIPARTITE} for c in tree.children)
    assert sorted(sorted(c.host_vertices()) for c in tree.children) == [[0, 1, 2, 3, 4, 5], [0, 6, 7, 8, 9, 10]]


def test_c4_is_a_leaf():
    tree = decompose(cycle(4))
    assert isinstance(tree, Leaf) and tree.labels == {ClassLabel.SERIES_PARALLEL}


def test_free_five_vertex_trees_have_labelled_leaves():
    for g in enumerate_trigraphs(5, modulo_iso=True):
        if is_free(g, FREE):
            assert classify(g)
            assert not any(leaf.irreducible for leaf in leaves(decompose(g)))


def test_weak_labels_implied_by_strong():
    rng = random.Random(1)
    for _ in range(200):
        g = random_trigraph(rng.randint(1, 7), 0.4, 0.15, rng.getrandbits(32))
        c = classify_detail(g)
        if ClassLabel.THICK_COMPLETE_BIPARTITE in c.labels:
            assert "CompleteBipartite" in c.weak_labels
        if ClassLabel.LINE_TRIGRAPH_BASIC in c.labels:
            assert "LineTrigraph" in c.weak_labels


@given(trigraphs(max_n=7))
def test_tree_invariants(g):
    tree = decompose(g)
    for sp in splits(tree):
        assert not basic_labels(sp.trigraph)
        assert sp.report.partition.is_valid_for(sp.trigraph)
    for leaf in leaves(tree):
        assert leaf.labels == basic_labels(leaf.trigraph) or not leaf.labels
        assert leaf.labels <= BASIC
    d = tree_to_dict(tree)
    assert json.loads(tree_to_json(tree)) == d
    assert sorted(d["vertices"]) == list(range(g.n))


def test_tree_vertices_are_in_input_coordinates():
    g = random_free_trigraph(9, FREE, seed=4)
    for sp in splits(decompose(g)):
        verts = set(sp.host_vertices())
        for child in sp.children:
            assert set(child.host_vertices()) <= verts


def test_graph_outcomes_match_independent_recognizers():
    rng = random.Random(2)
    samples = [as_graph(h) for n in range(1, 5) for h in enumerate_trigraphs(n) if h.is_graph]
    for _ in range(300):
        samples.append(as_graph(random_trigraph(rng.randint(5, 6), rng.uniform(0.3, 0.7), 0.0, rng.getrandbits(32))))
    for h in samples:
        assert {str(x) for x in classify(h)} == graph_labels(h), h
