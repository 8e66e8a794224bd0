from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, strategies as st

from trigraphs import oracles
from trigraphs.core import as_graph, induced
from trigraphs.freeness import Pattern, find_wheel, is_free, trigraph_is_free
from trigraphs.generators import (
    canonical_form,
    complete,
    enumerate_trigraphs,
    from_canonical,
    grow_free_instance,
    iso_classes,
    k33,
    k4_line,
    long_rich_square,
    make_family,
    permute,
    prism,
    random_free_trigraph,
    random_trigraph,
    theta_graph,
)
from trigraphs.structure import as_complete_bipartite, as_line_trigraph, as_prism, is_theta

from conftest import trigraphs


def test_enumeration_counts():
    assert len(list(enumerate_trigraphs(2))) == 3
    assert len(list(enumerate_trigraphs(2, modulo_iso=True))) == 3
    assert len(list(enumerate_trigraphs(4))) == 729


@pytest.mark.parametrize("n", range(1, 6))
def test_iso_class_counts_match_burnside(n):
    assert len(iso_classes(n)) == oracles.burnside_class_count(n)


def test_iso_classes_cover_labeled_trigraphs():
    codes = {canonical_form(g) for g in enumerate_trigraphs(4)}
    assert codes == set(iso_classes(4))


@given(trigraphs(max_n=6), st.randoms(use_true_random=False))
def test_canonical_form_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(permute(g, perm)) == canonical_form(g)
    assert canonical_form(from_canonical(canonical_form(g))) == canonical_form(g)


def test_family_examples():
    p = make_family("prism", 1, 1, 1)
    assert p.n == 6 and as_prism(p) is not None
    lrs = long_rich_square([2, 2])
    assert lrs.n == 4 + 3 + 3
    kl = k4_line([1] * 6)
    assert kl.n == 12
    root = as_line_trigraph(kl)
    assert root.h.n == 10 and len(root.h.edges()) == 12
    assert sum(1 for v in range(root.h.n) if root.h.degree(v) == 3) == 4


@pytest.mark.parametrize("lengths", list(itertools.product((1, 2, 3), repeat=3)))
def test_families_pass_their_recognizers(lengths):
    assert as_prism(prism(*lengths)) is not None
    th = [x + 1 for x in lengths]
    assert is_theta(as_graph(theta_graph(*th)))


def test_k33_is_thick():
    assert as_complete_bipartite(k33()).thick


@pytest.mark.parametrize("lengths", [ls for k in (2, 3) for ls in itertools.product((1, 2, 3), repeat=k)])
def test_long_rich_squares_contain_wheels(lengths):
    assert find_wheel(as_graph(long_rich_square(lengths))) is not None


def test_unknown_family():
    with pytest.raises(ValueError):
        make_family("dodecahedron")


def test_random_trigraph_extremes():
    assert random_trigraph(5, 1.0, 0.0, seed=1).theta == complete(5).theta
    assert set(random_trigraph(5, 0.0, 1.0, seed=1).theta) == {0}
    assert random_trigraph(8, 0.3, 0.3, seed=9) == random_trigraph(8, 0.3, 0.3, seed=9)


def test_random_free_trigraph():
    pats = (Pattern.ISK4, Pattern.WHEEL)
    g = random_free_trigraph(8, pats, seed=2)
    assert g is not None and is_free(g, pats)
    assert random_free_trigraph(8, pats, seed=2) == g


def test_grow_zero_is_base():
    base = prism(1, 2, 1)
    assert grow_free_instance(base, 0, [Pattern.ISK4], seed=1) == base


@pytest.mark.parametrize("seed", range(8))
def test_growth_keeps_prism_and_freeness(seed):
    pats = (Pattern.ISK4, Pattern.WHEEL, Pattern.DIAMOND)
    base = prism(1, 2, 2)
    g = grow_free_instance(base, 5, pats, seed)
    assert induced(g, range(base.n)).theta == base.theta
    for k in range(base.n, g.n + 1):
        prefix = induced(g, range(k))
        assert all(trigraph_is_free(prefix, p) is None for p in pats)
    assert g == grow_free_instance(base, 5, pats, seed)


def test_growth_freeness_against_oracle():
    rng = random.Random(4)
    for _ in range(3):
        g = grow_free_instance(prism(1, 1, 1), 2, ["isk4", "wheel"], rng.getrandbits(32))
        if len(g.semi_pairs()) <= 4:
            assert oracles.trigraph_free_by_realizations(g, "isk4")
            assert oracles.trigraph_free_by_realizations(g, "wheel")
