from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from trigraphs import oracles
from trigraphs.core import (
    NarrowPath,
    Trigraph,
    branch_structure,
    complement,
    components,
    find_narrow_path,
    full_realization,
    induced,
    is_connected,
    is_narrow_path,
    is_semi_realization,
    null_realization,
    realizations,
    semi_realizations,
)
from trigraphs.generators import complete, cycle, enumerate_trigraphs, prism, theta_graph

from conftest import trigraphs


def test_complement_single_vertex():
    g = Trigraph.from_pairs(1)
    assert complement(g) == g


def test_complement_strong_triangle():
    assert complement(complete(3)).theta == (-1, -1, -1)


def test_complement_involution_exhaustive():
    for g in enumerate_trigraphs(4):
        assert complement(complement(g)) == g


def test_clique_iff_complement_stable():
    for n in range(5):
        for g in enumerate_trigraphs(n):
            assert g.is_clique(range(n)) == complement(g).is_stable(range(n))


def test_induced_basics():
    k4 = complete(4)
    assert induced(k4, []).n == 0
    assert induced(k4, range(4)).theta == k4.theta
    for x in itertools.combinations(range(4), 3):
        assert induced(k4, x).theta == (1, 1, 1)


def test_induced_keeps_host_coordinates():
    g = cycle(6)
    k = induced(induced(g, [1, 2, 3, 4]), [1, 3])
    assert [k.host_vertex(v) for v in range(k.n)] == [2, 4]


def test_realizations_of_graph_are_itself():
    g = cycle(5)
    assert full_realization(g).theta == g.theta == null_realization(g).theta
    assert [r.theta for r in realizations(g)] == [g.theta]


def test_single_semi_pair():
    g = Trigraph.from_pairs(2, semi=[(0, 1)])
    assert full_realization(g).theta == (1,)
    assert null_realization(g).theta == (-1,)
    assert sorted(r.theta for r in realizations(g)) == [(-1,), (1,)]


def test_all_semi_triangle():
    g = Trigraph.from_pairs(3, semi=[(0, 1), (0, 2), (1, 2)])
    rs = list(realizations(g))
    assert len(rs) == 8
    assert sum(r.theta == (1, 1, 1) for r in rs) == 1


@given(trigraphs(max_n=5))
def test_realization_counts(g):
    m = len(g.semi_pairs())
    rs = list(realizations(g))
    assert len(rs) == 2 ** m
    assert len({r.theta for r in rs}) == 2 ** m
    assert sum(1 for _ in semi_realizations(g)) == 3 ** m


@given(trigraphs(max_n=5))
def test_realizations_are_semi_realizations(g):
    for r in realizations(g):
        assert is_semi_realization(r, g)
    assert full_realization(g).theta in {r.theta for r in realizations(g)}
    assert null_realization(g).theta in {r.theta for r in realizations(g)}


def test_components_examples():
    assert components(Trigraph.from_pairs(0)) == []
    assert is_connected(Trigraph.from_pairs(2, semi=[(0, 1)]))
    assert len(components(Trigraph.from_pairs(2))) == 2


def test_connectivity_matches_full_realization_exhaustive():
    for n in range(1, 6):
        for g in enumerate_trigraphs(n, modulo_iso=n == 5):
            assert is_connected(g) == oracles.connected_nx(g)


def test_narrow_path_examples():
    g = cycle(5)
    assert find_narrow_path(g, 2, 2) == NarrowPath((2,))
    assert find_narrow_path(g, 0, 1).length == 1
    p = find_narrow_path(g, 0, 2)
    assert p.length == 2 and set(p.order) == {0, 1, 2}


@given(trigraphs(min_n=1, max_n=6), st.data())
def test_narrow_path_invariants(g, data):
    a = data.draw(st.integers(0, g.n - 1))
    b = data.draw(st.integers(0, g.n - 1))
    p = find_narrow_path(g, a, b)
    if p is None:
        return
    assert {p.order[0], p.order[-1]} == {a, b}
    for i, u in enumerate(p.order):
        for j in range(i + 1, len(p.order)):
            v = p.order[j]
            if j == i + 1:
                assert g.adjacent(u, v)
            else:
                assert g.value(u, v) == -1
    assert is_narrow_path(g, p.order) == oracles.is_narrow_path_nx(induced(g, p.order))


def test_branch_structure_cycle():
    bs = branch_structure(cycle(6))
    assert not bs.branch_vertices and not bs.branches


def test_branch_structure_theta():
    bs = branch_structure(theta_graph(2, 3, 4))
    assert len(bs.branch_vertices) == 2
    assert len(bs.branches) == 3 and all(bs.flat)


def test_branch_structure_prism():
    bs = branch_structure(prism(1, 2, 3))
    assert len(bs.branch_vertices) == 6
    flats = {frozenset(p.order) for p in bs.flat_branches()}
    assert flats == {frozenset({0, 3}), frozenset({1, 6, 4}), frozenset({2, 7, 8, 5})}


def test_trigraph_is_immutable():
    g = complete(3)
    with pytest.raises(AttributeError):
        g.n = 4
