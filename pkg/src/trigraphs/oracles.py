"""Brute-force reference implementations.

Everything here is deliberately naive and shares no search code with the
main modules: realizations are enumerated explicitly, vertex subsets are
enumerated explicitly, and graph questions go through networkx.  The
verifier and the tests compare the fast paths against these.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable

import networkx as nx

from .core import SimpleGraph, Trigraph, realizations


def to_nx(h: Trigraph, nodes: Iterable[int] | None = None) -> nx.Graph:
    """networkx graph of the full realization, restricted to ``nodes``."""
    nodes = list(range(h.n)) if nodes is None else list(nodes)
    G = nx.Graph()
    G.add_nodes_from(nodes)
    keep = set(nodes)
    for u, v, t in h.pairs():
        if t >= 0 and u in keep and v in keep:
            G.add_edge(u, v)
    return G


# pattern membership for a whole (small) graph

def _is_k4_subdivision(G: nx.Graph) -> bool:
    if G.number_of_nodes() < 4 or not nx.is_connected(G):
        return False
    degs = sorted(d for _, d in G.degree())
    if degs[:-4] and set(degs[:-4]) != {2}:
        return False
    if degs[-4:] != [3, 3, 3, 3]:
        return False
    branch = [v for v, d in G.degree() if d == 3]
    # every pair of branch vertices joined by a path through degree-2 vertices only
    joined = set()
    for b in branch:
        for w in G.neighbors(b):
            prev, cur = b, w
            while G.degree(cur) == 2:
                nxt = [x for x in G.neighbors(cur) if x != prev][0]
                prev, cur = cur, nxt
            if cur == b:
                return False
            joined.add(frozenset((b, cur)))
    return len(joined) == 6


def _is_wheel(G: nx.Graph) -> bool:
    for hub in G.nodes():
        rim = G.subgraph([v for v in G.nodes() if v != hub])
        if rim.number_of_nodes() < 4:
            continue
        if any(d != 2 for _, d in rim.degree()) or not nx.is_connected(rim):
            continue
        if G.degree(hub) >= 3:
            return True
    return False


def _is_k33(G: nx.Graph) -> bool:
    if G.number_of_nodes() != 6 or G.number_of_edges() != 9:
        return False
    return nx.is_isomorphic(G, nx.complete_bipartite_graph(3, 3))


def graph_has_induced(h: SimpleGraph, pattern: str) -> bool:
    """Does some vertex subset of ``h`` induce a member of ``pattern``?"""
    G = to_nx(h)
    n = h.n
    sizes = {"k4": [4], "diamond": [4], "k33": [6]}.get(pattern, range(4, n + 1))
    for k in sizes:
        for xs in itertools.combinations(range(n), k):
            S = G.subgraph(xs)
            m = S.number_of_edges()
            if pattern == "k4" and m == 6:
                return True
            if pattern == "diamond" and m == 5:
                return True
            if pattern == "k33" and _is_k33(S):
                return True
            if pattern == "isk4" and _is_k4_subdivision(S):
                return True
            if pattern == "wheel" and _is_wheel(S):
                return True
    return False


def trigraph_free_by_realizations(g: Trigraph, pattern: str) -> bool:
    """For every realization, for every vertex subset: not a member."""
    return not any(graph_has_induced(r, pattern) for r in realizations(g))


# series-parallel: look for a K4 subdivision as a (not necessarily induced) subgraph

def has_k4_subdivision_subgraph(h: Trigraph) -> bool:
    G = to_nx(h)
    nodes = [v for v in G.nodes() if G.degree(v) >= 3]
    adj = {v: set(G.neighbors(v)) for v in G.nodes()}
    for branch in itertools.combinations(nodes, 4):
        pairs = list(itertools.combinations(branch, 2))
        if _route_paths(adj, set(branch), pairs, 0, set()):
            return True
    return False


def _route_paths(adj, branch, pairs, i, used) -> bool:
    """Find internally disjoint paths for pairs[i:], avoiding ``used`` interiors."""
    if i == len(pairs):
        return True
    a, b = pairs[i]

    def dfs(v, seen):
        for w in adj[v]:
            if w == b:
                yield seen
            elif w not in branch and w not in used and w not in seen:
                yield from dfs(w, seen | {w})

    for interior in dfs(a, frozenset()):
        if _route_paths(adj, branch, pairs, i + 1, used | interior):
            return True
    return False


# complete bipartite by trying every bipartition

def bipartitions_brute(g: Trigraph) -> list[tuple[frozenset[int], frozenset[int]]]:
    out = []
    n = g.n
    for code in range(1, (1 << n) - 1):
        if code & 1 == 0:
            continue
        a = frozenset(v for v in range(n) if code >> v & 1)
        b = frozenset(range(n)) - a
        ok = all(g.value(u, v) == -1 for u, v in itertools.combinations(sorted(a), 2))
        ok = ok and all(g.value(u, v) == -1 for u, v in itertools.combinations(sorted(b), 2))
        ok = ok and all(g.value(u, v) == 1 for u in a for v in b)
        if ok:
            out.append((a, b))
    return out


# connectivity

def connected_nx(h: Trigraph, nodes: Iterable[int] | None = None) -> bool:
    G = to_nx(h, nodes)
    return G.number_of_nodes() > 0 and nx.is_connected(G)


def is_narrow_path_nx(g: Trigraph) -> bool:
    G = to_nx(g)
    n = G.number_of_nodes()
    if n == 0 or not nx.is_connected(G):
        return False
    return G.number_of_edges() == n - 1 and max((d for _, d in G.degree()), default=0) <= 2


# orbit counting

def burnside_class_count(n: int, values: int = 3) -> int:
    """Number of isomorphism classes of complete graphs on n vertices with
    each pair coloured by one of ``values`` colours."""
    total = 0
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    for perm in itertools.permutations(range(n)):
        seen = [False] * len(pairs)
        cycles = 0
        for i, (u, v) in enumerate(pairs):
            if seen[i]:
                continue
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                a, b = pairs[j]
                pa, pb = perm[a], perm[b]
                j = index[(min(pa, pb), max(pa, pb))]
        total += values ** cycles
    return total // math.factorial(n)


# line graphs

def line_graph_nx(edges: list[tuple[int, int]]) -> nx.Graph:
    H = nx.Graph()
    H.add_edges_from(edges)
    return nx.line_graph(H)
