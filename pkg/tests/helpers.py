"""Brute-force graph oracles shared by the tests (networkx only, no package recognizers)."""

from __future__ import annotations

import itertools

import networkx as nx

from trigraphs import oracles
from trigraphs.core import SimpleGraph, Trigraph


def cyclic3_brute(h: SimpleGraph) -> bool:
    """2-connected, not a cycle, and no separation (A, B) at a 2-set with cycles in both sides."""
    G = oracles.to_nx(h)
    if h.n < 3 or not nx.is_biconnected(G):
        return False
    if all(d == 2 for _, d in G.degree()):
        return False
    for x, y in itertools.combinations(G.nodes(), 2):
        rest = G.subgraph([v for v in G.nodes() if v not in (x, y)])
        comps = list(nx.connected_components(rest))
        if len(comps) < 2:
            continue
        for r in range(1, len(comps)):
            for chosen in itertools.combinations(range(len(comps)), r):
                a = set().union(*(comps[i] for i in chosen)) | {x, y}
                b = set(G.nodes()) - a | {x, y}
                if nx.cycle_basis(G.subgraph(a)) and nx.cycle_basis(G.subgraph(b)):
                    return False
    return True


def chordless_brute(G: nx.Graph) -> bool:
    """No edge uv lies on a cycle together with a second, edge-avoiding u-v route."""
    for u, v in G.edges():
        H = G.copy()
        H.remove_edge(u, v)
        if nx.has_path(H, u, v) and nx.node_connectivity(H, u, v) >= 2:
            return False
    return True


def graph_labels(h: Trigraph) -> set[str]:
    """Decomposition outcomes of a graph computed from networkx alone."""
    G = oracles.to_nx(h)
    out = set()
    if not oracles.has_k4_subdivision_subgraph(h):
        out.add("SeriesParallel")
    if G.number_of_nodes() >= 6 and nx.is_connected(G) and nx.is_bipartite(G):
        a, b = nx.bipartite.sets(G)
        if len(a) >= 3 and len(b) >= 3 and G.number_of_edges() == len(a) * len(b):
            out.add("ThickCompleteBipartite")
    if G.number_of_edges() and nx.is_connected(G):
        try:
            R = nx.inverse_line_graph(G)
        except nx.NetworkXError:
            R = None
        if R is not None and max(d for _, d in R.degree()) <= 3 and chordless_brute(R):
            relabel = nx.convert_node_labels_to_integers(R)
            rh = SimpleGraph.from_edges(relabel.number_of_nodes(), relabel.edges())
            if cyclic3_brute(rh):
                out.add("LineTrigraphBasic")
    nodes = list(G.nodes())

    def cuts(cut) -> bool:
        rest = [v for v in nodes if v not in cut]
        return bool(rest) and not nx.is_connected(G.subgraph(rest))

    if cuts(()) or any(cuts(q) for q in nx.enumerate_all_cliques(G) if len(q) <= len(nodes) - 2):
        out.add("CliqueCutset")
    if any(cuts(p) for p in itertools.combinations(nodes, 2) if not G.has_edge(*p)):
        out.add("Stable2Cutset")
    return out
