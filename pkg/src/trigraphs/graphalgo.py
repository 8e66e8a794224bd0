"""Graph algorithms on adjacency bitmask lists.

These take ``adj`` (list of neighbour masks, simple graph) and return plain
values.  The public recognizers wrap them; the exhaustive verifier calls them
directly to avoid building trigraph objects for millions of graphs.
"""

from __future__ import annotations

from collections import Counter

from ._bits import bits, component_masks, count_components, has_cycle, is_connected_mask, reach


def full(n: int) -> int:
    return (1 << n) - 1


def is_biconnected(adj: list[int], n: int) -> bool:
    """2-connected: at least three vertices, connected, and no cut-vertex."""
    if n < 3:
        return False
    allm = full(n)
    if not is_connected_mask(adj, allm):
        return False
    for v in range(n):
        if adj[v].bit_count() < 2:
            return False
    for v in range(n):
        if not is_connected_mask(adj, allm & ~(1 << v)):
            return False
    return True


def is_triconnected(adj: list[int], n: int) -> bool:
    """3-connected: more than three vertices and no separating set of size <= 2."""
    if n < 4:
        return False
    if not is_biconnected(adj, n):
        return False
    allm = full(n)
    for u in range(n):
        for v in range(u + 1, n):
            if not is_connected_mask(adj, allm & ~(1 << u) & ~(1 << v)):
                return False
    return True


def is_cycle_graph(adj: list[int], n: int) -> bool:
    return n >= 3 and all(a.bit_count() == 2 for a in adj) and is_connected_mask(adj, full(n))


def has_cyclic_2_separation(adj: list[int], n: int) -> bool:
    """Is there a separation (A, B) with |A & B| <= 2 and cycles in both H[A] and H[B]?

    Both sides minus the middle are unions of whole components of H - S for
    S = A & B, so it is enough to split those components into two groups.
    """
    allm = full(n)
    cuts = [0] + [1 << u for u in range(n)]
    cuts += [(1 << u) | (1 << v) for u in range(n) for v in range(u + 1, n)]
    for s in cuts:
        comps = component_masks(adj, allm & ~s)
        k = len(comps)
        if k < 2:
            continue
        # component 0 goes to side A; enumerate the rest
        for code in range(1 << (k - 1)):
            a = comps[0]
            b = 0
            for i in range(1, k):
                if code >> (i - 1) & 1:
                    a |= comps[i]
                else:
                    b |= comps[i]
            if not b:
                continue
            if has_cycle(adj, a | s) and has_cycle(adj, b | s):
                return True
    return False


def is_cyclically_3_connected(adj: list[int], n: int) -> bool:
    if not is_biconnected(adj, n):
        return False
    if is_cycle_graph(adj, n):
        return False
    return not has_cyclic_2_separation(adj, n)


class Suppressed:
    """Result of suppressing all degree-2 vertices of a graph.

    ``nodes`` are the kept vertices (degree != 2), ``edges`` a Counter of
    multigraph edges (u, v) with u <= v, ``lengths`` the lengths of the
    original paths behind every multigraph edge (same keys, lists).
    ``collapsed`` is True when some component consisted of degree-2 vertices
    only (a cycle that vanished).
    """

    __slots__ = ("nodes", "edges", "lengths", "collapsed")

    def __init__(self, nodes, edges, lengths, collapsed):
        self.nodes = nodes
        self.edges = edges
        self.lengths = lengths
        self.collapsed = collapsed

    @property
    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    @property
    def is_simple(self) -> bool:
        return not self.has_loops and all(c == 1 for c in self.edges.values())

    def degree(self, u: int) -> int:
        d = 0
        for (a, b), c in self.edges.items():
            if a == u:
                d += c
            if b == u:
                d += c
        return d

    def simple_adjacency(self) -> tuple[list[int], list[int]]:
        """Relabelled adjacency masks of the (assumed simple) multigraph."""
        idx = {v: i for i, v in enumerate(self.nodes)}
        adj = [0] * len(self.nodes)
        for a, b in self.edges:
            i, j = idx[a], idx[b]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return adj, list(self.nodes)


def suppress(adj: list[int], n: int) -> Suppressed:
    deg = [a.bit_count() for a in adj]
    keep = [v for v in range(n) if deg[v] != 2]
    keepset = set(keep)
    edges: Counter = Counter()
    lengths: dict[tuple[int, int], list[int]] = {}
    visited_two: set[int] = set()
    for b in keep:
        for w in bits(adj[b]):
            prev, cur, length = b, w, 1
            interior = []
            while cur not in keepset:
                interior.append(cur)
                nxt = adj[cur] & ~(1 << prev)
                prev, cur = cur, nxt.bit_length() - 1
                length += 1
            # each multigraph edge is walked twice; count it from one side only
            key = (b, cur) if b <= cur else (cur, b)
            if b < cur or (b == cur and interior[0] < interior[-1]):
                edges[key] += 1
                lengths.setdefault(key, []).append(length)
            visited_two.update(interior)
    twos = {v for v in range(n) if deg[v] == 2}
    collapsed = bool(twos - visited_two)
    return Suppressed(tuple(keep), edges, lengths, collapsed)


def _connected_min_degree_two(adj: list[int], n: int) -> bool:
    if n == 0 or not is_connected_mask(adj, full(n)):
        return False
    return all(2 <= a.bit_count() for a in adj)


def is_theta(adj: list[int], n: int) -> bool:
    """Subdivision of K_{2,3}: two degree-3 vertices joined by three paths of length >= 2."""
    if not _connected_min_degree_two(adj, n):
        return False
    if any(a.bit_count() > 3 for a in adj):
        return False
    s = suppress(adj, n)
    if len(s.nodes) != 2 or s.collapsed:
        return False
    u, v = s.nodes
    key = (min(u, v), max(u, v))
    return s.edges == Counter({key: 3}) and all(L >= 2 for L in s.lengths[key])


def is_subdivision_of_k4(adj: list[int], n: int) -> bool:
    if not _connected_min_degree_two(adj, n):
        return False
    if any(a.bit_count() > 3 for a in adj):
        return False
    s = suppress(adj, n)
    if len(s.nodes) != 4 or s.collapsed or not s.is_simple:
        return False
    return len(s.edges) == 6


def is_subdivision_of_3_connected(adj: list[int], n: int) -> bool:
    if not _connected_min_degree_two(adj, n):
        return False
    s = suppress(adj, n)
    if s.collapsed or not s.is_simple or len(s.nodes) < 4:
        return False
    sadj, _ = s.simple_adjacency()
    return is_triconnected(sadj, len(sadj))


def is_chordless(adj: list[int], n: int) -> bool:
    """Every cycle induced.

    Equivalent test: for every edge uv, the graph minus that edge has no two
    internally disjoint u-v paths (two such paths would form a cycle with
    chord uv).
    """
    allm = full(n)
    for u in range(n):
        for v in bits(adj[u] >> (u + 1) << (u + 1)):
            a = list(adj)
            a[u] &= ~(1 << v)
            a[v] &= ~(1 << u)
            r = reach(a, u, allm)
            if not r >> v & 1:
                continue
            separated = False
            for w in bits(r & ~(1 << u) & ~(1 << v)):
                if not reach(a, u, allm & ~(1 << w)) >> v & 1:
                    separated = True
                    break
            if not separated:
                return False
    return True


def series_parallel_reduces(adj: list[int], n: int) -> bool:
    """Reduction test for 'no K4-subdivision subgraph'.

    Repeatedly delete vertices of degree <= 1 and suppress degree-2 vertices
    (joining their two neighbours, merging any resulting parallel edge).  The
    graph is series-parallel iff everything disappears; a non-empty remainder
    has minimum degree >= 3 and therefore contains a K4 subdivision.
    """
    nb = [set(b for b in bits(adj[v])) for v in range(n)]
    alive = set(range(n))
    stack = list(range(n))
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        d = len(nb[v])
        if d <= 1:
            alive.discard(v)
            for w in nb[v]:
                nb[w].discard(v)
                stack.append(w)
            nb[v] = set()
        elif d == 2:
            a, b = nb[v]
            alive.discard(v)
            nb[a].discard(v)
            nb[b].discard(v)
            nb[v] = set()
            nb[a].add(b)
            nb[b].add(a)
            stack.append(a)
            stack.append(b)
    return not alive


def max_degree(adj: list[int]) -> int:
    return max((a.bit_count() for a in adj), default=0)


def components_count(adj: list[int], n: int) -> int:
    return count_components(adj, full(n))
