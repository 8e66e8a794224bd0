"""Named families, random trigraphs, and exhaustive enumeration."""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Iterator, Sequence

from ._bits import bits
from .core import Trigraph, _make, as_graph, pair_count, pair_rank, pairs_of
from .freeness import Pattern, trigraph_is_free
from .structure import line_graph

LABELED_MAX_N = 6
MODULO_ISO_MAX_N = 6

_ENC = {-1: 0, 0: 1, 1: 2}


# canonical forms

def permute(g: Trigraph, perm: Sequence[int]) -> Trigraph:
    """The trigraph with vertex ``perm[v]`` playing the role of v."""
    n = g.n
    theta = [0] * pair_count(n)
    for (u, v), t in zip(pairs_of(n), g.theta):
        theta[pair_rank(n, perm[u], perm[v])] = t
    return _make(n, theta)


def _refined_cells(g: Trigraph) -> list[list[int]]:
    """Vertex cells from colour refinement, in an isomorphism-invariant order."""
    n = g.n
    colour = [0] * n
    while True:
        sig = [
            (colour[v], tuple(sorted((g.theta[pair_rank(n, v, w)], colour[w]) for w in range(n) if w != v)))
            for v in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            break
        colour = new
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_form(g: Trigraph) -> bytes:
    """Least row-major code over the vertex orders compatible with the refined cells.

    Codes agree exactly for isomorphic trigraphs: refinement is invariant, so
    every isomorphism maps the admissible orders of one onto those of the other.
    """
    n = g.n
    if n <= 1:
        return bytes([n])
    cells = _refined_cells(g)
    enc = [_ENC[t] for t in g.theta]
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in cells)):
        order = [v for part in parts for v in part]
        code = bytes(
            enc[pair_rank(n, order[i], order[j])] for i in range(n) for j in range(i + 1, n)
        )
        if best is None or code < best:
            best = code
    return bytes([n]) + best


def from_canonical(code: bytes) -> Trigraph:
    n = code[0]
    dec = {0: -1, 1: 0, 2: 1}
    return _make(n, [dec[c] for c in code[1:]])


# enumeration

def enumerate_trigraphs(n: int, modulo_iso: bool = False) -> Iterator[Trigraph]:
    if n < 0:
        raise ValueError("n must be non-negative")
    if modulo_iso:
        if n > MODULO_ISO_MAX_N:
            raise ValueError(f"enumeration modulo isomorphism is limited to n <= {MODULO_ISO_MAX_N}")
        for code in iso_classes(n):
            yield from_canonical(code)
        return
    if n > LABELED_MAX_N:
        raise ValueError(f"labeled enumeration is limited to n <= {LABELED_MAX_N}")
    for theta in itertools.product((-1, 0, 1), repeat=pair_count(n)):
        yield _make(n, theta)


_CLASS_CACHE: dict[int, list[bytes]] = {}


def iso_classes(n: int) -> list[bytes]:
    """Canonical codes of all trigraphs on n vertices up to isomorphism.

    Built by adding a vertex in every possible way to each class on n - 1
    vertices (every trigraph arises this way) and keeping new codes.
    """
    if n in _CLASS_CACHE:
        return _CLASS_CACHE[n]
    if n <= 1:
        out = [canonical_form(_make(n, []))]
    else:
        seen = set()
        for code in iso_classes(n - 1):
            small = from_canonical(code)
            for row in itertools.product((-1, 0, 1), repeat=n - 1):
                theta = []
                for u in range(n - 1):
                    theta.extend(small.theta[pair_rank(n - 1, u, v)] for v in range(u + 1, n - 1))
                    theta.append(row[u])
                seen.add(canonical_form(_make(n, theta)))
        out = sorted(seen)
    _CLASS_CACHE[n] = out
    return out


# families

def _with_semi(n: int, strong: Iterable[tuple[int, int]], semi: Iterable[tuple[int, int]] | None) -> Trigraph:
    theta = [-1] * pair_count(n)
    for u, v in strong:
        theta[pair_rank(n, u, v)] = 1
    for u, v in semi or ():
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"bad semi-adjacent pair ({u}, {v}) for n={n}")
        theta[pair_rank(n, u, v)] = 0
    return _make(n, theta)


def _path_edges(ends: tuple[int, int], length: int, next_id: int) -> tuple[list[tuple[int, int]], int]:
    """Edges of a path of ``length`` edges between ``ends`` using fresh interior ids."""
    a, b = ends
    chain = [a] + list(range(next_id, next_id + length - 1)) + [b]
    return list(zip(chain, chain[1:])), next_id + length - 1


def prism(l1: int, l2: int, l3: int, semi=None) -> Trigraph:
    """Triangles {0,1,2} and {3,4,5}; branch i joins i to i + 3 with the given length."""
    for L in (l1, l2, l3):
        if L < 1:
            raise ValueError("prism branch lengths must be at least 1")
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    nxt = 6
    for i, L in enumerate((l1, l2, l3)):
        e, nxt = _path_edges((i, i + 3), L, nxt)
        edges += e
    return _with_semi(nxt, edges, semi)


def theta_graph(l1: int, l2: int, l3: int, semi=None) -> Trigraph:
    """Vertices 0 and 1 joined by three paths of the given lengths (each >= 2)."""
    for L in (l1, l2, l3):
        if L < 2:
            raise ValueError("theta path lengths must be at least 2")
    edges = []
    nxt = 2
    for L in (l1, l2, l3):
        e, nxt = _path_edges((0, 1), L, nxt)
        edges += e
    return _with_semi(nxt, edges, semi)


def complete_bipartite(p: int, q: int, semi=None) -> Trigraph:
    if p < 1 or q < 1:
        raise ValueError("both sides must be non-empty")
    return _with_semi(p + q, [(a, p + b) for a in range(p) for b in range(q)], semi)


def k33(semi=None) -> Trigraph:
    return complete_bipartite(3, 3, semi)


def subdivided_k4(counts: Sequence[int], semi=None) -> Trigraph:
    """K4 on 0..3 with edge i (lexicographic order) subdivided counts[i] times."""
    counts = list(counts)
    if len(counts) != 6 or any(c < 0 for c in counts):
        raise ValueError("need six non-negative subdivision counts")
    edges = []
    nxt = 4
    for (a, b), c in zip(itertools.combinations(range(4), 2), counts):
        e, nxt = _path_edges((a, b), c + 1, nxt)
        edges += e
    return _with_semi(nxt, edges, semi)


def k4_line(counts: Sequence[int], semi=None) -> Trigraph:
    """Line trigraph of ``subdivided_k4(counts)``; counts >= 1 keeps the root chordless."""
    if len(counts) != 6 or any(c < 1 for c in counts):
        raise ValueError("need six subdivision counts, each at least 1")
    lg, _ = line_graph(as_graph(subdivided_k4(counts)))
    return _with_semi(lg.n, lg.edges(), semi)


def cycle(n: int, semi=None) -> Trigraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return _with_semi(n, [(i, (i + 1) % n) for i in range(n)], semi)


def path(n: int, semi=None) -> Trigraph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return _with_semi(n, [(i, i + 1) for i in range(n - 1)], semi)


def complete(n: int, semi=None) -> Trigraph:
    return _with_semi(n, itertools.combinations(range(n), 2), semi)


def wheel(rim: int, spokes: Sequence[int] | None = None, semi=None) -> Trigraph:
    """Cycle 0..rim-1 plus hub ``rim`` adjacent to ``spokes`` (default: every rim vertex)."""
    if rim < 3:
        raise ValueError("rim needs at least 3 vertices")
    spokes = range(rim) if spokes is None else spokes
    edges = [(i, (i + 1) % rim) for i in range(rim)] + [(s, rim) for s in spokes]
    return _with_semi(rim + 1, edges, semi)


def long_rich_square(lengths: Sequence[int], orientations: Sequence[int] | None = None, semi=None) -> Trigraph:
    """Square 0-1-2-3 plus long links, one per entry of ``lengths`` (edges, >= 1).

    A link with orientation 0 has one end seeing {0, 1} and the other {2, 3};
    orientation 1 uses {1, 2} and {3, 0}.  Links are pairwise anti-complete.
    """
    lengths = list(lengths)
    if len(lengths) < 2 or any(L < 1 for L in lengths):
        raise ValueError("need at least two links, each of length at least 1")
    orientations = [0] * len(lengths) if orientations is None else list(orientations)
    if len(orientations) != len(lengths) or any(o not in (0, 1) for o in orientations):
        raise ValueError("orientations must be 0 or 1, one per link")
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    nxt = 4
    for L, o in zip(lengths, orientations):
        chain = list(range(nxt, nxt + L + 1))
        nxt += L + 1
        edges += list(zip(chain, chain[1:]))
        i = o
        edges += [(chain[0], i), (chain[0], (i + 1) % 4), (chain[-1], (i + 2) % 4), (chain[-1], (i + 3) % 4)]
    return _with_semi(nxt, edges, semi)


FAMILIES = {
    "prism": prism,
    "theta": theta_graph,
    "k33": k33,
    "complete_bipartite": complete_bipartite,
    "long_rich_square": long_rich_square,
    "subdivided_k4": subdivided_k4,
    "k4_line": k4_line,
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "wheel": wheel,
}


def make_family(name: str, *params, semi=None) -> Trigraph:
    """Build a named family member; list-valued families take their list as one argument."""
    key = name.replace("-", "_").lower()
    if key not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}")
    try:
        return FAMILIES[key](*params, semi=semi)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {name}: {exc}") from None


# random trigraphs

def random_trigraph(n: int, p_plus: float, p_zero: float, seed: int) -> Trigraph:
    if not (0 <= p_plus and 0 <= p_zero and p_plus + p_zero <= 1 + 1e-12):
        raise ValueError("need p_plus, p_zero >= 0 with p_plus + p_zero <= 1")
    rng = random.Random(seed)
    theta = []
    for _ in range(pair_count(n)):
        r = rng.random()
        theta.append(1 if r < p_plus else 0 if r < p_plus + p_zero else -1)
    return _make(n, theta)


def random_free_trigraph(
    n: int,
    patterns: Iterable[Pattern | str],
    seed: int,
    max_attempts: int = 1000,
    p_plus: float | None = None,
    p_zero: float | None = None,
) -> Trigraph | None:
    """Rejection sampling; unset probabilities are redrawn per attempt."""
    if max_attempts < 1:
        raise ValueError("max_attempts must be at least 1")
    patterns = [Pattern(p) for p in patterns]
    rng = random.Random(seed)
    for _ in range(max_attempts):
        pp = p_plus if p_plus is not None else rng.uniform(0.15, 0.5)
        pz = p_zero if p_zero is not None else rng.uniform(0.0, min(0.2, 1 - pp))
        g = random_trigraph(n, pp, pz, rng.getrandbits(64))
        if all(trigraph_is_free(g, p) is None for p in patterns):
            return g
    return None


# growing free instances around a base

def _extend(g: Trigraph, row: dict[int, int]) -> Trigraph:
    n = g.n + 1
    theta = []
    for u in range(n - 1):
        theta.extend(g.theta[pair_rank(g.n, u, v)] for v in range(u + 1, n - 1))
        theta.append(row.get(u, -1))
    return _make(n, theta)


def _random_row(rng: random.Random, g: Trigraph, base_n: int, last: int | None, p_semi: float) -> dict[int, int]:
    """Neighbours of a new vertex.

    Modes: extend the chain of added vertices, close it onto the base, start
    a new chain at the base, copy an existing vertex's strong neighbourhood
    (a false twin), or attach to a few random vertices.
    """
    nbrs: set[int] = set()
    mode = rng.random()
    if last is not None and mode < 0.25:
        nbrs.add(last)
    elif last is not None and mode < 0.5:
        nbrs.add(last)
        nbrs.update(_random_attach(rng, g, base_n))
    elif mode < 0.8:
        nbrs.update(_random_attach(rng, g, base_n))
    elif mode < 0.9 and g.n:
        nbrs.update(bits(g.strong[rng.randrange(g.n)]))
    else:
        k = rng.choice((1, 1, 2, 3))
        nbrs.update(rng.sample(range(g.n), min(k, g.n)))
    if not nbrs and g.n:
        nbrs.add(rng.randrange(g.n))
    return {v: (0 if rng.random() < p_semi else 1) for v in nbrs}


def _random_attach(rng: random.Random, g: Trigraph, base_n: int) -> set[int]:
    if base_n == 0:
        return set()
    u = rng.randrange(base_n)
    if rng.random() < 0.6:
        nb = [w for w in bits(g.strong[u]) if w < base_n]
        if nb:
            return {u, rng.choice(nb)}
    return {u}


def grow_free_instance(
    base: Trigraph,
    n_extra: int,
    patterns: Iterable[Pattern | str],
    seed: int,
    attempts: int = 6,
    p_semi: float = 0.15,
) -> Trigraph:
    """Add up to ``n_extra`` vertices with random attachments, keeping the result free.

    The base keeps vertices 0..base.n-1, so it is an induced subtrigraph of
    the result.  A new vertex that creates a forbidden pattern is rolled back
    and redrawn, up to ``attempts`` times.
    """
    patterns = [Pattern(p) for p in patterns]
    rng = random.Random(seed)
    g = base
    last = None
    for _ in range(n_extra):
        for _ in range(attempts):
            cand = _extend(g, _random_row(rng, g, base.n, last, p_semi))
            if all(trigraph_is_free(cand, p) is None for p in patterns):
                g = cand
                last = g.n - 1
                break
    return g
