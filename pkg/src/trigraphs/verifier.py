"""Machine checks of the decomposition theorem and its supporting statements.

Exhaustive checks walk every (labeled or non-isomorphic) trigraph up to a
size bound; sampled checks grow random free instances around a host and are
replayable from ``(property id, seed, trial index)``.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from ._bits import bits, component_masks, is_connected_mask, to_mask
from .attachments import (
    attachment,
    host_structure,
    is_augmenting_path,
    minimal_violator,
)
from .core import (
    Trigraph,
    _make,
    induced,
    is_connected,
    narrow_path_order,
)
from .cutsets import find_clique_cutset, find_stable_2_cutset
from .decomposer import classify, decompose, splits
from .freeness import Pattern, find_wheel, trigraph_is_free
from .generators import (
    enumerate_trigraphs,
    _extend,
    grow_free_instance,
    k33,
    k4_line,
    long_rich_square,
    prism,
    random_free_trigraph,
)
from .structure import (
    as_complete_bipartite,
    as_prism,
    is_qualified_line_trigraph,
    is_series_parallel,
    is_strong_k33,
)
from . import graphalgo, oracles

# exhaustive bounds
THEOREM_N = 5
ORACLE_N = 4
CYCLIC3_EQUIV_N = 7
DELETE_THREE_N = 6
DIAMOND_N = 5
K33_OR_PRISM_EXHAUSTIVE_N = 5

# sampled defaults
SAMPLES = 1000
EXTRA_VERTICES = 6
HOST_LIMIT = 14

ISK4_WHEEL = (Pattern.ISK4, Pattern.WHEEL)
ISK4_WHEEL_DIAMOND = (Pattern.ISK4, Pattern.WHEEL, Pattern.DIAMOND)


@dataclass(frozen=True)
class Counterexample:
    trigraph: Trigraph
    diagnostic: dict

    def to_dict(self) -> dict:
        return {
            "n": self.trigraph.n,
            "theta": "".join({1: "+", 0: "0", -1: "-"}[t] for t in self.trigraph.theta),
            "diagnostic": self.diagnostic,
        }


@dataclass
class PropertyReport:
    property_id: str
    instances_checked: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    elapsed: float = 0.0
    stats: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def add(self, g: Trigraph, **diagnostic) -> None:
        self.counterexamples.append(Counterexample(g, diagnostic))

    def bump(self, key: str, by: int = 1) -> None:
        self.stats[key] = self.stats.get(key, 0) + by

    def finish(self, started: float) -> "PropertyReport":
        self.elapsed = time.perf_counter() - started
        self.counterexamples.sort(key=lambda c: (c.trigraph.n, c.trigraph.theta))
        return self

    def to_dict(self) -> dict:
        return {
            "property": self.property_id,
            "passed": self.passed,
            "instances_checked": self.instances_checked,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "elapsed_seconds": round(self.elapsed, 3),
            "stats": self.stats,
            "params": self.params,
        }

    def to_text(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)


@dataclass(frozen=True)
class Budget:
    n: int | None = None
    samples: int = SAMPLES
    seed: int = 0
    extra: int = EXTRA_VERTICES
    modulo_iso: bool | None = None
    triangle_rims: bool = False


def _free(g: Trigraph, patterns, triangle_rims: bool = False) -> bool:
    return all(trigraph_is_free(g, p, triangle_rims) is None for p in patterns)


# theorem

def verify_theorem(n_max: int = THEOREM_N, modulo_iso: bool = False, all_sizes: bool = False,
                   triangle_rims: bool = False) -> PropertyReport:
    """Every {ISK4, wheel}-free trigraph on n_max vertices gets at least one label.

    Only size n_max is scanned unless ``all_sizes`` (smaller trigraphs are
    induced subtrigraphs of larger ones, but not all are free-extendable, so
    ``all_sizes`` is the stronger check).
    """
    t0 = time.perf_counter()
    rep = PropertyReport("theorem", params={"n_max": n_max, "modulo_iso": modulo_iso,
                                            "all_sizes": all_sizes, "triangle_rims": triangle_rims})
    sizes = range(1, n_max + 1) if all_sizes else [n_max]
    free = 0
    for n in sizes:
        for g in enumerate_trigraphs(n, modulo_iso):
            rep.instances_checked += 1
            if not _free(g, ISK4_WHEEL, triangle_rims):
                continue
            free += 1
            labels = classify(g)
            if not labels:
                rep.add(g, reason="no outcome holds")
            else:
                for lab in labels:
                    rep.bump(f"label:{lab.value}")
    rep.stats["free_instances"] = free
    return rep.finish(t0)


# oracle agreement

def verify_oracle_agreement(n_max: int = ORACLE_N) -> PropertyReport:
    t0 = time.perf_counter()
    rep = PropertyReport("oracle", params={"n_max": n_max})
    for n in range(1, n_max + 1):
        for g in enumerate_trigraphs(n):
            rep.instances_checked += 1
            for p in Pattern:
                fast = trigraph_is_free(g, p) is None
                slow = oracles.trigraph_free_by_realizations(g, p.value)
                if not fast:
                    rep.bump(f"not_free:{p.value}:n={n}")
                if fast != slow:
                    rep.add(g, check=f"freeness:{p.value}", fast=fast, oracle=slow)
            sp = is_series_parallel(g)
            sp_oracle = not oracles.has_k4_subdivision_subgraph(g)
            if sp != sp_oracle:
                rep.add(g, check="series-parallel", fast=sp, oracle=sp_oracle)
            bp = as_complete_bipartite(g)
            brute = oracles.bipartitions_brute(g)
            if (bp is None) != (not brute) or (bp is not None and (bp.a, bp.b) not in brute):
                rep.add(g, check="complete-bipartite", fast=bp is not None, oracle=bool(brute))
    return rep.finish(t0)


# exhaustive checks

def _delete_three(rep: PropertyReport, n_max: int, modulo_iso: bool) -> None:
    for n in range(1, n_max + 1):
        for g in enumerate_trigraphs(n, modulo_iso):
            adj = g.nbr
            allm = g.full_mask
            if not is_connected_mask(adj, allm):
                continue
            if narrow_path_order(g, range(n)) is not None:
                continue
            rep.instances_checked += 1
            good = [v for v in range(n) if is_connected_mask(adj, allm & ~(1 << v))]
            if len(good) < 3:
                rep.add(g, reason="fewer than three non-separating vertices", vertices=good)


def _prop_diamond(rep: PropertyReport, n_max: int) -> None:
    isk4_free = isk4_free_diamond = 0
    for n in range(1, n_max + 1):
        for g in enumerate_trigraphs(n):
            if not _free(g, (Pattern.K4, Pattern.WHEEL)):
                continue
            rep.instances_checked += 1
            has_diamond = trigraph_is_free(g, Pattern.DIAMOND) is not None
            ok = not has_diamond or find_clique_cutset(g) is not None or find_stable_2_cutset(g) is not None
            sub = trigraph_is_free(g, Pattern.ISK4) is None
            if sub:
                isk4_free += 1
                isk4_free_diamond += has_diamond
            if has_diamond:
                rep.bump("with_diamond")
            if not ok:
                rep.add(g, reason="diamond but no clique-cutset or stable 2-cutset", isk4_free=sub)
    rep.stats["isk4_free_subclass"] = isk4_free
    rep.stats["isk4_free_subclass_with_diamond"] = isk4_free_diamond
    rep.stats["isk4_free_subclass_failures"] = sum(1 for c in rep.counterexamples if c.diagnostic.get("isk4_free"))


def _k33_strong(rep: PropertyReport) -> None:
    """All K33-trigraphs with sides {0,1,2} | {3,4,5} (every K33-trigraph is isomorphic to one)."""
    a, b = (0, 1, 2), (3, 4, 5)
    inner = [p for side in (a, b) for p in itertools.combinations(side, 2)]
    cross = [(u, v) for u in a for v in b]
    for ins in itertools.product((-1, 0), repeat=len(inner)):
        for crs in itertools.product((0, 1), repeat=len(cross)):
            g = Trigraph.from_pairs(
                6,
                strong=[p for p, t in zip(cross, crs) if t == 1],
                semi=[p for p, t in zip(inner, ins) if t == 0] + [p for p, t in zip(cross, crs) if t == 0],
            )
            rep.instances_checked += 1
            if trigraph_is_free(g, Pattern.ISK4) is None:
                rep.bump("isk4_free")
                if g.semi_pairs():
                    rep.add(g, reason="ISK4-free K33-trigraph with semi-adjacent pairs")


def _contains_induced(g: Trigraph, test: Callable[[Trigraph], bool], min_size: int, max_size: int) -> bool:
    for k in range(min_size, min(max_size, g.n) + 1):
        for xs in itertools.combinations(range(g.n), k):
            if test(induced(g, xs)):
                return True
    return False


def _contains_prism(g: Trigraph) -> bool:
    return _contains_induced(g, lambda h: as_prism(h) is not None, 6, g.n)


def _contains_strong_k33(g: Trigraph) -> bool:
    return _contains_induced(g, is_strong_k33, 6, 6)


def _k33_or_prism_check(rep: PropertyReport, g: Trigraph, **trace) -> None:
    rep.instances_checked += 1
    if is_series_parallel(g):
        rep.bump("series_parallel")
        return
    if _contains_prism(g):
        rep.bump("prism")
        return
    if _contains_strong_k33(g):
        rep.bump("strong_k33")
        return
    rep.add(g, reason="not series-parallel, no induced prism or strong K33", **trace)


def _k33_or_prism(rep: PropertyReport, budget: Budget) -> None:
    for n in range(1, K33_OR_PRISM_EXHAUSTIVE_N + 1):
        for g in enumerate_trigraphs(n):
            if _free(g, ISK4_WHEEL):
                _k33_or_prism_check(rep, g)
    rng = random.Random(budget.seed)
    for n in (6, 7):
        for i in range(budget.samples):
            s = rng.getrandbits(64)
            g = random_free_trigraph(n, ISK4_WHEEL, s, max_attempts=50)
            if g is not None:
                _k33_or_prism_check(rep, g, n=n, seed=s)


# cyclic 3-connectivity versus theta or 3-connected subdivision, all labeled graphs

def _cyclic3_equivalence(rep: PropertyReport, n_max: int) -> None:
    for n in range(0, n_max + 1):
        pairs = list(itertools.combinations(range(n), 2))
        m = len(pairs)
        low_degree = 0
        for code in range(1 << m):
            adj = [0] * n
            c = code
            i = 0
            while c:
                if c & 1:
                    u, v = pairs[i]
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                c >>= 1
                i += 1
            rep.instances_checked += 1
            # both sides need a connected graph of minimum degree two
            if n < 3 or any(a & (a - 1) == 0 for a in adj):
                low_degree += 1
                continue
            lhs = graphalgo.is_cyclically_3_connected(adj, n)
            rhs = graphalgo.is_theta(adj, n) or graphalgo.is_subdivision_of_3_connected(adj, n)
            if lhs:
                rep.bump("cyclically_3_connected")
            if lhs != rhs:
                rep.add(_make(n, [1 if adj[u] >> v & 1 else -1 for u, v in pairs]),
                        cyclically_3_connected=lhs, theta_or_subdivision=rhs)
        rep.bump("min_degree_below_two", low_degree)


def _long_rich_square(rep: PropertyReport) -> None:
    for k in (2, 3):
        for lengths in itertools.product((1, 2, 3), repeat=k):
            for orient in itertools.product((0, 1), repeat=k):
                g = long_rich_square(lengths, orient)
                rep.instances_checked += 1
                if find_wheel(g) is None:
                    rep.add(g, lengths=list(lengths), orientations=list(orient))


# sampled instances

@dataclass(frozen=True)
class Instance:
    g: Trigraph
    host: frozenset[int]
    trace: dict


_INSTANCES: dict[tuple, Instance] = {}


def trial_seed(seed: int, index: int) -> int:
    return random.Random(f"{seed}/{index}").getrandbits(63)


def _prism_host(rng: random.Random, long: bool = False) -> tuple[Trigraph, dict]:
    lengths = [rng.randint(2, 5) if long else rng.randint(1, 3) for _ in range(3)]
    base = prism(*lengths)
    semi = []
    if rng.random() < 0.3:
        # semi-adjacent branch edges keep the host a prism
        branch_edges = []
        for u, v, t in base.pairs():
            if t == 1 and not (u < 3 and v < 3) and not (3 <= u < 6 and 3 <= v < 6):
                branch_edges.append((u, v))
        semi = [e for e in branch_edges if rng.random() < 0.3]
        cand = prism(*lengths, semi=semi)
        if as_prism(cand) is not None and _free(cand, ISK4_WHEEL_DIAMOND):
            base = cand
        else:
            semi = []
    return base, {"host": "prism", "lengths": lengths, "semi": semi}


def _k4_host(rng: random.Random, long: bool = False) -> tuple[Trigraph, dict]:
    choices = (1, 2, 3, 4) if long else (1, 1, 2)
    while True:
        counts = [rng.choice(choices) for _ in range(6)]
        if 6 + sum(counts) <= HOST_LIMIT + 4:
            break
    return k4_line(counts), {"host": "k4_line", "counts": counts}


def _k33_host(rng: random.Random, long: bool = False) -> tuple[Trigraph, dict]:
    return k33(), {"host": "k33"}


_HOSTS = {"prism": (_prism_host, ISK4_WHEEL_DIAMOND),
          "k4_line": (_k4_host, ISK4_WHEEL_DIAMOND),
          "k33": (_k33_host, ISK4_WHEEL)}


PLANT_PROB = 0.5
BARE_PROB = 0.2


def _plant_twins(rng: random.Random, base: Trigraph, patterns) -> tuple[Trigraph, dict]:
    """Grow a strong K33 on {0,1,2} | {3,4,5} by 1 to 3 vertices, each joining a random side."""
    side = [0, 0, 0, 1, 1, 1]
    g = base
    for _ in range(rng.randint(1, 3)):
        s = rng.randrange(2)
        g = _extend(g, {v: 1 for v in range(g.n) if side[v] != s})
        side.append(s)
    if not _free(g, patterns):
        raise AssertionError("complete bipartite trigraphs are wheel-free and ISK4-free")
    return g, {"twins": side[6:]}


def _plant_path(rng: random.Random, base: Trigraph, patterns, tries: int = 8) -> tuple[Trigraph, dict]:
    """Add an outside narrow path from a strong edge of one flat branch to another branch.

    The far end attaches to a strong edge (an augmenting path) or to a single
    vertex (an untyped attachment).  Plants that break freeness are dropped.
    """
    flats = [p for p in host_structure(base, range(base.n)).flat_branches]
    # an edge touching a branch end would put two cubic root vertices side by side
    edges = [[(a, b) for a, b in zip(p.order[1:-1], p.order[2:-1]) if base.strong[a] >> b & 1]
             for p in flats]
    usable = [i for i, e in enumerate(edges) if e]
    if len(usable) < 2:
        return base, {}
    for _ in range(tries):
        i, j = rng.sample(usable, 2)
        a = rng.choice(edges[i])
        augmenting = rng.random() < 0.5
        b = rng.choice(edges[j]) if augmenting else (rng.choice(flats[j].order[1:-1]),)
        length = rng.randint(2, 4)
        g = base
        for k in range(length):
            row = {g.n - 1: 1} if k else {}
            if k == 0:
                row.update({v: 1 for v in a})
            if k == length - 1:
                row.update({v: 1 for v in b})
            g = _extend(g, row)
        if _free(g, patterns):
            return g, {"planted": {"from": list(a), "to": list(b), "length": length}}
    return base, {}


def build_instance(kind: str, seed: int, extra: int = EXTRA_VERTICES) -> Instance:
    """Host of the given kind grown by ``extra`` random free vertices; cached."""
    key = (kind, seed, extra)
    if key not in _INSTANCES:
        make, patterns = _HOSTS[kind]
        rng = random.Random(seed)
        plant = rng.random() < PLANT_PROB
        base, trace = make(rng, plant)
        g = base
        if plant:
            g, planted = (_plant_twins if kind == "k33" else _plant_path)(rng, base, patterns)
            trace.update(planted)
        # some trials keep the planted structure bare so both outcomes of a dichotomy occur
        grow = 0 if rng.random() < BARE_PROB else max(0, extra - (g.n - base.n))
        g = grow_free_instance(g, grow, patterns, rng.getrandbits(63))
        trace = dict(trace, kind=kind, seed=seed, extra=extra, patterns=[p.value for p in patterns])
        _INSTANCES[key] = Instance(g, frozenset(range(base.n)), trace)
    return _INSTANCES[key]


def _sampled(rep: PropertyReport, budget: Budget, kinds: list[str],
             check: Callable[[PropertyReport, Instance], None]) -> None:
    for i in range(budget.samples):
        s = trial_seed(budget.seed, i)
        kind = kinds[i % len(kinds)]
        inst = build_instance(kind, s, budget.extra)
        rep.instances_checked += 1
        check(rep, inst)


def _cex(rep: PropertyReport, inst: Instance, **diag) -> None:
    rep.add(inst.g, host=sorted(inst.host), trace=inst.trace, **diag)


def _vertex_check(rep: PropertyReport, inst: Instance) -> None:
    g, host = inst.g, inst.host
    hs = host_structure(g, host)
    hm = hs.mask
    for v in range(g.n):
        if v in host:
            continue
        k = (g.nbr[v] & hm).bit_count()
        if k:
            rep.bump("outside_vertices_with_neighbours")
        if k == 2:
            rep.bump("outside_vertices_with_two_neighbours")
        if k > 2 or not attachment(g, host, [v], hs).type_branch:
            _cex(rep, inst, vertex=v, neighbours=list(bits(g.nbr[v] & hm)))


def _conn_check(rep: PropertyReport, inst: Instance) -> None:
    g, host = inst.g, inst.host
    viol = minimal_violator(g, host, check_host=False)
    if viol is None:
        return
    rep.bump("violators")
    order = narrow_path_order(g, viol)
    if order is None or is_augmenting_path(g, host, order) is None:
        _cex(rep, inst, violator=sorted(viol))


def _maximal_line_host(g: Trigraph, host: frozenset[int]) -> frozenset[int]:
    """Grow ``host`` while some set of outside vertices keeps it a qualified line trigraph."""
    k = host
    while True:
        outside = [v for v in range(g.n) if v not in k]
        grown = None
        for r in range(1, len(outside) + 1):
            for s in itertools.combinations(outside, r):
                cand = k | frozenset(s)
                if not is_connected(induced(g, cand)):
                    continue
                if is_qualified_line_trigraph(induced(g, cand)):
                    grown = cand
                    break
            if grown is not None:
                break
        if grown is None:
            return k
        k = grown


def _max_cyclic3_check(rep: PropertyReport, inst: Instance) -> None:
    g = inst.g
    k = _maximal_line_host(g, inst.host)
    if k != inst.host:
        rep.bump("host_extended")
    hs = host_structure(g, k)
    for comp in component_masks(g.nbr, g.full_mask & ~hs.mask):
        rep.bump("outside_components")
        if not attachment(g, k, bits(comp), hs).typed:
            _cex(rep, inst, maximal_host=sorted(k), component=list(bits(comp)))


def _cyclic3_decomp_check(rep: PropertyReport, inst: Instance) -> None:
    g = inst.g
    if is_qualified_line_trigraph(g):
        rep.bump("line_trigraph")
    elif find_clique_cutset(g) is not None:
        rep.bump("clique_cutset")
    elif find_stable_2_cutset(g) is not None:
        rep.bump("stable_2_cutset")
    else:
        _cex(rep, inst, reason="no outcome")


def _maximal_thick_bipartite(g: Trigraph, host: frozenset[int]) -> frozenset[int]:
    """Single-vertex growth suffices: every superset that works adds vertices that each work."""
    k = host
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            if v not in k:
                bp = as_complete_bipartite(induced(g, k | {v}))
                if bp is not None and bp.thick:
                    k = k | {v}
                    changed = True
    return k


def _sides(g: Trigraph, k: frozenset[int]) -> tuple[int, int]:
    kl = sorted(k)
    bp = as_complete_bipartite(induced(g, kl))
    return to_mask(kl[v] for v in bp.a), to_mask(kl[v] for v in bp.b)


def _k33_vertex_check(rep: PropertyReport, inst: Instance) -> None:
    g = inst.g
    k = _maximal_thick_bipartite(g, inst.host)
    if k != inst.host:
        rep.bump("host_extended")
    a, b = _sides(g, k)
    for v in range(g.n):
        if v in k:
            continue
        na, nb = (g.nbr[v] & a).bit_count(), (g.nbr[v] & b).bit_count()
        if na or nb:
            rep.bump("outside_vertices_with_neighbours")
        if na > 1 or nb > 1:
            _cex(rep, inst, maximal_host=sorted(k), vertex=v)


def _k33_comp_check(rep: PropertyReport, inst: Instance) -> None:
    g = inst.g
    k = _maximal_thick_bipartite(g, inst.host)
    a, b = _sides(g, k)
    for comp in component_masks(g.nbr, g.full_mask & ~to_mask(k)):
        over = 0
        for v in bits(comp):
            over |= g.nbr[v]
        if comp.bit_count() > 1 and over & (a | b):
            rep.bump("attached_components_of_size_two_or_more")
        if (over & a).bit_count() > 1 or (over & b).bit_count() > 1:
            _cex(rep, inst, maximal_host=sorted(k), component=list(bits(comp)))


def _k33_clique_cut_check(rep: PropertyReport, inst: Instance) -> None:
    g = inst.g
    bp = as_complete_bipartite(g)
    if bp is not None and bp.thick:
        rep.bump("thick_complete_bipartite")
    elif find_clique_cutset(g) is not None:
        rep.bump("clique_cutset")
    else:
        _cex(rep, inst, reason="neither thick complete bipartite nor clique-cutset")


def _prism_realization(rep: PropertyReport, budget: Budget) -> None:
    """Soften strong pairs of a free prism instance; if still free, an induced prism must remain."""
    for i in range(budget.samples):
        s = trial_seed(budget.seed, i)
        inst = build_instance("prism", s, budget.extra)
        rng = random.Random(s ^ 0x5EED)
        strong = [(u, v) for u, v, t in inst.g.pairs() if t == 1]
        soft = [e for e in strong if rng.random() < 0.25]
        g = inst.g.with_values({e: 0 for e in soft})
        if not _free(g, ISK4_WHEEL):
            rep.bump("rejected_not_free")
            continue
        rep.instances_checked += 1
        inside = [e for e in soft if e[0] in inst.host and e[1] in inst.host]
        if inside:
            rep.bump("semi_pairs_inside_realized_prism")
        if as_prism(induced(g, inst.host)) is not None:
            continue
        if not _contains_induced(g, lambda h: as_prism(h) is not None, 6, min(g.n, 12)):
            _cex(rep, inst, softened=soft)


def _blocks_free(rep: PropertyReport, budget: Budget) -> None:
    """Empirical only: do decomposition blocks of free inputs stay free?"""
    rng = random.Random(budget.seed)
    for _ in range(budget.samples):
        n = rng.randint(4, budget.n or 9)
        g = random_free_trigraph(n, ISK4_WHEEL, rng.getrandbits(63), max_attempts=50)
        if g is None:
            continue
        rep.instances_checked += 1
        for sp in splits(decompose(g)):
            for child in sp.children:
                block = child.trigraph
                rep.bump("blocks")
                if not _free(block, ISK4_WHEEL):
                    rep.bump("blocks_not_free")


PROPERTIES = (
    "delete-three", "diamond", "prism-vertex", "prism-conn", "K4-vertex", "K4-conn",
    "cyclic3-conn", "max-cyclic3", "cyclic3-decomp", "K33-vertex", "K33-comp", "K33-strong",
    "K33-clique-cut", "prism-realization", "K33-or-prism", "lemma45", "long-rich-square",
    "blocks-free",
)

_SAMPLED = {
    "prism-vertex": (["prism"], _vertex_check),
    "prism-conn": (["prism"], _conn_check),
    "K4-vertex": (["k4_line"], _vertex_check),
    "K4-conn": (["k4_line"], _conn_check),
    "cyclic3-conn": (["prism", "k4_line"], _conn_check),
    "max-cyclic3": (["prism", "k4_line"], _max_cyclic3_check),
    "cyclic3-decomp": (["prism", "k4_line"], _cyclic3_decomp_check),
    "K33-vertex": (["k33"], _k33_vertex_check),
    "K33-comp": (["k33"], _k33_comp_check),
    "K33-clique-cut": (["k33"], _k33_clique_cut_check),
}


def verify_proposition(prop: str, budget: Budget | None = None) -> PropertyReport:
    budget = budget or Budget()
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}; known: {', '.join(PROPERTIES)}")
    t0 = time.perf_counter()
    rep = PropertyReport(prop, params={k: v for k, v in budget.__dict__.items()})
    if prop == "delete-three":
        n = budget.n or DELETE_THREE_N
        iso = budget.modulo_iso if budget.modulo_iso is not None else n >= 6
        _delete_three(rep, n, iso)
    elif prop == "diamond":
        _prop_diamond(rep, budget.n or DIAMOND_N)
    elif prop == "K33-strong":
        _k33_strong(rep)
    elif prop == "K33-or-prism":
        _k33_or_prism(rep, budget)
    elif prop == "lemma45":
        _cyclic3_equivalence(rep, budget.n or CYCLIC3_EQUIV_N)
    elif prop == "long-rich-square":
        _long_rich_square(rep)
    elif prop == "prism-realization":
        _prism_realization(rep, budget)
    elif prop == "blocks-free":
        _blocks_free(rep, budget)
    else:
        kinds, check = _SAMPLED[prop]
        _sampled(rep, budget, kinds, check)
    return rep.finish(t0)


def replay(prop: str, seed: int, index: int, extra: int = EXTRA_VERTICES) -> Instance:
    """Rebuild trial ``index`` of a sampled property run with ``seed``."""
    kinds, _ = _SAMPLED[prop]
    return build_instance(kinds[index % len(kinds)], trial_seed(seed, index), extra)
