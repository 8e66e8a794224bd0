"""Small bitmask helpers shared by the graph algorithms.

Vertex sets are Python ints (bit ``v`` set iff ``v`` is in the set) and an
adjacency structure is a list ``adj`` with ``adj[v]`` the neighbour mask of v.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def reach(adj: list[int], start: int, within: int) -> int:
    """Vertices of ``within`` reachable from ``start`` (which must be in ``within``)."""
    seen = 1 << start
    frontier = seen
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & within & ~seen
        seen |= new
        frontier |= new
    return seen


def is_connected_mask(adj: list[int], within: int) -> bool:
    """True iff the subgraph induced by ``within`` is connected and non-null."""
    if not within:
        return False
    return reach(adj, lowest(within), within) == within


def component_masks(adj: list[int], within: int) -> list[int]:
    """Components of the subgraph induced by ``within``, ordered by least vertex."""
    comps = []
    rest = within
    while rest:
        c = reach(adj, lowest(rest), rest)
        comps.append(c)
        rest &= ~c
    return comps


def count_components(adj: list[int], within: int) -> int:
    n = 0
    rest = within
    while rest:
        rest &= ~reach(adj, lowest(rest), rest)
        n += 1
    return n


def edge_count(adj: list[int], within: int) -> int:
    total = 0
    for v in bits(within):
        total += (adj[v] & within).bit_count()
    return total // 2


def has_cycle(adj: list[int], within: int) -> bool:
    """A graph is a forest iff |E| = |V| - #components."""
    if not within:
        return False
    return edge_count(adj, within) > within.bit_count() - count_components(adj, within)
