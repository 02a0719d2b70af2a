"""Isomorph-free enumeration of small graphs, for exhaustive corpus checks.

Graphs on n vertices are generated by extending every (n-1)-vertex graph
with a new vertex attached to each possible neighbour subset, bucketing the
candidates by an isomorphism-invariant refinement key, and settling bucket
collisions with an exact backtracking isomorphism test.  Deduplication is
exact regardless of how coarse the key is; the key only controls speed.

Desk scale only: meant for n <= 8 (12k isomorphism classes of connected
graphs at n = 8).
"""

from __future__ import annotations

import functools
from collections import defaultdict
from typing import Callable

from .graphs import Graph, bits

Adjacency = tuple[int, ...]  # neighbour bitmask per vertex


def _edge_count(adj: Adjacency) -> int:
    return sum(a.bit_count() for a in adj) // 2


def _refine_colors(adj: Adjacency, rounds: int = 3):
    """Degree-based colour refinement; colours are nested tuples, so equal
    colours mean equal refinement signatures across different graphs."""
    n = len(adj)
    colors: list = [adj[v].bit_count() for v in range(n)]
    for _ in range(rounds):
        colors = [
            (colors[v], tuple(sorted(colors[u] for u in bits(adj[v]))))
            for v in range(n)
        ]
    return colors


def _invariant_key(adj: Adjacency):
    return (len(adj), _edge_count(adj), tuple(sorted(_refine_colors(adj))))


def _isomorphic(adj1: Adjacency, adj2: Adjacency) -> bool:
    n = len(adj1)
    if n != len(adj2):
        return False
    c1 = _refine_colors(adj1)
    c2 = _refine_colors(adj2)
    if sorted(c1) != sorted(c2):
        return False
    candidates = defaultdict(list)
    for w in range(n):
        candidates[c2[w]].append(w)
    # map rare colour classes first to cut the branching factor
    order = sorted(range(n), key=lambda v: (len(candidates[c1[v]]), v))
    mapping = [-1] * n
    mapped_src = 0

    def extend(depth: int) -> bool:
        nonlocal mapped_src
        if depth == n:
            return True
        v = order[depth]
        nbrs_mapped = adj1[v] & mapped_src
        for w in candidates[c1[v]]:
            if w in mapping:
                continue
            ok = True
            t = nbrs_mapped
            while t:
                b = t & -t
                t ^= b
                if not adj2[w] >> mapping[b.bit_length() - 1] & 1:
                    ok = False
                    break
            if ok:
                t = mapped_src & ~adj1[v]
                while t:
                    b = t & -t
                    t ^= b
                    if adj2[w] >> mapping[b.bit_length() - 1] & 1:
                        ok = False
                        break
            if ok:
                mapping[v] = w
                mapped_src |= 1 << v
                if extend(depth + 1):
                    return True
                mapped_src &= ~(1 << v)
                mapping[v] = -1
        return False

    return extend(0)


class _Deduper:
    def __init__(self):
        self._buckets: dict = {}
        self.kept: list[Adjacency] = []

    def add(self, adj: Adjacency) -> bool:
        key = _invariant_key(adj)
        bucket = self._buckets.setdefault(key, [])
        for other in bucket:
            if _isomorphic(adj, other):
                return False
        bucket.append(adj)
        self.kept.append(adj)
        return True


def _components(adj: Adjacency) -> list[int]:
    n = len(adj)
    left = (1 << n) - 1
    comps = []
    while left:
        start = left & -left
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        left &= ~seen
    return comps


def _extensions(base: Adjacency, subset_ok: Callable[[int], bool]):
    n = len(base) + 1
    for s in range(1 << (n - 1)):
        if not subset_ok(s):
            continue
        adj = list(base) + [s]
        for v in bits(s):
            adj[v] |= 1 << (n - 1)
        yield tuple(adj)


def _to_graph(adj: Adjacency) -> Graph:
    n = len(adj)
    return Graph(
        n,
        tuple(
            (u, v) for u in range(n) for v in bits(adj[u] >> (u + 1) << (u + 1))
        ),
    )


@functools.cache
def _all_adjacencies(n: int) -> tuple[Adjacency, ...]:
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return ((0,),)
    dedup = _Deduper()
    for base in _all_adjacencies(n - 1):
        for adj in _extensions(base, lambda s: True):
            dedup.add(adj)
    return tuple(dedup.kept)


@functools.cache
def _connected_adjacencies(n: int) -> tuple[Adjacency, ...]:
    if n == 1:
        return ((0,),)
    dedup = _Deduper()
    for base in _all_adjacencies(n - 1):
        comps = _components(base)
        # the new vertex must touch every component of the base graph,
        # which yields exactly the connected graphs on n vertices
        def touches_all(s, comps=comps):
            return all(s & c for c in comps)

        for adj in _extensions(base, touches_all):
            dedup.add(adj)
    return tuple(dedup.kept)


def all_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class, disconnected included."""
    return tuple(_to_graph(adj) for adj in _all_adjacencies(n))


def connected_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected graphs."""
    return tuple(_to_graph(adj) for adj in _connected_adjacencies(n))


def trees(n: int) -> tuple[Graph, ...]:
    """Connected graphs with n - 1 edges."""
    return tuple(g for g in connected_graphs(n) if g.m == n - 1)


def connected_min_degree_2(n: int) -> tuple[Graph, ...]:
    return tuple(
        g
        for g in connected_graphs(n)
        if g.n > 0 and min(g.degree(v) for v in range(g.n)) >= 2
    )
