"""Undirected graphs, digraphs, orientations, and graph6/edge-list ingestion.

Vertices are always the integers 0..n-1, in input order.  Vertex subsets
cross the public API as frozensets; per-vertex adjacency is kept as integer
bitmasks so the exhaustive searches elsewhere in the package stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

DEFAULT_EDGE_BUDGET = 20

_G6_MAX_N = 62
_G6_HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list input."""


class EdgeBudgetError(ValueError):
    """An orientation sweep would exceed the configured edge budget."""

    def __init__(self, m: int, budget: int):
        super().__init__(
            f"graph has {m} edges, over the enumeration budget of {budget} "
            f"(2^{m} orientations); rerun with an edge budget of at least {m}"
        )
        self.required_budget = m


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of `mask`, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; edges are (u, v) pairs with u < v, sorted."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        masks = [0] * self.n
        prev = None
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                raise ValueError(f"edge ({u},{v}) not normalized (need u < v)")
            if prev is not None and (u, v) <= prev:
                raise ValueError(f"edges not sorted or duplicated at ({u},{v})")
            prev = (u, v)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(masks))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from unordered pairs in any order; rejects duplicates."""
        norm = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        return cls(n, tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self.adj[u] >> v & 1)


@dataclass(frozen=True)
class Digraph:
    """Digraph; arcs are ordered (tail, head) pairs, sorted.

    May be an orientation of a Graph (at most one arc per vertex pair) or a
    general digraph with 2-cycles; self-loops are never allowed.
    """

    n: int
    arcs: tuple[tuple[int, int], ...]
    out_masks: tuple[int, ...] = field(init=False, compare=False, repr=False)
    in_masks: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        outs = [0] * self.n
        ins = [0] * self.n
        prev = None
        for u, v in self.arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u},{v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if prev is not None and (u, v) <= prev:
                raise ValueError(f"arcs not sorted or duplicated at ({u},{v})")
            prev = (u, v)
            outs[u] |= 1 << v
            ins[v] |= 1 << u
        object.__setattr__(self, "out_masks", tuple(outs))
        object.__setattr__(self, "in_masks", tuple(ins))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        norm = sorted(tuple(a) for a in arcs)
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise ValueError(f"duplicate arc {a}")
        return cls(n, tuple(norm))

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return u != v and bool(self.out_masks[u] >> v & 1)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.out_masks[v]))

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.in_masks[v]))

    def out_degree(self, v: int) -> int:
        return self.out_masks[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_masks[v].bit_count()

    def underlying_graph(self) -> Graph:
        return Graph.from_edges(
            self.n, {(u, v) if u < v else (v, u) for u, v in self.arcs}
        )

    def is_orientation_of(self, g: Graph) -> bool:
        if self.n != g.n or len(self.arcs) != g.m:
            return False
        return {(u, v) if u < v else (v, u) for u, v in self.arcs} == set(g.edges)


def reverse(d: Digraph) -> Digraph:
    """Flip every arc; an involution."""
    return Digraph.from_arcs(d.n, ((v, u) for u, v in d.arcs))


# ---------------------------------------------------------------------------
# graph6 (short form, n <= 62)

def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line.

    Byte offsets in error messages are relative to the start of the line,
    after any ">>graph6<<" header.
    """
    line = text.rstrip("\r\n")
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    if not line:
        raise GraphFormatError("empty graph6 line")
    c0 = ord(line[0])
    if c0 == 126:
        raise GraphFormatError(
            "long-form graph6 at byte 0 (n > 62 is not supported)"
        )
    if not 63 <= c0 <= 125:
        raise GraphFormatError(f"invalid graph6 header byte {c0} at byte 0")
    n = c0 - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    data = line[1:]
    if len(data) < nbytes:
        raise GraphFormatError(
            f"truncated graph6 line at byte {len(line)}: n={n} needs "
            f"{nbytes} data bytes, got {len(data)}"
        )
    if len(data) > nbytes:
        raise GraphFormatError(f"trailing garbage at byte {1 + nbytes}")
    values = []
    for i, ch in enumerate(data):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphFormatError(f"invalid graph6 data byte {c} at byte {i + 1}")
        values.append(c - 63)
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if values[k // 6] >> (5 - k % 6) & 1:
                edges.append((u, v))
            k += 1
    for k in range(nbits, 6 * nbytes):
        if values[k // 6] >> (5 - k % 6) & 1:
            raise GraphFormatError(
                f"nonzero padding bit at byte {1 + k // 6}"
            )
    return Graph(n, tuple(sorted(edges)))


def encode_graph6(g: Graph) -> str:
    """Encode as one graph6 line (no header, no newline)."""
    if g.n > _G6_MAX_N:
        raise ValueError(f"graph6 short form supports n <= {_G6_MAX_N}, got {g.n}")
    nbits = g.n * (g.n - 1) // 2
    values = [0] * ((nbits + 5) // 6)
    k = 0
    for v in range(1, g.n):
        for u in range(v):
            if g.has_edge(u, v):
                values[k // 6] |= 1 << (5 - k % 6)
            k += 1
    return chr(g.n + 63) + "".join(chr(63 + x) for x in values)


# ---------------------------------------------------------------------------
# edge-list text format: first line n, then one "u v" pair per line

def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if header is None:
            try:
                header = int(stripped)
            except ValueError:
                raise GraphFormatError(
                    f"line {lineno}: expected vertex count, got {stripped!r}"
                ) from None
            if header < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count")
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise GraphFormatError(
                f"line {lineno}: expected 'u v', got {stripped!r}"
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(
                f"line {lineno}: non-integer endpoint in {stripped!r}"
            ) from None
        if not (0 <= u < header and 0 <= v < header):
            raise GraphFormatError(
                f"line {lineno}: endpoint out of range [0,{header}) in ({u},{v})"
            )
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        e = (u, v) if u < v else (v, u)
        if e in edges:
            raise GraphFormatError(f"line {lineno}: duplicate edge ({u},{v})")
        edges.append(e)
    if header is None:
        raise GraphFormatError("empty edge list: missing vertex count")
    return Graph(header, tuple(sorted(edges)))


def parse_arc_list(text: str) -> Digraph:
    """Directed variant of the edge-list format: ordered 'u v' means u -> v."""
    lines = text.splitlines()
    header = None
    arcs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if header is None:
            try:
                header = int(stripped)
            except ValueError:
                raise GraphFormatError(
                    f"line {lineno}: expected vertex count, got {stripped!r}"
                ) from None
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {stripped!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(
                f"line {lineno}: non-integer endpoint in {stripped!r}"
            ) from None
        if not (0 <= u < header and 0 <= v < header):
            raise GraphFormatError(
                f"line {lineno}: endpoint out of range [0,{header}) in ({u},{v})"
            )
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        if (u, v) in arcs:
            raise GraphFormatError(f"line {lineno}: duplicate arc ({u},{v})")
        arcs.append((u, v))
    if header is None:
        raise GraphFormatError("empty arc list: missing vertex count")
    return Digraph.from_arcs(header, arcs)


# ---------------------------------------------------------------------------
# predicates

def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def end_vertices(g: Graph) -> frozenset[int]:
    """Degree-1 vertices."""
    return frozenset(v for v in range(g.n) if g.degree(v) == 1)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        return 0
    return min(g.degree(v) for v in range(g.n))


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


# ---------------------------------------------------------------------------
# orientations

def orientation_count(g: Graph, use_reversal_symmetry: bool = False) -> int:
    if g.m == 0:
        return 1
    return 1 << (g.m - 1 if use_reversal_symmetry else g.m)


def orientation_from_index(
    g: Graph, index: int, use_reversal_symmetry: bool = False
) -> Digraph:
    """Orientation number `index`: bit j flips edge j from low->high to high->low.

    With the symmetry flag, indices run over [0, 2^(m-1)) and edge 0 keeps its
    low->high direction, picking one representative per {D, reverse(D)} pair.
    """
    total = orientation_count(g, use_reversal_symmetry)
    if not 0 <= index < total:
        raise ValueError(f"orientation index {index} outside [0, {total})")
    if use_reversal_symmetry and g.m > 0:
        index <<= 1
    arcs = []
    for j, (u, v) in enumerate(g.edges):
        arcs.append((v, u) if index >> j & 1 else (u, v))
    return Digraph.from_arcs(g.n, arcs)


def enumerate_orientations(
    g: Graph,
    use_reversal_symmetry: bool = False,
    edge_budget: int = DEFAULT_EDGE_BUDGET,
) -> Iterator[Digraph]:
    """Yield each orientation of g exactly once.

    Without the symmetry flag all 2^m orientations appear; with it, one
    representative of each {D, reverse(D)} pair (g, h and con are invariant
    under full arc reversal because intervals are direction-symmetric).
    """
    if g.m > edge_budget:
        raise EdgeBudgetError(g.m, edge_budget)
    for index in range(orientation_count(g, use_reversal_symmetry)):
        yield orientation_from_index(g, index, use_reversal_symmetry)


class PartialOrientation:
    """Mutable assignment of directions to a subset of a graph's edges."""

    def __init__(self, base: Graph):
        self.base = base
        self._direction: dict[tuple[int, int], tuple[int, int]] = {}
        self._or_mask = 0

    def orient(self, x: int, y: int) -> None:
        """Record direction x -> y for the edge {x, y}."""
        if not self.base.has_edge(x, y):
            raise ValueError(f"({x},{y}) is not an edge of the base graph")
        key = (x, y) if x < y else (y, x)
        if key in self._direction:
            raise ValueError(f"edge {key} already oriented")
        self._direction[key] = (x, y)
        self._or_mask |= (1 << x) | (1 << y)

    def is_oriented(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._direction

    def direction(self, u: int, v: int) -> tuple[int, int] | None:
        return self._direction.get((u, v) if u < v else (v, u))

    def is_or_vertex(self, v: int) -> bool:
        """True iff v is incident to at least one oriented edge."""
        return bool(self._or_mask >> v & 1)

    def or_vertices(self) -> frozenset[int]:
        return frozenset(bits(self._or_mask))

    def oriented_arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._direction.values()))

    def unoriented_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(e for e in self.base.edges if e not in self._direction)

    def to_digraph(self) -> Digraph:
        if len(self._direction) != self.base.m:
            missing = self.base.m - len(self._direction)
            raise ValueError(f"{missing} edges still unoriented")
        return Digraph.from_arcs(self.base.n, self._direction.values())
