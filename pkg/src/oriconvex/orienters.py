"""Constructive orientations with certified properties.

Two constructions:

* ``extreme_free_orientation`` orients any min-degree-2 graph so that no
  vertex is extreme: pack edge-disjoint chordless cycles and orient them as
  directed cycles, then repeatedly orient a shortest path of unoriented
  vertices between two oriented ones (with a triangle repair when the path
  has a single interior vertex and its endpoints are adjacent), and finally
  orient leftovers low -> high.  Once a vertex has an in-arc u -> v and an
  out-arc v -> w with uw absent or oriented w -> u, no later choice can make
  it extreme again.

* ``d2_construction`` / ``d1_from_d2`` produce, for a connected incomplete
  graph, a pair of orientations with g(D1) < g(D2) and h(D1) < h(D2), from
  an induced two-edge path v0-v1-v2 and a partition of the remaining
  vertices.  In D2 all edges leave v0 and v2 and all edges enter v1, so all
  three are extreme; D1 reverses the arcs at v2, putting v1 on a v0-v2
  geodesic.

All tie-breaks are canonical (lowest vertex / lowest index) so outputs are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import geodesic
from .graphs import Digraph, Graph, PartialOrientation, bits, is_complete, is_connected, mask_of, min_degree


class ConstructionError(RuntimeError):
    """A construction's own postcondition failed; indicates a bug."""


# ---------------------------------------------------------------------------
# chordless cycle packing


def induced_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every chordless cycle, once each, as (min vertex, smaller neighbour, ...).

    DFS over chord-free paths rooted at the cycle's smallest vertex; a path
    may only close back to the root, and emitting only when the second
    vertex is smaller than the last fixes the traversal direction.
    """
    out = []
    adj = g.adj

    def extend(path: list[int], pathmask: int) -> None:
        a = path[0]
        tail = path[-1]
        mid_mask = pathmask & ~(1 << a) & ~(1 << tail)
        gt_a = ~((1 << (a + 1)) - 1)
        for w in bits(adj[tail] & gt_a & ~pathmask):
            wadj = adj[w]
            if wadj & mid_mask:
                continue  # chord to an interior path vertex
            if wadj >> a & 1:
                if len(path) >= 2 and path[1] < w:
                    out.append(tuple(path) + (w,))
                # extending past w would leave the chord wa inside the cycle
                continue
            path.append(w)
            extend(path, pathmask | (1 << w))
            path.pop()

    for a in range(g.n):
        for b in bits(g.adj[a] & ~((1 << (a + 1)) - 1)):
            extend([a, b], (1 << a) | (1 << b))
    out.sort(key=lambda c: (len(c), c))
    return out


def _cycle_edges(cycle: tuple[int, ...]) -> list[tuple[int, int]]:
    es = []
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        es.append((u, v) if u < v else (v, u))
    return es


def find_edge_disjoint_induced_cycles(g: Graph) -> list[tuple[int, ...]]:
    """A maximal set of pairwise edge-disjoint chordless cycles.

    Greedy over the full canonical enumeration, so the result is maximal by
    construction; a final scan re-checks that anyway.
    """
    if min_degree(g) < 2:
        raise ValueError("cycle packing needs minimum degree 2")
    cycles = induced_cycles(g)
    used: set[tuple[int, int]] = set()
    chosen = []
    for cyc in cycles:
        es = _cycle_edges(cyc)
        if any(e in used for e in es):
            continue
        chosen.append(cyc)
        used.update(es)
    for cyc in cycles:  # maximality scan
        if all(e not in used for e in _cycle_edges(cyc)):
            raise ConstructionError(f"cycle packing missed edge-disjoint cycle {cyc}")
    return chosen


# ---------------------------------------------------------------------------
# extreme-free orientation (minimum degree 2)


def _shortest_or_to_or_path(g: Graph, po: PartialOrientation) -> list[int] | None:
    """Shortest path joining two distinct or-vertices through unoriented
    interior vertices, with at least one interior vertex.  Ties break toward
    the lexicographically least (length, path) candidate."""
    best: tuple[int, list[int]] | None = None
    for start in sorted(bits(po._or_mask)):
        parent = {start: -1}
        layer = [start]
        depth = 0
        while layer and (best is None or depth + 1 < best[0]):
            depth += 1
            nxt = []
            for u in layer:
                for w in g.neighbors(u):
                    if w in parent:
                        continue
                    if po.is_or_vertex(w):
                        if u == start:
                            continue  # r = 0, no interior vertex to orient
                        path = [w, u]
                        p = parent[u]
                        while p != -1:
                            path.append(p)
                            p = parent[p]
                        path.reverse()
                        cand = (len(path) - 1, path)
                        if best is None or cand < best:
                            best = cand
                    else:
                        parent[w] = u
                        nxt.append(w)
            layer = nxt
    return best[1] if best else None


def extreme_free_orientation_steps(g: Graph) -> Iterator[PartialOrientation]:
    """The construction one step at a time, for audit; the same object is
    yielded after each cycle, each path, and the final cleanup."""
    if min_degree(g) < 2:
        raise ValueError(
            "extreme-free orientation needs minimum degree 2: an end-vertex "
            "is a source or a sink in every orientation, hence extreme"
        )
    po = PartialOrientation(g)
    for cyc in find_edge_disjoint_induced_cycles(g):
        for i, u in enumerate(cyc):
            po.orient(u, cyc[(i + 1) % len(cyc)])
        yield po
    full = (1 << g.n) - 1
    while po._or_mask != full:
        path = _shortest_or_to_or_path(g, po)
        if path is None:
            raise ConstructionError(
                "no augmenting path found with vertices still unoriented"
            )
        if len(path) == 3 and g.has_edge(path[0], path[2]):
            u0, u1, u2 = path
            if not po.is_oriented(u0, u2):
                po.orient(min(u0, u2), max(u0, u2))
            x, y = po.direction(u0, u2)
            # run the path edges against x -> y so u1 closes a directed triangle
            po.orient(y, u1)
            po.orient(u1, x)
        else:
            for u, w in zip(path, path[1:]):
                po.orient(u, w)
        yield po
    if po.unoriented_edges():
        for u, v in po.unoriented_edges():
            po.orient(u, v)
        yield po


def extreme_free_orientation(g: Graph) -> Digraph:
    """An orientation of g with no extreme vertex (so con < n - 1)."""
    po = None
    for po in extreme_free_orientation_steps(g):
        pass
    d = po.to_digraph()
    for v in range(d.n):
        if geodesic.is_extreme(d, v):
            raise ConstructionError(f"vertex {v} ended up extreme")
    return d


# ---------------------------------------------------------------------------
# the D2 / D1 pair for incomplete graphs


@dataclass(frozen=True)
class TripleSelection:
    """An induced path v0-v1-v2 plus the partition of the other vertices.

    u1: neighbours of v1 but not v2;  u2: common neighbours of v1 and v2;
    u3: neighbours of v2 but not v1;  u4: the rest of N(u2);  u5: remainder.
    """

    v0: int
    v1: int
    v2: int
    u: frozenset[int]
    u1: frozenset[int]
    u2: frozenset[int]
    u3: frozenset[int]
    u4: frozenset[int]
    u5: frozenset[int]

    def to_json_dict(self) -> dict:
        return {
            "v0": self.v0,
            "v1": self.v1,
            "v2": self.v2,
            "u1": sorted(self.u1),
            "u2": sorted(self.u2),
            "u3": sorted(self.u3),
            "u4": sorted(self.u4),
            "u5": sorted(self.u5),
        }


def triple_selection(g: Graph) -> TripleSelection:
    """Lexicographically least induced two-edge path and its partition:
    smallest middle vertex v1, then the smallest non-adjacent pair v0 < v2
    among its neighbours."""
    if not is_connected(g) or g.n < 3:
        raise ValueError("need a connected graph on at least 3 vertices")
    if is_complete(g):
        raise ValueError(
            "complete graph has no induced two-edge path; "
            "use complete_graph_orientations"
        )
    pick = None
    for v1 in range(g.n):
        nbrs = g.neighbors(v1)
        for i, v0 in enumerate(nbrs):
            for v2 in nbrs[i + 1:]:
                if not g.has_edge(v0, v2):
                    pick = (v0, v1, v2)
                    break
            if pick:
                break
        if pick:
            break
    if pick is None:  # unreachable: connected + incomplete forces one
        raise ConstructionError("no induced two-edge path found")
    v0, v1, v2 = pick
    umask = ((1 << g.n) - 1) & ~mask_of((v0, v1, v2))
    n1, n2 = g.adj[v1], g.adj[v2]
    u1 = umask & n1 & ~n2
    u2 = umask & n1 & n2
    u3 = umask & n2 & ~n1
    n_of_u2 = 0
    for x in bits(u2):
        n_of_u2 |= g.adj[x]
    u4 = (umask & n_of_u2) & ~(u1 | u2 | u3)
    u5 = umask & ~(u1 | u2 | u3 | u4)
    fs = lambda m: frozenset(bits(m))
    return TripleSelection(v0, v1, v2, fs(umask), fs(u1), fs(u2), fs(u3), fs(u4), fs(u5))


def _d2_rule_directions(sel: TripleSelection, x: int, y: int) -> set[tuple[int, int]]:
    """Directions derivable for edge {x, y} from the orientation rules."""
    dirs = set()
    u = sel.u
    for a, b in ((x, y), (y, x)):
        if a in (sel.v0, sel.v2):
            dirs.add((a, b))
        if b == sel.v1:
            dirs.add((a, b))
        if a in sel.u1 and b in u and b not in sel.u1:
            dirs.add((a, b))
        if a in sel.u4 and b in sel.u2:
            dirs.add((a, b))
        if a in u and a not in sel.u3 and b in sel.u3:
            dirs.add((a, b))
        # u4 -> u5 edges are not covered by the table above, but u5 must
        # stay free of dipaths to v1, so they leave u4
        if a in sel.u4 and b in sel.u5:
            dirs.add((a, b))
    return dirs


def d2_construction(g: Graph) -> tuple[Digraph, TripleSelection]:
    """The orientation whose geodetic and hull numbers the D1 flip undercuts.

    Every edge leaves v0 and v2 and every edge enters v1 (making all three
    extreme, with v0 and v2 sources and v1 a sink); within the rest, arcs
    run u1 -> everything, u4 -> u2, everything -> u3, u4 -> u5, and edges
    inside one class are oriented low -> high.  The rule set is checked to
    be conflict-free on every edge while orienting.
    """
    sel = triple_selection(g)
    classes = {}
    for name, members in (("u1", sel.u1), ("u2", sel.u2), ("u3", sel.u3),
                          ("u4", sel.u4), ("u5", sel.u5)):
        for v in members:
            classes[v] = name
    arcs = []
    for x, y in g.edges:
        dirs = _d2_rule_directions(sel, x, y)
        if len(dirs) > 1:
            raise ConstructionError(f"conflicting orientation rules on edge ({x},{y})")
        if dirs:
            arcs.append(dirs.pop())
            continue
        if classes.get(x) != classes.get(y) or classes.get(x) is None:
            raise ConstructionError(f"edge ({x},{y}) not covered by any rule")
        arcs.append((x, y))
    d2 = Digraph.from_arcs(g.n, arcs)
    if d2.out_masks[sel.v1] or d2.in_masks[sel.v0] or d2.in_masks[sel.v2]:
        raise ConstructionError("v1 must be a sink and v0, v2 sources in D2")
    for v in (sel.v0, sel.v1, sel.v2):
        if not geodesic.is_extreme(d2, v):
            raise ConstructionError(f"vertex {v} of the triple is not extreme in D2")
    return d2, sel


def d1_from_d2(d2: Digraph, sel: TripleSelection) -> Digraph:
    """Reverse the arcs incident to v2; v1 lands on a v0-v2 geodesic."""
    v2 = sel.v2
    arcs = [(v, u) if v2 in (u, v) else (u, v) for u, v in d2.arcs]
    return Digraph.from_arcs(d2.n, arcs)


# ---------------------------------------------------------------------------
# complete graphs


def complete_graph_orientations(n: int) -> tuple[Digraph, Digraph]:
    """(transitive tournament, same with the Hamiltonian path reversed).

    In the tournament every vertex is extreme, so g = h = n.  Reversing the
    arcs of the path 0-1-...-(n-1) makes the descending path the unique
    (n-1) -> 0 geodesic, so {0, n-1} is a geodetic set and g = h = 2.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    transitive = Digraph.from_arcs(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)]
    )
    reversed_path = Digraph.from_arcs(
        n,
        [(i + 1, i) for i in range(n - 1)]
        + [(i, j) for i in range(n) for j in range(i + 2, n)],
    )
    return transitive, reversed_path
