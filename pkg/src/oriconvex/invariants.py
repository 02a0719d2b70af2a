"""Exact geodetic, hull and convexity numbers, per digraph and over orientations.

The searches here are exact and deterministic: candidate sets are scanned by
increasing size and lexicographically within a size, and every candidate is
forced to contain all extreme vertices (which belong to every geodetic set
and every hull-set).  Witnesses are therefore the lexicographically least
optima and reruns are diffable.

Internally everything runs on integer bitmasks with a precomputed matrix of
interval masks per digraph; the public functions translate to and from
vertex tuples.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .graphs import (
    DEFAULT_EDGE_BUDGET,
    Digraph,
    EdgeBudgetError,
    Graph,
    bits,
    is_connected,
    orientation_count,
    orientation_from_index,
)

# ---------------------------------------------------------------------------
# bitmask core (shared by the per-digraph API and the orientation sweep)


def _distance_matrix(n: int, out_masks) -> list[list[int]]:
    # unreachable pairs get the sentinel n: no dipath on n vertices has n arcs,
    # and n + anything can never equal a finite distance in the sum criterion
    dist = [[n] * n for _ in range(n)]
    for s in range(n):
        row = dist[s]
        row[s] = 0
        seen = 1 << s
        frontier = 1 << s
        depth = 0
        while frontier:
            depth += 1
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= out_masks[b.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= frontier
            f = frontier
            while f:
                b = f & -f
                f ^= b
                row[b.bit_length() - 1] = depth
        dist[s] = row
    return dist


def _interval_masks(n: int, out_masks) -> list[list[int]]:
    dist = _distance_matrix(n, out_masks)
    iv = [[0] * n for _ in range(n)]
    for u in range(n):
        iv[u][u] = 1 << u
        du = dist[u]
        for v in range(u + 1, n):
            mask = (1 << u) | (1 << v)
            duv = du[v]
            if duv < n:
                for w in range(n):
                    if du[w] + dist[w][v] == duv:
                        mask |= 1 << w
            dvu = dist[v][u]
            if dvu < n:
                dv = dist[v]
                for w in range(n):
                    if dv[w] + dist[w][u] == dvu:
                        mask |= 1 << w
            iv[u][v] = mask
            iv[v][u] = mask
    return iv


def _set_interval(iv, smask: int) -> int:
    verts = list(bits(smask))
    out = smask
    for i, u in enumerate(verts):
        row = iv[u]
        for v in verts[i + 1:]:
            out |= row[v]
    return out


def _hull_mask(iv, smask: int) -> int:
    cur = smask
    while True:
        nxt = _set_interval(iv, cur)
        if nxt == cur:
            return cur
        cur = nxt


def _extreme_mask(n: int, out_masks, in_masks) -> int:
    x = 0
    for v in range(n):
        outs = out_masks[v]
        t = in_masks[v]
        ok = True
        while t:
            b = t & -t
            t ^= b
            if outs & ~out_masks[b.bit_length() - 1] & ~b:
                ok = False
                break
        if ok:
            x |= 1 << v
    return x


def _min_superset(n: int, seed: int, test) -> int:
    """Smallest superset of `seed` passing `test`, lexicographically least.

    Candidates of equal size are visited in lexicographic order of the full
    vertex tuple (merging a fixed seed into sorted combinations preserves
    that order), so the first hit is the canonical witness.
    """
    rest = [v for v in range(n) if not seed >> v & 1]
    for extra in range(len(rest) + 1):
        for combo in itertools.combinations(rest, extra):
            s = seed
            for v in combo:
                s |= 1 << v
            if test(s):
                return s
    raise AssertionError("unreachable: the full vertex set always passes")


def _invariant_masks(n: int, out_masks, in_masks):
    """(g, g_witness, h, h_witness, con, con_witness) with bitmask witnesses.

    con entries are (0, 0) when n < 2 (no proper nonempty subsets to rank).
    """
    iv = _interval_masks(n, out_masks)
    full = (1 << n) - 1
    ext = _extreme_mask(n, out_masks, in_masks)

    gw = _min_superset(n, ext, lambda s: _set_interval(iv, s) == full)
    hw = _min_superset(n, ext, lambda s: _hull_mask(iv, s) == full)

    if n < 2:
        cw = 0
        con = 0
    elif ext:
        # Prop.: the (n-1)-sets V - v are convex exactly for extreme v, so the
        # lexicographically least maximum witness drops the largest extreme vertex
        cw = full & ~(1 << (ext.bit_length() - 1))
        con = n - 1
    else:
        con, cw = 0, 0
        for size in range(n - 1, 0, -1):
            found = None
            for combo in itertools.combinations(range(n), size):
                s = 0
                for v in combo:
                    s |= 1 << v
                if _set_interval(iv, s) == s:
                    found = s
                    break
            if found is not None:
                con, cw = size, found
                break
    return (gw.bit_count(), gw, hw.bit_count(), hw, con, cw)


# ---------------------------------------------------------------------------
# per-digraph API


def geodetic_number(d: Digraph) -> tuple[int, tuple[int, ...]]:
    """Minimum size of S with I[S] = V, plus the lexicographically least witness."""
    if d.n < 1:
        raise ValueError("geodetic number needs at least one vertex")
    g, gw, _, _, _, _ = _invariant_masks(d.n, d.out_masks, d.in_masks)
    return g, tuple(bits(gw))


def hull_number(d: Digraph) -> tuple[int, tuple[int, ...]]:
    """Minimum size of S whose convex hull is V, plus the least witness."""
    if d.n < 1:
        raise ValueError("hull number needs at least one vertex")
    _, _, h, hw, _, _ = _invariant_masks(d.n, d.out_masks, d.in_masks)
    return h, tuple(bits(hw))


def convexity_number(d: Digraph) -> tuple[int, tuple[int, ...]]:
    """Size of the largest convex proper subset, plus the least witness."""
    if d.n < 2:
        raise ValueError("convexity number needs at least two vertices")
    _, _, _, _, con, cw = _invariant_masks(d.n, d.out_masks, d.in_masks)
    return con, tuple(bits(cw))


@dataclass(frozen=True)
class DigraphReport:
    """g, h and con of one digraph with their witness sets."""

    n: int
    g: int
    h: int
    con: int
    geodetic_witness: tuple[int, ...]
    hull_witness: tuple[int, ...]
    convexity_witness: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "g": self.g,
            "h": self.h,
            "con": self.con,
            "geodetic_witness": list(self.geodetic_witness),
            "hull_witness": list(self.hull_witness),
            "convexity_witness": list(self.convexity_witness),
        }


def digraph_report(d: Digraph) -> DigraphReport:
    if d.n < 2:
        raise ValueError("reports need at least two vertices")
    g, gw, h, hw, con, cw = _invariant_masks(d.n, d.out_masks, d.in_masks)
    return DigraphReport(d.n, g, h, con, tuple(bits(gw)), tuple(bits(hw)), tuple(bits(cw)))


# ---------------------------------------------------------------------------
# orientable numbers


@dataclass(frozen=True)
class OrientableNumbers:
    """Exact min/max of g, h, con over all orientations, with witnesses.

    Each witness is the enumerated orientation of least index attaining the
    extremum, so results are independent of chunking and worker count.
    """

    n: int
    m: int
    g_min: int
    g_max: int
    h_min: int
    h_max: int
    con_min: int
    con_max: int
    g_min_witness: Digraph
    g_max_witness: Digraph
    h_min_witness: Digraph
    h_max_witness: Digraph
    con_min_witness: Digraph
    con_max_witness: Digraph
    orientations: int

    def values(self) -> dict[str, int]:
        return {
            "g_min": self.g_min,
            "g_max": self.g_max,
            "h_min": self.h_min,
            "h_max": self.h_max,
            "con_min": self.con_min,
            "con_max": self.con_max,
        }

    def to_json_dict(self) -> dict:
        out = dict(self.values())
        out["n"] = self.n
        out["m"] = self.m
        out["orientations"] = self.orientations
        out["witnesses"] = {
            "g_min": [list(a) for a in self.g_min_witness.arcs],
            "g_max": [list(a) for a in self.g_max_witness.arcs],
            "h_min": [list(a) for a in self.h_min_witness.arcs],
            "h_max": [list(a) for a in self.h_max_witness.arcs],
            "con_min": [list(a) for a in self.con_min_witness.arcs],
            "con_max": [list(a) for a in self.con_max_witness.arcs],
        }
        return out


def _build_out_in_masks(n, edges, index):
    outs = [0] * n
    ins = [0] * n
    for j, (u, v) in enumerate(edges):
        if index >> j & 1:
            u, v = v, u
        outs[u] |= 1 << v
        ins[v] |= 1 << u
    return outs, ins


def _sweep_chunk(args):
    """Aggregate one contiguous index range; top-level for pickling."""
    n, edges, start, stop, shift = args
    best = None
    for idx in range(start, stop):
        outs, ins = _build_out_in_masks(n, edges, idx << shift)
        g, _, h, _, con, _ = _invariant_masks(n, outs, ins)
        vals = (g, h, con)
        if best is None:
            best = [[v, idx, v, idx] for v in vals]
            continue
        for slot, v in zip(best, vals):
            if v < slot[0]:
                slot[0], slot[1] = v, idx
            if v > slot[2]:
                slot[2], slot[3] = v, idx
    return best


def _merge(acc, part):
    if acc is None:
        return part
    if part is None:
        return acc
    for slot, other in zip(acc, part):
        # strict comparisons keep the least index per extremum (chunks arrive
        # in ascending index order)
        if other[0] < slot[0]:
            slot[0], slot[1] = other[0], other[1]
        if other[2] > slot[2]:
            slot[2], slot[3] = other[2], other[3]
    return acc


def orientable_numbers(
    g: Graph,
    *,
    use_reversal_symmetry: bool = True,
    edge_budget: int = DEFAULT_EDGE_BUDGET,
    workers: int | None = None,
) -> OrientableNumbers:
    """Enumerate every orientation of g and aggregate the six extremes."""
    if g.n < 3:
        raise ValueError("orientable numbers need at least three vertices")
    if not is_connected(g):
        raise ValueError("orientable numbers are defined here for connected graphs")
    if g.m > edge_budget:
        raise EdgeBudgetError(g.m, edge_budget)

    total = orientation_count(g, use_reversal_symmetry)
    shift = 1 if (use_reversal_symmetry and g.m > 0) else 0

    if workers and workers > 1 and total >= 4 * workers:
        bound = (total + workers - 1) // workers
        chunks = [
            (g.n, g.edges, lo, min(lo + bound, total), shift)
            for lo in range(0, total, bound)
        ]
        acc = None
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_sweep_chunk, chunks):
                acc = _merge(acc, part)
    else:
        acc = _sweep_chunk((g.n, g.edges, 0, total, shift))

    (gmin, gmin_i, gmax, gmax_i), (hmin, hmin_i, hmax, hmax_i), (cmin, cmin_i, cmax, cmax_i) = acc

    def wit(idx):
        return orientation_from_index(g, idx, use_reversal_symmetry)

    return OrientableNumbers(
        n=g.n,
        m=g.m,
        g_min=gmin,
        g_max=gmax,
        h_min=hmin,
        h_max=hmax,
        con_min=cmin,
        con_max=cmax,
        g_min_witness=wit(gmin_i),
        g_max_witness=wit(gmax_i),
        h_min_witness=wit(hmin_i),
        h_max_witness=wit(hmax_i),
        con_min_witness=wit(cmin_i),
        con_max_witness=wit(cmax_i),
        orientations=total,
    )
