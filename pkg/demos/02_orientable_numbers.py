#!/usr/bin/env python3
"""The six orientable numbers of some named graph families.

For each graph we enumerate every orientation (up to reversal, which
preserves g, h and con) and report the minimum and maximum geodetic, hull
and convexity numbers together with witness orientations.
"""

from oriconvex import Graph, orientable_numbers


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(s, t):
    return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def star(k):
    return Graph.from_edges(k + 1, [(0, i + 1) for i in range(k)])


samples = [
    ("C5", cycle(5)),
    ("C7", cycle(7)),
    ("K4", complete(4)),
    ("K_{2,3}", complete_bipartite(2, 3)),
    ("star K_{1,3}", star(3)),
]

for name, g in samples:
    nums = orientable_numbers(g)
    print(f"{name}: n={g.n} m={g.m} ({nums.orientations} orientations swept)")
    print(f"    g-: {nums.g_min}   g+: {nums.g_max}   "
          f"h-: {nums.h_min}   h+: {nums.h_max}   "
          f"con-: {nums.con_min}   con+: {nums.con_max}")
    print(f"    g- attained by: {nums.g_min_witness.arcs}")
    print(f"    con+ attained by: {nums.con_max_witness.arcs}")
    print()

print("patterns on display: odd cycles and complete bipartite graphs reach")
print("g- = h- = 2; stars need every leaf (g- = #leaves); and con+ is always")
print("n - 1 because any vertex can be made a source, hence extreme.")
