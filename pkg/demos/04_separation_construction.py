#!/usr/bin/env python3
"""Two orientations of one graph with different geodetic and hull numbers.

For an incomplete connected graph, pick an induced path v0-v1-v2 and orient
so that v1 swallows every incident edge (D2); all three path vertices become
extreme, forcing them into every geodetic and hull set.  Reversing the arcs
at v2 (D1) puts v1 back inside a v0-v2 geodesic, and every hull-set of D2
keeps working in D1 even after dropping v1.  That single construction
separates g- < g+ and h- < h+ simultaneously.
"""

from oriconvex import (
    Graph,
    all_pairs_distances,
    convex_hull,
    d1_from_d2,
    d2_construction,
    geodetic_number,
    hull_number,
    interval_of_set,
)

# the 3-fan: path 0-1-2-3 plus a hub 4 joined to everything
g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])

d2, sel = d2_construction(g)
d1 = d1_from_d2(d2, sel)

print("graph edges:", g.edges)
print("induced path:", sel.v0, "-", sel.v1, "-", sel.v2)
print("partition:", sel.to_json_dict())
print("\nD2 arcs:", d2.arcs)
print("D1 arcs:", d1.arcs, " (arcs at v2 reversed)")

g2, gw2 = geodetic_number(d2)
g1, gw1 = geodetic_number(d1)
h2, hw2 = hull_number(d2)
h1, hw1 = hull_number(d1)
print(f"\ng(D2) = {g2} with witness {set(gw2)}")
print(f"g(D1) = {g1} with witness {set(gw1)}")
print(f"h(D2) = {h2}, h(D1) = {h1}")

print("\nchecking the containment that drives the proof, for the minimum")
print("geodetic set S of D2 and its v1-free reduction:")
s = frozenset(gw2)
reduced = s - {sel.v1}
i2 = interval_of_set(d2, all_pairs_distances(d2), s)
i1 = interval_of_set(d1, all_pairs_distances(d1), reduced)
print(f"   I_D2[{set(s)}] = {sorted(i2)}")
print(f"   I_D1[{set(reduced)}] = {sorted(i1)}")
print("   contained?", i2 <= i1)
print(f"\nhull of the reduced set in D1: {sorted(convex_hull(d1, reduced))}")
print("so a smaller set suffices in D1: the graph's g- and g+ must differ.")
