#!/usr/bin/env python3
"""Intervals, convex hulls, and extreme vertices of a small digraph.

The closed interval I[u,v] collects u, v and every vertex lying on a
shortest dipath in either direction; a set is convex when it absorbs all
such geodesics between its own members.
"""

from oriconvex import (
    Digraph,
    all_pairs_distances,
    convex_hull,
    extreme_vertices,
    interval,
    interval_of_set,
    is_convex,
    iterated_interval,
    sinks,
    sources,
)

# a 5-vertex digraph: a directed 4-cycle with a pendant vertex 4 fed by 0
d = Digraph.from_arcs(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
print("digraph arcs:", d.arcs)

dist = all_pairs_distances(d)
print("\ndistance matrix (inf = no dipath):")
for row in dist:
    print("   ", ["inf" if x == float("inf") else x for x in row])

print("\nI[1, 3] =", sorted(interval(d, dist, 1, 3)))
print("the 1->2->3 geodesic and the 3->0->1 geodesic both count,")
print("so the interval of two 'antipodal' cycle vertices is the whole cycle.")

print("\nI[{0, 2}] =", sorted(interval_of_set(d, dist, {0, 2})))
print("I^2[{1, 3}] =", sorted(iterated_interval(d, {1, 3}, 2)))

print("\nhull of {1, 3} =", sorted(convex_hull(d, {1, 3})))
print("is {0, 1} convex?", is_convex(d, {0, 1}), " (the 1->...->0 geodesic leaks)")
print("is {4} convex?", is_convex(d, {4}))

print("\nsources:", sorted(sources(d)), " sinks:", sorted(sinks(d)))
print("extreme vertices:", sorted(extreme_vertices(d)))
print("vertex 4 is a sink, so it is vacuously extreme; the cycle vertices")
print("all sit inside geodesics, so none of them is extreme.")
