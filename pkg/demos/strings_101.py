"""
String graphs from connected sets
=================================

A string graph is handed to the library as a planar host graph (with a
rotation system) plus one connected set of host vertices per graph vertex.
Two graph vertices are adjacent when their sets meet.
"""

from stringvc import StringRepresentation, intersection_graph, restrict_sets, validate
from stringvc.representation import HostGraph, euler_check
from stringvc.toolkit import grid_host

# A 3x3 grid is planar; its canonical rotations list neighbors right, up, left, down.
host = grid_host(3, 3)
print("host vertices:", host.n, "edges:", len(host.edges))

# The bottom row and the middle column share vertex 1; the corner 8 touches neither.
rep = StringRepresentation.build(host, [[0, 1, 2], [1, 4, 7], [8]])
print("valid:", validate(rep).ok)

# Adjacency is set intersection.
g = intersection_graph(rep)
print("edges of G:", g.edges())

# The Euler check traces faces from the rotation system: V - E + F must be 2.
print(euler_check(host))

# K5 has no planar rotation system, so any host built on it fails validation.
k5 = HostGraph.build(5, [(u, v) for u in range(5) for v in range(u + 1, 5)],
                     [[u for u in range(5) if u != v] for v in range(5)])
print("K5 host:", validate(StringRepresentation.build(k5, [[0]])).codes())

# A set that is not connected in the host is rejected too.
print("split set:", validate(StringRepresentation.build(host, [[0, 2]])).codes())

# Restricting to some of the sets keeps the original indices as labels.
sub = restrict_sets(rep, [0, 2])
print("restricted labels:", sub.labels, "edges:", intersection_graph(sub).edges())
