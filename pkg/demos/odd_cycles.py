"""
Short odd cycles and odd girth
==============================

The cover algorithm first strips odd cycles of length at most 11, then
works on a graph whose odd girth is at least 13.
"""

from stringvc import SimpleGraph, find_odd_cycle_bounded, odd_girth, strip_short_odd_cycles

c13 = SimpleGraph.from_edges(13, [(i, (i + 1) % 13) for i in range(13)])
print("odd girth of C13:", odd_girth(c13))
print("odd cycle of length <= 11 in C13:", find_odd_cycle_bounded(c13, 11))

# A chord between vertices 0 and 4 closes a 5-cycle.
chorded = SimpleGraph.from_edges(13, c13.edges() + [(0, 4)])
print("with chord 0-4:", odd_girth(chorded), find_odd_cycle_bounded(chorded, 11))

# Two pentagons joined by a single edge.
edges = [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 1) % 5) for i in range(5)] + [(4, 5)]
g = SimpleGraph.from_edges(10, edges)
res = strip_short_odd_cycles(g)
print("stripped cycles:", res.cycles)
print("left over:", res.remaining, "odd girth:", odd_girth(res.g_prime))
