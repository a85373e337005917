"""
The half-integral LP partition
==============================

The vertex cover LP has an optimal solution with values in {0, 1/2, 1}.
It is read off a minimum vertex cover of the bipartite double cover, which
in turn comes from a maximum matching.
"""

from fractions import Fraction

from stringvc import SimpleGraph, nt_partition
from stringvc.nt_kernel import double_cover, max_matching

star = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
p = nt_partition(star)
print("star: V0", p.v0, "V1/2", p.v_half, "V1", p.v1)

c5 = SimpleGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
p = nt_partition(c5)
print("C5:   V0", p.v0, "V1/2", p.v_half, "V1", p.v1)
print("LP value:", Fraction(p.lp_value2, 2), "x =", [str(p.value(v)) for v in range(5)])

# The double cover of C5 is C10; its maximum matching has 5 edges.
b = double_cover(c5)
print("double cover matching:", max_matching(b).size)

# Only V1/2 needs further work: V1 goes into the cover, V0 stays out.
path = SimpleGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])
p = nt_partition(path)
print("path with chord: V0", p.v0, "V1/2", p.v_half, "V1", p.v1)
