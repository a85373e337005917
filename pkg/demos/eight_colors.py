"""
Eight colors for string graphs of odd girth at least 13
=======================================================

BFS layers alternate palettes {1..4} and {5..8}. Inside a layer, each
component is split by the parity of its distance from a fixed piece of
the previous layer, and each part is 2-colored. When a part is not
bipartite the routine stops and returns an odd cycle as a witness.
"""

from stringvc import EightColoring, PromiseViolation, eight_coloring, ingest_segments, intersection_graph
from stringvc.toolkit import cycle_segments, gen_subdivided_planar

rep = ingest_segments(cycle_segments(15))
res = eight_coloring(rep)
print("C15 colors:", res.colors)
print("layers:    ", res.layer)

# A larger planar example: a grid with diagonals, every edge subdivided,
# drawn so that the odd girth is at least 13.
rep = gen_subdivided_planar(seed=3, width=5, height=4)
g = intersection_graph(rep)
res = eight_coloring(rep)
assert isinstance(res, EightColoring)
print(g.n, "vertices, classes:", {c: len(vs) for c, vs in res.color_classes().items()})
print("largest auxiliary graph:", res.diagnostics["max_aux_size"])

# A triangle breaks the promise already in the first layer.
res = eight_coloring(ingest_segments(cycle_segments(3)))
assert isinstance(res, PromiseViolation)
print("triangle:", res.reason, res.witness)
