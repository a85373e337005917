"""
An 11/6-approximate vertex cover
================================

Three phases: take every short odd cycle whole, take V1 of the LP partition
of what is left, then take all but one color class of an 8-coloring of V1/2.
The result comes with an integer certificate 12|Q| <= 11 lb2, where lb2 is
twice a lower bound on the optimum.
"""

from stringvc import approximate_vertex_cover, ingest_segments, intersection_graph, promise_decide
from stringvc.toolkit import GRID_SUBTREES, GeneratorConfig, cycle_segments, exact_vertex_cover, gen_grid_subtrees

rep = ingest_segments(cycle_segments(13))
cert = approximate_vertex_cover(rep)
print("C13: |Q| =", len(cert.q), "lb2 =", cert.lb2, "optimum =", exact_vertex_cover(intersection_graph(rep))[0])
print("kept color:", cert.kept_color, "certified:", cert.ratio_certified)

cfg = GeneratorConfig(seed=11, kind=GRID_SUBTREES, count=20, width=8, height=8, size_range=(1, 5))
rep = gen_grid_subtrees(cfg)
g = intersection_graph(rep)
cert = approximate_vertex_cover(rep)
print("grid instance:", g.n, "vertices,", g.m, "edges")
print("  cycles taken:", len(cert.cycles), "X:", len(cert.x_set), "Y:", len(cert.y_set), "Z:", len(cert.z_set))
print("  |Q| =", len(cert.q), "optimum =", exact_vertex_cover(g)[0], "lb2 =", cert.lb2)

# The promise decider answers "vc <= k" or "vc > 11k/6" from the lower bound alone.
for k in (5, 6, 7):
    print("C13, k =", k, "->", promise_decide(intersection_graph(ingest_segments(cycle_segments(13))), k).answer)
