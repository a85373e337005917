"""
Seeded generators and the exact oracle
======================================

All generators draw from SplitMix64, so a seed and a parameter set fix an
instance on any platform. The exact branch-and-bound cover is the
reference for small instances.
"""

from stringvc import intersection_graph, odd_girth
from stringvc.toolkit import (
    GRID_RECTILINEAR,
    GRID_SUBTREES,
    SEGMENTS,
    GeneratorConfig,
    SplitMix64,
    exact_vertex_cover,
    gen_grid_rectilinear,
    gen_grid_subtrees,
    gen_segments,
)

rng = SplitMix64(1234567)
print("SplitMix64:", [rng.next() for _ in range(3)])

fam = gen_segments(GeneratorConfig(seed=1, kind=SEGMENTS, count=2, box=10))
print("two segments:", fam.rows())

# Whole instances are redrawn until the graph has odd girth at least 13.
cfg = GeneratorConfig(seed=5, kind=GRID_SUBTREES, count=10, width=12, height=12,
                      size_range=(1, 6), min_odd_girth=13)
g = intersection_graph(gen_grid_subtrees(cfg))
print("filtered grid instance: odd girth", odd_girth(g))

# Horizontal and vertical paths give bipartite graphs.
cfg = GeneratorConfig(seed=2, kind=GRID_RECTILINEAR, count=12, width=10, height=10, size_range=(2, 6))
g = intersection_graph(gen_grid_rectilinear(cfg))
print("rectilinear instance:", g.m, "edges, odd girth", odd_girth(g))
print("exact cover:", exact_vertex_cover(g))
