"""
From line segments to a representation
======================================

Segments with integer endpoints are planarized exactly: every crossing
becomes a host vertex, consecutive points along a segment become host edges,
and each segment becomes the set of host vertices lying on it.
"""

from stringvc import SegmentFamily, ingest_segments, intersection_graph, validate
from stringvc.errors import DegenerateInput
from stringvc.geometry import segment_pair_intersection
from stringvc.toolkit import cycle_segments

# Crossing points are rational; no floating point is involved.
print(segment_pair_intersection(((0, 0), (3, 1)), ((0, 1), (3, 0))))

# Three segments forming a triangle of crossings.
fam = SegmentFamily.from_rows([[0, 1, 10, 1], [1, 0, 6, 10], [9, 0, 4, 10]])
rep = ingest_segments(fam)
print("host:", rep.host.n, "vertices;", "sets:", rep.sets)
print("graph:", intersection_graph(rep).edges(), "valid:", validate(rep).ok)

# Inputs outside general position are refused with a reason.
try:
    ingest_segments(SegmentFamily.from_rows([[0, 0, 4, 4], [2, 2, 6, 6]]))
except DegenerateInput as exc:
    print("rejected:", exc.code, exc.details)

# A ring of 13 segments, each crossing only its two neighbors, realizes C13.
g = intersection_graph(ingest_segments(cycle_segments(13)))
print("C13 from segments:", g.n, "vertices,", g.m, "edges")
