"""11/6-approximate vertex cover for string graphs given with a representation.

The pieces, bottom up: :mod:`graph` (simple graphs, BFS), :mod:`representation`
(planar host plus connected sets), :mod:`geometry` (exact segment
arrangements), :mod:`odd_cycles`, :mod:`nt_kernel` (half-integral LP),
:mod:`coloring` (8-coloring when no odd cycle has length <= 11) and
:mod:`approx` (the three-phase cover with its certificate). :mod:`toolkit`
holds generators and an exact oracle.
"""

from .approx import (
    CASE_VC_ABOVE_11K_OVER_6,
    CASE_VC_AT_MOST_K,
    VCCertificate,
    approximate_vertex_cover,
    lower_bound,
    promise_decide,
    verify_cover,
)
from .coloring import (
    AuxiliaryH,
    EightColoring,
    PromiseViolation,
    build_auxiliary_h,
    check_coloring,
    color_layer_component,
    eight_coloring,
)
from .errors import StringVCError
from .geometry import OVERLAP, RationalPoint, SegmentFamily, ingest_segments, segment_pair_intersection
from .graph import BfsLayers, SimpleGraph, bfs_layers, bipartition, connected_components
from .nt_kernel import NTPartition, double_cover, max_matching, nt_partition
from .odd_cycles import find_odd_cycle_bounded, is_odd_cycle, odd_girth, strip_short_odd_cycles
from .representation import (
    HostGraph,
    StringRepresentation,
    intersection_graph,
    restrict_sets,
    validate,
)

__version__ = "0.1.0"
