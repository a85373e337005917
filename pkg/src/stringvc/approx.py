"""11/6-approximate vertex cover on represented string graphs.

Phase one removes odd cycles of length at most 11 (all their vertices go
into the cover). Phase two takes the half-integral LP partition of what is
left: ``V1`` goes into the cover and only ``G'' = G'[V1/2]`` survives. Phase
three 8-colors ``G''`` and puts every vertex outside a largest color class
into the cover.

Every run returns a certificate. Its doubled lower bound

    lb2 = sum_C 2 * ceil(|C| / 2) + 2 |Y| + |V(G'')|

satisfies ``lb2 <= 2 vc(G)``, and the returned cover ``Q`` satisfies
``12 |Q| <= 11 lb2``, all in exact integers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .coloring import EightColoring, PromiseViolation, eight_coloring
from .errors import InternalError, InvalidCycleSet, NotAStringRepresentation
from .graph import SimpleGraph
from .nt_kernel import NTPartition, nt_partition
from .odd_cycles import STRIP_BOUND, OddCycle, strip_short_odd_cycles
from .representation import StringRepresentation, intersection_graph, require_valid, restrict_sets

CASE_VC_AT_MOST_K = "le_k"
CASE_VC_ABOVE_11K_OVER_6 = "gt_11k_over_6"


@dataclass(frozen=True)
class VCCertificate:
    q: tuple[int, ...]
    x_set: tuple[int, ...]
    y_set: tuple[int, ...]
    z_set: tuple[int, ...]
    cycles: tuple[OddCycle, ...]
    g2_size: int
    lb2: int
    kept_color: int | None = None

    @property
    def ratio_certified(self) -> bool:
        """``|Q| <= (11/6) * lb2 / 2`` in exact arithmetic."""
        return 12 * len(self.q) <= 11 * self.lb2


@dataclass(frozen=True)
class Decision:
    answer: str
    lb2: int


@dataclass(frozen=True)
class _Reduced:
    cycles: tuple[OddCycle, ...]
    x_set: tuple[int, ...]
    y_set: tuple[int, ...]
    g2_vertices: tuple[int, ...]  # ids in the input graph
    nt: NTPartition


def verify_cover(g: SimpleGraph, q: Iterable[int]) -> bool:
    qs = set(q)
    return all(u in qs or v in qs for u, v in g.edges())


def lower_bound(cycles: Sequence[Sequence[int]], y_size: int, g2_size: int) -> int:
    """Doubled lower bound ``2 * sum ceil(|C|/2) + 2 * y_size + g2_size``."""
    total = 0
    for c in cycles:
        if len(c) < 3 or len(c) % 2 == 0 or len(c) > STRIP_BOUND:
            raise InvalidCycleSet(f"cycle of length {len(c)} is not an odd cycle of length <= {STRIP_BOUND}")
        total += 2 * ((len(c) + 1) // 2)
    return total + 2 * y_size + g2_size


def _reduce(g: SimpleGraph) -> _Reduced:
    strip = strip_short_odd_cycles(g, STRIP_BOUND)
    nt = nt_partition(strip.g_prime)
    rem = strip.remaining
    return _Reduced(
        cycles=strip.cycles,
        x_set=strip.removed,
        y_set=tuple(rem[v] for v in nt.v1),
        g2_vertices=tuple(rem[v] for v in nt.v_half),
        nt=nt,
    )


def most_frequent_color(coloring: EightColoring) -> int | None:
    counts = Counter(coloring.colors)
    if not counts:
        return None
    return min(counts, key=lambda c: (-counts[c], c))


def approximate_vertex_cover(rep: StringRepresentation) -> VCCertificate:
    """Vertex cover of the represented graph within 11/6 of optimum.

    Raises :class:`NotAStringRepresentation` if the coloring step rejects the
    reduced graph; for a valid representation this cannot happen.
    """
    require_valid(rep)
    g = intersection_graph(rep, check=False)
    red = _reduce(g)
    sub = restrict_sets(rep, red.g2_vertices)
    coloring = eight_coloring(sub)
    if isinstance(coloring, PromiseViolation):
        witness = [red.g2_vertices[v] for v in coloring.witness]
        raise NotAStringRepresentation(
            f"coloring rejected the reduced graph with an odd cycle of length {len(witness)}",
            details=witness,
        )
    kept = most_frequent_color(coloring)
    z = tuple(sorted(red.g2_vertices[v] for v, c in enumerate(coloring.colors) if c != kept))
    q = tuple(sorted(set(red.x_set) | set(red.y_set) | set(z)))
    if not verify_cover(g, q):
        raise InternalError("returned set is not a vertex cover", code="INTERNAL_COVER_CHECK_FAILED")
    lb2 = lower_bound(red.cycles, len(red.y_set), len(red.g2_vertices))
    return VCCertificate(
        q=q,
        x_set=red.x_set,
        y_set=red.y_set,
        z_set=z,
        cycles=red.cycles,
        g2_size=len(red.g2_vertices),
        lb2=lb2,
        kept_color=kept,
    )


def promise_decide(g: SimpleGraph, k: int) -> Decision:
    """Tell ``vc(g) <= k`` apart from ``vc(g) > 11k/6`` for string graphs.

    Needs no representation: only the first two phases run, and the answer
    is "above" exactly when the doubled lower bound exceeds ``2k``. The
    answer means nothing if ``g`` falls in neither case.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    red = _reduce(g)
    lb2 = lower_bound(red.cycles, len(red.y_set), len(red.g2_vertices))
    answer = CASE_VC_ABOVE_11K_OVER_6 if lb2 > 2 * k else CASE_VC_AT_MOST_K
    return Decision(answer, lb2)
