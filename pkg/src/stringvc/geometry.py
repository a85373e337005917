"""Exact planarization of integer segment families.

All predicates are evaluated on integers or :class:`fractions.Fraction`
values, so the arrangement (crossing points, edge order along segments and
angular order around vertices) is computed without rounding.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import DegenerateInput
from .representation import HostGraph, StringRepresentation

Point = tuple[int, int]
Segment = tuple[Point, Point]


class RationalPoint(NamedTuple):
    x: Fraction
    y: Fraction


class _Overlap:
    __slots__ = ()

    def __repr__(self) -> str:
        return "OVERLAP"


OVERLAP = _Overlap()


@dataclass(frozen=True)
class SegmentFamily:
    """Integer segments, optionally tied to a square box ``[-box, box]^2``."""

    segments: tuple[Segment, ...]
    box: int | None = None

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], box: int | None = None) -> "SegmentFamily":
        segs = []
        for row in rows:
            x1, y1, x2, y2 = (int(c) for c in row)
            segs.append(((x1, y1), (x2, y2)))
        return cls(tuple(segs), box)

    def rows(self) -> list[list[int]]:
        return [[a[0], a[1], b[0], b[1]] for a, b in self.segments]

    def __len__(self) -> int:
        return len(self.segments)


def orient(a, b, c) -> int:
    """Sign of the cross product ``(b - a) x (c - a)``."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def _on_closed_segment(p, a, b) -> bool:
    """``p`` collinear with ``ab`` assumed; is it between ``a`` and ``b``?"""
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _param(p, a, b) -> Fraction:
    """Parameter of ``p`` on the line ``a + t (b - a)``; ``p`` must lie on it."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    if dx != 0:
        return Fraction(p[0] - a[0]) / dx
    return Fraction(p[1] - a[1]) / dy


def segment_pair_intersection(a: Segment, b: Segment):
    """Classify the intersection of two non-degenerate segments.

    Returns ``None`` when disjoint, the unique common point as a
    :class:`RationalPoint`, or :data:`OVERLAP` when the segments share a
    sub-segment of positive length.
    """
    p, p2 = a
    q, q2 = b
    o1, o2 = orient(p, p2, q), orient(p, p2, q2)
    o3, o4 = orient(q, q2, p), orient(q, q2, p2)
    if o1 == 0 and o2 == 0:
        # collinear: intersect the parameter intervals on a
        t0, t1 = sorted((_param(q, p, p2), _param(q2, p, p2)))
        lo, hi = max(t0, Fraction(0)), min(t1, Fraction(1))
        if lo > hi:
            return None
        if lo < hi:
            return OVERLAP
        return RationalPoint(p[0] + lo * (p2[0] - p[0]), p[1] + lo * (p2[1] - p[1]))
    if o1 * o2 > 0 or o3 * o4 > 0:
        return None
    # lines meet in one point and it lies on both closed segments
    rx, ry = p2[0] - p[0], p2[1] - p[1]
    sx, sy = q2[0] - q[0], q2[1] - q[1]
    denom = rx * sy - ry * sx
    t = Fraction((q[0] - p[0]) * sy - (q[1] - p[1]) * sx, denom)
    return RationalPoint(p[0] + t * rx, p[1] + t * ry)


def _half(v) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2 pi)
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _angle_cmp(u, v) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    c = u[0] * v[1] - u[1] * v[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def ccw_order(center, targets: Sequence) -> list[int]:
    """Indices of ``targets`` sorted counterclockwise around ``center``,
    starting from the positive x direction. Exact for rational inputs."""
    vecs = [(t[0] - center[0], t[1] - center[1]) for t in targets]
    key = functools.cmp_to_key(lambda i, j: _angle_cmp(vecs[i], vecs[j]))
    return sorted(range(len(targets)), key=key)


def general_position_violations(fam: SegmentFamily) -> list[dict]:
    """Every general-position violation of ``fam`` (empty when it is clean)."""
    segs = fam.segments
    out: list[dict] = []
    for i, (a, b) in enumerate(segs):
        if a == b:
            out.append({"code": "ZERO_LENGTH", "segments": [i]})
        if fam.box is not None and any(abs(c) > fam.box for c in (*a, *b)):
            out.append({"code": "OUT_OF_BOX", "segments": [i]})
    if out:
        return out
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            hit = segment_pair_intersection(segs[i], segs[j])
            if hit is None:
                continue
            if hit is OVERLAP:
                out.append({"code": "COLLINEAR_OVERLAP", "segments": [i, j]})
                continue
            ends_i, ends_j = set(segs[i]), set(segs[j])
            if ends_i & ends_j:
                out.append({"code": "SHARED_ENDPOINT", "segments": [i, j]})
            elif hit in ends_i or hit in ends_j:
                out.append({"code": "ENDPOINT_ON_SEGMENT", "segments": [i, j]})
    if out:
        return out
    through: dict[RationalPoint, list[int]] = {}
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            hit = segment_pair_intersection(segs[i], segs[j])
            if hit is not None:
                through.setdefault(hit, []).extend((i, j))
    for pt, members in through.items():
        members = sorted(set(members))
        if len(members) >= 3:
            out.append({"code": "CONCURRENT", "segments": members, "point": [str(pt.x), str(pt.y)]})
    return out


def ingest_segments(fam: SegmentFamily) -> StringRepresentation:
    """Planarize ``fam`` into a host graph with one connected set per segment.

    Host vertices are the distinct endpoints and crossing points, numbered in
    lexicographic ``(x, y)`` order. Consecutive points along a segment are
    joined by a host edge, and rotations list neighbors counterclockwise.
    """
    bad = general_position_violations(fam)
    if bad:
        raise DegenerateInput(
            "segment family is not in general position: " + ", ".join(v["code"] for v in bad),
            details=bad,
        )
    segs = fam.segments
    on_seg: list[list[tuple[Fraction, RationalPoint]]] = []
    for a, b in segs:
        on_seg.append([
            (Fraction(0), RationalPoint(Fraction(a[0]), Fraction(a[1]))),
            (Fraction(1), RationalPoint(Fraction(b[0]), Fraction(b[1]))),
        ])
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            hit = segment_pair_intersection(segs[i], segs[j])
            if hit is not None:
                on_seg[i].append((_param(hit, *segs[i]), hit))
                on_seg[j].append((_param(hit, *segs[j]), hit))
    points = sorted({pt for row in on_seg for _, pt in row})
    index = {pt: k for k, pt in enumerate(points)}
    nbrs: list[set[int]] = [set() for _ in points]
    sets = []
    for row in on_seg:
        row.sort()
        ids = [index[pt] for _, pt in row]
        for u, v in zip(ids, ids[1:]):
            nbrs[u].add(v)
            nbrs[v].add(u)
        sets.append(sorted(ids))
    edges = sorted((u, v) for u in range(len(points)) for v in nbrs[u] if u < v)
    rotations = []
    for u, pt in enumerate(points):
        around = sorted(nbrs[u])
        order = ccw_order(pt, [points[v] for v in around])
        rotations.append([around[k] for k in order])
    host = HostGraph.build(len(points), edges, rotations)
    return StringRepresentation.build(host, sets)
