"""Combinatorial string representations.

A representation is an embedded planar host graph together with one
non-empty connected set of host vertices per represented vertex. Two
represented vertices are adjacent when their sets share a host vertex.

Planarity is certified, not searched for: the host carries a rotation system
(cyclic neighbor order at every vertex) and :func:`validate` traces its faces
and checks ``V - E + F = 2`` on every connected component.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidIndex, InvalidRepresentation
from .graph import SimpleGraph


@dataclass(frozen=True)
class HostGraph:
    n: int
    edges: tuple[tuple[int, int], ...]
    rotations: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, n: int, edges: Iterable[Sequence[int]], rotations: Iterable[Sequence[int]]) -> "HostGraph":
        return cls(
            n,
            tuple((int(u), int(v)) for u, v in edges),
            tuple(tuple(int(x) for x in r) for r in rotations),
        )

    def neighbor_lists(self) -> list[list[int]]:
        """Sorted neighbor lists. Assumes the edge list is in range."""
        rows: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            rows[u].add(v)
            rows[v].add(u)
        return [sorted(r) for r in rows]

    def as_graph(self) -> SimpleGraph:
        return SimpleGraph(self.n, self.neighbor_lists())


@dataclass(frozen=True)
class StringRepresentation:
    host: HostGraph
    sets: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    @classmethod
    def build(
        cls,
        host: HostGraph,
        sets: Iterable[Iterable[int]],
        labels: Iterable[str] | None = None,
    ) -> "StringRepresentation":
        return cls(
            host,
            tuple(tuple(int(x) for x in s) for s in sets),
            None if labels is None else tuple(str(l) for l in labels),
        )

    def __len__(self) -> int:
        return len(self.sets)


@dataclass
class ValidationReport:
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> list[str]:
        return [v["code"] for v in self.violations]

    def add(self, code: str, **info) -> None:
        self.violations.append({"code": code, **info})


def trace_faces(n: int, rotations: Sequence[Sequence[int]]) -> list[list[tuple[int, int]]]:
    """Face boundaries of a rotation system, as lists of darts ``(u, v)``.

    The dart following ``(u, v)`` is ``(v, w)`` where ``w`` comes right after
    ``u`` in the rotation at ``v``. Every dart lies on exactly one face.
    Isolated vertices contribute no darts (and no faces here).
    """
    pos = [{u: i for i, u in enumerate(rot)} for rot in rotations]
    seen: set[tuple[int, int]] = set()
    faces: list[list[tuple[int, int]]] = []
    for u in range(n):
        for v in rotations[u]:
            if (u, v) in seen:
                continue
            face = []
            dart = (u, v)
            while dart not in seen:
                seen.add(dart)
                face.append(dart)
                a, b = dart
                rot = rotations[b]
                dart = (b, rot[(pos[b][a] + 1) % len(rot)])
            faces.append(face)
    return faces


def _check_host(host: HostGraph, report: ValidationReport) -> bool:
    """Structural checks on the host. Returns False if face tracing is unsafe."""
    n = host.n
    sound = True
    if n < 0:
        report.add("MALFORMED_HOST", reason="negative vertex count")
        return False
    seen_edges: set[tuple[int, int]] = set()
    for u, v in host.edges:
        if not (0 <= u < n and 0 <= v < n):
            report.add("OUT_OF_RANGE", where="host edge", edge=[u, v])
            sound = False
        elif u == v:
            report.add("MALFORMED_HOST", reason="self-loop", edge=[u, v])
            sound = False
        else:
            key = (min(u, v), max(u, v))
            if key in seen_edges:
                report.add("MALFORMED_HOST", reason="duplicate edge", edge=list(key))
                sound = False
            seen_edges.add(key)
    if len(host.rotations) != n:
        report.add("MALFORMED_ROTATION", reason="need one rotation per host vertex")
        return False
    if not sound:
        return False
    nbrs = host.neighbor_lists()
    for v, rot in enumerate(host.rotations):
        if len(rot) != len(set(rot)) or sorted(rot) != nbrs[v]:
            report.add("MALFORMED_ROTATION", vertex=v, rotation=list(rot), neighbors=nbrs[v])
            sound = False
    return sound


def euler_check(host: HostGraph) -> list[dict]:
    """Per-component Euler characteristic from face tracing.

    Returns one entry per component with ``V``, ``E``, ``F`` and whether
    ``V - E + F == 2``. Requires a well-formed rotation system.
    """
    g = host.as_graph()
    comp_of = [-1] * host.n
    comps: list[list[int]] = []
    for s in range(host.n):
        if comp_of[s] >= 0:
            continue
        comp_of[s] = len(comps)
        members = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if comp_of[u] < 0:
                    comp_of[u] = len(comps)
                    members.append(u)
                    stack.append(u)
        comps.append(members)
    faces_per = [0] * len(comps)
    darts_per = [0] * len(comps)
    for face in trace_faces(host.n, host.rotations):
        c = comp_of[face[0][0]]
        faces_per[c] += 1
        darts_per[c] += len(face)
    out = []
    for c, members in enumerate(comps):
        e = darts_per[c] // 2
        f = faces_per[c] if e else 1  # an isolated vertex has one face
        v = len(members)
        out.append({"component": min(members), "V": v, "E": e, "F": f, "planar": v - e + f == 2})
    return out


def _connected_in(nbrs: Sequence[Sequence[int]], members: Sequence[int]) -> bool:
    inside = set(members)
    start = members[0]
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in nbrs[v]:
            if u in inside and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(inside)


def validate(rep: StringRepresentation) -> ValidationReport:
    """Collect every violation of the representation contract."""
    report = ValidationReport()
    host = rep.host
    host_sound = _check_host(host, report)
    if host_sound:
        for comp in euler_check(host):
            if not comp["planar"]:
                report.add("EULER_CHECK_FAILED", component=comp["component"],
                           V=comp["V"], E=comp["E"], F=comp["F"])
    if rep.labels is not None and len(rep.labels) != len(rep.sets):
        report.add("MALFORMED_LABELS", expected=len(rep.sets), got=len(rep.labels))
    nbrs = host.neighbor_lists() if host_sound else None
    for i, s in enumerate(rep.sets):
        if not s:
            report.add("EMPTY_SET", set=i)
            continue
        bad = [x for x in s if not 0 <= x < host.n]
        if bad:
            report.add("OUT_OF_RANGE", where="set", set=i, ids=bad)
            continue
        if any(a >= b for a, b in zip(s, s[1:])):
            report.add("MALFORMED_SET", set=i, reason="members must be sorted and distinct")
            continue
        if nbrs is not None and not _connected_in(nbrs, s):
            report.add("DISCONNECTED_SET", set=i)
    return report


def require_valid(rep: StringRepresentation) -> None:
    report = validate(rep)
    if not report.ok:
        raise InvalidRepresentation(
            "invalid representation: " + ", ".join(report.codes()), details=report.violations
        )


def intersection_graph(rep: StringRepresentation, *, check: bool = True) -> SimpleGraph:
    """Graph on the sets; ``i ~ j`` iff sets ``i`` and ``j`` share a host vertex."""
    if check:
        require_valid(rep)
    owners: list[list[int]] = [[] for _ in range(rep.host.n)]
    for i, s in enumerate(rep.sets):
        for x in s:
            owners[x].append(i)
    rows: list[set[int]] = [set() for _ in rep.sets]
    for group in owners:
        if len(group) > 1:
            for a in group:
                rows[a].update(group)
    for i, row in enumerate(rows):
        row.discard(i)
    return SimpleGraph(len(rep.sets), rows)


def restrict_sets(rep: StringRepresentation, which: Iterable[int]) -> StringRepresentation:
    """Keep only the sets listed in ``which`` (in that order) on the same host.

    Labels of the result record where each kept set came from: the original
    label if there was one, otherwise the original index.
    """
    which = [int(i) for i in which]
    k = len(rep.sets)
    bad = [i for i in which if not 0 <= i < k]
    if bad:
        raise InvalidIndex(f"set indices out of range: {bad}", details=bad)
    if which == list(range(k)):
        return rep
    if rep.labels is not None:
        labels = tuple(rep.labels[i] for i in which)
    else:
        labels = tuple(str(i) for i in which)
    return StringRepresentation(rep.host, tuple(rep.sets[i] for i in which), labels)
