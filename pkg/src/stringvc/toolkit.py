"""Seeded instance generators and an exact vertex cover oracle.

Randomness comes from :class:`SplitMix64` (Steele, Lea and Flood's 64-bit
splittable generator), so a ``(seed, parameters)`` pair pins an instance
down in any language that implements the same generator and sampling rules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import GeneratorError
from .geometry import OVERLAP, SegmentFamily, ccw_order, segment_pair_intersection
from .graph import SimpleGraph
from .odd_cycles import odd_girth
from .representation import HostGraph, StringRepresentation, intersection_graph

MASK64 = (1 << 64) - 1

SEGMENTS = "segments"
GRID_SUBTREES = "grid_subtrees"
GRID_RECTILINEAR = "grid_rectilinear"


class SplitMix64:
    """SplitMix64, version 1 of the generator contract of this package."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` by rejection (no modulo bias)."""
        if n <= 0:
            raise ValueError("n must be positive")
        threshold = (1 << 64) % n
        while True:
            r = self.next()
            if r >= threshold:
                return r % n

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def chance(self, num: int, den: int) -> bool:
        return self.below(den) < num

    def split(self) -> "SplitMix64":
        return SplitMix64(self.next())


@dataclass(frozen=True)
class GeneratorConfig:
    """Generator parameters.

    For ``SEGMENTS``: ``count`` segments with endpoints in ``[0, box]^2`` and
    (optionally) each coordinate delta at most ``max_length``.
    For ``GRID_SUBTREES``: ``count`` connected sets of ``size_range`` host
    vertices on a ``width`` x ``height`` grid.
    For ``GRID_RECTILINEAR``: ``count`` horizontal or vertical grid paths,
    no two parallel ones sharing a vertex (the graph is bipartite).
    """

    seed: int
    kind: str = SEGMENTS
    count: int = 0
    box: int = 100
    max_length: int | None = None
    width: int = 1
    height: int = 1
    size_range: tuple[int, int] = (1, 1)
    min_odd_girth: int | None = None
    retries: int = 200

    def __post_init__(self):
        if self.count < 0 or self.box <= 0 or self.width <= 0 or self.height <= 0:
            raise ValueError("generator parameters must be positive")
        lo, hi = self.size_range
        if not 1 <= lo <= hi:
            raise ValueError("size_range must satisfy 1 <= lo <= hi")
        if self.min_odd_girth is not None and self.min_odd_girth % 2 == 0:
            raise ValueError("min_odd_girth must be odd")

    def to_json(self) -> dict:
        return {
            "seed": self.seed, "kind": self.kind, "count": self.count, "box": self.box,
            "max_length": self.max_length, "width": self.width, "height": self.height,
            "size_range": list(self.size_range), "min_odd_girth": self.min_odd_girth,
            "retries": self.retries,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "GeneratorConfig":
        doc = dict(doc)
        if "size_range" in doc:
            doc["size_range"] = tuple(doc["size_range"])
        return cls(**doc)


# ---------------------------------------------------------------- exact oracle


def _greedy_matching_bound(adj: dict[int, set[int]]) -> int:
    used: set[int] = set()
    size = 0
    for v in sorted(adj):
        if v in used:
            continue
        for u in sorted(adj[v]):
            if u not in used:
                used.add(u)
                used.add(v)
                size += 1
                break
    return size


def exact_vertex_cover(g: SimpleGraph) -> tuple[int, list[int]]:
    """Minimum vertex cover by branch and bound.

    Branches on a maximum-degree vertex (take it, or take all of its
    neighbors), forces the neighbor of every degree-1 vertex, and prunes with
    a greedy matching lower bound. Meant for graphs up to about 40 vertices.
    """
    best: list[int] = [v for v in range(g.n) if g.adj[v]]

    def remove(adj, vs):
        for v in vs:
            for u in adj.pop(v, ()):
                if u in adj:
                    adj[u].discard(v)

    def solve(adj: dict[int, set[int]], chosen: list[int]) -> None:
        nonlocal best
        adj = {v: set(nb) for v, nb in adj.items()}
        chosen = list(chosen)
        while True:
            for v in [v for v, nb in adj.items() if not nb]:
                del adj[v]
            leaf = next((v for v in sorted(adj) if len(adj[v]) == 1), None)
            if leaf is None:
                break
            (u,) = adj[leaf]
            chosen.append(u)
            remove(adj, [u])
        if not adj:
            if len(chosen) < len(best):
                best = chosen
            return
        if len(chosen) + _greedy_matching_bound(adj) >= len(best):
            return
        v = max(sorted(adj), key=lambda x: len(adj[x]))
        nbrs = sorted(adj[v])
        with_v = {x: set(nb) for x, nb in adj.items()}
        remove(with_v, [v])
        solve(with_v, chosen + [v])
        if len(nbrs) > 1:
            without_v = {x: set(nb) for x, nb in adj.items()}
            remove(without_v, nbrs)
            solve(without_v, chosen + nbrs)

    solve({v: set(g.adj[v]) for v in range(g.n) if g.adj[v]}, [])
    return len(best), sorted(best)


# ---------------------------------------------------------------- hosts


def grid_host(width: int, height: int) -> HostGraph:
    """``width`` x ``height`` grid; vertex ``(c, r)`` has id ``r * width + c``.

    Rotations list neighbors counterclockwise: right, up, left, down.
    """
    def vid(c, r):
        return r * width + c

    edges = []
    rotations = []
    for r in range(height):
        for c in range(width):
            if c + 1 < width:
                edges.append((vid(c, r), vid(c + 1, r)))
            if r + 1 < height:
                edges.append((vid(c, r), vid(c, r + 1)))
            rot = []
            for dc, dr in ((1, 0), (0, 1), (-1, 0), (0, -1)):
                cc, rr = c + dc, r + dr
                if 0 <= cc < width and 0 <= rr < height:
                    rot.append(vid(cc, rr))
            rotations.append(rot)
    return HostGraph.build(width * height, sorted(edges), rotations)


def embedded_graph_representation(n: int, rotations: Sequence[Sequence[int]]) -> StringRepresentation:
    """Represent an embedded planar graph as the intersection graph of stars.

    The host is the graph with every edge subdivided once; vertex ``v`` gets
    the star made of ``v`` and the subdivision vertices of its edges, so two
    stars meet exactly when the original vertices are adjacent.
    """
    edge_id: dict[tuple[int, int], int] = {}
    for u in range(n):
        for v in rotations[u]:
            key = (min(u, v), max(u, v))
            if key not in edge_id:
                edge_id[key] = n + len(edge_id)
    host_edges = []
    host_rot: list[list[int]] = [[] for _ in range(n + len(edge_id))]
    for (u, v), m in sorted(edge_id.items()):
        host_edges += [(u, m), (v, m)]
        host_rot[m] = [u, v]
    for u in range(n):
        host_rot[u] = [edge_id[(min(u, v), max(u, v))] for v in rotations[u]]
    sets = [sorted([u] + host_rot[u]) for u in range(n)]
    return StringRepresentation.build(HostGraph.build(len(host_rot), sorted(host_edges), host_rot), sets)


def subdivide_embedded(
    n: int, rotations: Sequence[Sequence[int]], lengths: dict[tuple[int, int], int]
) -> tuple[int, list[list[int]]]:
    """Replace each edge ``uv`` (``u < v``) by a path with ``lengths[(u, v)]`` edges."""
    rot = [list(r) for r in rotations]
    total = n
    for (u, v), k in sorted(lengths.items()):
        if k < 1:
            raise ValueError("path lengths must be positive")
        if k == 1:
            continue
        inner = list(range(total, total + k - 1))
        total += k - 1
        rot[u][rot[u].index(v)] = inner[0]
        rot[v][rot[v].index(u)] = inner[-1]
        chain = [u] + inner + [v]
        for a, b, c in zip(chain, chain[1:], chain[2:]):
            rot.append([a, c])
    return total, rot


# ---------------------------------------------------------------- generators


def gen_segments(cfg: GeneratorConfig) -> SegmentFamily:
    """Random general-position segments, added one at a time.

    A candidate is redrawn when it is degenerate or breaks general position
    against the segments already accepted; ``cfg.retries`` failed draws for
    one segment raise ``BOX_TOO_SMALL``.
    """
    rng = SplitMix64(cfg.seed)
    segs: list[tuple[tuple[int, int], tuple[int, int]]] = []
    crossings: set = set()
    for _ in range(cfg.count):
        for _attempt in range(cfg.retries):
            a = (rng.between(0, cfg.box), rng.between(0, cfg.box))
            if cfg.max_length is None:
                b = (rng.between(0, cfg.box), rng.between(0, cfg.box))
            else:
                d = cfg.max_length
                b = (min(cfg.box, max(0, a[0] + rng.between(-d, d))),
                     min(cfg.box, max(0, a[1] + rng.between(-d, d))))
            if a == b:
                continue
            new_points = []
            ok = True
            for t in segs:
                hit = segment_pair_intersection((a, b), t)
                if hit is None:
                    continue
                if hit is OVERLAP or hit in (a, b) or hit in t or hit in crossings or hit in new_points:
                    ok = False
                    break
                new_points.append(hit)
            if ok:
                segs.append((a, b))
                crossings.update(new_points)
                break
        else:
            raise GeneratorError("could not place a segment in general position",
                                 code="BOX_TOO_SMALL", details=cfg.to_json())
    return SegmentFamily(tuple(segs))


def _grow_set(rng: SplitMix64, nbrs: Sequence[Sequence[int]], start: int, size: int) -> list[int]:
    members = [start]
    inside = {start}
    stalls = 0
    while len(members) < size and stalls < 50 * size:
        v = members[rng.below(len(members))]
        u = nbrs[v][rng.below(len(nbrs[v]))] if nbrs[v] else v
        if u in inside:
            stalls += 1
            continue
        inside.add(u)
        members.append(u)
    return sorted(members)


def _filtered(cfg: GeneratorConfig, draw) -> StringRepresentation:
    rng = SplitMix64(cfg.seed)
    for _ in range(max(1, cfg.retries)):
        rep = draw(rng.split())
        if cfg.min_odd_girth is None or odd_girth(intersection_graph(rep, check=False)) >= cfg.min_odd_girth:
            return rep
    raise GeneratorError("no instance passed the odd girth filter",
                         code="FILTER_EXHAUSTED", details=cfg.to_json())


def gen_grid_subtrees(cfg: GeneratorConfig) -> StringRepresentation:
    """Connected sets grown by random extension on a grid host."""
    host = grid_host(cfg.width, cfg.height)
    nbrs = host.neighbor_lists()
    lo, hi = cfg.size_range
    hi = min(hi, host.n)
    lo = min(lo, hi)

    def draw(rng: SplitMix64) -> StringRepresentation:
        sets = []
        for _ in range(cfg.count):
            size = rng.between(lo, hi)
            sets.append(_grow_set(rng, nbrs, rng.below(host.n), size))
        return StringRepresentation.build(host, sets)

    return _filtered(cfg, draw)


def gen_grid_rectilinear(cfg: GeneratorConfig) -> StringRepresentation:
    """Horizontal and vertical grid paths; parallel paths never touch.

    Only horizontal-vertical pairs can intersect, so the intersection graph
    is bipartite. Paths have between ``size_range`` host vertices.
    """
    host = grid_host(cfg.width, cfg.height)
    lo, hi = cfg.size_range
    w, h = cfg.width, cfg.height

    def draw(rng: SplitMix64) -> StringRepresentation:
        used = [set(), set()]  # host vertices taken by horizontal / vertical paths
        sets = []
        attempts = 0
        while len(sets) < cfg.count:
            attempts += 1
            if attempts > 50 * (cfg.count + 1):
                raise GeneratorError("grid too crowded for rectilinear paths",
                                     code="BOX_TOO_SMALL", details=cfg.to_json())
            vertical = rng.below(2)
            span = h if vertical else w
            length = min(rng.between(lo, hi), span)
            start = rng.between(0, span - length)
            line = rng.below(w if vertical else h)
            if vertical:
                path = [r * w + line for r in range(start, start + length)]
            else:
                path = [line * w + c for c in range(start, start + length)]
            if used[vertical].intersection(path):
                continue
            used[vertical].update(path)
            sets.append(sorted(path))
        return StringRepresentation.build(host, sets)

    return _filtered(cfg, draw)


def gen_subdivided_planar(
    seed: int, width: int, height: int, diag_chance: tuple[int, int] = (1, 2),
    lengths: tuple[int, int] = (5, 6), min_odd_girth: int = 13, retries: int = 200,
) -> StringRepresentation:
    """A grid with random cell diagonals, every edge subdivided, as a string graph.

    Each edge of the planar graph becomes a path whose length is drawn from
    ``lengths``; instances whose odd girth is below ``min_odd_girth`` are
    redrawn. These graphs are usually far from bipartite, which exercises
    the auxiliary-graph step of the coloring.
    """
    rng = SplitMix64(seed)
    for _ in range(retries):
        r = rng.split()
        n = width * height
        coords = [(c, rr) for rr in range(height) for c in range(width)]
        adj: list[set[int]] = [set() for _ in range(n)]
        for rr in range(height):
            for c in range(width):
                v = rr * width + c
                if c + 1 < width:
                    adj[v].add(v + 1); adj[v + 1].add(v)
                if rr + 1 < height:
                    adj[v].add(v + width); adj[v + width].add(v)
                if c + 1 < width and rr + 1 < height and r.chance(*diag_chance):
                    if r.below(2):
                        a, b = v, v + width + 1
                    else:
                        a, b = v + 1, v + width
                    adj[a].add(b); adj[b].add(a)
        rotations = []
        for v in range(n):
            around = sorted(adj[v])
            order = ccw_order(coords[v], [coords[u] for u in around])
            rotations.append([around[k] for k in order])
        lens = {(u, v): r.between(*lengths) for u in range(n) for v in adj[u] if u < v}
        total, rot = subdivide_embedded(n, rotations, lens)
        rep = embedded_graph_representation(total, rot)
        if odd_girth(intersection_graph(rep, check=False)) >= min_odd_girth:
            return rep
    raise GeneratorError("no instance passed the odd girth filter", code="FILTER_EXHAUSTED")


def cycle_segments(n: int, radius: int = 1_000_000) -> SegmentFamily:
    """``n`` segments whose intersection graph is the cycle ``C_n`` (``n >= 3``).

    Segment ``i`` runs along the side from corner ``i`` to corner ``i + 1`` of
    a lattice approximation of a regular polygon and overshoots both corners
    by a tenth of the side, so it crosses exactly its two cyclic neighbors.
    Rounding to the lattice keeps the polygon strictly convex as long as
    ``radius`` is large compared to ``n ** 2``.
    """
    if n < 3:
        raise ValueError("a cycle needs at least 3 segments")
    corners = [
        (round(radius * math.cos(2 * math.pi * i / n)), round(radius * math.sin(2 * math.pi * i / n)))
        for i in range(n)
    ]
    segs = []
    for i in range(n):
        p, q = corners[i], corners[(i + 1) % n]
        dx, dy = q[0] - p[0], q[1] - p[1]
        segs.append(((10 * p[0] - dx, 10 * p[1] - dy), (10 * q[0] + dx, 10 * q[1] + dy)))
    return SegmentFamily(tuple(segs))
