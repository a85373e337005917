"""Eight-coloring of represented string graphs with no odd cycle of length <= 11.

Each connected component is layered by a BFS from its smallest vertex. Even
layers draw from colors 1-4 and odd layers from 5-8, so it suffices to
4-color every connected component ``X`` of every layer ``L_i``. For that an
auxiliary graph ``H`` is built on ``X`` plus the pieces ("splits") of the
previous-layer sets that touch ``X`` inside the host, and ``X`` is layered
once more by the ``H``-distance ``k`` to a fixed split ``w``. Each ``H[X_k]``
is bipartite under the odd-girth promise, and the color of a vertex is

    base(i) + 2 * (k mod 2) + side,   base = 1 for even i, 5 for odd i.

When some ``H[X_k]`` is not bipartite the input broke the promise and a
:class:`PromiseViolation` carrying an odd cycle of ``G`` is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import InternalError
from .graph import SimpleGraph, bfs_layers, bipartition, connected_components
from .representation import StringRepresentation, intersection_graph, require_valid


@dataclass(frozen=True)
class PromiseViolation:
    """Certificate that the input has a short odd cycle (or is not a string graph).

    ``witness`` is an odd cycle of ``G`` in ``G``'s vertex ids; for a
    non-independent first layer it is a triangle through the root.
    """

    witness: tuple[int, ...]
    reason: str
    layer: int | None = None


@dataclass(frozen=True)
class EightColoring:
    colors: tuple[int, ...]
    layer: tuple[int, ...]
    meta: tuple[tuple[int, int, int], ...]  # (component root, H-distance k, side)
    diagnostics: dict = field(default_factory=dict, compare=False)

    def color_classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, []).append(v)
        return out


@dataclass(frozen=True)
class AuxiliaryH:
    """Auxiliary graph for one layer component.

    H-vertices ``0 .. len(x)-1`` are the X vertices (ascending G ids); the
    rest are splits. ``origin[h]`` is ``("x", g_vertex)`` or
    ``("split", g_vertex, min_host_vertex)``.
    """

    graph: SimpleGraph
    origin: tuple[tuple, ...]
    members: tuple[tuple[int, ...], ...]  # host vertices of each H-vertex
    w: int
    x: tuple[int, ...]
    y: frozenset[int]
    y_prime: frozenset[int]
    split_meets_y_prime: tuple[bool, ...]

    @property
    def x_count(self) -> int:
        return len(self.x)


@dataclass(frozen=True)
class ComponentColoring:
    """Per X-vertex ``(k mod 2, side)`` and the full H-distance ``k``."""

    assignment: dict[int, tuple[int, int]]
    distance: dict[int, int]


def host_components(host_nbrs: Sequence[Sequence[int]], vertices) -> list[list[int]]:
    """Connected components of the host restricted to ``vertices``, by min element."""
    inside = set(vertices)
    seen: set[int] = set()
    comps = []
    for s in sorted(inside):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for u in host_nbrs[v]:
                if u in inside and u not in seen:
                    seen.add(u)
                    comp.append(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def boundary_set(host_nbrs: Sequence[Sequence[int]], y, anchor: int) -> frozenset[int]:
    """Vertices of ``y`` reachable from ``anchor`` through host vertices outside ``y``.

    Equivalent to testing, for each ``v`` in ``y``, whether ``anchor`` and
    ``v`` share a component of the host minus ``y \\ {v}``, but done with one
    search.
    """
    y = set(y)
    if anchor in y:
        return frozenset({anchor})
    seen = {anchor}
    stack = [anchor]
    hit: set[int] = set()
    while stack:
        v = stack.pop()
        for u in host_nbrs[v]:
            if u in y:
                hit.add(u)
            elif u not in seen:
                seen.add(u)
                stack.append(u)
    return frozenset(hit)


def build_auxiliary_h(
    rep: StringRepresentation,
    g: SimpleGraph,
    layer_prev,
    x_comp,
    *,
    root: int | None = None,
    host_nbrs: Sequence[Sequence[int]] | None = None,
) -> AuxiliaryH:
    """Auxiliary graph of the layer component ``x_comp`` against ``layer_prev``.

    ``root`` is the BFS root of the component; the smallest host vertex of
    its set anchors the boundary set ``Y'``, which is recorded for
    diagnostics only. Without ``root`` the boundary set is left empty.
    """
    if host_nbrs is None:
        host_nbrs = rep.host.neighbor_lists()
    prev = set(layer_prev)
    x = tuple(sorted(set(x_comp)))
    attach: set[int] = set()
    for v in x:
        nb = [u for u in g.adj[v] if u in prev]
        if not nb:
            raise InternalError(f"vertex {v} has no neighbor in the previous layer",
                                code="NO_PREVIOUS_NEIGHBOR", details=[v])
        attach.update(nb)
    if not attach:
        raise InternalError("no previous-layer attachment", code="EMPTY_ATTACHMENT")

    y = frozenset(h for v in x for h in rep.sets[v])
    origin: list[tuple] = [("x", v) for v in x]
    members: list[tuple[int, ...]] = [rep.sets[v] for v in x]
    for v in sorted(attach):
        for piece in host_components(host_nbrs, (h for h in rep.sets[v] if h in y)):
            origin.append(("split", v, piece[0]))
            members.append(tuple(piece))

    owners: dict[int, list[int]] = {}
    for hv, mem in enumerate(members):
        for h in mem:
            owners.setdefault(h, []).append(hv)
    rows: list[set[int]] = [set() for _ in members]
    for group in owners.values():
        if len(group) > 1:
            for a in group:
                rows[a].update(group)
    for hv, row in enumerate(rows):
        row.discard(hv)
    graph = SimpleGraph(len(members), rows)

    if root is not None:
        y_prime = boundary_set(host_nbrs, y, min(rep.sets[root]))
    else:
        y_prime = frozenset()
    meets = tuple(bool(y_prime.intersection(members[hv])) for hv in range(len(x), len(members)))
    # splits were appended in (origin vertex, min host vertex) order
    w = len(x)
    return AuxiliaryH(graph, tuple(origin), tuple(members), w, x, y, y_prime, meets)


def color_layer_component(h: AuxiliaryH) -> ComponentColoring | PromiseViolation:
    """Layer X by H-distance from ``w`` and two-color each ``H[X_k]``."""
    bfs = bfs_layers(h.graph, h.w)
    by_k: dict[int, list[int]] = {}
    for hv in range(h.x_count):
        k = bfs.dist[hv]
        if k is None:
            raise InternalError(f"X vertex {h.x[hv]} unreachable from w in H",
                                code="UNREACHABLE_X_VERTEX", details=[h.x[hv]])
        by_k.setdefault(k, []).append(hv)
    assignment: dict[int, tuple[int, int]] = {}
    distance: dict[int, int] = {}
    for k in sorted(by_k):
        sides, odd = bipartition(h.graph, by_k[k])
        if odd is not None:
            return PromiseViolation(tuple(h.x[hv] for hv in odd), "odd_cycle_in_layer_component")
        for hv in by_k[k]:
            assignment[h.x[hv]] = (k % 2, sides[hv])
            distance[h.x[hv]] = k
    return ComponentColoring(assignment, distance)


def _layer_components(g: SimpleGraph, layer: Sequence[int]) -> list[list[int]]:
    sub, old = g.induced_subgraph(layer)
    return [[old[i] for i in comp] for comp in connected_components(sub)]


def eight_coloring(rep: StringRepresentation) -> EightColoring | PromiseViolation:
    """Proper coloring with colors 1-8, or a witness that the promise fails."""
    require_valid(rep)
    g = intersection_graph(rep, check=False)
    host_nbrs = rep.host.neighbor_lists()
    n = g.n
    colors = [0] * n
    layer_of = [0] * n
    meta: list[tuple[int, int, int]] = [(0, 0, 0)] * n
    splits_off_boundary = 0
    aux_sizes = []

    for comp in connected_components(g):
        u0 = comp[0]
        bfs = bfs_layers(g, u0)
        layers = bfs.layers
        for v in comp:
            layer_of[v] = bfs.dist[v]
        colors[u0] = 1
        meta[u0] = (u0, 0, 0)
        if len(layers) > 1:
            first = layers[1]
            for a in first:
                for b in g.adj[a]:
                    if b > a and bfs.dist[b] == 1:
                        return PromiseViolation((u0, a, b), "first_layer_not_independent", 1)
            for a in first:
                colors[a] = 5
                meta[a] = (u0, 0, 0)
        for i in range(2, len(layers)):
            base = 1 if i % 2 == 0 else 5
            for x_comp in _layer_components(g, layers[i]):
                h = build_auxiliary_h(rep, g, layers[i - 1], x_comp, root=u0, host_nbrs=host_nbrs)
                aux_sizes.append(h.graph.n)
                splits_off_boundary += sum(not m for m in h.split_meets_y_prime)
                res = color_layer_component(h)
                if isinstance(res, PromiseViolation):
                    return PromiseViolation(res.witness, res.reason, i)
                for v, (kpar, side) in res.assignment.items():
                    colors[v] = base + 2 * kpar + side
                    meta[v] = (u0, res.distance[v], side)

    for u, v in g.edges():
        if abs(layer_of[u] - layer_of[v]) > 1:
            raise InternalError("BFS layers are not separated", code="LAYER_SEPARATION")

    diagnostics = {
        "aux_graphs": len(aux_sizes),
        "max_aux_size": max(aux_sizes, default=0),
        "splits_missing_boundary": splits_off_boundary,
    }
    return EightColoring(tuple(colors), tuple(layer_of), tuple(meta), diagnostics)


def check_coloring(g: SimpleGraph, coloring: EightColoring) -> list[str]:
    """Problems with ``coloring`` on ``g``: range, properness, palette discipline."""
    problems = []
    for v, c in enumerate(coloring.colors):
        if not 1 <= c <= 8:
            problems.append(f"vertex {v} has color {c}")
        elif (c <= 4) != (coloring.layer[v] % 2 == 0):
            problems.append(f"vertex {v} in layer {coloring.layer[v]} has color {c}")
    for u, v in g.edges():
        if coloring.colors[u] == coloring.colors[v]:
            problems.append(f"edge {u}-{v} is monochromatic")
    return problems
