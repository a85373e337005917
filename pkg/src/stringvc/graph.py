"""Undirected simple graphs on dense integer ids and the basic traversals.

Every traversal visits neighbors in ascending id order, so all outputs are
deterministic functions of the input.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidVertex


class SimpleGraph:
    """Undirected simple graph on vertices ``0 .. n-1``.

    Adjacency lists are sorted tuples; instances are treated as immutable.
    """

    __slots__ = ("n", "adj", "_adjsets", "_m")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        if n < 0 or len(adj) != n:
            raise ValueError("adjacency must have exactly n rows")
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(row)) for row in adj)
        self._adjsets: tuple[frozenset[int], ...] | None = None
        m2 = 0
        for v, row in enumerate(self.adj):
            for u in row:
                if u == v or not 0 <= u < n:
                    raise ValueError(f"bad neighbor {u} of {v}")
            if len(set(row)) != len(row):
                raise ValueError(f"duplicate neighbor of {v}")
            m2 += len(row)
        self._m = m2 // 2
        for v, row in enumerate(self.adj):
            for u in row:
                if v not in self.adjset(u):
                    raise ValueError(f"asymmetric adjacency {v}->{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertex(f"edge ({u}, {v}) out of range for n={n}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, [() for _ in range(n)])

    @property
    def m(self) -> int:
        return self._m

    def adjset(self, v: int) -> frozenset[int]:
        if self._adjsets is None:
            self._adjsets = tuple(frozenset(row) for row in self.adj)
        return self._adjsets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjset(u)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["SimpleGraph", list[int]]:
        """Return ``(sub, old_ids)`` where vertex ``i`` of ``sub`` is ``old_ids[i]``."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        rows = [[index[u] for u in self.adj[v] if u in index] for v in old]
        return SimpleGraph(len(old), rows), old

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimpleGraph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class BfsLayers:
    """Result of a BFS. ``dist``/``parent`` entries are ``None`` when unreachable."""

    root: int
    dist: tuple[int | None, ...]
    parent: tuple[int | None, ...]
    layers: tuple[tuple[int, ...], ...]


def bfs_layers(g: SimpleGraph, root: int) -> BfsLayers:
    if not 0 <= root < g.n:
        raise InvalidVertex(f"root {root} out of range for n={g.n}")
    dist: list[int | None] = [None] * g.n
    parent: list[int | None] = [None] * g.n
    dist[root] = 0
    layers: list[list[int]] = [[root]]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        for u in g.adj[v]:
            if dist[u] is None:
                dist[u] = d
                parent[u] = v
                if d == len(layers):
                    layers.append([])
                layers[d].append(u)
                queue.append(u)
    return BfsLayers(root, tuple(dist), tuple(parent), tuple(tuple(sorted(l)) for l in layers))


def connected_components(g: SimpleGraph) -> list[list[int]]:
    """Components ordered by minimum vertex, each sorted ascending."""
    seen = [False] * g.n
    out: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        comp.sort()
        out.append(comp)
    return out


def tree_cycle(parent: Sequence[int | None], dist: Sequence[int | None], x: int, y: int) -> list[int]:
    """Close the edge ``xy`` through the BFS tree at the lowest common ancestor.

    ``x`` and ``y`` must be at the same depth, so the result is a simple cycle
    of odd length ``2 * (depth - lca_depth) + 1``. The cycle starts at the
    ancestor and goes down to ``x``, across to ``y``, and back up.
    """
    if dist[x] != dist[y]:
        raise ValueError("endpoints must lie on the same BFS layer")
    left, right = [x], [y]
    a, b = x, y
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    # left and right both end at the common ancestor
    return list(reversed(left)) + right[:-1]


def bipartition(
    g: SimpleGraph, vertices: Iterable[int]
) -> tuple[dict[int, int] | None, list[int] | None]:
    """Two-color the subgraph induced by ``vertices``.

    Returns ``(sides, None)`` when the induced subgraph is bipartite, where the
    lowest id of every connected part gets side 0. Otherwise returns
    ``(None, cycle)`` with a simple odd cycle of the induced subgraph.
    """
    members = sorted(set(vertices))
    inside = set(members)
    side: dict[int, int] = {}
    dist: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for s in members:
        if s in side:
            continue
        side[s] = 0
        dist[s] = 0
        parent[s] = None
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if u not in inside:
                    continue
                if u not in side:
                    side[u] = 1 - side[v]
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif side[u] == side[v]:
                    return None, tree_cycle(parent, dist, v, u)
    return side, None
