"""Short odd cycles: bounded search, exact odd girth, and the stripping loop."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidBound
from .graph import SimpleGraph, tree_cycle

OddCycle = tuple[int, ...]

STRIP_BOUND = 11


def is_odd_cycle(g: SimpleGraph, cycle: Sequence[int], max_len: int | None = None) -> bool:
    """Simple, odd, length >= 3, consecutive vertices adjacent (cyclically)."""
    k = len(cycle)
    if k < 3 or k % 2 == 0 or len(set(cycle)) != k:
        return False
    if max_len is not None and k > max_len:
        return False
    if any(not 0 <= v < g.n for v in cycle):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k))


def _scan_root(adj, alive, root: int, depth: int):
    """BFS from ``root`` up to ``depth``; first same-layer edge closes a cycle."""
    dist = {root: 0}
    parent: dict[int, int | None] = {root: None}
    layers = [[root]]
    for d in range(depth):
        nxt = []
        for v in layers[d]:
            for u in adj[v]:
                if alive[u] and u not in dist:
                    dist[u] = d + 1
                    parent[u] = v
                    nxt.append(u)
        if not nxt:
            break
        layers.append(nxt)
    for d, layer in enumerate(layers):
        for x in sorted(layer):
            for y in adj[x]:
                if y > x and alive[y] and dist.get(y) == d:
                    return tuple(tree_cycle(parent, dist, x, y))
    return None


def _check_bound(max_len: int) -> None:
    if max_len < 3 or max_len % 2 == 0:
        raise InvalidBound(f"max_len must be odd and >= 3, got {max_len}")


def find_odd_cycle_bounded(g: SimpleGraph, max_len: int) -> OddCycle | None:
    """A simple odd cycle of length at most ``max_len``, or ``None``.

    Roots are tried in ascending order; each gets a BFS of radius
    ``(max_len - 1) // 2``. An edge inside one BFS layer is closed through
    the lowest common ancestor of its endpoints, which yields a simple odd
    cycle. If any odd cycle of length ``<= max_len`` exists, the BFS from
    one of its vertices finds such an edge.
    """
    _check_bound(max_len)
    alive = [True] * g.n
    depth = (max_len - 1) // 2
    for root in range(g.n):
        cyc = _scan_root(g.adj, alive, root, depth)
        if cyc is not None:
            return cyc
    return None


def odd_girth(g: SimpleGraph) -> float | int:
    """Length of a shortest odd cycle; ``math.inf`` for bipartite graphs."""
    best = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for u in g.adj[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    queue.append(u)
                elif dist[u] == dist[v]:
                    best = min(best, 2 * dist[v] + 1)
    return best


@dataclass(frozen=True)
class StripResult:
    removed: tuple[int, ...]
    cycles: tuple[OddCycle, ...]
    remaining: tuple[int, ...]
    g_prime: SimpleGraph


def strip_short_odd_cycles(g: SimpleGraph, max_len: int = STRIP_BOUND) -> StripResult:
    """Delete odd cycles of length ``<= max_len`` one at a time until none is left.

    ``g_prime`` is the subgraph induced by the survivors; its vertex ``i`` is
    ``remaining[i]`` of ``g``. Cycles are reported in ``g``'s ids.
    """
    _check_bound(max_len)
    alive = [True] * g.n
    depth = (max_len - 1) // 2
    cycles: list[OddCycle] = []
    # deleting vertices never creates a cycle, so a root that failed stays failed
    root = 0
    while root < g.n:
        if alive[root]:
            cyc = _scan_root(g.adj, alive, root, depth)
            if cyc is not None:
                cycles.append(cyc)
                for v in cyc:
                    alive[v] = False
                continue
        root += 1
    removed = tuple(sorted(v for c in cycles for v in c))
    g_prime, remaining = g.induced_subgraph(v for v in range(g.n) if alive[v])
    return StripResult(removed, tuple(cycles), tuple(remaining), g_prime)
