"""Half-integral LP optimum for vertex cover (Nemhauser-Trotter partition).

The LP optimum is read off a minimum vertex cover of the bipartite double
cover, which König's theorem gives from a maximum matching.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .graph import SimpleGraph


@dataclass(frozen=True)
class BipartiteGraph:
    """``adj[l]`` lists the right-side neighbors of left vertex ``l`` (sorted)."""

    left_size: int
    right_size: int
    adj: tuple[tuple[int, ...], ...]

    def edges(self) -> list[tuple[int, int]]:
        return [(l, r) for l, row in enumerate(self.adj) for r in row]


@dataclass(frozen=True)
class BipartiteMatching:
    left_size: int
    right_size: int
    matched: tuple[int | None, ...]

    @property
    def size(self) -> int:
        return sum(r is not None for r in self.matched)


@dataclass(frozen=True)
class NTPartition:
    v0: tuple[int, ...]
    v_half: tuple[int, ...]
    v1: tuple[int, ...]
    x2: tuple[int, ...]  # doubled LP value per vertex, in {0, 1, 2}
    matching_size: int

    def value(self, v: int) -> Fraction:
        return Fraction(self.x2[v], 2)

    @property
    def lp_value2(self) -> int:
        """Twice the LP optimum."""
        return sum(self.x2)


def double_cover(g: SimpleGraph) -> BipartiteGraph:
    """Left copy ``v'`` and right copy ``v''`` per vertex; ``uv`` gives ``u'v''`` and ``v'u''``."""
    return BipartiteGraph(g.n, g.n, g.adj)


def max_matching(b: BipartiteGraph) -> BipartiteMatching:
    """Maximum matching by repeated augmenting-path search.

    Left vertices are processed in ascending order and each DFS tries right
    neighbors in ascending order, so the matching is deterministic.
    """
    match_l: list[int | None] = [None] * b.left_size
    match_r: list[int | None] = [None] * b.right_size
    for s in range(b.left_size):
        if not b.adj[s]:
            continue
        seen = [False] * b.right_size
        # iterative DFS over alternating paths; stack holds (left, next edge index)
        stack = [(s, 0)]
        via: dict[int, int] = {}  # right vertex -> left vertex that reached it
        found = None
        while stack and found is None:
            l, i = stack[-1]
            row = b.adj[l]
            if i == len(row):
                stack.pop()
                continue
            stack[-1] = (l, i + 1)
            r = row[i]
            if seen[r]:
                continue
            seen[r] = True
            via[r] = l
            if match_r[r] is None:
                found = r
            else:
                stack.append((match_r[r], 0))
        if found is None:
            continue
        r = found
        while True:
            l = via[r]
            prev = match_l[l]
            match_l[l] = r
            match_r[r] = l
            if l == s:
                break
            r = prev
    return BipartiteMatching(b.left_size, b.right_size, tuple(match_l))


def konig_cover(b: BipartiteGraph, m: BipartiteMatching) -> tuple[set[int], set[int]]:
    """Minimum vertex cover ``(left part, right part)`` from a maximum matching.

    ``Z`` collects everything reachable from unmatched left vertices along
    alternating paths; the cover is ``(L \\ Z) ∪ (R ∩ Z)``.
    """
    match_r: list[int | None] = [None] * b.right_size
    for l, r in enumerate(m.matched):
        if r is not None:
            match_r[r] = l
    z_left = [False] * b.left_size
    z_right = [False] * b.right_size
    queue = deque(l for l in range(b.left_size) if m.matched[l] is None)
    for l in queue:
        z_left[l] = True
    while queue:
        l = queue.popleft()
        for r in b.adj[l]:
            if z_right[r] or m.matched[l] == r:
                continue
            z_right[r] = True
            partner = match_r[r]
            if partner is not None and not z_left[partner]:
                z_left[partner] = True
                queue.append(partner)
    left = {l for l in range(b.left_size) if not z_left[l]}
    right = {r for r in range(b.right_size) if z_right[r]}
    return left, right


def nt_partition(g: SimpleGraph) -> NTPartition:
    """Partition ``V(g)`` into ``(V0, V1/2, V1)`` from an optimal half-integral LP solution.

    Guarantees: no edge inside ``V0`` or between ``V0`` and ``V1/2``; the LP
    value equals half the maximum matching of the double cover; some minimum
    vertex cover ``S`` satisfies ``V1 ⊆ S ⊆ V1 ∪ V1/2``. The stronger
    statement that *every* minimum cover does so is not claimed.
    """
    b = double_cover(g)
    m = max_matching(b)
    left, right = konig_cover(b, m)
    x2 = tuple(int(v in left) + int(v in right) for v in range(g.n))
    return NTPartition(
        v0=tuple(v for v in range(g.n) if x2[v] == 0),
        v_half=tuple(v for v in range(g.n) if x2[v] == 1),
        v1=tuple(v for v in range(g.n) if x2[v] == 2),
        x2=x2,
        matching_size=m.size,
    )
