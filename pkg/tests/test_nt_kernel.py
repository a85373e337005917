import itertools
import random

from hypothesis import given, settings

from oracles import brute_min_covers, brute_vc, cycle_graph, is_cover, random_graph
from strategies import graphs
from stringvc.graph import SimpleGraph
from stringvc.nt_kernel import double_cover, konig_cover, max_matching, nt_partition


def cover_graph_as_simple(g: SimpleGraph) -> SimpleGraph:
    """Double cover as an ordinary graph: left copy v -> v, right copy v -> n + v."""
    b = double_cover(g)
    return SimpleGraph.from_edges(2 * g.n, [(l, g.n + r) for l, r in b.edges()])


STAR = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


class TestDoubleCover:
    def test_single_edge(self):
        h = cover_graph_as_simple(SimpleGraph.from_edges(2, [(0, 1)]))
        assert h.edges() == [(0, 3), (1, 2)]

    def test_c5_gives_c10(self):
        h = cover_graph_as_simple(cycle_graph(5))
        assert h.n == 10 and h.m == 10
        assert all(len(row) == 2 for row in h.adj)
        seen, v, prev = {0}, 0, None
        while True:  # walk around: one cycle through all 10 vertices
            nxt = next(u for u in h.adj[v] if u != prev)
            if nxt == 0:
                break
            seen.add(nxt)
            prev, v = v, nxt
        assert len(seen) == 10

    def test_edgeless(self):
        assert double_cover(SimpleGraph.empty(3)).edges() == []


class TestMatching:
    def test_c10(self):
        assert max_matching(double_cover(cycle_graph(5))).size == 5

    def test_star(self):
        assert max_matching(double_cover(STAR)).size == 2  # star as bipartite: each copy side gets 1
        from stringvc.nt_kernel import BipartiteGraph

        star_b = BipartiteGraph(1, 3, ((0, 1, 2),))
        assert max_matching(star_b).size == 1

    def test_empty(self):
        assert max_matching(double_cover(SimpleGraph.empty(0))).size == 0

    def test_size_matches_brute_force_konig(self):
        rng = random.Random(1)
        for _ in range(150):
            g = random_graph(rng, rng.randint(1, 7), rng.uniform(0.1, 0.6))
            b = double_cover(g)
            m = max_matching(b)
            for l, r in enumerate(m.matched):
                if r is not None:
                    assert r in b.adj[l]
            rights = [r for r in m.matched if r is not None]
            assert len(rights) == len(set(rights))
            assert m.size == brute_vc(cover_graph_as_simple(g))  # König
            left, right = konig_cover(b, m)
            assert len(left) + len(right) == m.size
            assert all(l in left or r in right for l, r in b.edges())


class TestNTPartition:
    def test_star(self):
        covers = [c for c in itertools.combinations(range(8), 2) if is_cover(cover_graph_as_simple(STAR), c)]
        assert covers == [(0, 4)]
        p = nt_partition(STAR)
        assert p.v1 == (0,) and p.v0 == (1, 2, 3) and p.v_half == ()

    def test_c5(self):
        covers = brute_min_covers(cover_graph_as_simple(cycle_graph(5)))
        assert len(covers) == 2
        for c in covers:
            assert sorted(v % 5 for v in c) == [0, 1, 2, 3, 4]
        p = nt_partition(cycle_graph(5))
        assert p.v_half == (0, 1, 2, 3, 4)

    def test_edgeless(self):
        p = nt_partition(SimpleGraph.empty(4))
        assert p.v0 == (0, 1, 2, 3) and p.v1 == () and p.v_half == ()

    def test_properties_random(self):
        rng = random.Random(2)
        for _ in range(200):
            g = random_graph(rng, rng.randint(0, 10), rng.uniform(0.1, 0.5))
            p = nt_partition(g)
            assert sorted(p.v0 + p.v_half + p.v1) == list(range(g.n))
            assert p.lp_value2 == p.matching_size
            for u, v in g.edges():
                assert p.x2[u] + p.x2[v] >= 2
            v1, vh = set(p.v1), set(p.v_half)
            assert any(v1 <= s <= v1 | vh for s in brute_min_covers(g))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_partition_properties_hold_for_any_graph(g):
    p = nt_partition(g)
    v0, vh = set(p.v0), set(p.v_half)
    for u, v in g.edges():
        assert not (u in v0 and v in v0 | vh) and not (v in v0 and u in vh)
    # the LP optimum never exceeds the integral optimum, and is at least half of it
    assert p.lp_value2 <= 2 * brute_vc(g) <= 2 * p.lp_value2
