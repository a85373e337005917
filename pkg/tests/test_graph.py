import random

import pytest
from hypothesis import given, settings

from oracles import (
    cycle_graph,
    floyd_warshall,
    has_odd_cycle_by_enumeration,
    path_graph,
    random_graph,
    validate_odd_cycle,
)
from strategies import graphs
from stringvc.errors import InvalidVertex
from stringvc.graph import SimpleGraph, bfs_layers, bipartition, connected_components


class TestSimpleGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            SimpleGraph.from_edges(2, [(1, 1)])

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            SimpleGraph(2, [[1], []])

    def test_adjacency_sorted_and_deduplicated(self):
        g = SimpleGraph.from_edges(4, [(3, 0), (0, 1), (1, 0), (2, 0)])
        assert g.adj[0] == (1, 2, 3)
        assert g.m == 3
        assert g.edges() == [(0, 1), (0, 2), (0, 3)]

    def test_induced_subgraph(self):
        sub, old = cycle_graph(5).induced_subgraph([4, 0, 1])
        assert old == [0, 1, 4]
        assert sub.edges() == [(0, 1), (0, 2)]


class TestBfsLayers:
    def test_path(self):
        assert bfs_layers(path_graph(3), 0).layers == ((0,), (1,), (2,))

    def test_edgeless(self):
        res = bfs_layers(SimpleGraph.empty(3), 1)
        assert res.layers == ((1,),)
        assert res.dist[0] is None and res.dist[2] is None

    def test_four_cycle(self):
        assert bfs_layers(cycle_graph(4), 0).layers == ((0,), (1, 3), (2,))

    def test_invalid_root(self):
        with pytest.raises(InvalidVertex):
            bfs_layers(path_graph(3), 3)

    @settings(max_examples=200, deadline=None)
    @given(graphs())
    def test_matches_floyd_warshall(self, g):
        if g.n == 0:
            return
        d = floyd_warshall(g)
        for root in range(g.n):
            res = bfs_layers(g, root)
            for v in range(g.n):
                expect = None if d[root][v] == float("inf") else d[root][v]
                assert res.dist[v] == expect
                if v != root and expect is not None:
                    assert res.dist[res.parent[v]] == expect - 1
            for i, layer in enumerate(res.layers):
                assert set(layer) == {v for v in range(g.n) if res.dist[v] == i}
            for u, v in g.edges():
                if res.dist[u] is not None:
                    assert abs(res.dist[u] - res.dist[v]) <= 1


class TestConnectedComponents:
    def test_two_edges(self):
        assert connected_components(SimpleGraph.from_edges(4, [(0, 1), (2, 3)])) == [[0, 1], [2, 3]]

    def test_triangle(self):
        assert connected_components(cycle_graph(3)) == [[0, 1, 2]]

    def test_empty(self):
        assert connected_components(SimpleGraph.empty(0)) == []

    @settings(max_examples=100, deadline=None)
    @given(graphs())
    def test_partition_is_reachability(self, g):
        comps = connected_components(g)
        assert sorted(v for c in comps for v in c) == list(range(g.n))
        assert [c[0] for c in comps] == sorted(c[0] for c in comps)
        d = floyd_warshall(g)
        for c in comps:
            for v in c:
                assert all(d[c[0]][v] < float("inf") for v in c)
        for a in comps:
            for b in comps:
                if a is not b:
                    assert d[a[0]][b[0]] == float("inf")


class TestBipartition:
    def test_four_cycle(self):
        sides, odd = bipartition(cycle_graph(4), range(4))
        assert odd is None
        assert sides == {0: 0, 1: 1, 2: 0, 3: 1}

    def test_five_cycle(self):
        g = cycle_graph(5)
        sides, odd = bipartition(g, range(5))
        assert sides is None and len(odd) == 5
        assert validate_odd_cycle(g, odd)

    def test_independent_subset(self):
        g = SimpleGraph.from_edges(8, [(0, 2), (1, 5)])
        sides, odd = bipartition(g, [2, 5, 7])
        assert sides == {2: 0, 5: 0, 7: 0}

    def test_only_induced_edges_count(self):
        # the triangle 0-1-2 is broken by leaving out 2
        g = cycle_graph(3)
        sides, odd = bipartition(g, [0, 1])
        assert sides == {0: 0, 1: 1}

    def test_witness_iff_enumerated_odd_cycle(self):
        rng = random.Random(7)
        for _ in range(300):
            n = rng.randint(1, 10)
            g = random_graph(rng, n, rng.uniform(0.1, 0.6))
            subset = [v for v in range(n) if rng.random() < 0.8]
            sides, odd = bipartition(g, subset)
            expected = has_odd_cycle_by_enumeration(g, subset)
            assert (odd is not None) == expected
            if odd is not None:
                assert set(odd) <= set(subset)
                assert validate_odd_cycle(g, odd)
            else:
                assert all(sides[u] != sides[v] for u, v in g.edges() if u in sides and v in sides)

    def test_deterministic(self):
        g = random_graph(random.Random(3), 12, 0.3)
        assert bipartition(g, range(12)) == bipartition(g, range(12))
