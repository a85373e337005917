from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oracles import segments_cross_float_free
from stringvc.errors import DegenerateInput
from stringvc.geometry import (
    OVERLAP,
    RationalPoint,
    SegmentFamily,
    ingest_segments,
    segment_pair_intersection,
)
from stringvc.representation import intersection_graph, validate
from stringvc.toolkit import SEGMENTS, GeneratorConfig, gen_segments


def fam(*rows):
    return SegmentFamily.from_rows(rows)


def cramer(a, b):
    """Crossing point of two non-parallel lines through segments ``a`` and ``b``."""
    (x1, y1), (x2, y2) = a
    (x3, y3), (x4, y4) = b
    den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    px = Fraction((x1 * y2 - y1 * x2) * (x3 - x4) - (x1 - x2) * (x3 * y4 - y3 * x4), den)
    py = Fraction((x1 * y2 - y1 * x2) * (y3 - y4) - (y1 - y2) * (x3 * y4 - y3 * x4), den)
    return px, py


class TestPairIntersection:
    def test_crossing(self):
        assert segment_pair_intersection(((0, 0), (2, 2)), ((0, 2), (2, 0))) == RationalPoint(1, 1)

    def test_parallel_disjoint(self):
        assert segment_pair_intersection(((0, 0), (1, 0)), ((0, 1), (1, 1))) is None

    def test_collinear_containment(self):
        assert segment_pair_intersection(((0, 0), (3, 3)), ((1, 1), (2, 2))) is OVERLAP

    def test_collinear_touching_end_to_end(self):
        assert segment_pair_intersection(((0, 0), (1, 1)), ((1, 1), (3, 3))) == (1, 1)

    def test_collinear_disjoint(self):
        assert segment_pair_intersection(((0, 0), (1, 1)), ((2, 2), (3, 3))) is None

    def test_t_junction(self):
        assert segment_pair_intersection(((0, 0), (4, 0)), ((2, 0), (2, 5))) == (2, 0)

    def test_rational_point(self):
        hit = segment_pair_intersection(((0, 0), (3, 1)), ((0, 1), (3, 0)))
        assert hit == (Fraction(3, 2), Fraction(1, 2))

    def test_agrees_with_orientation_oracle(self):
        import random

        rng = random.Random(11)
        for _ in range(3000):
            a = ((rng.randint(0, 6), rng.randint(0, 6)), (rng.randint(0, 6), rng.randint(0, 6)))
            b = ((rng.randint(0, 6), rng.randint(0, 6)), (rng.randint(0, 6), rng.randint(0, 6)))
            if a[0] == a[1] or b[0] == b[1]:
                continue
            hit = segment_pair_intersection(a, b)
            assert (hit is not None) == segments_cross_float_free(a, b)


class TestIngest:
    def test_x_crossing(self):
        rep = ingest_segments(fam([0, 0, 2, 2], [0, 2, 2, 0]))
        assert rep.host.n == 5
        assert len(rep.host.edges) == 4
        g = intersection_graph(rep)
        assert g.edges() == [(0, 1)]
        # points sorted by (x, y): (0,0), (0,2), (1,1), (2,0), (2,2)
        assert rep.sets == ((0, 2, 4), (1, 2, 3))

    def test_parallel(self):
        rep = ingest_segments(fam([0, 0, 5, 0], [0, 1, 5, 1]))
        assert rep.host.n == 4 and len(rep.host.edges) == 2
        assert intersection_graph(rep).m == 0

    def test_triangle(self):
        rows = [[0, 0, 12, 1], [1, -1, 5, 11], [11, -2, 4, 12]]
        segs = [((r[0], r[1]), (r[2], r[3])) for r in rows]
        crossings = {cramer(segs[i], segs[j]) for i in range(3) for j in range(i + 1, 3)}
        assert len(crossings) == 3
        rep = ingest_segments(SegmentFamily.from_rows(rows))
        assert rep.host.n == 6 + 3
        assert len(rep.host.edges) == 9  # each segment: 2 endpoints + 2 crossings = 3 edges
        assert intersection_graph(rep).m == 3
        assert validate(rep).ok

    def test_rotations_are_counterclockwise(self):
        rep = ingest_segments(fam([0, 0, 2, 2], [0, 2, 2, 0]))
        # center (1,1) is vertex 2; neighbors (2,2)=4, (0,2)=1, (0,0)=0, (2,0)=3 ccw from +x
        assert rep.host.rotations[2] == (4, 1, 0, 3)

    @pytest.mark.parametrize(
        "rows, code",
        [
            ([[0, 0, 2, 2], [2, 2, 4, 0]], "SHARED_ENDPOINT"),
            ([[0, 0, 4, 0], [2, 0, 2, 5]], "ENDPOINT_ON_SEGMENT"),
            ([[0, 0, 3, 3], [1, 1, 5, 5]], "COLLINEAR_OVERLAP"),
            ([[0, 0, 2, 2], [0, 2, 2, 0], [1, 0, 1, 3]], "CONCURRENT"),
            ([[1, 1, 1, 1]], "ZERO_LENGTH"),
        ],
    )
    def test_degenerate(self, rows, code):
        with pytest.raises(DegenerateInput) as exc:
            ingest_segments(SegmentFamily.from_rows(rows))
        assert exc.value.details[0]["code"] == code

    def test_out_of_box(self):
        with pytest.raises(DegenerateInput):
            ingest_segments(SegmentFamily.from_rows([[0, 0, 50, 1]], box=10))

    def test_scaling_gives_identical_host(self):
        for seed in range(10):
            base = gen_segments(GeneratorConfig(seed=seed, kind=SEGMENTS, count=12, box=60))
            rep = ingest_segments(base)
            for k in (3, 1000003):
                scaled = SegmentFamily.from_rows([[c * k for c in row] for row in base.rows()])
                assert ingest_segments(scaled) == rep

    def test_oracle_equivalence_and_euler(self):
        for seed in range(80):
            f = gen_segments(GeneratorConfig(seed=seed, kind=SEGMENTS, count=seed % 15 + 1, box=40))
            rep = ingest_segments(f)
            assert validate(rep).ok
            direct = {
                (i, j)
                for i in range(len(f))
                for j in range(i + 1, len(f))
                if segments_cross_float_free(f.segments[i], f.segments[j])
            }
            assert set(intersection_graph(rep).edges()) == direct


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-30, 30), min_size=8, max_size=8))
def test_pair_intersection_agrees_with_sign_test(coords):
    a = ((coords[0], coords[1]), (coords[2], coords[3]))
    b = ((coords[4], coords[5]), (coords[6], coords[7]))
    assume(a[0] != a[1] and b[0] != b[1])
    res = segment_pair_intersection(a, b)
    assert (res is not None) == segments_cross_float_free(a, b)
    if res is not None and res is not OVERLAP:
        assert segments_cross_float_free(a, ((res.x, res.y), (res.x, res.y)))
        assert segments_cross_float_free(b, ((res.x, res.y), (res.x, res.y)))
