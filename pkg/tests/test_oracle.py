import math

import pytest

from aggucluster.geometry import Polygon, Segment
from aggucluster.oracle import (
    OracleLimitError,
    brute_interval_cover,
    brute_kcenter_points,
    brute_kcenter_segments,
    brute_polygon_kcenter,
    brute_set_cover,
    sampled_directed_distance,
)
from aggucluster.setcover import CoverInstance, Interval, MultiIntervalInstance, atomic_decomposition

PARALLEL3 = [Segment((0, 0), (1, 0)), Segment((0, 2), (1, 2)), Segment((0, 1), (1, 1))]
UNIT = Polygon(((0, 0), (1, 0), (1, 1), (0, 1)))


def test_set_cover_examples():
    q = MultiIntervalInstance([[(0, 2)], [(1, 3)], [(0, 1), (2, 3)]])
    rep = brute_set_cover(atomic_decomposition(q))
    assert rep.optimum == 2 and rep.witness == [0, 1]
    atoms = [Interval(i, i + 1) for i in range(3)]
    assert brute_set_cover(CoverInstance(atoms, [frozenset(range(3))])).optimum == 1
    assert brute_set_cover(CoverInstance(atoms, [frozenset({i}) for i in range(3)])).optimum == 3


def test_set_cover_cap():
    atoms = [Interval(0, 1)]
    with pytest.raises(OracleLimitError):
        brute_set_cover(CoverInstance(atoms, [frozenset({0})] * 21))


def test_interval_oracle_agrees_with_atoms():
    q = [[(0, 1), (4, 6)], [(0.5, 4.5)], [(5, 7)], [(6, 7)]]
    assert brute_interval_cover(q).optimum == brute_set_cover(
        atomic_decomposition(MultiIntervalInstance(q))).optimum


def test_segments_parallel():
    rep = brute_kcenter_segments(PARALLEL3, 1, "max", 1e-4)
    assert rep.optimum == pytest.approx(1.0, abs=2e-4)
    assert brute_kcenter_segments(PARALLEL3, 3, "max").optimum == 0.0


def test_segments_min_intersecting():
    S = [Segment((0, 0), (2, 2)), Segment((0, 2), (2, 0))]
    rep = brute_kcenter_segments(S, 1, "min")
    assert rep.optimum <= rep.error_bound


def test_segment_oracle_resolution_monotone():
    S = [Segment((0, 0), (1, 0.3)), Segment((0.2, 1), (0.9, 0.1)), Segment((0.5, 0.5), (0.5, 0.5))]
    coarse = brute_kcenter_segments(S, 1, "max", 1e-2)
    fine = brute_kcenter_segments(S, 1, "max", 5e-3)
    assert fine.optimum <= coarse.optimum + coarse.error_bound


def test_sampled_distance_endpoint():
    assert sampled_directed_distance(Segment((0, 0), (4, 0)), [Segment((2, 1), (2, 1))], 1e-3) == \
        pytest.approx(math.sqrt(5), abs=1e-9)


def test_points_examples():
    assert brute_kcenter_points([(0, 0), (1, 0), (10, 0)], 2).optimum == 1.0
    assert brute_kcenter_points([(0, 0), (1, 0), (10, 0)], 3).optimum == 0.0
    rep = brute_kcenter_points([(i, 0) for i in range(5)], 1)
    assert rep.optimum == 2.0 and rep.witness == [2]


def test_points_cap():
    with pytest.raises(OracleLimitError):
        brute_kcenter_points([(i, 0) for i in range(60)], 6)


def test_polygon_square():
    rep = brute_polygon_kcenter([UNIT], 1, 0.05)
    assert rep.optimum == pytest.approx(math.sqrt(2) / 2, abs=0.1)
    twice = brute_polygon_kcenter([UNIT, UNIT], 1, 0.05)
    assert twice.optimum == rep.optimum


def test_polygon_resolution_refines():
    coarse = brute_polygon_kcenter([UNIT], 1, 0.25)
    fine = brute_polygon_kcenter([UNIT], 1, 0.125)
    assert fine.optimum <= coarse.optimum + coarse.error_bound
    assert abs(fine.optimum - math.sqrt(2) / 2) <= fine.error_bound


def test_polygon_min_two_squares():
    sq2 = Polygon(((4, 0), (5, 0), (5, 1), (4, 1)))
    assert brute_polygon_kcenter([UNIT, sq2], 1, 0.1, mode="min").optimum == pytest.approx(3.0, abs=0.1)


def test_polygon_cap():
    with pytest.raises(OracleLimitError):
        brute_polygon_kcenter([Polygon(((0, 0), (10, 0), (10, 10), (0, 10)))], 1, 0.1)
