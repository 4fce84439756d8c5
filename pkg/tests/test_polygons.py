import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from aggucluster.geometry import Polygon, is_simple, polygon_distances, smallest_enclosing_disk
from aggucluster.oracle import (
    brute_colorful_kcenter,
    brute_kcenter_points,
    brute_polygon_kcenter,
    polygon_region_samples,
)
from aggucluster.polygons import (
    ColoredPoint,
    colorful_kcenter_arrays,
    colorful_kcenter_exact,
    composable_kcenter,
    covering_radius,
    gonzalez_kcenter,
    max_1center_polygons,
    max_kcenter_arbitrary,
    max_kcenter_convex,
    min_kcenter_polygons,
    nearest_center,
    sample_polygons,
    triangles_of,
)

from .strategies import convex_polygons, points, star_polygons


def square(x, y, s=1.0):
    return Polygon(((x, y), (x + s, y), (x + s, y + s), (x, y + s)))


UNIT = square(0, 0)
TWO_FAR = [square(0, 0), square(9, 0)]
TWO_NEAR = [square(0, 0), square(4, 0)]
L_SHAPE = Polygon(((0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)))

small = st.floats(0, 4, allow_nan=False)


def _on_union(C, P, tol=1e-9):
    d = np.min(np.column_stack([polygon_distances(np.asarray(C, float), p) for p in P]), axis=1)
    return bool((d <= tol).all())


# --- Gonzalez


def test_gonzalez_trace():
    res = gonzalez_kcenter([(0, 0), (1, 0), (10, 0)], 2, seed_index=0)
    assert res.centers.tolist() == [[0, 0], [10, 0]]
    assert res.radius == 1.0


def test_gonzalez_k_equals_n_and_k1():
    pts = [(0, 0), (3, 4), (6, 0)]
    assert gonzalez_kcenter(pts, 3).radius == 0.0
    res = gonzalez_kcenter(pts, 1, seed_index=1)
    assert res.centers.tolist() == [[3, 4]]
    assert res.radius == pytest.approx(5.0)


@given(st.lists(points, min_size=1, max_size=12), st.integers(1, 3), st.integers(0, 11))
def test_gonzalez_two_approx_any_seed(pts, k, seed):
    seed = seed % len(pts)
    res = gonzalez_kcenter(pts, k, seed_index=seed)
    opt = brute_kcenter_points(pts, k)
    assert res.radius <= 2 * opt.optimum + 1e-9


def test_nearest_center():
    d, lab = nearest_center(np.array([[0.0, 0.0], [9.0, 0.0]]), np.array([[1.0, 0.0], [10.0, 0.0]]))
    assert d.tolist() == [1.0, 1.0] and lab.tolist() == [0, 1]


# --- max-cost 1-center


def test_max_1center_single_square():
    c, r = max_1center_polygons([UNIT])
    assert tuple(c) == pytest.approx((0.5, 0.5))
    assert r == pytest.approx(math.sqrt(2) / 2)


def test_max_1center_two_squares():
    c, r = max_1center_polygons(TWO_FAR)
    assert tuple(c) == pytest.approx((1.0, 0.5))
    assert r == pytest.approx(math.sqrt(81.25), abs=1e-9)
    sed = smallest_enclosing_disk([v for p in TWO_FAR for v in p.vertices])
    assert r <= 2 * sed.radius


def test_max_1center_point():
    c, r = max_1center_polygons([Polygon(((3, 3),))])
    assert tuple(c) == (3, 3) and r == 0.0


@given(st.lists(convex_polygons(), min_size=1, max_size=4))
def test_max_1center_bound(P):
    c, r = max_1center_polygons(P)
    sed = smallest_enclosing_disk([v for p in P for v in p.vertices])
    assert r <= 2 * sed.radius + 1e-9
    assert _on_union([c], P)


# --- convex


def test_convex_single_square():
    res = max_kcenter_convex([UNIT], 1, 0.1)
    assert math.sqrt(2) / 2 - 1e-9 <= res.radius <= (2 + 0.4) * math.sqrt(2) / 2
    assert res.alpha_bound == pytest.approx(2.4)


def test_convex_two_separated_squares():
    P = [square(0, 0), square(5, 0)]
    res = max_kcenter_convex(P, 2, 0.1)
    labels = [int(c[0] > 3) for c in res.centers]
    assert sorted(labels) == [0, 1]
    assert res.radius <= (2 + 0.4) * math.sqrt(2) / 2


def test_convex_point_polygon():
    res = max_kcenter_convex([Polygon(((3, 3),))], 1, 0.1)
    assert res.centers.tolist() == [[3, 3]] and res.radius == 0.0


def test_convex_rejects_nonconvex():
    with pytest.raises(ValueError, match="not convex"):
        max_kcenter_convex([L_SHAPE], 1, 0.1)


def test_covering_radius_exact():
    assert covering_radius([(0.5, 0.5)], [UNIT]) == pytest.approx(math.sqrt(0.5))
    assert covering_radius([(0, 0), (1, 1)], [UNIT]) == pytest.approx(1.0)


@settings(max_examples=25)
@given(st.lists(convex_polygons(small), min_size=1, max_size=3), st.integers(1, 2))
def test_convex_domain_and_sampling(P, k):
    res = max_kcenter_convex(P, k, 0.1)
    assert _on_union(res.centers, P)
    S = np.asarray(res.samples)
    for p in P:
        probe = polygon_region_samples(p, 0.05)
        d = nearest_center(probe, S)[0]
        # grid cell after the clamp, in original units, covers every polygon point
        assert d.max() <= res.eps_used * math.sqrt(2) + 1e-9


def test_sample_polygons_candidates_on_union():
    gs = sample_polygons([UNIT, square(3, 0)], 0.25)
    assert _on_union(gs.candidates, [UNIT, square(3, 0)])
    assert len(gs.all_points) >= len(gs.candidates)


# --- arbitrary


def test_triangles_of():
    tris, src = triangles_of([L_SHAPE, Polygon(((5, 5), (6, 6)))])
    assert len(tris) == 5 and src == [0, 0, 0, 0, 1]


def test_arbitrary_l_shape_vs_oracle():
    res = max_kcenter_arbitrary([L_SHAPE], 1, 0.05)
    opt = brute_polygon_kcenter([L_SHAPE], 1, 0.05, max_candidates=5000)
    assert res.radius <= (6 + 0.05) * (opt.optimum + opt.error_bound)
    assert _on_union(res.centers, [L_SHAPE])


def test_arbitrary_triangle_close_to_convex():
    tri = Polygon(((0, 0), (2, 0), (0, 1)))
    a = max_kcenter_arbitrary([tri], 1, 0.1)
    c = max_kcenter_convex([tri], 1, 0.1)
    assert a.radius <= (6 + 0.1) * c.radius
    r1 = smallest_enclosing_disk(tri.vertices).radius
    assert a.radius <= (2 + 0.1) * 2 * r1


@settings(max_examples=15)
@given(st.lists(star_polygons(max_vertices=6), min_size=1, max_size=2), st.integers(1, 2))
def test_arbitrary_domain_restricted(P, k):
    assume(all(is_simple(p) and p.area > 1e-2 for p in P))
    res = max_kcenter_arbitrary(P, k, 0.1)
    assert _on_union(res.centers, P)
    assert len(res.centers) <= k
    assert res.alpha_bound == pytest.approx(6.1, abs=0.1)


# --- colorful and min-cost


def test_colorful_example():
    pts = [ColoredPoint((0, 0), 0), ColoredPoint((5, 0), 0), ColoredPoint((5, 1), 1)]
    res = colorful_kcenter_exact(pts, 1)
    assert res.radius == 1.0
    assert res.centers.tolist()[0] in ([5, 0], [5, 1])


def test_colorful_shared_location_and_singletons():
    pts = [ColoredPoint((1, 1), c) for c in range(3)] + [ColoredPoint((7, 7), 0)]
    assert colorful_kcenter_exact(pts, 1).radius == 0.0
    single = [ColoredPoint((3 * i, 0), i) for i in range(3)]
    assert colorful_kcenter_exact(single, 3).radius == 0.0


@given(st.lists(st.tuples(points, st.integers(0, 2)), min_size=1, max_size=10), st.integers(1, 3))
def test_colorful_matches_unpruned(colored, k):
    pts = [p for p, _ in colored]
    cols = [c for _, c in colored]
    res = colorful_kcenter_arrays(pts, cols, k)
    assert res.radius == pytest.approx(brute_colorful_kcenter(pts, cols, k).optimum, abs=1e-12)


def test_min_two_squares():
    res = min_kcenter_polygons(TWO_NEAR, 1, 0.1)
    assert res.radius == pytest.approx(3.0, abs=0.15)
    assert res.centers[0][0] in (pytest.approx(1.0), pytest.approx(4.0))
    opt = brute_polygon_kcenter(TWO_NEAR, 1, 0.1, mode="min")
    assert opt.optimum == pytest.approx(3.0, abs=0.1)


def test_min_overlapping_and_k_equals_n():
    over = [square(0, 0), square(0.5, 0.5)]
    assert min_kcenter_polygons(over, 1, 0.1).radius <= 0.1 * math.sqrt(2)
    assert min_kcenter_polygons(TWO_NEAR, 2, 0.1).radius <= 0.1 * math.sqrt(2)


def test_min_color_limit():
    with pytest.raises(ValueError, match="constant-color"):
        min_kcenter_polygons([square(3 * i, 0) for i in range(9)], 1, 0.1)


# --- composable


def test_composable_l1_is_gonzalez():
    pts = np.random.default_rng(3).random((40, 2))
    a, b = composable_kcenter(pts, 4, L=1), gonzalez_kcenter(pts, 4)
    np.testing.assert_array_equal(a.centers, b.centers)
    assert a.radius == b.radius


def test_composable_identical_points():
    for L in (1, 3):
        assert composable_kcenter([(2, 2)] * 7, 2, L=L).radius == 0.0


def test_composable_four_approx():
    pts = np.random.default_rng(0).random((200, 2))
    res = composable_kcenter(pts, 5, L=4)
    # best 5 centers drawn from a 24-point subsample, scored on all points
    opt = brute_kcenter_points(pts, 5, candidate_centers=pts[::8][:24])
    assert res.radius <= 4 * opt.optimum
    assert res.alpha_bound == 4


@given(st.lists(points, min_size=1, max_size=12), st.integers(1, 3), st.integers(1, 4))
def test_composable_bound_small(pts, k, L):
    res = composable_kcenter(pts, k, L=L)
    opt = brute_kcenter_points(pts, k, candidate_centers=None)
    # centers are input points; discrete optimum is within 2x of the continuous one
    assert res.radius <= 4 * opt.optimum + 1e-9
