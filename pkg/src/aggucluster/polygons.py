"""Domain-restricted k-center of polygons.

Centers must lie inside the union of the input polygons. The max-cost
variants sample the polygons on a grid (after growing them by a disk so thin
corners still get a grid vertex), snap off-polygon grid vertices back onto the
polygons, and run farthest-point clustering with only in-polygon samples as
center candidates. The min-cost variant colours the samples by polygon and
solves colorful k-center exactly.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Sequence

import numpy as np
from scipy.spatial import cKDTree

from .geometry import (
    TOL,
    Polygon,
    is_convex,
    is_simple,
    lattice_in_bbox,
    nearest_point_on_polygon,
    nearest_points_on_polygon,
    normalize_to_unit_box,
    polygon_distance,
    polygon_distances,
    segment_min_distance,
    segments_intersect,
    smallest_enclosing_disk,
    triangulate,
)

log = logging.getLogger(__name__)

MAX_COLORS = 8


class ColoredPoint(NamedTuple):
    point: tuple
    color: int


@dataclass
class PointClustering:
    centers: np.ndarray
    radius: float
    assignment: np.ndarray
    center_indices: np.ndarray | None = None
    sample_radius: float | None = None
    n_samples: int = 0
    alpha_bound: float | None = None
    eps_used: float | None = None
    samples: np.ndarray | None = None
    summary: np.ndarray | None = None
    sample_colors: np.ndarray | None = None


def _as_points(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if not np.all(np.isfinite(pts)):
        raise ValueError("points must be finite")
    return pts


def _check_polygons(P) -> list:
    P = [p if isinstance(p, Polygon) else Polygon(tuple(p)) for p in P]
    if not P:
        raise ValueError("need at least one polygon")
    return P


def nearest_center(points: np.ndarray, centers: np.ndarray):
    """(distance, index) of the nearest center for every point."""
    tree = cKDTree(np.asarray(centers, dtype=float).reshape(-1, 2))
    d, idx = tree.query(np.asarray(points, dtype=float).reshape(-1, 2))
    return d, idx


def gonzalez_kcenter(points, k: int, seed_index: int = 0, candidates=None) -> PointClustering:
    """Greedy farthest-point k-center (2-approximation of discrete k-center).

    ``candidates`` is an optional boolean mask; only those points may become
    centers while all points count toward the radius. ``seed_index`` indexes
    the candidate list. Stops early once every point is at distance 0.
    """
    pts = _as_points(points)
    if k < 1:
        raise ValueError("k must be >= 1")
    if not len(pts):
        raise ValueError("no points")
    cand = np.arange(len(pts)) if candidates is None else np.flatnonzero(candidates)
    if not len(cand):
        raise ValueError("no candidate centers")
    first = int(cand[seed_index % len(cand)])
    chosen = [first]
    d = np.hypot(pts[:, 0] - pts[first, 0], pts[:, 1] - pts[first, 1])
    labels = np.zeros(len(pts), dtype=int)
    while len(chosen) < min(k, len(cand)):
        j = int(cand[np.argmax(d[cand])])
        if d[j] <= 0.0:
            break
        chosen.append(j)
        dj = np.hypot(pts[:, 0] - pts[j, 0], pts[:, 1] - pts[j, 1])
        closer = dj < d
        d[closer] = dj[closer]
        labels[closer] = len(chosen) - 1
    idx = np.asarray(chosen, dtype=int)
    return PointClustering(pts[idx].copy(), float(d.max()), labels, center_indices=idx,
                           sample_radius=float(d.max()), n_samples=len(pts))


def covering_radius(centers, polygons: Sequence[Polygon]) -> float:
    """Exact max over all polygon points of the distance to the nearest center.

    Inside one Voronoi cell the distance is convex, so the maximum sits on a
    vertex of some cell-polygon overlap: a polygon vertex, a bisector/edge
    crossing, or a Voronoi vertex inside the polygon. All of those are tried.
    """
    C = _as_points(centers)
    best = 0.0
    pairs = list(combinations(range(len(C)), 2))
    triples = list(combinations(range(len(C)), 3)) if len(C) >= 3 else []
    circum = []
    for a, b, c in triples:
        cc = _circumcenter(C[a], C[b], C[c])
        if cc is not None:
            circum.append(cc)
    circum = np.asarray(circum, dtype=float).reshape(-1, 2)
    for poly in polygons:
        ring = poly.as_array()
        cands = [ring]
        if len(ring) >= 2 and pairs:
            edges = poly.edges()
            for e in edges:
                A = np.asarray(e.a)
                B = np.asarray(e.b)
                for a, b in pairs:
                    n = C[b] - C[a]
                    mid = 0.5 * (C[a] + C[b])
                    den = float(np.dot(B - A, n))
                    if den == 0.0:
                        continue
                    t = float(np.dot(mid - A, n)) / den
                    if 0.0 <= t <= 1.0:
                        cands.append((A + t * (B - A))[None, :])
        if len(circum) and len(ring) >= 3:
            inside = polygon_distances(circum, poly) <= TOL
            cands.append(circum[inside])
        pts = np.vstack(cands)
        d, _ = nearest_center(pts, C)
        best = max(best, float(d.max()))
    return best


def _circumcenter(a, b, c):
    d = 2.0 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
    if d == 0.0:
        return None
    a2, b2, c2 = a @ a, b @ b, c @ c
    x = (a2 * (b[1] - c[1]) + b2 * (c[1] - a[1]) + c2 * (a[1] - b[1])) / d
    y = (a2 * (c[0] - b[0]) + b2 * (a[0] - c[0]) + c2 * (b[0] - a[0])) / d
    return (x, y)


def min_cost_radius(centers, polygons: Sequence[Polygon]) -> float:
    """max over polygons of the distance from the polygon to its nearest center."""
    C = _as_points(centers)
    return max(float(polygon_distances(C, p).min()) for p in polygons)


def max_1center_polygons(P: Sequence[Polygon], seed: int = 0):
    """Snap the center of the vertices' enclosing disk into the nearest polygon.

    Returns ``(center, radius)``; the radius is at most twice the enclosing
    disk's radius.
    """
    P = _check_polygons(P)
    verts = [v for p in P for v in p.vertices]
    c = smallest_enclosing_disk(verts, seed=seed).center
    best, best_d = None, math.inf
    for poly in P:
        q = nearest_point_on_polygon(c, poly)
        d = math.hypot(q[0] - c[0], q[1] - c[1])
        if d < best_d:
            best, best_d = q, d
    far = max(math.hypot(v[0] - best[0], v[1] - best[1]) for v in verts)
    return best, far


# --------------------------------------------------------------------------
# grid sampling


@dataclass
class GridSample:
    grid: np.ndarray  # lattice points inside some grown polygon
    inside: np.ndarray  # mask: grid point lies in some polygon
    snapped: np.ndarray  # off-polygon grid points moved onto polygons
    snapped_source: np.ndarray  # polygon index each snapped point came from

    @property
    def candidates(self) -> np.ndarray:
        return np.vstack([self.grid[self.inside], self.snapped])

    @property
    def all_points(self) -> np.ndarray:
        return np.vstack([self.grid, self.snapped])

    @property
    def candidate_mask(self) -> np.ndarray:
        return np.concatenate([self.inside, np.ones(len(self.snapped), dtype=bool)])


def _grid_origin(P, pad):
    x0 = min(p.bbox()[0] for p in P) - pad
    y0 = min(p.bbox()[1] for p in P) - pad
    return (x0, y0)


def _lattice_near(P, cell, pad, origin, max_points):
    parts = []
    total = 0.0
    for poly in P:
        x0, y0, x1, y1 = poly.bbox()
        total += ((x1 - x0 + 2 * pad) / cell + 2) * ((y1 - y0 + 2 * pad) / cell + 2)
    if total > max_points:
        raise ValueError(f"grid too fine: ~{int(total)} lattice points (limit {max_points})")
    for poly in P:
        x0, y0, x1, y1 = poly.bbox()
        parts.append(lattice_in_bbox((x0 - pad, y0 - pad, x1 + pad, y1 + pad), cell, origin))
    lat = np.vstack(parts) if parts else np.empty((0, 2))
    if not len(lat):
        return lat
    lat = np.unique(lat, axis=0)
    return lat[np.lexsort((lat[:, 0], lat[:, 1]))]


def sample_polygons(P: Sequence[Polygon], cell: float, pad: float | None = None,
                    max_points: int = 2_000_000) -> GridSample:
    """Grid vertices within ``pad`` of the polygons, plus their snaps.

    A grid vertex outside every polygon is projected onto each polygon whose
    grown copy contains it.
    """
    if cell <= 0:
        raise ValueError("cell must be positive")
    pad = cell if pad is None else pad
    origin = _grid_origin(P, pad)
    lat = _lattice_near(P, cell, pad, origin, max_points)
    if not len(lat):
        return GridSample(lat, np.zeros(0, bool), np.empty((0, 2)), np.zeros(0, int))
    D = np.column_stack([polygon_distances(lat, poly) for poly in P])
    near = D <= pad + TOL
    keep = near.any(axis=1)
    lat, D, near = lat[keep], D[keep], near[keep]
    inside = (D <= TOL).any(axis=1)
    snapped, src = [], []
    for i, poly in enumerate(P):
        m = near[:, i] & ~inside
        if m.any():
            snapped.append(nearest_points_on_polygon(lat[m], poly))
            src.append(np.full(int(m.sum()), i))
    snapped = np.vstack(snapped) if snapped else np.empty((0, 2))
    src = np.concatenate(src) if src else np.zeros(0, int)
    return GridSample(lat, inside, snapped, src)


def _normalized(P, raw_cell):
    if raw_cell:
        return P, None
    work, tf = normalize_to_unit_box(P)
    return work, tf


def _to_original(points, tf):
    if tf is None:
        return np.asarray(points, dtype=float)
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    return pts / tf.scale + np.asarray(tf.offset)


def clamp_eps_by_sed(P: Sequence[Polygon], eps: float, k: int) -> float:
    """eps <- min(eps, min_i r_i / k), r_i the enclosing radius of P_i's vertices.

    Point-like polygons (r_i = 0) are ignored.
    """
    rs = [smallest_enclosing_disk(p.vertices).radius for p in P]
    rs = [r for r in rs if r > 0]
    if rs:
        eps = min(eps, min(rs) / k)
    return eps


def max_kcenter_convex(P: Sequence[Polygon], k: int, eps: float, raw_cell: bool = False,
                       seed_index: int = 0, max_points: int = 2_000_000) -> PointClustering:
    """k-center of convex polygons through grid sampling and snapping.

    By default the input is scaled to the unit box, ``eps`` is clamped by the
    polygons' enclosing radii and the grid cell is ``eps / 4``. With
    ``raw_cell`` the input stays in its own units and ``eps`` is the cell.
    """
    P = _check_polygons(P)
    if k < 1:
        raise ValueError("k must be >= 1")
    if not eps > 0:
        raise ValueError("eps must be positive")
    for p in P:
        if not is_convex(p):
            raise ValueError("polygon is not convex; use max_kcenter_arbitrary")
    work, tf = _normalized(P, raw_cell)
    if raw_cell:
        eps_used, cell = eps, eps
    else:
        eps_used = clamp_eps_by_sed(work, eps, k)
        cell = eps_used / 4.0
    gs = sample_polygons(work, cell, max_points=max_points)
    pts = gs.all_points
    gon = gonzalez_kcenter(pts, k, seed_index, candidates=gs.candidate_mask)
    centers = _to_original(gon.centers, tf)
    samples = _to_original(pts, tf)
    return PointClustering(
        centers=centers,
        radius=covering_radius(centers, P),
        assignment=gon.assignment,
        center_indices=gon.center_indices,
        sample_radius=gon.radius if tf is None else tf.radius_to_original(gon.radius),
        n_samples=len(pts),
        alpha_bound=2.0 + 4.0 * eps_used,
        eps_used=eps_used if tf is None else tf.radius_to_original(eps_used),
        samples=samples,
    )


def triangles_of(P: Sequence[Polygon]):
    """Triangulate each polygon; point- and segment-like polygons pass through."""
    out, src = [], []
    for i, p in enumerate(P):
        if len(p) < 3:
            out.append(p)
            src.append(i)
            continue
        if not is_simple(p):
            raise ValueError(f"polygon {i} is not simple")
        for t in triangulate(p):
            out.append(Polygon(t))
            src.append(i)
    return out, src


def max_kcenter_arbitrary(P: Sequence[Polygon], k: int, eps: float, raw_cell: bool = False,
                          seed_index: int = 0, max_points: int = 2_000_000) -> PointClustering:
    """k-center of simple polygons: cluster each triangle, then cluster the centers.

    Every triangle of a triangulation gets its own grid-based k-center; the
    union of those per-triangle centers is clustered again with
    farthest-point k-center, and the result is snapped onto the polygons.
    """
    P = _check_polygons(P)
    if k < 1:
        raise ValueError("k must be >= 1")
    if not eps > 0:
        raise ValueError("eps must be positive")
    work, tf = _normalized(P, raw_cell)
    tris, _ = triangles_of(work)
    per_tri = []
    n_samples = 0
    samples = []
    eps_min = eps
    for tri in tris:
        if raw_cell:
            cell = eps
        else:
            e = clamp_eps_by_sed([tri], eps, k)
            eps_min = min(eps_min, e)
            cell = e / 4.0
        gs = sample_polygons([tri], cell, max_points=max_points)
        pts = gs.all_points
        if not len(pts):
            pts = tri.as_array()[:1]
            mask = np.ones(1, dtype=bool)
        else:
            mask = gs.candidate_mask
        n_samples += len(pts)
        samples.append(pts)
        g = gonzalez_kcenter(pts, k, 0, candidates=mask)
        per_tri.append(g.centers)
    X = np.unique(np.vstack(per_tri), axis=0)
    gon = gonzalez_kcenter(X, k, seed_index)
    snapped = []
    for c in gon.centers:
        best, best_d = None, math.inf
        for poly in work:
            q = nearest_point_on_polygon(c, poly)
            d = math.hypot(q[0] - c[0], q[1] - c[1])
            if d < best_d:
                best, best_d = q, d
        snapped.append(best)
    centers = _to_original(np.asarray(snapped), tf)
    all_samples = _to_original(np.vstack(samples), tf)
    _, labels = nearest_center(all_samples, centers)
    return PointClustering(
        centers=centers,
        radius=covering_radius(centers, P),
        assignment=labels,
        center_indices=gon.center_indices,
        sample_radius=float(nearest_center(all_samples, centers)[0].max()),
        n_samples=n_samples,
        alpha_bound=6.0 + eps_min if not raw_cell else None,
        eps_used=eps_min if tf is None else tf.radius_to_original(eps_min),
        samples=all_samples,
        summary=_to_original(X, tf),
    )


# --------------------------------------------------------------------------
# minimum cost


def colorful_kcenter_exact(colored: Sequence[ColoredPoint], k: int) -> PointClustering:
    """Exact colorful k-center over a list of ``ColoredPoint``."""
    colored = list(colored)
    if not colored:
        raise ValueError("no points")
    return colorful_kcenter_arrays([c.point for c in colored], [c.color for c in colored], k)


def colorful_kcenter_arrays(points, colors, k: int) -> PointClustering:
    """Exact discrete colorful k-center: every color needs one point within r.

    Centers are drawn from the points. The optimal radius is one of the
    point-to-nearest-point-of-color distances, so those are binary searched;
    feasibility is an exhaustive search over k-subsets of the distinct
    maximal color-coverage masks at that radius.
    """
    pts = _as_points(points)
    colors = np.asarray(colors, dtype=int).reshape(-1)
    if not len(pts):
        raise ValueError("no points")
    if len(colors) != len(pts):
        raise ValueError("one color per point required")
    if k < 1:
        raise ValueError("k must be >= 1")
    palette = sorted(set(colors.tolist()))
    if len(palette) > 16:
        raise ValueError("too many colors for exact search")
    D = np.empty((len(pts), len(palette)))
    for j, c in enumerate(palette):
        D[:, j] = cKDTree(pts[colors == c]).query(pts)[0]
    radii = np.unique(D)
    full = (1 << len(palette)) - 1
    weights = 1 << np.arange(len(palette))

    def witness(r):
        masks = ((D <= r) * weights).sum(axis=1)
        uniq, first = np.unique(masks, return_index=True)
        ints = [int(m) for m in uniq]
        maximal = [(m, int(i)) for m, i in zip(ints, first)
                   if m and not any(o != m and (o & m) == m for o in ints)]
        for size in range(1, min(k, len(maximal)) + 1):
            for combo in combinations(maximal, size):
                acc = 0
                for m, _ in combo:
                    acc |= m
                if acc == full:
                    return [i for _, i in combo]
        return None

    lo, hi = 0, len(radii) - 1
    best = witness(radii[hi])
    if best is None:  # fewer than needed: cannot happen once k >= 1 and r = max
        raise RuntimeError("colorful k-center infeasible at the largest radius")
    while lo < hi:
        mid = (lo + hi) // 2
        w = witness(radii[mid])
        if w is not None:
            hi, best = mid, w
        else:
            lo = mid + 1
    idx = np.asarray(best, dtype=int)
    d, labels = nearest_center(pts, pts[idx])
    return PointClustering(pts[idx].copy(), float(radii[lo]), labels, center_indices=idx,
                           sample_radius=float(radii[lo]), n_samples=len(pts))


def polygon_pair_distance(p: Polygon, q: Polygon) -> float:
    """Distance between two filled polygons (0 when they overlap)."""
    ep, eq = p.edges(), q.edges()
    if any(segments_intersect(a, b) for a in ep for b in eq):
        return 0.0
    if polygon_distance(q.vertices[0], p) <= TOL or polygon_distance(p.vertices[0], q) <= TOL:
        return 0.0
    return min(segment_min_distance(a, b) for a in ep for b in eq)


def min_kcenter_polygons(P: Sequence[Polygon], k: int, eps: float,
                         max_points: int = 2_000_000) -> PointClustering:
    """Minimum-cost k-center of a handful of polygons via colorful k-center.

    ``eps`` is in input units. It is lowered to the smallest positive gap
    between two polygons (never below eps / 1024); overlapping pairs are
    skipped by that rule and logged.
    """
    P = _check_polygons(P)
    if len(P) > MAX_COLORS:
        raise ValueError("constant-color limit exceeded")
    if k < 1:
        raise ValueError("k must be >= 1")
    if not eps > 0:
        raise ValueError("eps must be positive")
    gaps = [polygon_pair_distance(p, q) for p, q in combinations(P, 2)]
    if any(g == 0.0 for g in gaps):
        log.warning("overlapping polygons: ignored by the resolution rule")
    pos = [g for g in gaps if g > 0]
    eps_used = max(min([eps] + pos), eps / 1024.0)
    origin = _grid_origin(P, eps_used)
    pts, cols = [], []
    for i, poly in enumerate(P):
        x0, y0, x1, y1 = poly.bbox()
        est = ((x1 - x0) / eps_used + 4) * ((y1 - y0) / eps_used + 4)
        if est > max_points:
            raise ValueError(f"grid too fine: ~{int(est)} lattice points (limit {max_points})")
        lat = lattice_in_bbox((x0 - eps_used, y0 - eps_used, x1 + eps_used, y1 + eps_used),
                              eps_used, origin)
        lat = lat[polygon_distances(lat, poly) <= eps_used + TOL]
        if not len(lat):
            lat = poly.as_array()[:1]
        pts.append(_snap_to_union(lat, P))
        cols.append(np.full(len(lat), i))
    pts = np.vstack(pts)
    cols = np.concatenate(cols)
    res = colorful_kcenter_arrays(pts, cols, k)
    res.radius = min_cost_radius(res.centers, P)
    res.eps_used = eps_used
    res.samples = pts
    res.sample_colors = cols
    res.alpha_bound = None
    return res


def _snap_to_union(points, P):
    """Nearest point of the union of polygons (ties to the lowest index)."""
    best = np.full(len(points), np.inf)
    out = points.copy()
    for poly in P:
        q = nearest_points_on_polygon(points, poly)
        d = np.hypot(q[:, 0] - points[:, 0], q[:, 1] - points[:, 1])
        better = d < best
        best[better] = d[better]
        out[better] = q[better]
    return out


# --------------------------------------------------------------------------
# composable k-center


def composable_kcenter(points, k: int, L: int = 1, seed: int = 0) -> PointClustering:
    """Two-round k-center: per-partition centers form a summary, which is clustered.

    Points are dealt round-robin into ``L`` parts. ``seed`` offsets the
    starting point of every first-round run.
    """
    pts = _as_points(points)
    if L < 1:
        raise ValueError("L must be >= 1")
    parts = [pts[j::L] for j in range(L)]
    parts = [p for p in parts if len(p)]
    summary = np.vstack([gonzalez_kcenter(p, k, seed % len(p)).centers for p in parts])
    final = gonzalez_kcenter(summary, k, 0)
    d, labels = nearest_center(pts, final.centers)
    return PointClustering(final.centers, float(d.max()), labels, n_samples=len(pts),
                           sample_radius=float(d.max()), alpha_bound=4.0, summary=summary)


__all__ = [
    "PointClustering",
    "GridSample",
    "gonzalez_kcenter",
    "covering_radius",
    "min_cost_radius",
    "max_1center_polygons",
    "sample_polygons",
    "max_kcenter_convex",
    "max_kcenter_arbitrary",
    "colorful_kcenter_exact",
    "colorful_kcenter_arrays",
    "min_kcenter_polygons",
    "composable_kcenter",
    "polygon_pair_distance",
    "triangles_of",
    "ColoredPoint",
]
