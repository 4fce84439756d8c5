"""Brute-force reference solvers.

These exist to check the approximation algorithms, so they deliberately
share nothing with them beyond the ``Segment`` and ``Polygon`` containers:
distances are re-derived by dense sampling and membership uses a separate
crossing-number test. All searches are exhaustive and refuse (raise) rather
than truncate when the search space exceeds their caps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Sequence

import numpy as np


class OracleLimitError(ValueError):
    """The requested search is larger than the oracle will enumerate."""


@dataclass
class OracleReport:
    optimum: float
    witness: Any
    search_space_size: int
    resolution: float = 0.0
    error_bound: float = 0.0


def brute_set_cover(ci) -> OracleReport:
    """Smallest number of ``ci.covers`` whose union is every atom of ``ci``."""
    return _brute_cover([frozenset(c) for c in ci.covers], len(ci.atoms))


def _brute_cover(covers, n_atoms):
    if len(covers) > 20:
        raise OracleLimitError("brute_set_cover handles at most 20 sets")
    target = frozenset(range(n_atoms))
    searched = 0
    for size in range(0, len(covers) + 1):
        for combo in combinations(range(len(covers)), size):
            searched += 1
            got = frozenset().union(*(covers[i] for i in combo)) if combo else frozenset()
            if got >= target:
                return OracleReport(float(size), list(combo), searched)
    raise ValueError("infeasible instance")


def brute_set_cover_elements(universe_size: int, sets: Sequence) -> OracleReport:
    """Abstract set cover over elements 1..n (elements not in any set are ignored)."""
    idx = {e: i for i, e in enumerate(sorted({e for s in sets for e in s}))}
    return _brute_cover([frozenset(idx[e] for e in s) for s in sets], len(idx))


def brute_interval_cover(sets: Sequence[Sequence]) -> OracleReport:
    """Exact multi-interval set cover by checking subsets on a sweep.

    A family covers the union iff every elementary gap between sorted
    endpoints (and every isolated endpoint) that some interval covers is
    covered by the family. Independent of the atomic decomposition module.
    """
    if len(sets) > 20:
        raise OracleLimitError("brute_interval_cover handles at most 20 sets")
    ivs = [[(float(a), float(b)) for a, b in q] for q in sets]
    ends = sorted({e for q in ivs for iv in q for e in iv})
    probes = list(ends) + [(a + b) / 2 for a, b in zip(ends, ends[1:])]

    def hit(x, family):
        return any(a <= x <= b for q in family for a, b in q)

    need = [x for x in probes if hit(x, ivs)]
    searched = 0
    for size in range(0, len(ivs) + 1):
        for combo in combinations(range(len(ivs)), size):
            searched += 1
            fam = [ivs[i] for i in combo]
            if all(hit(x, fam) for x in need):
                return OracleReport(float(size), list(combo), searched)
    raise ValueError("infeasible instance")


# --------------------------------------------------------------------------
# segments


def _sample_segment(s, resolution):
    a = np.asarray(s.a, dtype=float)
    b = np.asarray(s.b, dtype=float)
    L = float(np.hypot(*(b - a)))
    m = max(1, int(math.ceil(L / resolution)))
    t = np.linspace(0.0, 1.0, m + 1)
    return a + t[:, None] * (b - a)


def _pt_seg(pts, s):
    a = np.asarray(s.a, dtype=float)
    b = np.asarray(s.b, dtype=float)
    d = b - a
    dd = float(d @ d)
    if dd == 0.0:
        return np.hypot(pts[:, 0] - a[0], pts[:, 1] - a[1])
    t = np.clip(((pts - a) @ d) / dd, 0.0, 1.0)
    proj = a + t[:, None] * d
    return np.hypot(pts[:, 0] - proj[:, 0], pts[:, 1] - proj[:, 1])


def _seg_seg(s, c, resolution):
    """Closest distance between segments by sampling both against each other."""
    ps = _sample_segment(s, resolution)
    pc = _sample_segment(c, resolution)
    return min(float(_pt_seg(ps, c).min()), float(_pt_seg(pc, s).min()))


def sampled_directed_distance(s, centers, resolution: float) -> float:
    pts = _sample_segment(s, resolution)
    d = np.min([_pt_seg(pts, c) for c in centers], axis=0)
    return float(d.max())


def brute_kcenter_segments(S: Sequence, k: int, mode: str = "max",
                           resolution: float = 1e-3) -> OracleReport:
    """Best k input segments as centers, by enumeration of all k-subsets.

    In max mode the cost is sampled at ``resolution`` along each segment, so
    the reported optimum can undershoot the true one by up to the reported
    ``error_bound``. In min mode the segment-to-segment distance is exact
    up to the same sampling bound.
    """
    S = list(S)
    n = len(S)
    k = min(k, n)
    space = math.comb(n, k)
    if space > 100_000:
        raise OracleLimitError(f"C({n},{k}) = {space} exceeds 1e5")
    if mode == "max":
        samples = [_sample_segment(s, resolution) for s in S]
        # cost[j][i] = max over samples of s_j of distance to center i
        per = [np.stack([_pt_seg(p, c) for c in S]) for p in samples]
    elif mode == "min":
        M = np.array([[_seg_seg(s, c, resolution) for c in S] for s in S])
    else:
        raise ValueError(f"unknown mode {mode!r}")
    best, arg = math.inf, None
    for combo in combinations(range(n), k):
        if mode == "max":
            cost = max(float(p[list(combo)].min(axis=0).max()) for p in per)
        else:
            cost = float(M[:, list(combo)].min(axis=1).max())
        if cost < best:
            best, arg = cost, list(combo)
    return OracleReport(best, arg, space, resolution, 2.0 * resolution)


# --------------------------------------------------------------------------
# points


def brute_kcenter_points(points, k: int, candidate_centers=None) -> OracleReport:
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    cand = pts if candidate_centers is None else np.asarray(candidate_centers, dtype=float).reshape(-1, 2)
    k = min(k, len(cand))
    space = math.comb(len(cand), k)
    if space > 1_000_000:
        raise OracleLimitError(f"C({len(cand)},{k}) = {space} exceeds 1e6")
    D = np.hypot(pts[:, None, 0] - cand[None, :, 0], pts[:, None, 1] - cand[None, :, 1])
    best, arg = math.inf, None
    for combo in combinations(range(len(cand)), k):
        cost = float(D[:, list(combo)].min(axis=1).max())
        if cost < best:
            best, arg = cost, list(combo)
    return OracleReport(best, arg, space)


def brute_colorful_kcenter(points, colors, k: int) -> OracleReport:
    """Unpruned search: every k-subset of points, every color needs one point in range."""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    colors = np.asarray(colors)
    k = min(k, len(pts))
    space = math.comb(len(pts), k)
    if space > 1_000_000:
        raise OracleLimitError(f"C({len(pts)},{k}) = {space} exceeds 1e6")
    D = np.hypot(pts[:, None, 0] - pts[None, :, 0], pts[:, None, 1] - pts[None, :, 1])
    groups = [np.flatnonzero(colors == c) for c in sorted(set(colors.tolist()))]
    best, arg = math.inf, None
    for combo in combinations(range(len(pts)), k):
        near = D[list(combo)].min(axis=0)
        cost = max(float(near[g].min()) for g in groups)
        if cost < best:
            best, arg = cost, list(combo)
    return OracleReport(best, arg, space)


# --------------------------------------------------------------------------
# polygons


def _inside(pts, ring):
    """Crossing-number test, boundary counted inside via a distance check."""
    x, y = pts[:, 0], pts[:, 1]
    n = len(ring)
    if n < 3:
        return np.zeros(len(pts), dtype=bool)
    res = np.zeros(len(pts), dtype=bool)
    j = n - 1
    for i in range(n):
        xi, yi = ring[i]
        xj, yj = ring[j]
        cond = (yi > y) != (yj > y)
        with np.errstate(divide="ignore", invalid="ignore"):
            xint = (xj - xi) * (y - yi) / (yj - yi) + xi
        res ^= cond & (x < xint)
        j = i
    return res


def _dist_to_region(pts, poly):
    ring = np.asarray(poly.vertices, dtype=float).reshape(-1, 2)
    n = len(ring)
    if n == 1:
        d = np.hypot(pts[:, 0] - ring[0, 0], pts[:, 1] - ring[0, 1])
    else:
        edges = [(ring[i], ring[(i + 1) % n]) for i in range(n if n >= 3 else 1)]
        d = np.full(len(pts), np.inf)
        for a, b in edges:
            e = b - a
            ee = float(e @ e)
            t = np.clip(((pts - a) @ e) / ee, 0.0, 1.0) if ee else np.zeros(len(pts))
            q = a + t[:, None] * e
            d = np.minimum(d, np.hypot(pts[:, 0] - q[:, 0], pts[:, 1] - q[:, 1]))
    d[_inside(pts, ring)] = 0.0
    return d


def polygon_region_samples(poly, resolution: float) -> np.ndarray:
    """Lattice points inside the polygon plus points along its boundary."""
    ring = np.asarray(poly.vertices, dtype=float).reshape(-1, 2)
    lo, hi = ring.min(axis=0), ring.max(axis=0)
    xs = np.arange(lo[0], hi[0] + resolution * 0.5, resolution)
    ys = np.arange(lo[1], hi[1] + resolution * 0.5, resolution)
    gx, gy = np.meshgrid(xs, ys)
    lat = np.column_stack([gx.ravel(), gy.ravel()])
    lat = lat[_dist_to_region(lat, poly) <= 1e-9]
    n = len(ring)
    bnd = [ring]
    for i in range(n if n >= 3 else n - 1):
        a, b = ring[i], ring[(i + 1) % n]
        m = max(1, int(math.ceil(float(np.hypot(*(b - a))) / resolution)))
        t = np.linspace(0.0, 1.0, m + 1)[:, None]
        bnd.append(a + t * (b - a))
    return np.unique(np.vstack([lat] + bnd), axis=0)


def brute_polygon_kcenter(P: Sequence, k: int, grid_resolution: float, mode: str = "max",
                          max_candidates: int = 1000) -> OracleReport:
    """Exhaustive k-center of polygons with centers from a grid inside them.

    Candidates are samples of the polygons at ``grid_resolution``; the
    objective is evaluated on samples at half that resolution. In min mode
    the objective is, per polygon, the distance to its closest sample.
    """
    P = list(P)
    cand = np.unique(np.vstack([polygon_region_samples(p, grid_resolution) for p in P]), axis=0)
    if len(cand) > max_candidates:
        raise OracleLimitError(f"{len(cand)} candidates exceeds {max_candidates}")
    k = min(k, len(cand))
    space = math.comb(len(cand), k)
    if space > 1_000_000:
        raise OracleLimitError(f"C({len(cand)},{k}) = {space} exceeds 1e6")
    evals = [polygon_region_samples(p, grid_resolution / 2.0) for p in P]
    if mode == "max":
        E = np.vstack(evals)
        D = np.hypot(cand[:, None, 0] - E[None, :, 0], cand[:, None, 1] - E[None, :, 1])
    elif mode == "min":
        D = np.stack([_dist_to_region(cand, p) for p in P], axis=1)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    best, arg = _best_subset(D, k)
    return OracleReport(best, cand[arg].tolist(), space, grid_resolution, grid_resolution)


def _best_subset(D, k):
    """min over k-subsets of rows of max over columns of the row-wise min."""
    n = len(D)
    if k == 1:
        costs = D.max(axis=1)
        i = int(np.argmin(costs))
        return float(costs[i]), [i]
    if k == 2:
        best, arg = math.inf, None
        for i in range(n - 1):
            costs = np.minimum(D[i][None, :], D[i + 1:]).max(axis=1)
            j = int(np.argmin(costs))
            if costs[j] < best:
                best, arg = float(costs[j]), [i, i + 1 + j]
        return best, arg
    best, arg = math.inf, None
    for combo in combinations(range(n), k):
        cost = float(D[list(combo)].min(axis=0).max())
        if cost < best:
            best, arg = cost, list(combo)
    return best, arg
