"""k-center of segments where the centers are input segments.

Two costs are supported. In ``max`` mode every point of every segment must be
within the radius of a center segment; in ``min`` mode one point per segment
suffices. Both are solved as bicriteria approximations: a finite set of
candidate radii is built by discretizing the segments, and at each radius the
covering question is answered with multi-interval set cover.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .geometry import (
    Segment,
    Stadium,
    clip_parameters,
    normalize_to_unit_box,
    segment_min_distance,
    segment_to_centers_distance,
)
from .setcover import MultiIntervalInstance, solve_with_instance

MODES = ("max", "min")


@dataclass
class RadiiSet:
    radii: list
    eps: float


@dataclass
class SegmentClustering:
    center_indices: list
    radius: float
    mode: str
    frontier: list = field(default_factory=list)
    threshold: float = 0.0  # the candidate radius the cover was built at
    n_atoms: int = 0
    size_bound: int = 0


def _check_segments(S) -> list:
    S = list(S)
    if not S:
        raise ValueError("need at least one segment")
    return S


def max_1center_segments(S: Sequence[Segment]):
    """Best single center among the input segments under the max cost."""
    S = _check_segments(S)
    best_i, best_r = 0, math.inf
    for i, p in enumerate(S):
        r = max(segment_to_centers_distance(s, [p]) for s in S)
        if r < best_r:
            best_i, best_r = i, r
    return best_i, best_r


def min_1center_segments(S: Sequence[Segment]):
    """Best single center among the input segments under the min cost."""
    S = _check_segments(S)
    best_i, best_r = 0, math.inf
    for i, p in enumerate(S):
        r = max(segment_min_distance(s, p) for s in S)
        if r < best_r:
            best_i, best_r = i, r
    return best_i, best_r


def clustering_cost(S: Sequence[Segment], centers: Sequence[Segment], mode: str = "max") -> float:
    if mode == "max":
        return max(segment_to_centers_distance(s, centers) for s in S)
    if mode == "min":
        return max(min(segment_min_distance(s, c) for c in centers) for s in S)
    raise ValueError(f"unknown mode {mode!r}")


def _dedupe_sorted(values, tol=1e-9):
    v = np.sort(np.asarray(values, dtype=float).ravel())
    if not len(v):
        return []
    keep = np.empty(len(v), dtype=bool)
    keep[0] = True
    keep[1:] = np.diff(v) > tol
    return v[keep].tolist()


def min_positive_pairwise_distance(S: Sequence[Segment]) -> float:
    best = math.inf
    for s, c in combinations(S, 2):
        d = segment_min_distance(s, c)
        if 0.0 < d < best:
            best = d
    return best


def discretize(S: Sequence[Segment], step: float) -> np.ndarray:
    """Points along each segment at arclength ``step``, endpoints included."""
    pts = []
    for s in S:
        L = s.length
        if L == 0.0:
            pts.append(tuple(s.a))
            continue
        m = int(math.floor(L / step + 1e-9))
        ts = [i * step / L for i in range(m + 1)]
        if ts[-1] < 1.0 - 1e-12:
            ts.append(1.0)
        pts.extend(tuple(s.at(t)) for t in ts)
    return np.unique(np.asarray(pts, dtype=float), axis=0)


def candidate_radii(S: Sequence[Segment], eps: float, clamp: bool = True,
                    min_step: float | None = None) -> RadiiSet:
    """Pairwise distances among discretization points of the segments.

    The step is ``eps``, lowered to half the smallest positive pairwise
    segment distance when ``clamp`` is set but never below ``min_step``
    (default ``eps / 16``), which keeps the pair count bounded for nearly
    touching segments. Callers are expected to pass segments already scaled
    to the unit box.
    """
    if not eps > 0:
        raise ValueError("eps must be positive")
    S = _check_segments(S)
    if clamp:
        dmin = min_positive_pairwise_distance(S)
        floor = eps / 16.0 if min_step is None else min_step
        if math.isfinite(dmin):
            eps = max(min(eps, dmin / 2.0), floor)
    pts = discretize(S, eps)
    if len(pts) < 2:
        return RadiiSet([], eps)
    iu = np.triu_indices(len(pts), 1)
    d = np.hypot(pts[iu[0], 0] - pts[iu[1], 0], pts[iu[0], 1] - pts[iu[1], 1])
    return RadiiSet(_dedupe_sorted(d), eps)


def radius_ladder(hi: float, eps: float, lo: float = 1e-9) -> list:
    """Geometric radii ``hi / (1 + eps/2)^j`` down to ``lo``.

    Some rung lies within a factor ``1 + eps/2`` above any radius in
    ``[lo, hi]``, whatever the discretization produced.
    """
    if hi <= 0:
        return []
    q = 1.0 + eps / 2.0
    n = int(math.ceil(math.log(hi / lo) / math.log(q)))
    return [hi / q ** j for j in range(n, -1, -1)]


def _parameter_layout(S):
    """Offsets placing segment j's arclength line at [off_j, off_j + len_j]."""
    L = max(s.length for s in S)
    return [j * (L + 1.0) for j in range(len(S))]


def reduce_max_to_cover(S: Sequence[Segment], r: float):
    """Cover every point of every segment by stadiums of chosen segments.

    ``Q_i`` holds, for each segment ``s_j``, the arclength interval of the
    part of ``s_j`` within ``r`` of ``s_i``. Returns the instance, the atom
    instance and the greedy solution.
    """
    S = _check_segments(S)
    if r < 0:
        raise ValueError("radius must be nonnegative")
    offs = _parameter_layout(S)
    sets = []
    for si in S:
        st = Stadium(si, r)
        q = []
        for j, sj in enumerate(S):
            params = clip_parameters(sj, st)
            if params is None:
                continue
            L = sj.length
            q.append((offs[j] + params[0] * L, offs[j] + params[1] * L))
        sets.append(q)
    inst = MultiIntervalInstance(sets)
    ci, sol = solve_with_instance(inst)
    return inst, ci, sol


def reduce_min_to_cover(S: Sequence[Segment], r: float):
    """Cover each segment as a whole once any chosen stadium touches it."""
    S = _check_segments(S)
    if r < 0:
        raise ValueError("radius must be nonnegative")
    offs = _parameter_layout(S)
    sets = []
    for si in S:
        q = [(offs[j], offs[j] + sj.length) for j, sj in enumerate(S)
             if segment_min_distance(si, sj) <= r + 1e-9]
        sets.append(q)
    inst = MultiIntervalInstance(sets)
    ci, sol = solve_with_instance(inst)
    return inst, ci, sol


def size_bound(k: int, n_atoms: int) -> int:
    """Bicriteria center budget k * ceil(ln|U| + 1)."""
    return k * math.ceil(math.log(max(n_atoms, 1)) + 1.0)


def kcenter_segments(S: Sequence[Segment], k: int, eps: float, mode: str = "max",
                     full_frontier: bool = False, normalize: bool = True,
                     budget: str = "bicriteria", search: str = "bisect") -> SegmentClustering:
    """Pick the smallest candidate radius whose greedy cover fits the budget.

    With ``budget="bicriteria"`` the budget is ``k * ceil(ln|U| + 1)``
    centers, |U| being the atom count of the set-cover instance at that
    radius; ``budget="strict"`` allows only ``k``. Candidates are 0, the
    discretized radii and a geometric ladder. ``search="scan"`` walks them
    upward and stops at the first accepted one; ``"bisect"`` binary-searches
    for an accepted radius whose predecessor is rejected. Every radius at or
    above the optimum is accepted, so both land at or below the first
    candidate that is. ``full_frontier`` evaluates and records every radius.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if budget not in ("bicriteria", "strict"):
        raise ValueError(f"unknown budget {budget!r}")
    if search not in ("bisect", "scan"):
        raise ValueError(f"unknown search {search!r}")
    if k < 1:
        raise ValueError("k must be >= 1")
    if not eps > 0:
        raise ValueError("eps must be positive")
    S = _check_segments(S)
    if normalize:
        work, tf = normalize_to_unit_box(S)
    else:
        work, tf = S, None
    R = candidate_radii(work, eps)
    top = R.radii[-1] if R.radii else 0.0
    radii = _dedupe_sorted([0.0] + R.radii + radius_ladder(top, eps))
    reduce = reduce_max_to_cover if mode == "max" else reduce_min_to_cover
    to_orig = tf.radius_to_original if tf else (lambda r: r)

    frontier = {}
    cache = {}

    def probe(i):
        if i not in cache:
            _, ci, sol = reduce(work, radii[i])
            bound = size_bound(k, len(ci.atoms)) if budget == "bicriteria" else k
            cache[i] = (ci, sol, bound, sol.size <= bound)
            frontier[i] = (to_orig(radii[i]), sol.size)
        return cache[i][3]

    best = None
    if full_frontier or search == "scan":
        for i in range(len(radii)):
            if probe(i) and best is None:
                best = i
                if not full_frontier:
                    break
    elif probe(0):
        best = 0
    else:
        lo, hi = 0, len(radii) - 1
        if not probe(hi):  # unreachable: at the top radius one segment covers all
            raise RuntimeError("no candidate radius produced a cover within budget")
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if probe(mid):
                hi = mid
            else:
                lo = mid
        best = hi
    if best is None:
        raise RuntimeError("no candidate radius produced a cover within budget")
    ci, sol, bound, _ = cache[best]
    centers = sorted(sol.chosen)
    radius = clustering_cost(S, [S[i] for i in centers], mode)
    return SegmentClustering(centers, radius, mode, [frontier[i] for i in sorted(frontier)],
                             to_orig(radii[best]), len(ci.atoms), bound)


def max_kcenter_segments(S, k: int, eps: float, **kw) -> SegmentClustering:
    return kcenter_segments(S, k, eps, mode="max", **kw)


def min_kcenter_segments(S, k: int, eps: float, **kw) -> SegmentClustering:
    return kcenter_segments(S, k, eps, mode="min", **kw)


def assign_segments(S: Sequence[Segment], centers: Sequence[Segment], mode: str = "max") -> np.ndarray:
    """Index of the nearest center for each segment under the given cost."""
    out = []
    for s in S:
        if mode == "max":
            d = [segment_to_centers_distance(s, [c]) for c in centers]
        else:
            d = [segment_min_distance(s, c) for c in centers]
        out.append(int(np.argmin(d)))
    return np.asarray(out, dtype=int)

