"""Planar primitives shared by every clustering routine.

Points are plain ``(x, y)`` tuples (``Point`` is a NamedTuple so either form
works). Segments, polygons, disks and stadiums are small frozen dataclasses.
Everything here is float arithmetic with a fixed absolute tolerance ``TOL``
for boundary predicates.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np

TOL = 1e-9


class Point(NamedTuple):
    x: float
    y: float


def as_point(p) -> Point:
    x, y = float(p[0]), float(p[1])
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError(f"non-finite coordinate in {p!r}")
    return Point(x, y)


def dist(p, q) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self):
        object.__setattr__(self, "a", as_point(self.a))
        object.__setattr__(self, "b", as_point(self.b))

    @property
    def length(self) -> float:
        return dist(self.a, self.b)

    @property
    def is_degenerate(self) -> bool:
        return self.a == self.b

    def at(self, t: float) -> Point:
        return Point(self.a.x + t * (self.b.x - self.a.x),
                     self.a.y + t * (self.b.y - self.a.y))


@dataclass(frozen=True)
class Polygon:
    """A simple polygon stored counterclockwise.

    One- and two-vertex polygons are legal and stand for a point and a
    segment. Consecutive duplicate vertices are dropped on construction and
    clockwise input is reversed. Simplicity is not checked here (it is
    O(v^2)); ``is_simple`` does that on demand.
    """

    vertices: tuple

    def __post_init__(self):
        pts = [as_point(v) for v in self.vertices]
        if not pts:
            raise ValueError("polygon needs at least one vertex")
        ring = []
        for p in pts:
            if not ring or p != ring[-1]:
                ring.append(p)
        while len(ring) > 1 and ring[0] == ring[-1]:
            ring.pop()
        if len(ring) >= 3 and signed_area(ring) < 0:
            ring.reverse()
        object.__setattr__(self, "vertices", tuple(ring))

    def __len__(self):
        return len(self.vertices)

    @property
    def area(self) -> float:
        return abs(signed_area(self.vertices))

    def edges(self):
        v = self.vertices
        if len(v) == 1:
            return [Segment(v[0], v[0])]
        if len(v) == 2:
            return [Segment(v[0], v[1])]
        return [Segment(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def bbox(self):
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.vertices, dtype=float).reshape(-1, 2)


@dataclass(frozen=True)
class Disk:
    center: Point
    radius: float

    def contains(self, p, tol: float = TOL) -> bool:
        return dist(self.center, p) <= self.radius + tol


@dataclass(frozen=True)
class Stadium:
    """Minkowski sum of ``core`` with a closed disk of ``radius``."""

    core: Segment
    radius: float

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("stadium radius must be nonnegative")

    def bbox(self):
        r = self.radius
        a, b = self.core.a, self.core.b
        return min(a.x, b.x) - r, min(a.y, b.y) - r, max(a.x, b.x) + r, max(a.y, b.y) + r


@dataclass(frozen=True)
class AffineNormalization:
    """Uniform scale and translation: ``p -> (p - offset) * scale``."""

    scale: float = 1.0
    offset: Point = Point(0.0, 0.0)

    def apply(self, p) -> Point:
        return Point((p[0] - self.offset[0]) * self.scale, (p[1] - self.offset[1]) * self.scale)

    def invert(self, p) -> Point:
        return Point(p[0] / self.scale + self.offset[0], p[1] / self.scale + self.offset[1])

    def radius_to_original(self, r: float) -> float:
        return r / self.scale

    def radius_to_normalized(self, r: float) -> float:
        return r * self.scale


Geometry = Union[Point, Segment, Polygon]


def signed_area(ring: Sequence) -> float:
    n = len(ring)
    if n < 3:
        return 0.0
    s = 0.0
    for i in range(n):
        x1, y1 = ring[i]
        x2, y2 = ring[(i + 1) % n]
        s += x1 * y2 - x2 * y1
    return 0.5 * s


def triangle_area(t) -> float:
    return 0.5 * abs(cross(t[0], t[1], t[2]))


# --------------------------------------------------------------------------
# distances


def point_segment_distance(p, s: Segment) -> float:
    return dist(p, closest_point_on_segment(p, s))


def closest_point_on_segment(p, s: Segment) -> Point:
    ax, ay = s.a
    dx, dy = s.b.x - ax, s.b.y - ay
    dd = dx * dx + dy * dy
    if dd == 0.0:
        return s.a
    t = ((p[0] - ax) * dx + (p[1] - ay) * dy) / dd
    t = min(1.0, max(0.0, t))
    return Point(ax + t * dx, ay + t * dy)


def _orient(a, b, c) -> int:
    v = cross(a, b, c)
    return (v > 0) - (v < 0)


def _on_segment(a, b, p) -> bool:
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segments_intersect(s: Segment, c: Segment) -> bool:
    p1, p2, q1, q2 = s.a, s.b, c.a, c.b
    o1, o2 = _orient(p1, p2, q1), _orient(p1, p2, q2)
    o3, o4 = _orient(q1, q2, p1), _orient(q1, q2, p2)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and _on_segment(p1, p2, q1):
        return True
    if o2 == 0 and _on_segment(p1, p2, q2):
        return True
    if o3 == 0 and _on_segment(q1, q2, p1):
        return True
    if o4 == 0 and _on_segment(q1, q2, p2):
        return True
    return False


def segment_min_distance(s: Segment, c: Segment) -> float:
    """Closest-pair distance between two segments (0 when they touch)."""
    if segments_intersect(s, c):
        return 0.0
    return min(point_segment_distance(s.a, c), point_segment_distance(s.b, c),
               point_segment_distance(c.a, s), point_segment_distance(c.b, s))


def _sq_pieces(s: Segment, c: Segment):
    """Squared distance from ``s(t)`` to ``c`` as quadratic pieces over t in [0, 1].

    Returns a list of ``(t_lo, t_hi, (q2, q1, q0))`` with the value
    ``q2*t^2 + q1*t + q0`` on each piece.
    """
    px, py = s.a
    vx, vy = s.b.x - px, s.b.y - py

    def to_point(a):
        wx, wy = px - a[0], py - a[1]
        return (vx * vx + vy * vy, 2.0 * (wx * vx + wy * vy), wx * wx + wy * wy)

    dx, dy = c.b.x - c.a.x, c.b.y - c.a.y
    dd = dx * dx + dy * dy
    if dd == 0.0:
        return [(0.0, 1.0, to_point(c.a))]
    # projection parameter of s(t) on c's line: u(t) = u0 + u1 t
    wx, wy = px - c.a.x, py - c.a.y
    u0 = (wx * dx + wy * dy) / dd
    u1 = (vx * dx + vy * dy) / dd
    qa = to_point(c.a)
    # perpendicular part: |w + tv|^2 - dd * u(t)^2
    qline = (qa[0] - dd * u1 * u1, qa[1] - 2.0 * dd * u0 * u1, qa[2] - dd * u0 * u0)
    qb = to_point(c.b)
    if u1 == 0.0:
        q = qa if u0 <= 0.0 else qb if u0 >= 1.0 else qline
        return [(0.0, 1.0, q)]
    ta, tb = -u0 / u1, (1.0 - u0) / u1
    # region order along t: u increases with t iff u1 > 0
    cuts = sorted((ta, tb))
    regions = [qa, qline, qb] if u1 > 0 else [qb, qline, qa]
    bounds = [-math.inf, cuts[0], cuts[1], math.inf]
    pieces = []
    for i, q in enumerate(regions):
        lo, hi = max(0.0, bounds[i]), min(1.0, bounds[i + 1])
        if lo < hi:
            pieces.append((lo, hi, q))
    return pieces


def _eval_q(q, t):
    return (q[0] * t + q[1]) * t + q[2]


def _quad_roots(a, b, c, lo, hi):
    """Real roots of a t^2 + b t + c = 0 inside [lo, hi]."""
    scale = max(abs(a), abs(b), abs(c), 1e-300)
    if abs(a) <= 1e-14 * scale:
        if abs(b) <= 1e-14 * scale:
            return []
        roots = [-c / b]
    else:
        disc = b * b - 4.0 * a * c
        if disc < 0.0:
            if disc > -1e-12 * scale * scale:
                disc = 0.0
            else:
                return []
        sq = math.sqrt(disc)
        q = -0.5 * (b + math.copysign(sq, b))
        roots = [q / a]
        if q != 0.0:
            roots.append(c / q)
        else:
            roots.append(-b / (2.0 * a))
    return [t for t in roots if lo - 1e-12 <= t <= hi + 1e-12]


def _envelope_value(pieces_per_center, t):
    best = math.inf
    for pieces in pieces_per_center:
        for lo, hi, q in pieces:
            if lo - 1e-15 <= t <= hi + 1e-15:
                best = min(best, _eval_q(q, t))
                break
    return max(best, 0.0)


def segment_to_centers_distance(s: Segment, centers: Sequence[Segment]) -> float:
    """Directed distance max_{p in s} min_{c in centers} d(p, c), in closed form.

    Each center contributes a convex distance profile along ``s``; the lower
    envelope of those profiles peaks at an endpoint of ``s`` or where two
    profiles cross, so only those parameters are evaluated.
    """
    centers = list(centers)
    if not centers:
        raise ValueError("no centers")
    if s.is_degenerate:
        return min(point_segment_distance(s.a, c) for c in centers)
    pieces = [_sq_pieces(s, c) for c in centers]
    cand = {0.0, 1.0}
    for pc in pieces:
        for lo, hi, _ in pc:
            cand.add(lo)
            cand.add(hi)
    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            for lo1, hi1, q1 in pieces[i]:
                for lo2, hi2, q2 in pieces[j]:
                    lo, hi = max(lo1, lo2), min(hi1, hi2)
                    if lo > hi:
                        continue
                    diff = (q1[0] - q2[0], q1[1] - q2[1], q1[2] - q2[2])
                    for t in _quad_roots(*diff, lo, hi):
                        cand.add(min(1.0, max(0.0, t)))
    best = max(_envelope_value(pieces, t) for t in cand)
    return math.sqrt(best)


# --------------------------------------------------------------------------
# stadiums


def stadium_contains(st: Stadium, p, tol: float = TOL) -> bool:
    return point_segment_distance(p, st.core) <= st.radius + tol


def clip_parameters(s: Segment, st: Stadium, tol: float = TOL):
    """Parameter interval ``(t0, t1)`` of the part of ``s`` inside ``st``, or None."""
    r2 = st.radius * st.radius
    if s.is_degenerate:
        return (0.0, 1.0) if stadium_contains(st, s.a, tol) else None
    pieces = _sq_pieces(s, st.core)
    # minimizer of the convex profile
    tmin, vmin = 0.0, math.inf
    for lo, hi, q in pieces:
        cands = [lo, hi]
        if q[0] > 0:
            v = -q[1] / (2.0 * q[0])
            if lo < v < hi:
                cands.append(v)
        for t in cands:
            val = _eval_q(q, t)
            if val < vmin:
                tmin, vmin = t, val
    if math.sqrt(max(vmin, 0.0)) > st.radius + tol:
        return None

    def boundary(lo_t, hi_t, want_low):
        roots = []
        for lo, hi, q in pieces:
            a, b = max(lo, lo_t), min(hi, hi_t)
            if a > b:
                continue
            roots.extend(_quad_roots(q[0], q[1], q[2] - r2, a, b))
        roots = [min(hi_t, max(lo_t, t)) for t in roots]
        if not roots:
            # tangential contact within tolerance
            return tmin
        return min(roots) if want_low else max(roots)

    def inside(t):
        return math.sqrt(max(_envelope_value([pieces], t), 0.0)) <= st.radius + tol

    t0 = 0.0 if inside(0.0) else boundary(0.0, tmin, True)
    t1 = 1.0 if inside(1.0) else boundary(tmin, 1.0, False)
    if t0 > t1:
        t0 = t1 = tmin
    return t0, t1


def clip_segment_by_stadium(s: Segment, st: Stadium) -> list:
    """Maximal sub-segment of ``s`` inside the closed stadium (0 or 1 pieces)."""
    params = clip_parameters(s, st)
    if params is None:
        return []
    t0, t1 = params
    if t0 == 0.0 and t1 == 1.0:
        return [s]
    return [Segment(s.at(t0), s.at(t1))]


# --------------------------------------------------------------------------
# smallest enclosing disk


def _disk_two(a, b) -> Disk:
    c = Point((a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0)
    return Disk(c, max(dist(c, a), dist(c, b)))


def _disk_three(a, b, c):
    ox = (min(a[0], b[0], c[0]) + max(a[0], b[0], c[0])) / 2.0
    oy = (min(a[1], b[1], c[1]) + max(a[1], b[1], c[1])) / 2.0
    ax, ay = a[0] - ox, a[1] - oy
    bx, by = b[0] - ox, b[1] - oy
    cx, cy = c[0] - ox, c[1] - oy
    d = (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by)) * 2.0
    if d == 0.0:
        return None
    x = ox + ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay)
              + (cx * cx + cy * cy) * (ay - by)) / d
    y = oy + ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx)
              + (cx * cx + cy * cy) * (bx - ax)) / d
    center = Point(x, y)
    return Disk(center, max(dist(center, a), dist(center, b), dist(center, c)))


def _in_disk(d, p) -> bool:
    return d is not None and dist(d.center, p) <= d.radius * (1 + 1e-12) + 1e-12


def smallest_enclosing_disk(points: Iterable, seed: int | None = 0) -> Disk:
    """Welzl-style randomized incremental smallest enclosing disk.

    Expected linear time. ``seed`` fixes the shuffle; pass None for a fresh
    random order.
    """
    pts = [as_point(p) for p in points]
    if not pts:
        raise ValueError("smallest_enclosing_disk of an empty point set")
    random.Random(seed).shuffle(pts)
    d = None
    for i, p in enumerate(pts):
        if d is None or not _in_disk(d, p):
            d = _sed_one(pts[: i + 1], p)
    return d


def _sed_one(pts, p):
    d = Disk(p, 0.0)
    for i, q in enumerate(pts):
        if not _in_disk(d, q):
            if d.radius == 0.0:
                d = _disk_two(p, q)
            else:
                d = _sed_two(pts[: i + 1], p, q)
    return d


def _sed_two(pts, p, q):
    circ = _disk_two(p, q)
    left = right = None
    for r in pts:
        if _in_disk(circ, r):
            continue
        side = cross(p, q, r)
        c = _disk_three(p, q, r)
        if c is None:
            continue
        cside = cross(p, q, c.center)
        if side > 0 and (left is None or cside > cross(p, q, left.center)):
            left = c
        elif side < 0 and (right is None or cside < cross(p, q, right.center)):
            right = c
    if left is None and right is None:
        return circ
    if left is None:
        return right
    if right is None:
        return left
    return left if left.radius <= right.radius else right


# --------------------------------------------------------------------------
# hulls and triangulation


def convex_hull(points: Iterable) -> Polygon:
    """Andrew's monotone chain; collinear boundary points are dropped."""
    pts = sorted(set(as_point(p) for p in points))
    if not pts:
        raise ValueError("convex hull of an empty point set")
    if len(pts) <= 2:
        return Polygon(tuple(pts))
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    ring = lower[:-1] + upper[:-1]
    return Polygon(tuple(ring))


def is_convex(poly: Polygon) -> bool:
    v = poly.vertices
    n = len(v)
    if n <= 3:
        return True
    return all(cross(v[i], v[(i + 1) % n], v[(i + 2) % n]) >= -TOL for i in range(n))


def is_simple(poly: Polygon) -> bool:
    v = poly.vertices
    n = len(v)
    if n <= 3:
        return True
    edges = poly.edges()
    for i in range(n):
        # consecutive edges may only share their common vertex
        a, b, c = v[i - 1], v[i], v[(i + 1) % n]
        if _orient(a, b, c) == 0 and (a[0] - b[0]) * (c[0] - b[0]) + (a[1] - b[1]) * (c[1] - b[1]) > 0:
            return False
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if segments_intersect(edges[i], edges[j]):
                return False
    return True


def _point_in_triangle(p, a, b, c) -> bool:
    return cross(a, b, p) >= 0 and cross(b, c, p) >= 0 and cross(c, a, p) >= 0


def triangulate(poly: Polygon) -> list:
    """Ear-clipping triangulation of a simple polygon into v-2 triangles.

    Triangles are returned as CCW vertex triples. Collinear vertices are
    clipped last, as zero-area ears.
    """
    if len(poly) < 3:
        raise ValueError("triangulation needs at least 3 vertices")
    if not is_simple(poly):
        raise ValueError("not simple")
    idx = list(range(len(poly)))
    v = poly.vertices
    tris = []
    while len(idx) > 3:
        m = len(idx)
        ear = None
        for k in range(m):
            i0, i1, i2 = idx[k - 1], idx[k], idx[(k + 1) % m]
            a, b, c = v[i0], v[i1], v[i2]
            if cross(a, b, c) <= 0:
                continue
            blocked = False
            for j in idx:
                if j in (i0, i1, i2):
                    continue
                if _point_in_triangle(v[j], a, b, c):
                    blocked = True
                    break
            if not blocked:
                ear = k
                break
        if ear is None:
            # only flat or reflex corners remain; drop a flat one
            for k in range(m):
                if abs(cross(v[idx[k - 1]], v[idx[k]], v[idx[(k + 1) % m]])) <= TOL:
                    ear = k
                    break
        if ear is None:
            raise ValueError("not simple")
        i0, i1, i2 = idx[ear - 1], idx[ear], idx[(ear + 1) % m]
        tris.append((v[i0], v[i1], v[i2]))
        del idx[ear]
    tris.append(tuple(v[i] for i in idx))
    return tris


# --------------------------------------------------------------------------
# polygon membership and projection


def point_in_polygon(p, poly: Polygon, tol: float = TOL) -> bool:
    """Closed-region membership (boundary counts as inside)."""
    return polygon_distance(p, poly) <= tol


def _crossing_inside(p, ring) -> bool:
    x, y = p
    inside = False
    n = len(ring)
    for i in range(n):
        x1, y1 = ring[i]
        x2, y2 = ring[(i + 1) % n]
        if (y1 > y) != (y2 > y):
            xi = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if xi > x:
                inside = not inside
    return inside


def polygon_distance(p, poly: Polygon) -> float:
    """Distance from p to the filled polygon (0 inside)."""
    if len(poly) >= 3 and _crossing_inside(p, poly.vertices):
        return 0.0
    return min(point_segment_distance(p, e) for e in poly.edges())


def nearest_point_on_polygon(p, poly: Polygon) -> Point:
    """p itself when inside the filled polygon, else the closest boundary point."""
    p = as_point(p)
    if len(poly) >= 3 and _crossing_inside(p, poly.vertices):
        return p
    best, best_d = None, math.inf
    for e in poly.edges():
        q = closest_point_on_segment(p, e)
        d = dist(p, q)
        if d < best_d:
            best, best_d = q, d
    if best_d <= TOL:
        return p
    return best


def polygon_distances(points: np.ndarray, poly: Polygon) -> np.ndarray:
    """Vectorised ``polygon_distance`` for an (m, 2) array."""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    ring = poly.as_array()
    d = _edge_distances(pts, ring, closed=len(ring) >= 3)
    if len(ring) >= 3:
        d[_crossing_inside_many(pts, ring)] = 0.0
    return d


def _edge_distances(pts, ring, closed):
    if len(ring) == 1:
        return np.hypot(pts[:, 0] - ring[0, 0], pts[:, 1] - ring[0, 1])
    a = ring
    b = np.roll(ring, -1, axis=0) if closed else ring[1:]
    if not closed:
        a = ring[:-1]
    best = np.full(len(pts), np.inf)
    for (ax, ay), (bx, by) in zip(a, b):
        dx, dy = bx - ax, by - ay
        dd = dx * dx + dy * dy
        if dd == 0:
            t = np.zeros(len(pts))
        else:
            t = np.clip(((pts[:, 0] - ax) * dx + (pts[:, 1] - ay) * dy) / dd, 0.0, 1.0)
        np.minimum(best, np.hypot(pts[:, 0] - (ax + t * dx), pts[:, 1] - (ay + t * dy)), out=best)
    return best


def _crossing_inside_many(pts, ring):
    x, y = pts[:, 0], pts[:, 1]
    inside = np.zeros(len(pts), dtype=bool)
    n = len(ring)
    for i in range(n):
        x1, y1 = ring[i]
        x2, y2 = ring[(i + 1) % n]
        if y1 == y2:
            continue
        straddle = (y1 > y) != (y2 > y)
        with np.errstate(over="ignore", invalid="ignore"):  # only straddling rows matter
            xi = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
        inside ^= straddle & (xi > x)
    return inside


def nearest_points_on_polygon(points: np.ndarray, poly: Polygon) -> np.ndarray:
    """Vectorised ``nearest_point_on_polygon`` (ties go to the lowest edge)."""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    ring = poly.as_array()
    out = pts.copy()
    if len(ring) == 1:
        out[:] = ring[0]
        return out
    closed = len(ring) >= 3
    a = ring if closed else ring[:1]
    b = np.roll(ring, -1, axis=0) if closed else ring[1:]
    best = np.full(len(pts), np.inf)
    for (ax, ay), (bx, by) in zip(a, b):
        dx, dy = bx - ax, by - ay
        dd = dx * dx + dy * dy
        t = np.zeros(len(pts)) if dd == 0 else np.clip(
            ((pts[:, 0] - ax) * dx + (pts[:, 1] - ay) * dy) / dd, 0.0, 1.0)
        qx, qy = ax + t * dx, ay + t * dy
        d = np.hypot(pts[:, 0] - qx, pts[:, 1] - qy)
        better = d < best
        best[better] = d[better]
        out[better, 0] = qx[better]
        out[better, 1] = qy[better]
    keep = best <= TOL
    if closed:
        keep |= _crossing_inside_many(pts, ring)
    out[keep] = pts[keep]
    return out


# --------------------------------------------------------------------------
# grids and normalization


def _region_distances(pts, region):
    """Distance to the region; 0 inside, stadium radius subtracted."""
    if isinstance(region, Stadium):
        core = _edge_distances(pts, np.array([region.core.a, region.core.b], dtype=float), closed=False)
        return np.maximum(core - region.radius, 0.0)
    return polygon_distances(pts, region)


def lattice_in_bbox(bbox, eps: float, origin) -> np.ndarray:
    """Lattice points ``origin + (i*eps, j*eps)`` inside a bbox, row-major."""
    x0, y0, x1, y1 = bbox
    ox, oy = origin
    i_lo = math.ceil((x0 - ox) / eps - 1e-9)
    i_hi = math.floor((x1 - ox) / eps + 1e-9)
    j_lo = math.ceil((y0 - oy) / eps - 1e-9)
    j_hi = math.floor((y1 - oy) / eps + 1e-9)
    if i_hi < i_lo or j_hi < j_lo:
        return np.empty((0, 2))
    xs = ox + np.arange(i_lo, i_hi + 1) * eps
    ys = oy + np.arange(j_lo, j_hi + 1) * eps
    gx, gy = np.meshgrid(xs, ys)
    return np.column_stack([gx.ravel(), gy.ravel()])


def grid_points_in_region(region, eps: float, origin=(0.0, 0.0), pad: float = 0.0,
                          max_points: int = 5_000_000) -> np.ndarray:
    """Lattice points inside (or on) ``region``, enumerated row by row.

    ``region`` is a Polygon or Stadium. With ``pad > 0`` the region is the
    Minkowski sum with a disk of that radius. Raises ValueError when the
    bounding-box lattice would exceed ``max_points``.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    x0, y0, x1, y1 = region.bbox()
    bbox = (x0 - pad, y0 - pad, x1 + pad, y1 + pad)
    est = ((bbox[2] - bbox[0]) / eps + 2) * ((bbox[3] - bbox[1]) / eps + 2)
    if est > max_points:
        raise ValueError(f"grid too fine: ~{int(est)} lattice points (limit {max_points})")
    lat = lattice_in_bbox(bbox, eps, origin)
    if not len(lat):
        return lat
    return lat[_region_distances(lat, region) <= pad + TOL]


def _iter_vertices(g):
    if isinstance(g, Polygon):
        yield from g.vertices
    elif isinstance(g, Segment):
        yield g.a
        yield g.b
    else:
        yield as_point(g)


def normalize_to_unit_box(geoms: Sequence):
    """Scale and translate so the joint bounding box fits in [0, 1]^2.

    Returns the transformed geometries (same types) and the transform.
    A degenerate bounding box keeps scale 1.
    """
    geoms = list(geoms)
    if not geoms:
        raise ValueError("nothing to normalize")
    pts = [p for g in geoms for p in _iter_vertices(g)]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    side = max(max(xs) - min(xs), max(ys) - min(ys))
    scale = 1.0 / side if side > 0 else 1.0
    tf = AffineNormalization(scale, Point(min(xs), min(ys)))
    return [transform_geometry(g, tf) for g in geoms], tf


def transform_geometry(g, tf: AffineNormalization, inverse: bool = False):
    f = tf.invert if inverse else tf.apply
    if isinstance(g, Polygon):
        return Polygon(tuple(f(p) for p in g.vertices))
    if isinstance(g, Segment):
        return Segment(f(g.a), f(g.b))
    return f(g)
