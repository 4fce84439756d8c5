"""Input coercion for the estimator front-ends."""

from __future__ import annotations

import numpy as np
from sklearn.utils import check_array

from .geometry import Polygon, Segment


def check_points(X) -> np.ndarray:
    X = check_array(X, dtype=float)
    if X.shape[1] != 2:
        raise ValueError(f"expected points of shape (n, 2), got {X.shape}")
    return X


def check_segments(X) -> list:
    """Accept Segments, {"a", "b"} dicts, or an (n, 4) array of x1, y1, x2, y2."""
    if isinstance(X, np.ndarray) or (len(X) and not isinstance(X[0], (Segment, dict))):
        arr = check_array(X, dtype=float)
        if arr.shape[1] != 4:
            raise ValueError(f"expected segments of shape (n, 4), got {arr.shape}")
        return [Segment((r[0], r[1]), (r[2], r[3])) for r in arr]
    out = []
    for s in X:
        if isinstance(s, dict):
            s = Segment(tuple(s["a"]), tuple(s["b"]))
        out.append(s)
    if not out:
        raise ValueError("no segments given")
    return out


def check_polygons(X) -> list:
    """Accept Polygons, {"ring": ...} dicts or plain vertex lists."""
    out = []
    for p in X:
        if isinstance(p, Polygon):
            out.append(p)
        elif isinstance(p, dict):
            out.append(Polygon(tuple(map(tuple, p["ring"]))))
        else:
            ring = check_array(np.asarray(p, dtype=float).reshape(-1, 2), dtype=float)
            out.append(Polygon(tuple(map(tuple, ring))))
    if not out:
        raise ValueError("no polygons given")
    return out


def segments_to_array(S) -> np.ndarray:
    return np.array([[s.a.x, s.a.y, s.b.x, s.b.y] for s in S], dtype=float).reshape(-1, 4)
