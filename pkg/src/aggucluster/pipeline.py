"""Check-in clustering experiment.

Each user's check-ins are summarized by their convex hull. Two clusterings
are compared: composable k-center run on the raw check-in points, and the
polygon k-center run on the hulls through grid samples. Both center sets are
scored on the raw points ("input") and on the grid vertices inside the hulls
("test").
"""

from __future__ import annotations

import logging
import math
import time
from collections import Counter, defaultdict
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .geometry import Polygon, convex_hull, grid_points_in_region
from .polygons import composable_kcenter, max_kcenter_arbitrary, nearest_center

log = logging.getLogger(__name__)

ALGORITHMS = ("composable_points", "polygon_grid")
DEFAULT_LIMIT = 50_000


@dataclass(frozen=True)
class CheckinRecord:
    user_id: int
    timestamp: str
    x: float
    y: float
    location_id: str


@dataclass
class UserSummary:
    user_id: int
    point_count: int
    hull: Polygon


@dataclass
class ExperimentReport:
    k: int
    eps: Optional[float]
    dataset_tag: str
    algorithm_tag: str
    summary_size: int
    radius: float
    runtime_ms: int


def ingest_checkins(path, limit: Optional[int] = None):
    """Parse ``user, timestamp, lat, lon, location`` TSV lines.

    Returns ``(records, skipped)`` where ``skipped`` counts dropped lines per
    reason. Coordinates map to ``x = lon``, ``y = lat``.
    """
    records = []
    skipped: Counter = Counter()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if limit is not None and len(records) >= limit:
                break
            line = line.rstrip("\n").rstrip("\r")
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 5:
                skipped["parse"] += 1
                continue
            user, ts, lat, lon, loc = parts
            try:
                uid = int(user)
                y, x = float(lat), float(lon)
            except ValueError:
                skipped["parse"] += 1
                continue
            if not (math.isfinite(x) and math.isfinite(y)):
                skipped["nonfinite"] += 1
                continue
            records.append(CheckinRecord(uid, ts, x, y, loc))
    if not records:
        raise ValueError(f"no valid check-ins in {path}")
    return records, dict(skipped)


def write_checkins(records: Sequence[CheckinRecord], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for r in records:
            fh.write(f"{r.user_id}\t{r.timestamp}\t{r.y!r}\t{r.x!r}\t{r.location_id}\n")


def synthetic_checkins(users: int = 40, points: int = 50, seed: int = 42,
                       extent: float = 100.0, spread: float = 3.0) -> list:
    """Users scattered uniformly, each with Gaussian check-ins around a home."""
    rng = np.random.default_rng(seed)
    homes = rng.uniform(0.0, extent, size=(users, 2))
    out = []
    for u in range(users):
        pts = homes[u] + rng.normal(0.0, spread, size=(points, 2))
        for j, (x, y) in enumerate(pts):
            out.append(CheckinRecord(u, f"2009-01-01T00:00:{j % 60:02d}Z", float(x), float(y), f"loc{u}_{j}"))
    return out


def _group(records):
    groups = defaultdict(list)
    for r in records:
        groups[r.user_id].append((r.x, r.y))
    return groups


def summarize_hulls(records: Sequence[CheckinRecord]):
    """Convex hull per user and the ratio of hull vertices to input points."""
    if not records:
        raise ValueError("no records")
    groups = _group(records)
    out = []
    for uid in sorted(groups):
        pts = groups[uid]
        out.append(UserSummary(uid, len(pts), convex_hull(pts)))
    ratio = sum(len(s.hull) for s in out) / len(records)
    return out, ratio


def grid_test_set(hulls: Sequence[Polygon], eps: float) -> np.ndarray:
    """Grid vertices (cell ``eps``, origin at the global bbox corner) inside the hulls."""
    x0 = min(h.bbox()[0] for h in hulls)
    y0 = min(h.bbox()[1] for h in hulls)
    parts = [grid_points_in_region(h, eps, origin=(x0, y0)) for h in hulls]
    parts = [p for p in parts if len(p)]
    if not parts:
        return np.empty((0, 2))
    return np.unique(np.vstack(parts), axis=0)


def evaluate_radius(points: np.ndarray, centers: np.ndarray) -> float:
    if not len(points):
        return 0.0
    return float(nearest_center(points, centers)[0].max())


@dataclass
class ExperimentConfig:
    dataset: str = "synthetic"  # "synthetic" or a TSV path
    k: int = 20
    eps: object = 5.0  # grid cell in data units, or "auto"
    algorithms: list = field(default_factory=lambda: list(ALGORITHMS))
    partitions: int = 4
    limit: Optional[int] = DEFAULT_LIMIT
    full: bool = False
    test_set: bool = True
    seed: int = 0
    synthetic_users: int = 40
    synthetic_points: int = 50
    synthetic_seed: int = 42
    dataset_tag: Optional[str] = None
    equirectangular: bool = False  # scale x by cos(mean latitude)

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(d) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**d)


def equirectangular(records: Sequence[CheckinRecord]) -> list:
    """Scale longitudes by the cosine of the mean latitude."""
    c = math.cos(math.radians(sum(r.y for r in records) / len(records)))
    return [CheckinRecord(r.user_id, r.timestamp, r.x * c, r.y, r.location_id) for r in records]


def auto_eps(points: np.ndarray) -> float:
    """Grid cell for ``eps="auto"``: 1/100 of the longer bounding-box side."""
    side = float(np.ptp(points, axis=0).max())
    return side / 100.0 if side > 0 else 1.0


@dataclass
class ExperimentRun:
    reports: list
    points: np.ndarray
    hulls: list
    test_points: np.ndarray
    compression_ratio: float
    centers: dict = field(default_factory=dict)
    summaries: dict = field(default_factory=dict)
    skipped: dict = field(default_factory=dict)


def load_dataset(cfg: ExperimentConfig):
    if cfg.dataset == "synthetic":
        return synthetic_checkins(cfg.synthetic_users, cfg.synthetic_points, cfg.synthetic_seed), {}
    path = Path(cfg.dataset)
    if not path.exists():
        raise FileNotFoundError(f"dataset not found: {path}")
    return ingest_checkins(path, None if cfg.full else cfg.limit)


def run_experiment(config, svg_dir=None) -> ExperimentRun:
    """Run every selected algorithm and score it on the input and test sets."""
    cfg = config if isinstance(config, ExperimentConfig) else ExperimentConfig.from_dict(config)
    for a in cfg.algorithms:
        if a not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {a!r}")
    records, skipped = load_dataset(cfg)
    if cfg.equirectangular:
        records = equirectangular(records)
    pts = np.array([(r.x, r.y) for r in records], dtype=float)
    summaries, ratio = summarize_hulls(records)
    hulls = [s.hull for s in summaries]
    eps = auto_eps(pts) if cfg.eps == "auto" else float(cfg.eps)
    test_pts = grid_test_set(hulls, eps) if cfg.test_set else np.empty((0, 2))
    tag = cfg.dataset_tag or ("synthetic" if cfg.dataset == "synthetic" else Path(cfg.dataset).stem)
    run = ExperimentRun([], pts, hulls, test_pts, ratio, skipped=skipped)

    for algo in cfg.algorithms:
        t0 = time.perf_counter()
        if algo == "composable_points":
            res = composable_kcenter(pts, cfg.k, cfg.partitions, cfg.seed)
            size, algo_eps = len(res.summary), None
            run.summaries[algo] = res.summary
        else:
            res = max_kcenter_arbitrary(hulls, cfg.k, eps, raw_cell=True, seed_index=cfg.seed)
            size, algo_eps = res.n_samples, eps
            run.summaries[algo] = res.samples
        ms = int(round((time.perf_counter() - t0) * 1000))
        run.centers[algo] = res.centers
        datasets = [("input", pts)] + ([("test", test_pts)] if cfg.test_set else [])
        for dtag, eval_pts in datasets:
            run.reports.append(ExperimentReport(cfg.k, algo_eps, f"{tag}:{dtag}", algo, size,
                                                evaluate_radius(eval_pts, res.centers), ms))
        log.info("%s: radius on input %.4f", algo, run.reports[-len(datasets)].radius)

    if svg_dir is not None:
        out = Path(svg_dir)
        out.mkdir(parents=True, exist_ok=True)
        for algo, centers in run.centers.items():
            emit_svg(out / f"{algo}_input.svg", pts, run.summaries.get(algo), centers)
            if cfg.test_set:
                emit_svg(out / f"{algo}_test.svg", test_pts, None, centers)
    return run


def reports_to_json(reports: Sequence[ExperimentReport]) -> list:
    return [asdict(r) for r in reports]


# --------------------------------------------------------------------------
# SVG


def _fmt(v: float) -> str:
    return f"{v:.3f}".rstrip("0").rstrip(".")


def emit_svg(path, samples, summary=None, centers=None, radius: Optional[float] = None,
             size: int = 800) -> None:
    """Write sample and summary points (red) and centers (blue) as an SVG.

    With ``radius`` the covering disks are drawn as unfilled outlines.
    Output is byte-identical for identical input.
    """
    layers = [np.asarray(a, dtype=float).reshape(-1, 2) for a in (samples, summary, centers)
              if a is not None]
    allpts = np.vstack(layers) if layers else np.empty((0, 2))
    if len(allpts):
        lo, hi = allpts.min(axis=0), allpts.max(axis=0)
    else:
        lo, hi = np.zeros(2), np.ones(2)
    pad = radius or 0.0
    lo, hi = lo - pad, hi + pad
    span = float(max(hi[0] - lo[0], hi[1] - lo[1])) or 1.0
    scale = (size - 20) / span

    def xy(p):
        return _fmt(10 + (p[0] - lo[0]) * scale), _fmt(size - 10 - (p[1] - lo[1]) * scale)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for arr in (samples, summary):
        if arr is None:
            continue
        for p in np.asarray(arr, dtype=float).reshape(-1, 2):
            cx, cy = xy(p)
            lines.append(f'<circle cx="{cx}" cy="{cy}" r="1" fill="red"/>')
    if centers is not None:
        C = np.asarray(centers, dtype=float).reshape(-1, 2)
        if radius is not None:
            for p in C:
                cx, cy = xy(p)
                lines.append(f'<circle cx="{cx}" cy="{cy}" r="{_fmt(radius * scale)}" '
                             f'fill="none" stroke="blue" stroke-opacity="0.5"/>')
        for p in C:
            cx, cy = xy(p)
            lines.append(f'<circle cx="{cx}" cy="{cy}" r="4" fill="blue"/>')
    lines.append("</svg>")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
