"""Command line entry point ``aggucluster``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict
from pathlib import Path

from . import io
from .geometry import is_convex
from .oracle import brute_interval_cover, brute_kcenter_segments, brute_polygon_kcenter
from .pipeline import ExperimentConfig, ingest_checkins, reports_to_json, run_experiment, summarize_hulls
from .polygons import max_kcenter_arbitrary, max_kcenter_convex, min_kcenter_polygons
from .segments import kcenter_segments
from .setcover import greedy_bound, solve_with_instance


def _emit(obj, out):
    text = io.dumps(obj)
    if out is None or out == "-":
        sys.stdout.write(text + "\n")
    else:
        Path(out).write_text(text + "\n")


def cmd_segments(a):
    S = io.load_segments(a.input)
    res = kcenter_segments(S, a.k, a.eps, mode=a.mode, full_frontier=a.frontier, budget=a.budget,
                           search=a.search)
    _emit({"centers": res.center_indices, "radius": res.radius, "mode": res.mode,
           "frontier": [list(f) for f in res.frontier]}, a.output)


def cmd_polygons(a):
    P = io.load_polygons(a.input)
    if a.mode == "min":
        res = min_kcenter_polygons(P, a.k, a.eps)
    else:
        convex = a.convex if a.convex is not None else all(is_convex(p) for p in P)
        fn = max_kcenter_convex if convex else max_kcenter_arbitrary
        res = fn(P, a.k, a.eps)
    _emit({"centers": res.centers, "radius": res.radius, "samples": res.n_samples,
           "alpha_bound": res.alpha_bound}, a.output)


def cmd_setcover(a):
    inst = io.load_instance(a.input)
    ci, sol = solve_with_instance(inst)
    _emit({"chosen": sorted(sol.chosen), "atoms": len(ci.atoms),
           "greedy_bound": greedy_bound(len(ci.atoms))}, a.output)


def _report(rep):
    return {"optimum": rep.optimum, "witness": rep.witness,
            "search_space_size": rep.search_space_size, "resolution": rep.resolution,
            "error_bound": rep.error_bound}


def cmd_oracle(a):
    if a.problem == "segments":
        rep = brute_kcenter_segments(io.load_segments(a.input), a.k, a.mode, a.resolution)
    elif a.problem == "polygons":
        rep = brute_polygon_kcenter(io.load_polygons(a.input), a.k, a.resolution, a.mode)
    else:
        inst = io.load_instance(a.input)
        rep = brute_interval_cover(inst.sets)
    _emit(_report(rep), a.output)


def cmd_ingest(a):
    records, skipped = ingest_checkins(a.input, a.limit)
    summaries, ratio = summarize_hulls(records)
    _emit({
        "records": len(records),
        "skipped": skipped,
        "compression_ratio": ratio,
        "users": [{"user_id": s.user_id, "point_count": s.point_count,
                   **io.polygon_to_json(s.hull)} for s in summaries],
    }, a.out)


def cmd_experiment(a):
    cfg = json.loads(Path(a.config).read_text()) if a.config else {}
    if a.full:
        cfg["full"] = True
    run = run_experiment(ExperimentConfig.from_dict(cfg), svg_dir=a.svg_dir)
    _emit({"config": asdict(ExperimentConfig.from_dict(cfg)),
           "compression_ratio": run.compression_ratio,
           "reports": reports_to_json(run.reports)}, a.out)


def _eps(v):
    f = float(v)
    if not f > 0:
        raise argparse.ArgumentTypeError("eps must be positive")
    return f


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="aggucluster", description="k-center clustering of segments and polygons")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("segments", help="bicriteria k-center of segments")
    p.add_argument("--mode", choices=["max", "min"], default="max")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eps", type=_eps, default=0.1)
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.add_argument("--frontier", action="store_true", help="evaluate every candidate radius")
    p.add_argument("--budget", choices=["bicriteria", "strict"], default="bicriteria")
    p.add_argument("--search", choices=["bisect", "scan"], default="bisect")
    p.set_defaults(func=cmd_segments)

    p = sub.add_parser("polygons", help="k-center of polygons")
    p.add_argument("--mode", choices=["max", "min"], default="max")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eps", type=_eps, default=0.1)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--convex", dest="convex", action="store_true", default=None)
    g.add_argument("--arbitrary", dest="convex", action="store_false")
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_polygons)

    p = sub.add_parser("setcover", help="greedy multi-interval set cover")
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_setcover)

    p = sub.add_parser("oracle", help="exhaustive reference solvers")
    osub = p.add_subparsers(dest="problem", required=True)
    for name in ("segments", "polygons"):
        q = osub.add_parser(name)
        q.add_argument("--mode", choices=["max", "min"], default="max")
        q.add_argument("--k", type=int, required=True)
        q.add_argument("--resolution", type=_eps, default=1e-3 if name == "segments" else 0.05)
        q.add_argument("--input", required=True)
        q.add_argument("--output")
    q = osub.add_parser("setcover")
    q.add_argument("--resolution", type=_eps, default=None, help="unused; intervals are exact")
    q.add_argument("--input", required=True)
    q.add_argument("--output")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("ingest", help="parse check-ins and summarize users by hulls")
    p.add_argument("--input", required=True)
    p.add_argument("--limit", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("experiment", help="run the check-in clustering comparison")
    p.add_argument("--config")
    p.add_argument("--out")
    p.add_argument("--svg-dir")
    p.add_argument("--full", action="store_true", help="ignore the row limit")
    p.set_defaults(func=cmd_experiment)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    a = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        a.func(a)
    except (ValueError, FileNotFoundError, KeyError, json.JSONDecodeError) as e:
        print(f"aggucluster: error: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
