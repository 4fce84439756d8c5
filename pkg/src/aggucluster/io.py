"""JSON encoding of segments, polygons and interval instances.

Segments are ``{"a": [x, y], "b": [x, y]}`` and polygons ``{"ring": [[x, y], ...]}``.
Floats go through ``json`` which already writes the shortest round-trip repr.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .geometry import Polygon, Segment
from .setcover import MultiIntervalInstance


def segment_to_json(s: Segment) -> dict:
    return {"a": [s.a.x, s.a.y], "b": [s.b.x, s.b.y]}


def segment_from_json(d) -> Segment:
    return Segment(tuple(d["a"]), tuple(d["b"]))


def polygon_to_json(p: Polygon) -> dict:
    return {"ring": [[v.x, v.y] for v in p.vertices]}


def polygon_from_json(d) -> Polygon:
    return Polygon(tuple(tuple(v) for v in d["ring"]))


def _items(doc, key):
    if isinstance(doc, dict):
        doc = doc[key]
    return doc


def load_segments(path) -> list:
    doc = json.loads(Path(path).read_text())
    return [segment_from_json(d) for d in _items(doc, "segments")]


def load_polygons(path) -> list:
    doc = json.loads(Path(path).read_text())
    return [polygon_from_json(d) for d in _items(doc, "polygons")]


def instance_to_json(inst: MultiIntervalInstance) -> dict:
    return {"sets": [[[iv.lo, iv.hi] for iv in q] for q in inst.sets]}


def instance_from_json(doc) -> MultiIntervalInstance:
    return MultiIntervalInstance(doc["sets"])


def load_instance(path) -> MultiIntervalInstance:
    return instance_from_json(json.loads(Path(path).read_text()))


def _default(o):
    if isinstance(o, np.ndarray):
        return o.tolist()
    if isinstance(o, (np.integer,)):
        return int(o)
    if isinstance(o, (np.floating,)):
        return float(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def dumps(obj) -> str:
    return json.dumps(obj, default=_default, indent=1)


def write_json(obj, path) -> None:
    Path(path).write_text(dumps(obj) + "\n")
