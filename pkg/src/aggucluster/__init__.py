"""k-center clustering of uncertain points given as segments or polygons."""

from .estimators import ComposableKCenter, GonzalezKCenter, PolygonKCenter, SegmentKCenter
from .geometry import Point, Polygon, Segment, Stadium
from .polygons import (
    colorful_kcenter_exact,
    composable_kcenter,
    gonzalez_kcenter,
    max_1center_polygons,
    max_kcenter_arbitrary,
    max_kcenter_convex,
    min_kcenter_polygons,
)
from .segments import max_kcenter_segments, min_kcenter_segments
from .setcover import MultiIntervalInstance, multi_interval_set_cover

__version__ = "0.1.0"
