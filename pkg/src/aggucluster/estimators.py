"""scikit-learn style front-ends.

Each estimator wraps one of the functional solvers, follows the usual
``fit`` / ``predict`` / ``fit_predict`` protocol and exposes fitted state in
trailing-underscore attributes, so the objects work with ``get_params``,
``clone`` and friends.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils.validation import check_is_fitted

from .geometry import is_convex, polygon_distances
from .polygons import (
    composable_kcenter,
    gonzalez_kcenter,
    max_kcenter_arbitrary,
    max_kcenter_convex,
    min_kcenter_polygons,
    nearest_center,
)
from .segments import assign_segments, kcenter_segments
from .validation import check_points, check_polygons, check_segments, segments_to_array


class SegmentKCenter(ClusterMixin, BaseEstimator):
    """k-center of segments with input segments as centers.

    Parameters
    ----------
    n_clusters : int
        Target number of centers ``k``. With the default bicriteria budget
        the fitted model may use up to ``k * ceil(ln|U| + 1)`` centers.
    eps : float
        Discretization step in unit-box coordinates.
    mode : {"max", "min"}
        ``max`` covers every point of every segment, ``min`` one point each.
    budget : {"bicriteria", "strict"}
        Center budget used to pick the radius.
    search : {"bisect", "scan"}
        How the candidate radii are searched.
    """

    def __init__(self, n_clusters=1, eps=0.1, mode="max", budget="bicriteria", search="bisect"):
        self.n_clusters = n_clusters
        self.eps = eps
        self.mode = mode
        self.budget = budget
        self.search = search

    def fit(self, X, y=None):
        S = check_segments(X)
        res = kcenter_segments(S, self.n_clusters, self.eps, mode=self.mode, budget=self.budget,
                               search=self.search)
        self.center_indices_ = np.asarray(res.center_indices, dtype=int)
        self.cluster_centers_ = segments_to_array([S[i] for i in res.center_indices])
        self.radius_ = res.radius
        self.frontier_ = res.frontier
        self.threshold_ = res.threshold
        self.size_bound_ = res.size_bound
        self.labels_ = assign_segments(S, [S[i] for i in res.center_indices], self.mode)
        return self

    def predict(self, X):
        check_is_fitted(self, "cluster_centers_")
        centers = check_segments(self.cluster_centers_)
        return assign_segments(check_segments(X), centers, self.mode)


class PolygonKCenter(ClusterMixin, BaseEstimator):
    """Domain-restricted k-center of polygons.

    ``method`` picks the max-cost algorithm: ``convex`` requires convex
    input, ``arbitrary`` triangulates first, ``auto`` chooses by convexity.
    ``mode="min"`` ignores ``method`` and runs the colorful formulation.
    ``labels_`` holds, per polygon, the index of its nearest center.
    """

    def __init__(self, n_clusters=1, eps=0.1, mode="max", method="auto", raw_cell=False,
                 seed_index=0):
        self.n_clusters = n_clusters
        self.eps = eps
        self.mode = mode
        self.method = method
        self.raw_cell = raw_cell
        self.seed_index = seed_index

    def fit(self, X, y=None):
        P = check_polygons(X)
        if self.mode == "min":
            res = min_kcenter_polygons(P, self.n_clusters, self.eps)
        elif self.mode == "max":
            method = self.method
            if method == "auto":
                method = "convex" if all(is_convex(p) for p in P) else "arbitrary"
            if method == "convex":
                fn = max_kcenter_convex
            elif method == "arbitrary":
                fn = max_kcenter_arbitrary
            else:
                raise ValueError(f"unknown method {self.method!r}")
            res = fn(P, self.n_clusters, self.eps, raw_cell=self.raw_cell, seed_index=self.seed_index)
        else:
            raise ValueError(f"unknown mode {self.mode!r}")
        self.result_ = res
        self.cluster_centers_ = np.asarray(res.centers, dtype=float)
        self.radius_ = res.radius
        self.n_samples_ = res.n_samples
        self.alpha_bound_ = res.alpha_bound
        D = np.column_stack([polygon_distances(self.cluster_centers_, p) for p in P]).T
        self.labels_ = D.argmin(axis=1)
        return self

    def predict(self, X):
        """Nearest center for each query point."""
        check_is_fitted(self, "cluster_centers_")
        return nearest_center(check_points(X), self.cluster_centers_)[1]


class GonzalezKCenter(ClusterMixin, BaseEstimator):
    """Farthest-point k-center of a point set."""

    def __init__(self, n_clusters=1, seed_index=0):
        self.n_clusters = n_clusters
        self.seed_index = seed_index

    def fit(self, X, y=None):
        X = check_points(X)
        res = gonzalez_kcenter(X, self.n_clusters, self.seed_index)
        self.cluster_centers_ = res.centers
        self.center_indices_ = res.center_indices
        self.radius_ = res.radius
        self.labels_ = res.assignment
        return self

    def predict(self, X):
        check_is_fitted(self, "cluster_centers_")
        return nearest_center(check_points(X), self.cluster_centers_)[1]


class ComposableKCenter(ClusterMixin, BaseEstimator):
    """Two-round k-center over ``n_partitions`` round-robin parts."""

    def __init__(self, n_clusters=1, n_partitions=1, seed=0):
        self.n_clusters = n_clusters
        self.n_partitions = n_partitions
        self.seed = seed

    def fit(self, X, y=None):
        X = check_points(X)
        res = composable_kcenter(X, self.n_clusters, self.n_partitions, self.seed)
        self.cluster_centers_ = res.centers
        self.summary_ = res.summary
        self.radius_ = res.radius
        self.labels_ = res.assignment
        return self

    def predict(self, X):
        check_is_fitted(self, "cluster_centers_")
        return nearest_center(check_points(X), self.cluster_centers_)[1]
