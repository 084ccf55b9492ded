"""Estimator-style wrappers around the functional API.

Each class stores its configuration in ``__init__``, does its work in
``fit`` and exposes results as trailing-underscore attributes, so the
usual ``get_params`` / ``set_params`` / ``clone`` machinery applies.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .geometry import Kind
from .kregular import DirectionSet, count_antipodal, is_k_regular, minimal_extension
from .rank_range import build_s0, lambda_k
from .synthesis import PolygonSpec, polygon_to_support, synthesize
from .tolerance import tolerances
from .validation import check_angles, check_points, check_rank, check_spectrum


class RankKNumericalRange(BaseEstimator):
    """Rank-k numerical range of a normal matrix given by its eigenvalues.

    Parameters
    ----------
    k : int
        Rank of the compression.
    tol : float or None
        Coordinate tolerance; ``None`` keeps the package default.
    """

    def __init__(self, k=2, tol=None):
        self.k = k
        self.tol = tol

    def fit(self, X, y=None):
        k = check_rank(self.k)
        with tolerances(tol=self.tol):
            self.spectrum_ = check_spectrum(X)
            self.region_ = lambda_k(self.spectrum_, k)
            self.n_ = self.spectrum_.n
            self.n_candidates_ = len(build_s0(self.spectrum_, k)) if k < self.n_ else 0
        self.kind_ = self.region_.kind.value
        return self

    def predict(self, X):
        """``True`` for points inside the range (within tolerance)."""
        check_is_fitted(self, "region_")
        with tolerances(tol=self.tol):
            return np.array([self.region_.contains(z) for z in check_points(X)], dtype=bool)

    def decision_function(self, X):
        """Smallest constraint slack: positive strictly inside, negative outside.

        Degenerate ranges have no interior, so points report minus their
        distance to the range.
        """
        check_is_fitted(self, "region_")
        pts = check_points(X)
        region = self.region_
        if region.kind is Kind.EMPTY:
            return np.full(len(pts), -np.inf)
        if region.kind is Kind.POLYGON:
            hs = region.half_planes()
            return np.array([min(-h.slack(z) for h in hs) for z in pts])
        if region.kind is Kind.POINT:
            return -np.abs(pts - region.points[0])
        a, b = region.points
        t = np.clip(((pts - a) * np.conj(b - a)).real / abs(b - a) ** 2, 0.0, 1.0)
        return -np.abs(pts - (a + t * (b - a)))


class KRegularExtender(BaseEstimator):
    """Fewest directions to add to a 1-regular direction set to make it k-regular."""

    def __init__(self, k=2):
        self.k = k

    def fit(self, X, y=None):
        k = check_rank(self.k)
        self.directions_ = DirectionSet(tuple(check_angles(X)))
        self.n_antipodal_ = count_antipodal(self.directions_)
        self.regular_ = is_k_regular(self.directions_, k)
        result = minimal_extension(self.directions_, k)
        self.q_ = result.q
        self.added_ = np.array(result.added)
        self.witness_removed_ = None if result.witness_removed is None else np.array(result.witness_removed)
        return self

    def transform(self, X=None):
        """The extended direction set, sorted."""
        check_is_fitted(self, "added_")
        return np.array(self.directions_.with_angles(self.added_).angles)


class PolygonSynthesizer(BaseEstimator):
    """Minimal normal spectrum whose rank-k numerical range is a given polygon.

    ``fit`` takes the polygon's vertices; ``transform`` returns the
    synthesized eigenvalues.
    """

    def __init__(self, k=2):
        self.k = k

    def fit(self, X, y=None):
        k = check_rank(self.k)
        self.polygon_ = polygon_to_support(check_points(X)) if not isinstance(X, PolygonSpec) else X
        out = synthesize(self.polygon_, k)
        self.spectrum_ = out.spectrum
        self.n_ = out.n
        self.q_ = out.q
        self.directions_ = np.array(out.directions)
        self.offsets_ = np.array(out.offsets)
        return self

    def transform(self, X=None):
        check_is_fitted(self, "spectrum_")
        return np.array(self.spectrum_.expanded())
