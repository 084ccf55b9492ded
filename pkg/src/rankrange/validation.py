"""Input coercion for the estimator and CLI layers.

Complex inputs are accepted either as a complex array or as real arrays
with columns ``(re, im)`` or ``(re, im, multiplicity)``.
"""

from __future__ import annotations

import numpy as np
from sklearn.utils import check_array

from .errors import BadRank
from .spectrum import NormalSpectrum


def check_points(X) -> np.ndarray:
    """1-D complex array from complex values or an ``(n, 2)`` real array."""
    arr = np.asarray(X)
    if np.iscomplexobj(arr):
        arr = arr.ravel()
        if arr.size == 0:
            raise ValueError("no points given")
        if not np.all(np.isfinite(arr)):
            raise ValueError("points must be finite")
        return arr.astype(complex)
    if arr.ndim == 1:
        arr = check_array(arr.reshape(-1, 1), dtype=float)
        return arr[:, 0].astype(complex)
    arr = check_array(arr, dtype=float)
    if arr.shape[1] != 2:
        raise ValueError(f"expected 2 columns (re, im), got {arr.shape[1]}")
    return arr[:, 0] + 1j * arr[:, 1]


def check_spectrum(X) -> NormalSpectrum:
    """Spectrum from eigenvalues, ``(re, im)`` rows or ``(re, im, mult)`` rows."""
    if isinstance(X, NormalSpectrum):
        return X
    arr = np.asarray(X)
    if not np.iscomplexobj(arr) and arr.ndim == 2 and arr.shape[1] == 3:
        arr = check_array(arr, dtype=float)
        mult = arr[:, 2]
        if np.any(mult < 1) or np.any(mult != np.round(mult)):
            raise ValueError("multiplicities must be positive integers")
        return NormalSpectrum.from_pairs(zip(arr[:, 0] + 1j * arr[:, 1], mult.astype(int)))
    return NormalSpectrum.from_pairs((z, 1) for z in check_points(arr))


def check_angles(X) -> np.ndarray:
    arr = check_array(np.asarray(X, dtype=float).reshape(-1, 1), dtype=float)
    return arr[:, 0]


def check_rank(k, low: int = 1) -> int:
    if isinstance(k, bool) or int(k) != k or k < low:
        raise BadRank(f"rank k={k} must be an integer >= {low}")
    return int(k)
