"""Reference computations of the rank-k numerical range of a normal matrix.

Two routes that do not use the eigenvalue-pair selection logic of
:mod:`rankrange.rank_range`:

* :func:`brute_force_12` intersects the convex hulls of all
  ``(n-k+1)``-element sub-multisets of the eigenvalues.
* :func:`angle_sweep` / :func:`sweep_region` intersect the support half
  planes ``{Re(exp(-1j*xi) z) <= lambda_k(Re(exp(-1j*xi) A))}`` over a set
  of sample angles.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import BadRank, TooLarge
from .geometry import TWO_PI, ConvexRegion, HalfPlane, canonical_angle, convex_hull, intersect_half_planes
from .spectrum import NormalSpectrum
from .tolerance import get_angle_tol

MAX_BRUTE_FORCE_N = 14


def brute_force_12(sp: NormalSpectrum, k: int) -> ConvexRegion:
    """Intersection of ``conv{a_j : j in J}`` over all ``|J| = n-k+1``."""
    n = sp.n
    if n > MAX_BRUTE_FORCE_N:
        raise TooLarge(f"n={n} exceeds the brute-force limit {MAX_BRUTE_FORCE_N}")
    if int(k) != k or not 1 <= k <= n:
        raise BadRank(f"rank k={k} must be an integer in [1, {n}]")
    vals = sp.expanded()
    size = n - k + 1
    planes: list[HalfPlane] = []
    seen: set[frozenset[complex]] = set()
    for subset in itertools.combinations(range(n), size):
        pts = frozenset(vals[j] for j in subset)
        if pts in seen:
            continue
        seen.add(pts)
        hull = convex_hull(pts)
        planes.extend(hull.half_planes())
    return intersect_half_planes(planes)


@dataclass(frozen=True)
class SweepProfile:
    """Sample angles and the k-th largest projection of the spectrum at each."""

    angles: tuple[float, ...]
    offsets: tuple[float, ...]
    k: int

    def __post_init__(self):
        if len(self.angles) != len(self.offsets):
            raise ValueError("angles and offsets must have equal length")
        if any(b <= a for a, b in zip(self.angles, self.angles[1:])):
            raise ValueError("angles must be strictly increasing")
        if not all(math.isfinite(d) for d in self.offsets):
            raise ValueError("offsets must be finite")

    def half_planes(self) -> list[HalfPlane]:
        return [HalfPlane(d, xi) for xi, d in zip(self.angles, self.offsets)]


def kth_largest_projection(sp: NormalSpectrum, k: int, xi: float) -> float:
    """``lambda_k(Re(exp(-1j*xi) A))`` for the diagonal matrix with spectrum ``sp``."""
    proj = sorted((z.real * math.cos(xi) + z.imag * math.sin(xi) for z in sp.expanded()), reverse=True)
    return proj[k - 1]


def critical_angles(sp: NormalSpectrum) -> list[float]:
    """Directions ``arg(a_j - a_i) +- pi/2`` where projection order can change."""
    vals = sp.values
    out = []
    for i, a in enumerate(vals):
        for j, b in enumerate(vals):
            if i != j:
                base = cmath.phase(b - a)
                out.append(canonical_angle(base + math.pi / 2))
                out.append(canonical_angle(base - math.pi / 2))
    return out


def angle_sweep(sp: NormalSpectrum, k: int, num_angles: int, include_critical: bool = True) -> SweepProfile:
    """Sample the support offsets on a uniform grid plus the critical angles."""
    n = sp.n
    if int(k) != k or not 1 <= k <= n:
        raise BadRank(f"rank k={k} must be an integer in [1, {n}]")
    if num_angles < 8:
        raise ValueError("num_angles must be at least 8")
    grid = [TWO_PI * j / num_angles for j in range(num_angles)]
    if include_critical:
        grid += critical_angles(sp)
    atol = get_angle_tol()
    angles: list[float] = []
    for xi in sorted(grid):
        if not angles or xi - angles[-1] > atol:
            angles.append(xi)
    if len(angles) > 1 and angles[-1] >= TWO_PI - atol:
        angles.pop()

    vals = np.array(sp.expanded())
    th = np.array(angles)
    proj = np.cos(th)[:, None] * vals.real[None, :] + np.sin(th)[:, None] * vals.imag[None, :]
    proj.sort(axis=1)
    offsets = proj[:, n - k]
    return SweepProfile(tuple(angles), tuple(float(d) for d in offsets), k)


def sweep_region(profile: SweepProfile) -> ConvexRegion:
    """Intersection of the sampled support half planes (an outer approximation)."""
    return intersect_half_planes(profile.half_planes())
