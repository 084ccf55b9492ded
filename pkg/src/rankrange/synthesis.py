"""Normal spectra with a prescribed rank-k numerical range.

Given a convex polygon ``P`` with ``p`` sides and a rank ``k``, the smallest
normal matrix whose rank-k numerical range is ``P`` has dimension ``p + q``,
where ``q`` is the number of directions needed to make the polygon's outer
normal directions k-regular.  :func:`synthesize` builds such a spectrum:
every side supplies a support line, each added direction a line tangent to
``P``, and the eigenvalues are the crossings of each line with the line
``k`` steps further round.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import CollinearPolygon, NotConvex, NotOneRegular, VerificationFailed
from .geometry import (
    ConvexRegion,
    HalfPlane,
    Kind,
    canonical_angle,
    cross,
    dot,
    intersect_half_planes,
    region_equal,
    unit,
)
from .kregular import DirectionSet, is_k_regular, minimal_extension
from .rank_range import lambda_k
from .spectrum import NormalSpectrum, from_values
from .tolerance import get_tol

ROUND_TRIP_TOL = 1e-7
MERGE_TURN = 1e-7
MIN_SIN_GAP = 1e-6


@dataclass(frozen=True)
class PolygonSpec:
    """A non-degenerate convex polygon as one support pair ``(d, xi)`` per side.

    Side ``j`` is the line ``Re(exp(-1j*xi_j) z) = d_j`` and the polygon is
    the intersection of the half planes ``Re(exp(-1j*xi_j) z) <= d_j``.
    """

    support: tuple[tuple[float, float], ...]
    vertices: tuple[complex, ...]

    @property
    def p(self) -> int:
        return len(self.support)

    @property
    def directions(self) -> DirectionSet:
        return DirectionSet(tuple(xi for _, xi in self.support))

    def region(self) -> ConvexRegion:
        return ConvexRegion.polygon(self.vertices)

    @classmethod
    def from_support(cls, pairs: Sequence[tuple[float, float]]) -> PolygonSpec:
        """Canonicalise a half-plane description.

        Half planes that do not contribute a side are dropped, so the
        result has exactly one pair per side.
        """
        hs = [HalfPlane(float(d), float(xi)) for d, xi in pairs]
        region = intersect_half_planes(hs)
        if region.kind is not Kind.POLYGON:
            raise NotConvex(f"the half planes cut out a {region.kind.value}, not a polygon")
        return polygon_to_support(region.points)


def polygon_to_support(vertices: Sequence[complex]) -> PolygonSpec:
    """Support pairs of a strictly convex polygon, one per edge.

    Clockwise input is reversed.  Vertices whose turn angle is below
    ``MERGE_TURN`` are treated as lying inside an edge and dropped.
    """
    vs = [complex(v) for v in vertices]
    if len(vs) < 3:
        raise NotConvex("a polygon needs at least three vertices")
    scale = max(1.0, max(abs(v) for v in vs))
    area = 0.5 * sum(cross(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))
    if abs(area) <= get_tol() * scale * scale:
        raise CollinearPolygon("the vertices are collinear")
    if area < 0:
        vs.reverse()
    vs = _merge_straight(vs)
    if len(vs) < 3:
        raise CollinearPolygon("fewer than three corners remain")
    m = len(vs)
    turns = []
    for i in range(m):
        e1 = vs[(i + 1) % m] - vs[i]
        e2 = vs[(i + 2) % m] - vs[(i + 1) % m]
        if abs(e1) == 0 or abs(e2) == 0:
            raise NotConvex("repeated vertex")
        turns.append(cmath.phase(e2 / e1))
    if any(t <= 0 for t in turns) or abs(sum(turns) - 2 * math.pi) > 1e-6:
        raise NotConvex("vertices do not form a strictly convex polygon")
    support = []
    for i in range(m):
        xi = canonical_angle(cmath.phase(vs[(i + 1) % m] - vs[i]) - math.pi / 2)
        support.append((dot(unit(xi), vs[i]), xi))
    return PolygonSpec(tuple(support), tuple(vs))


def _merge_straight(vs: list[complex]) -> list[complex]:
    changed = True
    while changed and len(vs) >= 3:
        changed = False
        m = len(vs)
        for i in range(m):
            a, b, c = vs[i - 1], vs[i], vs[(i + 1) % m]
            if abs(b - a) == 0 or abs(c - b) == 0 or abs(cmath.phase((c - b) / (b - a))) < MERGE_TURN:
                vs.pop(i)
                changed = True
                break
    return vs


@dataclass(frozen=True)
class SynthesisOutput:
    """Spectrum of a minimal normal matrix together with its support data.

    ``directions`` and ``offsets`` are the final sorted support lines, one
    per eigenvalue; ``q`` of them were added to the polygon's own sides.
    """

    spectrum: NormalSpectrum
    n: int
    q: int
    directions: tuple[float, ...]
    offsets: tuple[float, ...]


def dimension_bound(p: int, k: int) -> int:
    """Largest dimension a minimal synthesis can need."""
    if p < 3 or k < 1:
        raise ValueError("dimension_bound needs p >= 3 and k >= 1")
    return max(2 * k + 2, p + k - 1)


def synthesize(spec: PolygonSpec, k: int) -> SynthesisOutput:
    """Minimal-dimension normal spectrum whose rank-k numerical range is the polygon."""
    if int(k) != k or k < 1:
        raise ValueError(f"k={k} must be a positive integer")
    ds = spec.directions
    if not is_k_regular(ds, 1):
        raise NotOneRegular("polygon directions are not 1-regular")
    ext = minimal_extension(ds, k)
    region = spec.region()
    lines = list(spec.support) + [(region.support(xi), canonical_angle(xi)) for xi in ext.added]
    lines.sort(key=lambda dl: dl[1])
    n = len(lines)
    if len({round(xi, 12) for _, xi in lines}) != n:
        raise VerificationFailed("support directions are not distinct")
    eigs = [_crossing(lines[r], lines[(r + k) % n]) for r in range(n)]
    sp = from_values(eigs)
    if sp.n != n or sp.m != n:
        raise VerificationFailed("synthesized eigenvalues are not distinct")
    got = lambda_k(sp, k)
    if not region_equal(got, region, ROUND_TRIP_TOL):
        raise VerificationFailed(f"rank-{k} range of the synthesized spectrum differs from the polygon")
    if n > dimension_bound(spec.p, k):
        raise VerificationFailed(f"dimension {n} exceeds the bound {dimension_bound(spec.p, k)}")
    return SynthesisOutput(sp, n, ext.q, tuple(xi for _, xi in lines), tuple(d for d, _ in lines))


def _crossing(lr: tuple[float, float], ls: tuple[float, float]) -> complex:
    (dr, xr), (ds_, xs) = lr, ls
    gap = (xs - xr) % (2 * math.pi)
    if not MIN_SIN_GAP < gap < math.pi - MIN_SIN_GAP:
        raise VerificationFailed(f"support directions {xr} and {xs} are not in strict half-turn order")
    return 1j / math.sin(xs - xr) * (cmath.exp(1j * xr) * ds_ - cmath.exp(1j * xs) * dr)


def synthesize_degenerate(a1: complex, a2: complex, k: int) -> SynthesisOutput:
    """Smallest spectrum whose rank-k range is the point ``a1`` or the segment ``[a1, a2]``."""
    if int(k) != k or k < 1:
        raise ValueError(f"k={k} must be a positive integer")
    a1, a2 = complex(a1), complex(a2)
    if abs(a1 - a2) <= get_tol():
        sp = NormalSpectrum(((a1, k),))
        want = ConvexRegion.point(a1)
    else:
        sp = NormalSpectrum.from_pairs([(a1, k), (a2, k)])
        want = ConvexRegion.segment(a1, a2)
    if not region_equal(lambda_k(sp, k), want, ROUND_TRIP_TOL):
        raise VerificationFailed("degenerate synthesis does not reproduce the target")
    return SynthesisOutput(sp, sp.n, 0, (), ())


def prune_spectrum(sp: NormalSpectrum, k: int) -> NormalSpectrum:
    """Drop eigenvalues that lie in the rank-k range without being extreme points of it.

    Removing such an eigenvalue never changes the range.
    """
    region = lambda_k(sp, k)
    keep = []
    for z, mult in sp.eigs:
        if region.contains(z) and not region.is_vertex(z):
            continue
        keep.append((z, mult))
    if not keep or len(keep) == sp.m:
        return sp
    out = NormalSpectrum(tuple(keep))
    if out.n < k or not region_equal(lambda_k(out, k), region, ROUND_TRIP_TOL):
        raise VerificationFailed("pruning changed the rank-k range")
    return out
