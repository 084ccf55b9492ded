"""Rank-k numerical range of a normal matrix as a finite half-plane intersection.

For a normal matrix with non-collinear distinct eigenvalues ``a_1..a_m``
the rank-k numerical range is the intersection of the left half planes
``H(a_r, a_s)`` over the index pairs collected by :func:`build_s0`.  Two
refinements detect degenerate outcomes early: :func:`modified_algorithm_1`
(the range lies on a line) and :func:`modified_algorithm_2` (several
constraint lines meet at one eigenvalue).
"""

from __future__ import annotations

import cmath
import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .errors import BadRank, NotPolygon, UnboundedRegion
from .geometry import (
    ConvexRegion,
    HalfPlane,
    Kind,
    angle_diff,
    canonical_angle,
    half_plane_from_pair,
    intersect_half_planes,
    left_distance,
    region_equal,
)
from .spectrum import NormalSpectrum, collinearity
from .tolerance import get_angle_tol, get_tol

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CandidateSet:
    """Index pairs ``(r, s)`` of distinct eigenvalues with their half planes.

    ``tag`` is ``"S0"`` for the output of :func:`build_s0` and ``"Minimal"``
    for a minimal generating subset.  Indices refer to
    ``NormalSpectrum.values``.
    """

    pairs: tuple[tuple[int, int, HalfPlane], ...]
    tag: str

    def __len__(self) -> int:
        return len(self.pairs)

    def index_pairs(self) -> list[tuple[int, int]]:
        return [(r, s) for r, s, _ in self.pairs]

    def half_planes(self) -> list[HalfPlane]:
        return [h for _, _, h in self.pairs]


def _check_rank(sp: NormalSpectrum, k: int, upper: int) -> None:
    if int(k) != k or not 1 <= k <= upper:
        raise BadRank(f"rank k={k} must be an integer in [1, {upper}]")


def open_counts(sp: NormalSpectrum, r: int, s: int) -> tuple[int, int]:
    """Eigenvalue counts (with multiplicity) strictly left / right of line a_r -> a_s.

    Eigenvalues within tol of the line count on neither side.
    """
    tol = get_tol()
    a, b = sp.values[r], sp.values[s]
    left = right = 0
    for z, mult in sp.eigs:
        dist = left_distance(a, b, z)
        if dist > tol:
            left += mult
        elif dist < -tol:
            right += mult
    return left, right


def build_s0(sp: NormalSpectrum, k: int) -> CandidateSet:
    """Collect the index pairs of the reduced candidate family S0.

    For each unordered pair ``r < s`` the open half planes on both sides of
    the line through ``a_r`` and ``a_s`` are counted; ``(r, s)`` is kept when
    its open left side holds at most ``n-k-1`` eigenvalues and its open right
    side at most ``k-1`` (so the closed left side holds at least ``n-k+1``),
    and symmetrically for ``(s, r)``.
    """
    n = sp.n
    _check_rank(sp, k, n - 1)
    vals = sp.values
    pairs = []
    for r in range(sp.m):
        for s in range(r + 1, sp.m):
            left, right = open_counts(sp, r, s)
            if left <= n - k - 1 and right <= k - 1:
                pairs.append((r, s, half_plane_from_pair(vals[r], vals[s], (r, s))))
            if right <= n - k - 1 and left <= k - 1:
                pairs.append((s, r, half_plane_from_pair(vals[s], vals[r], (s, r))))
    return CandidateSet(tuple(pairs), "S0")


def lambda_k(sp: NormalSpectrum, k: int) -> ConvexRegion:
    """Rank-k numerical range of the normal matrix with spectrum ``sp``."""
    n = sp.n
    _check_rank(sp, k, n)
    col = collinearity(sp)
    if col.kind == "Scalar":
        return ConvexRegion.point(sp.values[0])
    if k == n:
        # P A P = lambda P with rank-n P forces A = lambda I
        return ConvexRegion.empty()
    if col.kind == "Collinear":
        return _collinear_range(col.offsets, col.ordered, n, k)
    s0 = build_s0(sp, k)
    trigger = _ma1_trigger(s0)
    if trigger is not None:
        return modified_algorithm_1(sp, k, trigger[0], trigger[1], s0)
    return modified_algorithm_2(sp, k, s0)


def _collinear_range(offsets: Sequence[float], ordered: Sequence[complex], n: int, k: int) -> ConvexRegion:
    # offsets sorted descending: the range is [a_{n-k+1}, a_k] along the line
    hi, lo = k - 1, n - k
    gap = offsets[hi] - offsets[lo]
    if abs(gap) <= get_tol():
        return ConvexRegion.point(ordered[hi])
    if gap > 0:
        return ConvexRegion.segment(ordered[lo], ordered[hi])
    return ConvexRegion.empty()


def _ma1_trigger(s0: CandidateSet) -> tuple[int, int] | None:
    present = set(s0.index_pairs())
    for r, s in s0.index_pairs():
        if (s, r) in present:
            return (r, s)
    return None


def modified_algorithm_1(sp: NormalSpectrum, k: int, p_idx: int, q_idx: int, s0: CandidateSet) -> ConvexRegion:
    """Range when both ``(p, q)`` and ``(q, p)`` lie in S0.

    The range is then contained in the line through ``a_p`` and ``a_q``.
    After the affine normalisation ``a_p -> 0, a_q -> 1`` each remaining
    constraint crossing the real axis contributes a lower or an upper bound.
    """
    present = set(s0.index_pairs())
    if (p_idx, q_idx) not in present or (q_idx, p_idx) not in present:
        raise ValueError("modified_algorithm_1 needs both (p, q) and (q, p) in S0")
    tol = get_tol()
    vals = sp.values
    ap, aq = vals[p_idx], vals[q_idx]
    span = aq - ap
    hat = [(z - ap) / span for z in vals]
    htol = tol / abs(span)

    lower: list[float] = []
    upper: list[float] = []
    for r, s, _ in s0.pairs:
        yr, ys = hat[r].imag, hat[s].imag
        if abs(yr - ys) <= htol:
            continue
        b = (yr * hat[s].real - ys * hat[r].real) / (yr - ys)
        if yr >= -htol and ys <= htol:
            lower.append(b)
        if yr <= htol and ys >= -htol:
            upper.append(b)
    if not lower and not upper:
        return ConvexRegion.empty()
    if not lower or not upper:
        log.debug("modified algorithm 1 missing a bound; intersecting S0 directly")
        return _intersect(s0.half_planes())
    b1, b2 = max(lower), min(upper)
    if abs(b1 - b2) * abs(span) <= tol:
        return ConvexRegion.point(span * 0.5 * (b1 + b2) + ap)
    if b1 < b2:
        return ConvexRegion.segment(span * b1 + ap, span * b2 + ap)
    return ConvexRegion.empty()


def _cond3(pairs: Sequence[tuple[int, int, HalfPlane]]) -> tuple[int, list[int]] | None:
    """First eigenvalue index shared by at least three pairs, with those pairs' positions."""
    by_index: dict[int, list[int]] = defaultdict(list)
    for pos, (r, s, _) in enumerate(pairs):
        by_index[r].append(pos)
        by_index[s].append(pos)
    for t in sorted(by_index):
        if len(by_index[t]) >= 3:
            return t, by_index[t]
    return None


def modified_algorithm_2(sp: NormalSpectrum, k: int, s0: CandidateSet) -> ConvexRegion:
    """Prune constraint lines meeting at a common eigenvalue, then intersect.

    Whenever three or more pairs share an eigenvalue ``a_t``, their half
    planes form a cone with apex ``a_t``.  If the directions of the lines
    through ``a_t`` span at most a half turn, only the two extreme ones
    matter.  Otherwise the cone is the apex alone and the range is either
    ``{a_t}`` or empty.
    """
    atol = get_angle_tol()
    vals = sp.values
    pairs = list(s0.pairs)
    for _ in range(len(s0.pairs) + 1):
        found = _cond3(pairs)
        if found is None:
            break
        t, positions = found
        thetas = []
        for pos in positions:
            r, s, _ = pairs[pos]
            direction = vals[s] - vals[t] if r == t else vals[t] - vals[r]
            thetas.append((canonical_angle(cmath.phase(direction)), pos))
        thetas.sort()
        ell = len(thetas)
        if thetas[-1][0] - thetas[0][0] <= math.pi + atol:
            keep = {thetas[0][1], thetas[-1][1]}
        else:
            keep = None
            for j in range(ell - 1):
                if thetas[j + 1][0] - thetas[j][0] >= math.pi - atol:
                    keep = {thetas[j][1], thetas[j + 1][1]}
                    break
            if keep is None:
                apex = vals[t]
                if all(h.contains(apex) for h in s0.half_planes()):
                    return ConvexRegion.point(apex)
                return ConvexRegion.empty()
        drop = set(positions) - keep
        pairs = [p for pos, p in enumerate(pairs) if pos not in drop]
    return _intersect([h for _, _, h in pairs])


def _intersect(hs: Sequence[HalfPlane]) -> ConvexRegion:
    if not hs:
        raise UnboundedRegion("no constraints: the candidate family is empty")
    return intersect_half_planes(hs)


def minimal_half_planes(sp: NormalSpectrum, k: int) -> CandidateSet:
    """A minimal subset of S0 whose half planes still cut out the range.

    Each edge of the polygonal range lies on the boundary line of some
    member of S0; picking one such member per edge gives a generating family
    from which no member can be dropped.
    """
    region = lambda_k(sp, k)
    if region.kind is not Kind.POLYGON:
        raise NotPolygon(f"rank-{k} range is {region.kind.value}, not a polygon")
    s0 = build_s0(sp, k)
    chosen = _match_edges(region, s0)
    if chosen is None or not _generates(chosen, region):
        chosen = _greedy_minimal(list(s0.pairs), region)
    return CandidateSet(tuple(chosen), "Minimal")


def _match_edges(region: ConvexRegion, s0: CandidateSet):
    vs = region.points
    scale = max(1.0, max(abs(v) for v in vs))
    chosen = []
    for i in range(len(vs)):
        edge = half_plane_from_pair(vs[i], vs[(i + 1) % len(vs)])
        best, best_err = None, math.inf
        for r, s, h in s0.pairs:
            dxi = min(angle_diff(h.xi, edge.xi), angle_diff(edge.xi, h.xi))
            err = dxi * scale + abs(h.d - edge.d)
            if err < best_err:
                best, best_err = (r, s, h), err
        if best is None or best_err > 1e-6 * scale:
            return None
        chosen.append(best)
    return chosen


def _generates(pairs, region: ConvexRegion) -> bool:
    try:
        return region_equal(intersect_half_planes([h for _, _, h in pairs]), region, 1e-7)
    except UnboundedRegion:
        return False


def _greedy_minimal(pairs, region: ConvexRegion):
    current = list(pairs)
    while True:
        removable = [i for i in range(len(current)) if _generates(current[:i] + current[i + 1 :], region)]
        if not removable:
            return current
        # drop the member whose removal leaves the most other members removable
        def score(i):
            rest = current[:i] + current[i + 1 :]
            return sum(_generates(rest[:j] + rest[j + 1 :], region) for j in range(len(rest)))

        worst = max(removable, key=score) if len(current) <= 24 else removable[0]
        current.pop(worst)


def is_minimal(cands: CandidateSet, region: ConvexRegion) -> bool:
    """True when every member is needed to reproduce ``region``."""
    pairs = list(cands.pairs)
    if not _generates(pairs, region):
        return False
    return all(not _generates(pairs[:i] + pairs[i + 1 :], region) for i in range(len(pairs)))
