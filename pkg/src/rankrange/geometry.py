"""Planar primitives: half planes, convex regions and their intersection.

Points of the plane are plain Python ``complex`` numbers.  A closed half
plane is stored in support form ``{z : Re(exp(-1j*xi) * z) <= d}``, where
``xi`` is the outward normal direction.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DegenerateLine, UnboundedRegion
from .tolerance import get_angle_tol, get_tol

TWO_PI = 2.0 * math.pi

# A region is Point / Segment when its diameter / width is below this many tols.
CLASSIFY_FACTOR = 10.0


def canonical_angle(xi: float) -> float:
    """Reduce an angle to ``[0, 2*pi)``, snapping values within angle tol of 2*pi to 0."""
    x = math.fmod(xi, TWO_PI)
    if x < 0.0:
        x += TWO_PI
    if x >= TWO_PI - get_angle_tol():
        x = 0.0
    return x


def angle_diff(a: float, b: float) -> float:
    """Counter-clockwise angular distance from ``b`` to ``a`` in ``[0, 2*pi)``."""
    x = math.fmod(a - b, TWO_PI)
    if x < 0.0:
        x += TWO_PI
    return x


def unit(xi: float) -> complex:
    return complex(math.cos(xi), math.sin(xi))


def cross(a: complex, b: complex) -> float:
    """z-component of the cross product of ``a`` and ``b`` viewed as vectors."""
    return a.real * b.imag - a.imag * b.real


def dot(a: complex, b: complex) -> float:
    return a.real * b.real + a.imag * b.imag


def left_distance(a: complex, b: complex, z: complex) -> float:
    """Signed distance of ``z`` from the directed line a->b, positive on the left."""
    return cross(b - a, z - a) / abs(b - a)


@dataclass(frozen=True)
class HalfPlane:
    """Closed half plane ``{z : Re(exp(-1j*xi) z) <= d}``.

    ``pair`` optionally records the eigenvalue indices ``(r, s)`` when the
    half plane was built as the left half plane of the line through
    ``a_r`` and ``a_s``.
    """

    d: float
    xi: float
    pair: tuple[int, int] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not (math.isfinite(self.d) and math.isfinite(self.xi)):
            raise ValueError("half plane parameters must be finite")
        object.__setattr__(self, "d", float(self.d))
        object.__setattr__(self, "xi", canonical_angle(float(self.xi)))

    @property
    def normal(self) -> complex:
        return unit(self.xi)

    def slack(self, z: complex) -> float:
        """``Re(exp(-1j*xi) z) - d``; nonpositive inside."""
        n = self.normal
        return n.real * z.real + n.imag * z.imag - self.d

    def contains(self, z: complex, tol: float | None = None) -> bool:
        if tol is None:
            tol = get_tol()
        return self.slack(z) <= tol

    def shifted(self, delta: float) -> HalfPlane:
        return HalfPlane(self.d + delta, self.xi, self.pair)


def half_plane_from_pair(a: complex, b: complex, pair: tuple[int, int] | None = None) -> HalfPlane:
    """Left closed half plane of the directed line through ``a`` then ``b``."""
    a, b = complex(a), complex(b)
    if abs(b - a) <= get_tol():
        raise DegenerateLine(f"points {a} and {b} do not determine a line")
    xi = canonical_angle(cmath.phase(b - a) - math.pi / 2)
    n = unit(xi)
    d = n.real * a.real + n.imag * a.imag
    return HalfPlane(d, xi, pair)


def line_intersection(h1: HalfPlane, h2: HalfPlane) -> complex | None:
    """Intersection point of the two boundary lines, or None when parallel."""
    c1, s1 = math.cos(h1.xi), math.sin(h1.xi)
    c2, s2 = math.cos(h2.xi), math.sin(h2.xi)
    det = c1 * s2 - s1 * c2
    if abs(det) <= 1e-14:
        return None
    x = (h1.d * s2 - s1 * h2.d) / det
    y = (c1 * h2.d - h1.d * c2) / det
    return complex(x, y)


class Kind(str, enum.Enum):
    EMPTY = "Empty"
    POINT = "Point"
    SEGMENT = "Segment"
    POLYGON = "Polygon"


@dataclass(frozen=True)
class ConvexRegion:
    """Closed convex region tagged by dimension.

    ``points`` is empty for ``EMPTY``, a single point for ``POINT``, the two
    endpoints for ``SEGMENT`` and the counter-clockwise vertex list for
    ``POLYGON``.
    """

    kind: Kind
    points: tuple[complex, ...] = ()

    @classmethod
    def empty(cls) -> ConvexRegion:
        return cls(Kind.EMPTY, ())

    @classmethod
    def point(cls, z: complex) -> ConvexRegion:
        return cls(Kind.POINT, (complex(z),))

    @classmethod
    def segment(cls, a: complex, b: complex) -> ConvexRegion:
        return cls(Kind.SEGMENT, (complex(a), complex(b)))

    @classmethod
    def polygon(cls, vertices: Iterable[complex]) -> ConvexRegion:
        vs = tuple(complex(v) for v in vertices)
        if len(vs) < 3:
            raise ValueError("a polygon needs at least three vertices")
        return cls(Kind.POLYGON, vs)

    @property
    def is_empty(self) -> bool:
        return self.kind is Kind.EMPTY

    def __len__(self) -> int:
        return len(self.points)

    def area(self) -> float:
        if self.kind is not Kind.POLYGON:
            return 0.0
        vs = self.points
        return 0.5 * sum(cross(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def diameter(self) -> float:
        return max((abs(a - b) for a in self.points for b in self.points), default=0.0)

    def contains(self, z: complex, tol: float | None = None) -> bool:
        if tol is None:
            tol = get_tol()
        z = complex(z)
        if self.kind is Kind.EMPTY:
            return False
        if self.kind is Kind.POINT:
            return abs(z - self.points[0]) <= tol
        if self.kind is Kind.SEGMENT:
            a, b = self.points
            return _segment_distance(a, b, z) <= tol
        vs = self.points
        m = len(vs)
        return all(left_distance(vs[i], vs[(i + 1) % m], z) >= -tol for i in range(m))

    def boundary_distance(self, z: complex) -> float:
        """Distance from ``z`` to the relative boundary (polygons only)."""
        if self.kind is not Kind.POLYGON:
            raise ValueError("boundary_distance is defined for polygons")
        vs = self.points
        m = len(vs)
        return min(_segment_distance(vs[i], vs[(i + 1) % m], complex(z)) for i in range(m))

    def is_vertex(self, z: complex, tol: float | None = None) -> bool:
        if tol is None:
            tol = get_tol()
        if self.kind is Kind.EMPTY:
            return False
        return any(abs(complex(z) - v) <= tol for v in self.points)

    def mapped(self, mu: complex, shift: complex = 0j) -> ConvexRegion:
        """Image under ``z -> mu*z + shift`` (``mu != 0`` keeps orientation)."""
        return ConvexRegion(self.kind, tuple(mu * p + shift for p in self.points))

    def support(self, xi: float) -> float:
        """``max Re(exp(-1j*xi) z)`` over the region."""
        if self.kind is Kind.EMPTY:
            raise ValueError("support of the empty set")
        n = unit(xi)
        return max(dot(n, p) for p in self.points)

    def half_planes(self) -> list[HalfPlane]:
        """A finite half-plane description of the region (four planes for a point)."""
        if self.kind is Kind.EMPTY:
            raise ValueError("the empty set has no canonical half-plane description")
        if self.kind is Kind.POINT:
            p = self.points[0]
            return [HalfPlane(dot(unit(x), p), x) for x in (0.0, math.pi / 2, math.pi, 1.5 * math.pi)]
        if self.kind is Kind.SEGMENT:
            a, b = self.points
            along = cmath.phase(b - a)
            return [
                half_plane_from_pair(a, b),
                half_plane_from_pair(b, a),
                HalfPlane(dot(unit(along), b), along),
                HalfPlane(dot(unit(along + math.pi), a), along + math.pi),
            ]
        vs = self.points
        return [half_plane_from_pair(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def _segment_distance(a: complex, b: complex, z: complex) -> float:
    ab = b - a
    L2 = abs(ab) ** 2
    if L2 == 0.0:
        return abs(z - a)
    t = min(1.0, max(0.0, dot(z - a, ab) / L2))
    return abs(z - (a + t * ab))


# --------------------------------------------------------------------------
# classification of point clouds


def _farthest_pair(pts: Sequence[complex]) -> tuple[complex, complex, float]:
    best = (pts[0], pts[0], 0.0)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            dist = abs(pts[i] - pts[j])
            if dist > best[2]:
                best = (pts[i], pts[j], dist)
    return best


def _monotone_chain(pts: Sequence[complex], tol: float) -> list[complex]:
    """CCW hull vertices, dropping points within ``tol`` of a hull edge line."""
    ps = sorted(set(pts), key=lambda z: (z.real, z.imag))
    if len(ps) <= 2:
        return list(ps)

    def build(seq):
        chain: list[complex] = []
        for p in seq:
            while len(chain) >= 2:
                o, a = chain[-2], chain[-1]
                span = abs(p - o)
                if span == 0.0 or cross(a - o, p - o) <= tol * span:
                    chain.pop()
                else:
                    break
            chain.append(p)
        return chain

    lower = build(ps)
    upper = build(reversed(ps))
    return lower[:-1] + upper[:-1]


def _clean_polygon(vs: list[complex], tol: float) -> list[complex]:
    """Merge near-duplicate consecutive vertices and drop collinear ones."""
    changed = True
    while changed and len(vs) >= 3:
        changed = False
        out: list[complex] = []
        for v in vs:
            if out and abs(v - out[-1]) <= tol:
                changed = True
                continue
            out.append(v)
        if len(out) >= 2 and abs(out[0] - out[-1]) <= tol:
            out.pop()
            changed = True
        vs = out
        m = len(vs)
        if m < 3:
            break
        for i in range(m):
            a, b, c = vs[i - 1], vs[i], vs[(i + 1) % m]
            span = abs(c - a)
            if span == 0.0 or cross(b - a, c - a) <= tol * span:
                vs = vs[:i] + vs[i + 1 :]
                changed = True
                break
    return vs


def classify_points(pts: Sequence[complex], tol: float | None = None) -> ConvexRegion:
    """Convex hull of a point cloud, tagged Point / Segment / Polygon."""
    if tol is None:
        tol = get_tol()
    pts = [complex(p) for p in pts]
    if not pts:
        return ConvexRegion.empty()
    a, b, diam = _farthest_pair(pts)
    if diam <= CLASSIFY_FACTOR * tol:
        return ConvexRegion.point(sum(pts) / len(pts))
    u = (b - a) / diam
    perp = [cross(u, p - a) for p in pts]
    if max(perp) - min(perp) <= CLASSIFY_FACTOR * tol:
        along = [dot(u, p - a) for p in pts]
        lo = min(range(len(pts)), key=along.__getitem__)
        hi = max(range(len(pts)), key=along.__getitem__)
        return ConvexRegion.segment(pts[lo], pts[hi])
    hull = _clean_polygon(_monotone_chain(pts, tol), tol)
    if len(hull) < 3:
        return ConvexRegion.segment(a, b)
    return ConvexRegion.polygon(hull)


def convex_hull(pts: Iterable[complex]) -> ConvexRegion:
    """Convex hull of finitely many points; collinear input yields a Segment or Point."""
    pts = list(pts)
    if not pts:
        raise ValueError("convex_hull needs at least one point")
    return classify_points(pts)


# --------------------------------------------------------------------------
# half-plane intersection


def _dedupe(hs: Sequence[HalfPlane]) -> list[HalfPlane]:
    """Among half planes with equal normals keep the tightest one."""
    atol = get_angle_tol()
    ordered = sorted(hs, key=lambda h: (h.xi, h.d))
    out: list[HalfPlane] = []
    anchor = None
    for h in ordered:
        if out and h.xi - anchor <= atol:
            if h.d < out[-1].d:
                out[-1] = h
            continue
        anchor = h.xi
        out.append(h)
    if len(out) > 1 and angle_diff(out[0].xi, out[-1].xi) <= atol:
        # wrap-around duplicate at 0 / 2*pi
        if out[-1].d < out[0].d:
            out[0] = out[-1]
        out.pop()
    return out


def directions_bounded(xis: Sequence[float]) -> bool:
    """True iff outward normals with these angles force a bounded intersection.

    That is the case exactly when every angular gap between consecutive
    normals is strictly smaller than pi.
    """
    if len(xis) < 3:
        return False
    s = sorted(xis)
    gaps = [s[i + 1] - s[i] for i in range(len(s) - 1)] + [s[0] + TWO_PI - s[-1]]
    return max(gaps) < math.pi - get_angle_tol()


def _clip(poly, h: HalfPlane, label: int, tol: float):
    """Sutherland-Hodgman step against ``h`` relaxed by ``tol``.

    ``poly`` is a list of ``(vertex, label of the edge arriving at vertex)``.
    """
    m = len(poly)
    if m == 0:
        return poly
    n = h.normal
    s = [n.real * z.real + n.imag * z.imag - h.d - tol for z, _ in poly]
    if max(s) <= 0.0:
        return poly
    out = []
    for i in range(m):
        a = poly[i][0]
        b, lb = poly[(i + 1) % m]
        sa, sb = s[i], s[(i + 1) % m]
        if sa <= 0.0:
            if sb <= 0.0:
                out.append((b, lb))
            else:
                out.append((a + (b - a) * (sa / (sa - sb)), lb))
        elif sb <= 0.0:
            out.append((a + (b - a) * (sa / (sa - sb)), label))
            out.append((b, lb))
    return out


def _box(cx: float, cy: float, half: float):
    lines = [
        HalfPlane(cx + half, 0.0),
        HalfPlane(cy + half, math.pi / 2),
        HalfPlane(-(cx - half), math.pi),
        HalfPlane(-(cy - half), 1.5 * math.pi),
    ]
    # edge arriving at corner i runs along box line: bottom(-4), right(-1), top(-2), left(-3)
    corners = [
        (complex(cx - half, cy - half), -3),
        (complex(cx + half, cy - half), -4),
        (complex(cx + half, cy + half), -1),
        (complex(cx - half, cy + half), -2),
    ]
    return lines, corners


def _refine_point(c: complex, hs: Sequence[HalfPlane], tol: float) -> complex:
    """Snap a rough point onto the constraint lines active near ``c``.

    Prefers the feasible crossing of two active lines with the smallest
    worst-case violation, then a least-squares fit, then ``c`` itself.
    """
    reach = 1e-6 * max(1.0, abs(c))
    active = [h for h in hs if abs(h.slack(c)) <= reach]
    if len(active) < 2:
        return c

    def violation(z: complex) -> float:
        return max(h.slack(z) for h in hs)

    best, best_v = None, math.inf
    for i in range(len(active)):
        for j in range(i + 1, len(active)):
            if abs(math.sin(active[i].xi - active[j].xi)) < 1e-3:
                continue
            z = line_intersection(active[i], active[j])
            if z is None or abs(z - c) > reach:
                continue
            v = violation(z)
            if v < best_v:
                best, best_v = z, v
    if best is not None and best_v <= tol:
        return best
    a11 = a12 = a22 = r1 = r2 = 0.0
    for h in active:
        n = h.normal
        a11 += n.real * n.real
        a12 += n.real * n.imag
        a22 += n.imag * n.imag
        r1 += n.real * h.d
        r2 += n.imag * h.d
    det = a11 * a22 - a12 * a12
    if det <= 1e-12:
        return c
    z = complex((a22 * r1 - a12 * r2) / det, (a11 * r2 - a12 * r1) / det)
    return z if abs(z - c) <= reach and violation(z) <= tol else c


def _refine_segment(rough: ConvexRegion, hs: Sequence[HalfPlane], tol: float) -> ConvexRegion:
    """Recompute a thin region's endpoints from the exact constraint data."""
    a, b = rough.points
    u = (b - a) / abs(b - a)
    nu = 1j * u
    lateral = [h for h in hs if abs(cross(nu, h.normal)) <= 1e-6]
    if lateral:
        ref = lateral[0].normal
        nu = ref if dot(ref, nu) > 0 else -ref
        u = -1j * nu
        lateral = [h for h in hs if abs(cross(nu, h.normal)) <= 1e-9]
    upper = [h.d for h in lateral if dot(h.normal, nu) > 0]
    lower = [-h.d for h in lateral if dot(h.normal, nu) < 0]
    ys = [dot(nu, p) for p in rough.points]
    if not (upper and lower):
        # zero width needs antiparallel constraints on both sides; without
        # them the sliver is clipping slack around a single point
        if abs(b - a) <= 1e3 * tol:
            z = _refine_point(0.5 * (a + b), hs, tol)
            if max(h.slack(z) for h in hs) <= tol:
                return ConvexRegion.point(z)
        return rough
    y0 = 0.5 * (min(upper) + max(lower))
    if abs(y0 - 0.5 * (ys[0] + ys[1])) > CLASSIFY_FACTOR * tol:
        return rough
    lateral_ids = {id(h) for h in lateral}
    t_lo, t_hi = -math.inf, math.inf
    for h in hs:
        if id(h) in lateral_ids:
            continue
        n = h.normal
        c = dot(n, u)
        if abs(c) <= 1e-12:
            continue
        rhs = (h.d - y0 * dot(n, nu)) / c
        if c > 0:
            t_hi = min(t_hi, rhs)
        else:
            t_lo = max(t_lo, rhs)
    if not (math.isfinite(t_lo) and math.isfinite(t_hi)):
        return rough
    base = y0 * nu
    p, q = base + t_lo * u, base + t_hi * u
    if abs(p - a) > 100 * CLASSIFY_FACTOR * tol and abs(p - b) > 100 * CLASSIFY_FACTOR * tol:
        return rough
    if t_hi - t_lo <= CLASSIFY_FACTOR * tol:
        return ConvexRegion.point(base + 0.5 * (t_lo + t_hi) * u)
    # keep the orientation of the rough segment
    if dot(q - p, b - a) < 0:
        p, q = q, p
    return ConvexRegion.segment(p, q)


def intersect_half_planes(
    hs: Sequence[HalfPlane],
    allow_unbounded: bool = False,
    bbox: tuple[float, float, float, float] | None = None,
) -> ConvexRegion:
    """Intersection of finitely many closed half planes.

    Every constraint is relaxed by the active tolerance while clipping, so
    constraints that meet at equality (opposing half planes, three lines
    through one point) produce a Point or Segment instead of vanishing.
    Polygon vertices are then recomputed exactly as intersections of the two
    constraint lines that produced them.

    Raises :class:`UnboundedRegion` for a nonempty unbounded intersection
    unless ``allow_unbounded`` is set, in which case the result is clipped to
    ``bbox = (xmin, xmax, ymin, ymax)``.
    """
    if not hs:
        raise ValueError("intersect_half_planes needs at least one half plane")
    tol = get_tol()
    planes = _dedupe(hs)
    bounded = directions_bounded([h.xi for h in planes])
    if allow_unbounded and bbox is None:
        raise ValueError("allow_unbounded requires a bounding box")

    scale = max(1.0, max(abs(h.d) for h in planes))
    # clipping slack only has to absorb rounding; a wider slack turns
    # shallow crossings into spurious slivers
    relax = max(1e-2 * tol, 64 * 2.2e-16 * scale)
    rounds = 1 if allow_unbounded else 5
    half = 4.0 * scale
    for _ in range(rounds):
        if allow_unbounded:
            xmin, xmax, ymin, ymax = bbox
            box_lines, poly = _box(0.5 * (xmin + xmax), 0.5 * (ymin + ymax), 0.5 * max(xmax - xmin, ymax - ymin))
        else:
            box_lines, poly = _box(0.0, 0.0, half)
        for j, h in enumerate(planes):
            poly = _clip(poly, h, j, relax)
            if not poly:
                return ConvexRegion.empty()
        touches_box = any(lab < 0 for _, lab in poly)
        if not touches_box:
            break
        if not bounded and not allow_unbounded:
            raise UnboundedRegion("half-plane intersection is unbounded")
        if allow_unbounded:
            break
        half *= 1e3
    else:
        raise UnboundedRegion("half-plane intersection did not fit any bounding box")

    if allow_unbounded and touches_box:
        lines = {j: h for j, h in enumerate(planes)}
        lines.update({-1: box_lines[0], -2: box_lines[1], -3: box_lines[2], -4: box_lines[3]})
        return _finish(poly, lines, planes + box_lines, tol)
    lines = {j: h for j, h in enumerate(planes)}
    return _finish(poly, lines, planes, tol)


def _finish(poly, lines: dict, constraints: Sequence[HalfPlane], tol: float) -> ConvexRegion:
    rough = classify_points([z for z, _ in poly], tol)
    if rough.kind is Kind.POINT:
        return ConvexRegion.point(_refine_point(rough.points[0], constraints, tol))
    if rough.kind is Kind.SEGMENT:
        return _refine_segment(rough, constraints, tol)

    m = len(poly)
    exact: list[complex] = []
    for i in range(m):
        z, lab_in = poly[i]
        lab_out = poly[(i + 1) % m][1]
        v = z
        if lab_in != lab_out:
            cand = line_intersection(lines[lab_in], lines[lab_out])
            if cand is not None and max(h.slack(cand) for h in constraints) <= tol:
                v = cand
        exact.append(v)
    vs = _clean_polygon(exact, tol)
    if len(vs) < 3 or _signed_area(vs) <= 0.0:
        return classify_points(exact, tol)
    return ConvexRegion.polygon(vs)


def _signed_area(vs: Sequence[complex]) -> float:
    return 0.5 * sum(cross(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


def region_equal(r1: ConvexRegion, r2: ConvexRegion, tol: float | None = None) -> bool:
    """Same tag and payloads equal up to cyclic rotation and per-coordinate ``tol``."""
    if tol is None:
        tol = get_tol()

    def close(a: complex, b: complex) -> bool:
        return abs(a.real - b.real) <= tol and abs(a.imag - b.imag) <= tol

    if r1.kind is not r2.kind:
        return False
    if r1.kind is Kind.EMPTY:
        return True
    if r1.kind is Kind.POINT:
        return close(r1.points[0], r2.points[0])
    if r1.kind is Kind.SEGMENT:
        (a, b), (c, d) = r1.points, r2.points
        return (close(a, c) and close(b, d)) or (close(a, d) and close(b, c))
    p, q = r1.points, r2.points
    if len(p) != len(q):
        return False
    m = len(p)
    for shift in range(m):
        if all(close(p[i], q[(i + shift) % m]) for i in range(m)):
            return True
    return False
