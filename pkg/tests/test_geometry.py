import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rankrange.errors import DegenerateLine, UnboundedRegion
from rankrange.geometry import (
    ConvexRegion,
    HalfPlane,
    Kind,
    angle_diff,
    canonical_angle,
    convex_hull,
    half_plane_from_pair,
    intersect_half_planes,
    left_distance,
    line_intersection,
    region_equal,
)
from rankrange.tolerance import get_tol, tolerances


def square_planes(r=1.0):
    return [HalfPlane(r, x) for x in (0, math.pi / 2, math.pi, 3 * math.pi / 2)]


def test_canonical_angle_wraps_into_range():
    assert canonical_angle(-math.pi / 2) == pytest.approx(3 * math.pi / 2)
    assert canonical_angle(2 * math.pi) == 0.0
    assert 0 <= canonical_angle(-1e-18) < 2 * math.pi


def test_angle_diff_is_counter_clockwise():
    assert angle_diff(0.1, 2 * math.pi - 0.1) == pytest.approx(0.2)


def test_half_plane_from_pair_keeps_left_side():
    h = half_plane_from_pair(0, 1)
    assert h.contains(0.5j)
    assert not h.contains(-0.5j)
    assert left_distance(0, 1, 2j) == pytest.approx(2)


def test_half_plane_from_coincident_points():
    with pytest.raises(DegenerateLine):
        half_plane_from_pair(1 + 1j, 1 + 1j)


def test_parallel_lines_do_not_meet():
    assert line_intersection(HalfPlane(1, 0), HalfPlane(-1, math.pi)) is None
    z = line_intersection(HalfPlane(1, 0), HalfPlane(2, math.pi / 2))
    assert z == pytest.approx(1 + 2j)


def test_square():
    r = intersect_half_planes(square_planes())
    assert r.kind is Kind.POLYGON
    assert region_equal(r, ConvexRegion.polygon([1 - 1j, 1 + 1j, -1 + 1j, -1 - 1j]))
    assert r.area() == pytest.approx(4)


def test_redundant_planes_are_ignored():
    hs = square_planes() + [HalfPlane(5, 0.3), HalfPlane(1, 0), HalfPlane(3, math.pi)]
    assert region_equal(intersect_half_planes(hs), intersect_half_planes(square_planes()))


def test_opposite_planes_give_segment_and_point():
    seg = intersect_half_planes([HalfPlane(0, math.pi / 2), HalfPlane(0, 3 * math.pi / 2), HalfPlane(1, 0), HalfPlane(0, math.pi)])
    assert seg.kind is Kind.SEGMENT
    assert region_equal(seg, ConvexRegion.segment(0, 1))
    pt = intersect_half_planes([HalfPlane(0, x) for x in (0, math.pi / 2, math.pi, 3 * math.pi / 2)])
    assert region_equal(pt, ConvexRegion.point(0))


def test_contradictory_planes_are_empty():
    assert intersect_half_planes([HalfPlane(-1, 0), HalfPlane(-1, math.pi), HalfPlane(1, math.pi / 2), HalfPlane(1, 3 * math.pi / 2)]).is_empty


def test_unbounded_raises():
    with pytest.raises(UnboundedRegion):
        intersect_half_planes([HalfPlane(1, 0), HalfPlane(1, math.pi / 2)])
    with pytest.raises(ValueError):
        intersect_half_planes([])


def test_three_half_planes_through_eigenvalue_pairs_are_unbounded():
    # H(1,0), H(1,i), H(i,0) leave the region {Im z <= 0, Re z >= 0, Re z + Im z <= 1}
    hs = [half_plane_from_pair(1, 0), half_plane_from_pair(1, 1j), half_plane_from_pair(1j, 0)]
    with pytest.raises(UnboundedRegion):
        intersect_half_planes(hs)
    r = intersect_half_planes(hs, allow_unbounded=True, bbox=(-100.0, 100.0, -100.0, 100.0))
    assert r.contains(50 - 60j)


def test_shallow_crossings_resolve_to_the_exact_point():
    # lines through 2i at a narrow angle leave only 2i feasible
    hs = [half_plane_from_pair(2j, 2j + complex(math.cos(t), math.sin(t))) for t in (0.0, 0.15, math.pi + 0.05, math.pi + 0.1)]
    hs += [HalfPlane(5, math.pi / 2), HalfPlane(5, 3 * math.pi / 2)]
    r = intersect_half_planes(hs)
    assert r.kind is Kind.POINT
    assert abs(r.points[0] - 2j) <= get_tol()


def test_convex_hull_cases():
    assert convex_hull([1 + 1j]).kind is Kind.POINT
    seg = convex_hull([0, 1, 2, 0.5])
    assert region_equal(seg, ConvexRegion.segment(0, 2))
    pent = convex_hull([0, 2, 2 + 2j, 1 + 3j, 2j, 1 + 1j])
    assert pent.kind is Kind.POLYGON and len(pent) == 5
    assert pent.area() > 0


def test_region_queries():
    tri = ConvexRegion.polygon([0, 1, 1j])
    assert tri.contains(0.2 + 0.2j)
    assert not tri.contains(1 + 1j)
    assert tri.is_vertex(1j)
    assert tri.boundary_distance(0.25 + 0.25j) == pytest.approx(0.25)
    assert tri.support(0) == pytest.approx(1)
    moved = tri.mapped(2j, 1)
    assert region_equal(moved, ConvexRegion.polygon([1, 1 + 2j, -1]))


def test_region_equal_ignores_rotation_and_orientation_of_segments():
    a = ConvexRegion.polygon([0, 1, 1j])
    b = ConvexRegion.polygon([1, 1j, 0])
    assert region_equal(a, b)
    assert region_equal(ConvexRegion.segment(0, 1), ConvexRegion.segment(1, 0))
    assert not region_equal(ConvexRegion.segment(0, 1), ConvexRegion.point(0))


def test_tolerances_scope():
    base = get_tol()
    with tolerances(tol=1e-6):
        assert get_tol() == 1e-6
    assert get_tol() == base
    with pytest.raises(ValueError):
        with tolerances(tol=0):
            pass


coords = st.floats(-5, 5, allow_nan=False).map(lambda x: round(x, 3))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(coords, coords), min_size=3, max_size=12))
def test_hull_half_planes_reproduce_hull(pts):
    hull = convex_hull([complex(a, b) for a, b in pts])
    if hull.kind is Kind.POLYGON:
        again = intersect_half_planes(hull.half_planes())
        assert region_equal(again, hull, 1e-7)
        for a, b in pts:
            assert hull.contains(complex(a, b), 1e-7)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(0, 2 * math.pi, allow_nan=False), min_size=3, max_size=10), st.floats(0.1, 3))
def test_tangent_polygon_vertices_satisfy_all_planes(angles, r):
    hs = [HalfPlane(r, x) for x in angles]
    try:
        region = intersect_half_planes(hs)
    except UnboundedRegion:
        return
    for v in region.points:
        assert all(h.slack(v) <= 1e-8 for h in hs)
