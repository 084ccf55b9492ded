import cmath
import math
import random

import pytest

from helpers import random_polygon, roots_of_unity
from rankrange.errors import CollinearPolygon, NotConvex
from rankrange.geometry import ConvexRegion, Kind, region_equal
from rankrange.kregular import is_k_regular
from rankrange.rank_range import lambda_k
from rankrange.spectrum import from_values
from rankrange.synthesis import (
    PolygonSpec,
    dimension_bound,
    polygon_to_support,
    prune_spectrum,
    synthesize,
    synthesize_degenerate,
)

PI = math.pi
W12 = cmath.exp(2j * PI / 12)
EX3_VERTICES = [W12**j for j in (0, 1, 2, 3, 4, 5, 6, 9)]


def test_support_of_the_example_polygon():
    spec = polygon_to_support(EX3_VERTICES)
    ds = [d for d, _ in spec.support]
    xs = [x for _, x in spec.support]
    assert ds == pytest.approx([math.cos(PI / 12)] * 6 + [math.cos(PI / 4)] * 2)
    assert xs == pytest.approx([x * PI / 12 for x in (1, 3, 5, 7, 9, 11, 15, 21)])


def test_support_of_square_and_triangle():
    sq = polygon_to_support([1 + 1j, -1 + 1j, -1 - 1j, 1 - 1j])
    assert [d for d, _ in sq.support] == pytest.approx([1] * 4)
    assert sorted(x for _, x in sq.support) == pytest.approx([0, PI / 2, PI, 3 * PI / 2])
    assert polygon_to_support([0, 1, 1j]).p == 3


def test_clockwise_input_and_straight_corners():
    spec = polygon_to_support([0, 1j, 1 + 1j, 1, 0.5])
    assert spec.p == 4
    assert region_equal(spec.region(), ConvexRegion.polygon([0, 1, 1 + 1j, 1j]))


def test_polygon_validation():
    with pytest.raises(NotConvex):
        polygon_to_support([0, 1])
    with pytest.raises(CollinearPolygon):
        polygon_to_support([0, 1, 2])
    with pytest.raises(NotConvex):
        polygon_to_support([0, 2, 0.5 + 0.5j, 2j])


def test_support_form_drops_redundant_planes():
    spec = PolygonSpec.from_support([(1, 0), (1, PI / 2), (1, PI), (1, 3 * PI / 2), (5, PI / 4)])
    assert spec.p == 4
    with pytest.raises(NotConvex):
        PolygonSpec.from_support([(0, 0), (0, PI), (1, PI / 2), (1, 3 * PI / 2)])


@pytest.mark.parametrize("k,n", [(2, 8), (3, 9), (4, 10), (5, 12), (6, 14)])
def test_example_dimensions(k, n):
    spec = polygon_to_support(EX3_VERTICES)
    out = synthesize(spec, k)
    assert out.n == n == out.spectrum.n
    assert out.n == spec.p + out.q
    assert region_equal(lambda_k(out.spectrum, k), spec.region(), 1e-7)
    assert is_k_regular_angles(out.directions, k)


def is_k_regular_angles(angles, k):
    from rankrange.kregular import DirectionSet

    return is_k_regular(DirectionSet(tuple(angles)), k)


def test_example_rank_three_adds_the_predicted_direction():
    out = synthesize(polygon_to_support(EX3_VERTICES), 3)
    assert any(abs(x - 18 * PI / 12) < 1e-12 for x in out.directions)


def test_regular_polygon_round_trip():
    for n in (5, 7, 9):
        verts = roots_of_unity(n)
        spec = polygon_to_support(verts)
        for k in range(1, (n + 1) // 2):
            out = synthesize(spec, k)
            assert out.q == 0 and out.n == n
            assert region_equal(lambda_k(out.spectrum, k), spec.region(), 1e-7)


def test_offsets_positive_when_origin_is_interior():
    rng = random.Random(2)
    for _ in range(20):
        verts = random_polygon(rng)
        c = sum(verts) / len(verts)
        spec = polygon_to_support([v - c for v in verts])
        out = synthesize(spec, rng.randint(1, 3))
        assert all(d > 0 for d in out.offsets)


def test_equivariance_of_the_synthesized_range():
    rng = random.Random(6)
    for _ in range(15):
        verts = random_polygon(rng)
        k = rng.randint(1, 3)
        mu = cmath.rect(rng.uniform(0.5, 2), rng.uniform(0, 2 * PI))
        shift = complex(rng.gauss(0, 1), rng.gauss(0, 1))
        moved = synthesize(polygon_to_support([mu * v + shift for v in verts]), k)
        base = synthesize(polygon_to_support(verts), k)
        assert moved.n == base.n
        assert region_equal(lambda_k(moved.spectrum, k), lambda_k(base.spectrum, k).mapped(mu, shift), 1e-7)


def test_degenerate_targets():
    seg = synthesize_degenerate(0, 1, 2)
    assert seg.n == 4 and dict(seg.spectrum.eigs) == {0j: 2, 1 + 0j: 2}
    pt = synthesize_degenerate(5, 5, 3)
    assert pt.n == 3 and pt.spectrum.eigs == ((5 + 0j, 3),)
    line = synthesize_degenerate(1j, -1j, 1)
    assert region_equal(lambda_k(line.spectrum, 1), ConvexRegion.segment(-1j, 1j))


def test_prune():
    b = from_values([1, 1j, -1, -1j, 2, 2j, -2, -2j, 3, 3j, -3, -3j])
    pruned = prune_spectrum(b, 2)
    assert pruned.n == 8
    assert not any(abs(z) == 1 for z in pruned.values)
    assert region_equal(lambda_k(pruned, 2), lambda_k(b, 2))
    assert prune_spectrum(b, 3).n == 12
    tri = from_values([0, 1, 1j])
    assert prune_spectrum(tri, 1) == tri


def test_dimension_bound():
    assert dimension_bound(8, 5) == 12
    assert dimension_bound(3, 2) == 6
    with pytest.raises(ValueError):
        dimension_bound(2, 1)
