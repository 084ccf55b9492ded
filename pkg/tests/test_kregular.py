import cmath
import itertools
import math
import random

import pytest

from helpers import random_one_regular, roots_of_unity
from rankrange.errors import NotOneRegular, TooLarge
from rankrange.kregular import (
    DirectionSet,
    brute_force_min_extension,
    count_antipodal,
    is_k_regular,
    minimal_extension,
    regular_lower_bound,
    regularity,
)

PI = math.pi
W5 = cmath.exp(2j * PI / 5)
CROSS = DirectionSet((0, PI / 2, PI, 3 * PI / 2))
EX3 = DirectionSet(tuple(x * PI / 12 for x in (1, 3, 5, 7, 9, 11, 15, 21)))


def test_direction_set_normalises_and_rejects_duplicates():
    ds = DirectionSet((-PI / 2, 0.5, 7.0))
    assert ds.angles == pytest.approx(sorted([3 * PI / 2, 0.5, 7.0 - 2 * PI]))
    with pytest.raises(ValueError):
        DirectionSet((0.0, 2 * PI))
    assert DirectionSet.from_points([1, 1j]).angles == pytest.approx((0, PI / 2))


def test_regularity_examples():
    for n in (5, 7, 9):
        ds = DirectionSet.from_points(roots_of_unity(n))
        assert all(is_k_regular(ds, k) for k in range(n // 2 + 1))
        assert not is_k_regular(ds, n // 2 + 1)
    assert is_k_regular(CROSS, 1) and not is_k_regular(CROSS, 2)
    assert is_k_regular(DirectionSet.from_points([W5**j for j in range(4)]), 1)
    assert is_k_regular(DirectionSet((0.1,)), 0)
    assert regularity(EX3) == 2


def test_count_antipodal():
    assert count_antipodal(DirectionSet((0, PI))) == 1
    assert count_antipodal(EX3) == 2
    assert count_antipodal(DirectionSet.from_points(roots_of_unity(5))) == 0
    assert EX3.s == 2 and EX3.p == 8


def test_lower_bound():
    assert regular_lower_bound(DirectionSet((0.3,))) == 1
    assert regular_lower_bound(DirectionSet.from_points(roots_of_unity(5))) == 5
    assert regular_lower_bound(CROSS, 2) == 6
    rng = random.Random(0)
    for _ in range(100):
        ds = random_one_regular(rng, (3, 12))
        k = regularity(ds)
        assert ds.p >= regular_lower_bound(ds, k)


@pytest.mark.parametrize(
    "ds,k,q",
    [
        (DirectionSet.from_points([W5**j for j in range(4)]), 2, 1),
        (CROSS, 2, 2),
        (DirectionSet.from_points(roots_of_unity(7)[:6]), 3, 1),
        (DirectionSet.from_points([cmath.exp(2j * PI * j / 15) for j in (2, 3, 7, 8, 12, 13)]), 3, 2),
        (EX3, 2, 0),
        (EX3, 3, 1),
        (EX3, 4, 2),
        (EX3, 5, 4),
        (EX3, 6, 6),
    ],
)
def test_extension_counts(ds, k, q):
    res = minimal_extension(ds, k)
    assert res.q == q == len(res.added)
    assert is_k_regular(ds.with_angles(res.added), k)


def test_fifth_root_witness_is_the_missing_root():
    res = minimal_extension(DirectionSet.from_points([W5**j for j in range(4)]), 2)
    assert res.added[0] == pytest.approx(8 * PI / 5)


def test_example_witness_for_rank_three():
    res = minimal_extension(EX3, 3)
    assert res.witness_removed == pytest.approx((5 * PI / 12,))
    assert res.added == pytest.approx((18 * PI / 12,))


def test_opposite_pair_fill_keeps_pairs():
    res = minimal_extension(CROSS, 2)
    a, b = res.added
    assert abs(abs(a - b) - PI) < 1e-12


def test_equality_family():
    # {1, i, -1} plus points in the open lower half plane needs max{2k+2-p, k-1}
    rng = random.Random(1)
    assert not is_k_regular(DirectionSet((0, PI / 2, PI)), 1)
    for p in range(4, 9):
        for k in range(2, 6):
            lower = sorted(rng.uniform(PI + 0.1, 2 * PI - 0.1) for _ in range(p - 3))
            ds = DirectionSet((0, PI / 2, PI, *lower))
            if is_k_regular(ds, k):
                continue
            assert minimal_extension(ds, k).q == max(2 * k + 2 - p, k - 1)


def test_already_regular_and_invalid_inputs():
    ds = DirectionSet.from_points(roots_of_unity(7))
    assert minimal_extension(ds, 3).q == 0
    assert brute_force_min_extension(ds, 3) == 0
    with pytest.raises(NotOneRegular):
        minimal_extension(DirectionSet((0.0, 0.5, 1.0)), 2)
    with pytest.raises(ValueError):
        minimal_extension(ds, 0)
    with pytest.raises(TooLarge):
        brute_force_min_extension(DirectionSet.from_points(roots_of_unity(11)), 4)


def test_deletion_and_addition_agree_on_small_instances():
    # a t-subset deletion leaving (k-t)-regularity exists exactly when t additions suffice
    rng = random.Random(4)
    for _ in range(40):
        ds = random_one_regular(rng, (4, 7), antipodal_rate=0.3)
        k = rng.randint(2, 4)
        if is_k_regular(ds, k) or k >= ds.p - count_antipodal(ds):
            continue
        free = [j for j, paired in enumerate(ds.antipodal_mask()) if not paired]
        q = minimal_extension(ds, k).q
        for t in range(1, min(k, len(free)) + 1):
            deletable = any(is_k_regular(ds.without(T), k - t) for T in itertools.combinations(free, t))
            assert deletable == (t >= q)


def test_bounds_on_q():
    rng = random.Random(9)
    for _ in range(150):
        ds = random_one_regular(rng, (3, 10))
        k = rng.randint(2, 5)
        q = minimal_extension(ds, k).q
        if q == 0:
            continue
        s = count_antipodal(ds)
        assert q >= (2 * k + 1 - ds.p if s == 0 else 2 * k + 2 - ds.p)
        if k < ds.p - s:
            special = (ds.p, s) in {(k + 1, 0), (k + 2, 1)}
            assert q <= (k if special else min(k - 1, ds.p - 2 * s))


def test_extension_matches_oracle():
    rng = random.Random(12)
    for _ in range(40):
        ds = random_one_regular(rng, (3, 7))
        k = rng.randint(2, 4)
        assert minimal_extension(ds, k).q == brute_force_min_extension(ds, k)
