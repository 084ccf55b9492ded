"""Random instance generators shared by the test modules."""

import cmath
import math
import random

from rankrange.geometry import Kind, convex_hull
from rankrange.kregular import DirectionSet, is_k_regular
from rankrange.spectrum import from_values


def random_spectrum(rng: random.Random, max_n: int = 10):
    """Continuous, integer-grid (repeated values, many collinear triples) or fully collinear spectra."""
    n = rng.randint(2, max_n)
    mode = rng.random()
    if mode < 0.4:
        vals = [complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(n)]
    elif mode < 0.8:
        vals = [complex(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(n)]
    else:
        u = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        c = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        vals = [c + u * rng.randint(-3, 3) for _ in range(n)]
    return from_values(vals)


def random_one_regular(rng: random.Random, p_range=(3, 9), antipodal_rate=0.4):
    """A random 1-regular direction set, sometimes containing opposite pairs."""
    while True:
        p = rng.randint(*p_range)
        ang = [rng.uniform(0, 2 * math.pi) for _ in range(p)]
        if p >= 4 and rng.random() < antipodal_rate:
            for j in range(rng.randint(1, p // 2)):
                ang[2 * j + 1] = ang[2 * j] + math.pi
        try:
            ds = DirectionSet(tuple(ang))
        except ValueError:
            continue
        if is_k_regular(ds, 1):
            return ds


def random_polygon(rng: random.Random, p_max: int = 7):
    """Vertices of a random convex polygon with at most ``p_max`` sides."""
    while True:
        pts = [complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(rng.randint(3, p_max))]
        hull = convex_hull(pts)
        if hull.kind is Kind.POLYGON:
            return hull.points


def roots_of_unity(n: int):
    return [cmath.exp(2j * math.pi * j / n) for j in range(n)]


# criterion number -> (passed, detail), filled by the acceptance tests
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def report(number: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[number] = (ok, detail)
    print(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
