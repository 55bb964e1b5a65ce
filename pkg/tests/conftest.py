"""Shared helpers for the test suite: tolerant comparisons and seeded generators."""

from __future__ import annotations

import cmath
import math
import random

from cxbezier.bernstein import BPoly
from cxbezier.curve import CxBezier, MobiusMap


def cclose(a: complex, b: complex, tol: float = 1e-12) -> bool:
    a = complex(a)
    b = complex(b)
    return abs(a - b) <= tol * (1.0 + max(abs(a), abs(b)))


def seq_close(xs, ys, tol: float = 1e-12) -> bool:
    xs = list(xs)
    ys = list(ys)
    return len(xs) == len(ys) and all(cclose(x, y, tol) for x, y in zip(xs, ys))


def rand_complex(rng: random.Random, lo: float = 0.3, hi: float = 3.0) -> complex:
    # modulus kept inside [lo, hi] so coefficients never degenerate to zero
    return rng.uniform(lo, hi) * cmath.exp(1j * rng.uniform(0.0, 2.0 * math.pi))


def rand_bpoly(rng: random.Random, degree: int, lo: float = 0.3, hi: float = 3.0) -> BPoly:
    return BPoly(tuple(rand_complex(rng, lo, hi) for _ in range(degree + 1)))


def rand_curve(rng: random.Random, degree: int) -> CxBezier:
    polygon = tuple(complex(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)) for _ in range(degree + 1))
    weights = tuple(rand_complex(rng, 0.5, 2.0) for _ in range(degree + 1))
    return CxBezier(polygon, weights)


def rand_mobius(rng: random.Random) -> MobiusMap:
    while True:
        entries = [rand_complex(rng, 0.2, 2.0) for _ in range(4)]
        a, b, c, d = entries
        if abs(a * d - b * c) > 0.1:
            return MobiusMap(a, b, c, d)
