"""Polynomials in the Bernstein basis with complex coefficients.

A degree-n polynomial is stored as its n+1 Bernstein coefficients.  Most
algebra here runs on the "reduced" form, where coefficient j is scaled by
binomial(n, j): in that form multiplication is a plain convolution, and
factors of t and (1-t) show up as leading and trailing zeros.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from . import tolerances

# Binomials are exact integers, but the reduced form mixes them into float
# arithmetic; past this degree the scaling drowns the coefficients.
MAX_DEGREE = 60


def _require_finite(values: Iterable[complex]) -> None:
    for value in values:
        if not cmath.isfinite(value):
            raise ValueError("coefficients must be finite")


def _check_degree(n: int) -> None:
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds the supported maximum {MAX_DEGREE}")


@dataclass(frozen=True)
class BPoly:
    """A univariate polynomial of degree ``len(coeffs) - 1`` in Bernstein form."""

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(complex(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a Bernstein polynomial needs at least one coefficient")
        _require_finite(coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, t: float) -> complex:
        """Evaluate at t by repeated linear interpolation (de Casteljau).

        The parameter may lie outside [0, 1]; the recurrence is the same.
        """
        if not math.isfinite(t):
            raise ValueError("parameter must be finite")
        work = list(self.coeffs)
        s = 1.0 - t
        for step in range(self.degree):
            for i in range(self.degree - step):
                work[i] = s * work[i] + t * work[i + 1]
        return work[0]

    def reduced(self) -> tuple[complex, ...]:
        """Coefficients scaled by their binomials: entry j is coeffs[j] * C(n, j)."""
        n = self.degree
        _check_degree(n)
        return tuple(c * comb(n, j) for j, c in enumerate(self.coeffs))

    @classmethod
    def from_reduced(cls, reduced: Sequence[complex]) -> BPoly:
        """Inverse of :meth:`reduced`."""
        n = len(reduced) - 1
        _check_degree(n)
        return cls(tuple(complex(c) / comb(n, j) for j, c in enumerate(reduced)))

    def monomial(self) -> tuple[complex, ...]:
        """Power-basis coefficients, ascending."""
        n = self.degree
        red = self.reduced()
        out = []
        for k in range(n + 1):
            acc = 0j
            for j in range(k + 1):
                term = red[j] * comb(n - j, k - j)
                acc += term if (k - j) % 2 == 0 else -term
            out.append(acc)
        return tuple(out)

    @classmethod
    def from_monomial(cls, coeffs: Sequence[complex]) -> BPoly:
        """Build from ascending power-basis coefficients."""
        n = len(coeffs) - 1
        _check_degree(n)
        if n < 0:
            raise ValueError("a polynomial needs at least one coefficient")
        bern = []
        for j in range(n + 1):
            bern.append(sum((comb(j, k) * complex(coeffs[k])) / comb(n, k) for k in range(j + 1)))
        return cls(tuple(bern))

    def __mul__(self, other: BPoly) -> BPoly:
        if not isinstance(other, BPoly):
            return NotImplemented
        return multiply(self, other)


def multiply(p: BPoly, q: BPoly) -> BPoly:
    """Product of two Bernstein-form polynomials.

    In reduced form the product is the convolution of the two reduced
    coefficient lists, so no basis change is needed.
    """
    _check_degree(p.degree + q.degree)
    a = p.reduced()
    b = q.reduced()
    out = [0j] * (len(a) + len(b) - 1)
    for j, aj in enumerate(a):
        for k, bk in enumerate(b):
            out[j + k] += aj * bk
    return BPoly.from_reduced(out)


def shift_factors(p: BPoly, pow_one_minus_t: int, pow_t: int) -> BPoly:
    """Multiply p by (1-t)**pow_one_minus_t * t**pow_t.

    A factor of t prepends a zero to the reduced list and a factor of (1-t)
    appends one, so the product costs nothing but padding.
    """
    if pow_one_minus_t < 0 or pow_t < 0:
        raise ValueError("factor powers must be nonnegative")
    red = p.reduced()
    return BPoly.from_reduced((0j,) * pow_t + red + (0j,) * pow_one_minus_t)


def extract_factors(p: BPoly) -> tuple[int, int, BPoly]:
    """Strip all factors of (1-t) and t off p.

    Returns ``(j, k, core)`` with ``p = (1-t)**j * t**k * core`` and core
    having nonzero first and last reduced coefficients.  Coefficients are
    treated as zero relative to the largest modulus in the list.
    """
    red = p.reduced()
    scale = max(abs(c) for c in red)
    if scale == 0.0:
        raise ValueError("zero polynomial")
    cutoff = tolerances.zero * scale
    first = 0
    while abs(red[first]) <= cutoff:
        first += 1
    last = len(red) - 1
    while abs(red[last]) <= cutoff:
        last -= 1
    core = BPoly.from_reduced(red[first:last + 1])
    return len(red) - 1 - last, first, core
