"""Resultants, division and gcd for Bernstein-form polynomials.

Everything here works on the reduced (binomial-scaled) coefficient lists,
which is what makes the algorithms basis-free in practice: no conversion
to the power basis is ever required, except inside the deliberately
independent :func:`resultant_monomial` cross-check.
"""

from __future__ import annotations

from typing import Sequence

from . import tolerances
from .bernstein import BPoly, extract_factors, shift_factors


def _determinant(rows: list[list[complex]]) -> complex:
    """Determinant by Gaussian elimination with partial pivoting on modulus."""
    size = len(rows)
    work = [row[:] for row in rows]
    det = 1 + 0j
    for col in range(size):
        pivot = max(range(col, size), key=lambda i: abs(work[i][col]))
        if work[pivot][col] == 0:
            return 0j
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        lead = work[col][col]
        det *= lead
        for i in range(col + 1, size):
            factor = work[i][col] / lead
            if factor == 0:
                continue
            for j in range(col + 1, size):
                work[i][j] -= factor * work[col][j]
    return det


def _sylvester(p_coeffs: Sequence[complex], q_coeffs: Sequence[complex]) -> list[list[complex]]:
    """Sylvester matrix of two ascending coefficient lists.

    Rows hold the coefficients in descending order, deg(q) shifted copies of
    p over deg(p) shifted copies of q.
    """
    m = len(p_coeffs) - 1
    n = len(q_coeffs) - 1
    size = m + n
    p_desc = list(reversed([complex(c) for c in p_coeffs]))
    q_desc = list(reversed([complex(c) for c in q_coeffs]))
    rows = []
    for i in range(n):
        row = [0j] * size
        row[i:i + m + 1] = p_desc
        rows.append(row)
    for i in range(m):
        row = [0j] * size
        row[i:i + n + 1] = q_desc
        rows.append(row)
    return rows


def _require_positive_degrees(p: BPoly, q: BPoly) -> None:
    if p.degree < 1 or q.degree < 1:
        raise ValueError("resultant requires positive degrees")


def resultant_monomial(p: BPoly, q: BPoly) -> complex:
    """Resultant via conversion to the power basis.

    Kept as an independent route: it shares no coefficient preparation with
    :func:`resultant_bernstein`, so the two can cross-check each other.
    """
    _require_positive_degrees(p, q)
    return _determinant(_sylvester(p.monomial(), q.monomial()))


def resultant_bernstein(p: BPoly, q: BPoly) -> complex:
    """Resultant straight from the reduced Bernstein coefficients.

    Substituting s = t/(1-t) turns a degree-m Bernstein form into
    (1-t)**m * P(s) where P has the reduced coefficients in the power
    basis, and that substitution leaves the resultant unchanged.  So the
    ordinary Sylvester determinant of the two reduced lists equals the
    power-basis resultant, with no extra scaling.
    """
    _require_positive_degrees(p, q)
    return _determinant(_sylvester(p.reduced(), q.reduced()))


def is_coprime(p: BPoly, q: BPoly) -> bool:
    """True when p and q share no root, judged against a scale-aware threshold.

    The threshold scales like the resultant matrix itself:
    (max reduced modulus of p) ** deg q * (max reduced modulus of q) ** deg p.
    """
    value = resultant_bernstein(p, q)
    p_scale = max(abs(c) for c in p.reduced())
    q_scale = max(abs(c) for c in q.reduced())
    return abs(value) > tolerances.resultant * p_scale ** q.degree * q_scale ** p.degree


def divide(p: BPoly, q: BPoly) -> tuple[BPoly, BPoly]:
    """Division adapted to the Bernstein basis.

    Returns ``(f, r)`` with ``p = q*f + (1-t)**(m-n+1) * r`` where
    m = deg p, n = deg q, deg f = m - n and deg r = n - 1 (a zero constant
    when n = 0).  Requires q(1) != 0; when p or q vanishes at an endpoint,
    strip the factor with :func:`extract_factors` first.

    Working on the reduced lists, the top m - n + 1 coefficients of the
    identity determine f by back substitution and the bottom n give r.
    """
    m = p.degree
    n = q.degree
    if m < n:
        raise ValueError("dividend degree must not be smaller than divisor degree")
    q_red = q.reduced()
    q_scale = max(abs(c) for c in q_red)
    if q_scale == 0.0:
        raise ValueError("division by zero polynomial")
    if abs(q_red[-1]) <= tolerances.zero * q_scale:
        raise ValueError("divisor vanishes at t=1, extract factors first")
    p_red = p.reduced()
    quot = [0j] * (m - n + 1)
    for k in range(m - n, -1, -1):
        total = p_red[n + k]
        for k2 in range(k + 1, m - n + 1):
            j = n + k - k2
            if 0 <= j <= n:
                total -= q_red[j] * quot[k2]
        quot[k] = total / q_red[n]
    if n == 0:
        return BPoly.from_reduced(quot), BPoly((0j,))
    rem = []
    for idx in range(n):
        total = p_red[idx]
        for k2 in range(min(idx, m - n) + 1):
            total -= q_red[idx - k2] * quot[k2]
        rem.append(total)
    return BPoly.from_reduced(quot), BPoly.from_reduced(rem)


def _max_reduced_modulus(p: BPoly) -> float:
    return max(abs(c) for c in p.reduced())


def normalize_reduced(p: BPoly) -> BPoly:
    """Divide through so the largest-modulus reduced coefficient equals 1.

    Ties pick the lowest index, so the representative is deterministic.
    """
    red = p.reduced()
    pivot = max(red, key=abs)
    if pivot == 0:
        raise ValueError("zero polynomial")
    return BPoly.from_reduced(tuple(c / pivot for c in red))


def gcd(p: BPoly, q: BPoly) -> BPoly:
    """Greatest common divisor, up to a constant, by Euclid's algorithm.

    Shared factors of t and (1-t) are split off both inputs first and
    multiplied back into the result; with them gone every divisor has
    nonzero endpoint values, which is exactly what :func:`divide` needs.
    Intermediate remainders get the same stripping, which cannot lose a
    common factor because the gcd of the stripped inputs has no root at
    0 or 1.  The result is normalized per :func:`normalize_reduced`.
    """
    p_zero = _max_reduced_modulus(p) == 0.0
    q_zero = _max_reduced_modulus(q) == 0.0
    if p_zero and q_zero:
        raise ValueError("gcd of two zero polynomials")
    if p_zero:
        return normalize_reduced(q)
    if q_zero:
        return normalize_reduced(p)
    p_ones, p_zeros, a = extract_factors(p)
    q_ones, q_zeros, b = extract_factors(q)
    shared_ones = min(p_ones, q_ones)
    shared_zeros = min(p_zeros, q_zeros)
    a = normalize_reduced(a)
    b = normalize_reduced(b)
    while True:
        if a.degree < b.degree:
            a, b = b, a
        _, remainder = divide(a, b)
        # operands are normalized to unit max modulus, so the test is relative
        if _max_reduced_modulus(remainder) <= tolerances.gcd_remainder:
            core = b
            break
        _, _, stripped = extract_factors(remainder)
        a, b = b, normalize_reduced(stripped)
    return normalize_reduced(shift_factors(core, shared_ones, shared_zeros))
