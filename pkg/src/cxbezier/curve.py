"""Rational plane curves with complex control points and weights.

A planar rational Bezier curve is written here as a ratio of two
Bernstein-form polynomials over the complex numbers: the numerator has
coefficients weight*point, the denominator the weights themselves.
Treating the plane as the complex line makes Moebius transformations of
the curve (inversion in particular) a matter of rewriting control data,
and makes "is this really a lower-degree curve?" a resultant/gcd question
on the two coefficient lists.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import comb

from . import algebra, tolerances
from .bernstein import BPoly, extract_factors, multiply, shift_factors


class PoleError(ValueError):
    """Evaluation hit a parameter where the denominator vanishes."""

    def __init__(self, t: float):
        super().__init__(f"denominator vanishes at t={t}")
        self.t = t


def _all_finite(values) -> bool:
    return all(cmath.isfinite(complex(v)) for v in values)


@dataclass(frozen=True)
class MobiusMap:
    """Invertible map z -> (c + d*z) / (a + b*z)."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self) -> None:
        entries = tuple(complex(v) for v in (self.a, self.b, self.c, self.d))
        if not _all_finite(entries):
            raise ValueError("map entries must be finite")
        a, b, c, d = entries
        scale = max(abs(v) for v in entries)
        if abs(a * d - b * c) <= tolerances.zero * scale * scale:
            raise ValueError("singular Moebius map")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __call__(self, z: complex) -> complex:
        return (self.c + self.d * z) / (self.a + self.b * z)

    @classmethod
    def identity(cls) -> MobiusMap:
        return cls(1, 0, 0, 1)

    @classmethod
    def inversion(cls) -> MobiusMap:
        """z -> 1/z."""
        return cls(0, 1, 1, 0)


@dataclass(frozen=True)
class RealBezier:
    """Planar rational curve with real control points and real weights."""

    points: tuple[tuple[float, float], ...]
    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        points = tuple((float(x), float(y)) for x, y in self.points)
        weights = tuple(float(w) for w in self.weights)
        if len(points) != len(weights):
            raise ValueError("points and weights must have the same length")
        if len(points) < 2:
            raise ValueError("a curve needs at least two control points")
        if not all(math.isfinite(x) and math.isfinite(y) for x, y in points):
            raise ValueError("control points must be finite")
        if not all(math.isfinite(w) for w in weights):
            raise ValueError("weights must be finite")
        top = max(abs(w) for w in weights)
        if any(abs(w) <= tolerances.zero * top for w in weights):
            raise ValueError("weights must be nonzero")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "weights", weights)

    @property
    def degree(self) -> int:
        return len(self.points) - 1


@dataclass(frozen=True)
class CxBezier:
    """Rational complex curve: control polygon and weights of equal length."""

    polygon: tuple[complex, ...]
    weights: tuple[complex, ...]

    def __post_init__(self) -> None:
        polygon = tuple(complex(z) for z in self.polygon)
        weights = tuple(complex(w) for w in self.weights)
        if len(polygon) != len(weights):
            raise ValueError("polygon and weights must have the same length")
        if len(polygon) < 2:
            raise ValueError("a curve needs at least two control points")
        if not _all_finite(polygon) or not _all_finite(weights):
            raise ValueError("control data must be finite")
        top = max(abs(w) for w in weights)
        if any(abs(w) <= tolerances.zero * top for w in weights):
            raise ValueError("weights must be nonzero")
        object.__setattr__(self, "polygon", polygon)
        object.__setattr__(self, "weights", weights)

    @property
    def degree(self) -> int:
        return len(self.polygon) - 1

    def numerator(self) -> BPoly:
        return BPoly(tuple(w * z for w, z in zip(self.weights, self.polygon)))

    def denominator(self) -> BPoly:
        return BPoly(self.weights)

    def evaluate(self, t: float) -> complex:
        """Curve point at parameter t (t outside [0, 1] is allowed)."""
        den_poly = self.denominator()
        scale = max(abs(c) for c in den_poly.reduced())
        den = den_poly.evaluate(t)
        if abs(den) <= tolerances.pole * scale:
            raise PoleError(t)
        return self.numerator().evaluate(t) / den

    def endpoint_tangents(self) -> tuple[complex, complex]:
        """Derivatives at t=0 and t=1.

        Only the adjacent weight ratio enters: the start tangent is
        n * (w1/w0) * (z1 - z0), so the ratio's modulus stretches the
        polygon leg and its argument rotates it.
        """
        n = self.degree
        start = n * (self.weights[1] / self.weights[0]) * (self.polygon[1] - self.polygon[0])
        end = n * (self.weights[-2] / self.weights[-1]) * (self.polygon[-1] - self.polygon[-2])
        return start, end

    def scale_weights(self, factor: complex) -> CxBezier:
        """Multiply every weight by the same nonzero constant; the curve is unchanged."""
        factor = complex(factor)
        if factor == 0:
            raise ValueError("weight scale factor must be nonzero")
        return CxBezier(self.polygon, tuple(factor * w for w in self.weights))

    def normalized_weights(self) -> CxBezier:
        """Canonical representative: divide out the largest-modulus weight.

        Ties pick the lowest index.
        """
        pivot = max(self.weights, key=abs)
        return CxBezier(self.polygon, tuple(w / pivot for w in self.weights))

    def reparametrize(self, rho: float) -> CxBezier:
        """Precompose with t(u) = u / ((1 - rho)*u + rho).

        The substitution fixes 0 and 1 and maps [0, 1] onto itself for
        rho > 0, so only the weights change: weight j picks up rho**(n-j).
        """
        rho = float(rho)
        if rho <= 0:
            raise ValueError("reparametrization factor must be positive")
        n = self.degree
        return CxBezier(self.polygon, tuple(rho ** (n - j) * w for j, w in enumerate(self.weights)))

    def mobius_image(self, mapping: MobiusMap) -> CxBezier:
        """The image curve under a Moebius map, as control data.

        New weights are w_j * (a + b*z_j) and new points the mapped old
        points, so the image is again rational of the same formal degree.
        """
        shifted = [mapping.a + mapping.b * z for z in self.polygon]
        new_weights = [w * s for w, s in zip(self.weights, shifted)]
        top = max(abs(w) for w in new_weights)
        for idx, value in enumerate(new_weights):
            if abs(value) <= tolerances.zero * top:
                raise ValueError(f"control point {idx} at pole of Moebius map")
        new_polygon = [(mapping.c + mapping.d * z) / s for z, s in zip(self.polygon, shifted)]
        return CxBezier(tuple(new_polygon), tuple(new_weights))

    def invert(self) -> CxBezier:
        """Unit inversion z -> 1/z: points reciprocated, weights become w_j * z_j."""
        return self.mobius_image(MobiusMap.inversion())

    def degree_elevate(self, alpha: complex, beta: complex) -> CxBezier:
        """Multiply numerator and denominator by alpha*(1-t) + beta*t.

        The factor may be any nonzero complex combination; it is allowed to
        vanish inside (0, 1), the construction only rejects it when some
        resulting weight vanishes.  With alpha = beta the classical real
        degree elevation comes out.
        """
        alpha = complex(alpha)
        beta = complex(beta)
        if alpha == 0 and beta == 0:
            raise ValueError("elevation factor must be nonzero")
        n = self.degree
        old_w = self.weights
        old_wz = tuple(w * z for w, z in zip(self.weights, self.polygon))
        new_w = []
        new_wz = []
        for j in range(n + 2):
            low = alpha * (n + 1 - j) / (n + 1)
            high = beta * j / (n + 1)
            w = (low * old_w[j] if j <= n else 0j) + (high * old_w[j - 1] if j >= 1 else 0j)
            wz = (low * old_wz[j] if j <= n else 0j) + (high * old_wz[j - 1] if j >= 1 else 0j)
            new_w.append(w)
            new_wz.append(wz)
        top = max(abs(w) for w in new_w)
        if any(abs(w) <= tolerances.zero * top for w in new_w):
            raise ValueError("elevation factor has root coincident with weight structure")
        return CxBezier(tuple(wz / w for wz, w in zip(new_wz, new_w)), tuple(new_w))

    def is_irreducible(self) -> bool:
        """True when numerator and denominator share no root.

        Equivalent to: the formal degree is the true degree of the curve.
        """
        return algebra.is_coprime(self.numerator(), self.denominator())

    def is_conic_cubic(self) -> bool:
        """For a formally cubic curve: does it actually trace a conic?

        That happens exactly when the 6x6 resultant determinant of the two
        coefficient lists vanishes, i.e. when the cubic is reducible.
        """
        if self.degree != 3:
            raise ValueError("conic test applies to degree 3 curves only")
        return not algebra.is_coprime(self.numerator(), self.denominator())

    def reduce(self) -> CxBezier:
        """Cancel the common numerator/denominator factor, if any.

        The returned curve traces the same point set with the lowest formal
        degree the gcd can reach, with weights normalized per
        :meth:`normalized_weights`.
        """
        num = self.numerator()
        den = self.denominator()
        common = algebra.gcd(num, den)
        if common.degree == 0:
            return self.normalized_weights()
        new_num = _quotient(num, common)
        new_den = _quotient(den, common)
        weights = new_den.coeffs
        top = max(abs(w) for w in weights)
        if any(abs(w) <= tolerances.zero * top for w in weights):
            raise ValueError("base point / infinite control point after reduction")
        polygon = tuple(c / w for c, w in zip(new_num.coeffs, weights))
        return CxBezier(polygon, weights).normalized_weights()

    def to_real(self) -> RealBezier:
        """Real rational form of the same curve, of twice the formal degree.

        Multiplying numerator and denominator by the conjugate of the
        denominator makes every weight real; the imaginary residue left by
        rounding is zeroed when it is below ``tolerances.weight_residue``.
        """
        conjugate_den = BPoly(tuple(w.conjugate() for w in self.weights))
        num2 = multiply(self.numerator(), conjugate_den)
        den2 = multiply(self.denominator(), conjugate_den)
        den_red = den2.reduced()
        doubled = len(den_red) - 1
        weights = []
        for value in den_red:
            if abs(value.imag) > tolerances.weight_residue:
                raise ValueError("conjugate product left a nonreal weight")
            weights.append(value.real)
        top = max(abs(w) for w in weights)
        if any(abs(w) <= tolerances.zero * top for w in weights):
            raise ValueError("curve passes through a base point of the conjugate form")
        num_red = num2.reduced()
        points = []
        for idx in range(doubled + 1):
            z = num_red[idx] / weights[idx]
            points.append((z.real, z.imag))
        return RealBezier(tuple(points), tuple(w / comb(doubled, j) for j, w in enumerate(weights)))

    @classmethod
    def from_real(cls, real: RealBezier) -> CxBezier:
        """Reinterpret a real curve over the complex line; no reduction is attempted."""
        return cls(
            tuple(complex(x, y) for x, y in real.points),
            tuple(complex(w) for w in real.weights),
        )


def _quotient(p: BPoly, g: BPoly) -> BPoly:
    # strip endpoint factors so the division precondition (divisor and
    # dividend nonzero at t=1) holds; g never carries such factors when it
    # divides p, so they transfer to the quotient unchanged
    ones, zeros, core = extract_factors(p)
    result, _ = algebra.divide(core, g)
    return shift_factors(result, ones, zeros)


def same_curve(first: CxBezier, second: CxBezier, *, samples: int = 33, tol: float = 1e-9) -> bool:
    """Extensional equality: same reduced degree and pointwise agreement.

    Both curves are reduced, then compared at Chebyshev-spread parameters
    in [0, 1]; a node where either has a pole is skipped.
    """
    a = first.reduce()
    b = second.reduce()
    if a.degree != b.degree:
        return False
    for k in range(samples):
        t = 0.5 - 0.5 * math.cos(math.pi * (2 * k + 1) / (2 * samples))
        try:
            va = a.evaluate(t)
            vb = b.evaluate(t)
        except PoleError:
            continue
        if abs(va - vb) > tol * (1.0 + max(abs(va), abs(vb))):
            return False
    return True


@dataclass(frozen=True)
class CircleArc:
    """A degree-one rational arc together with the circle carrying it."""

    curve: CxBezier
    radius: float
    center: complex


def circle_arc(start: complex, end: complex, angle: float) -> CircleArc:
    """Arc from start to end entering at angle ``angle`` to the chord.

    A degree-one curve with weights (1, e^{i*angle}) runs along a circle
    through its two control points; radius and center follow from the
    chord and the angle.  angle = 0 mod pi would give the segment or the
    full line instead, which is rejected.
    """
    start = complex(start)
    end = complex(end)
    if not _all_finite((start, end)):
        raise ValueError("endpoints must be finite")
    if start == end:
        raise ValueError("endpoints must differ")
    angle = float(angle)
    if not 0.0 < abs(angle) < math.pi:
        raise ValueError("degenerate: segment or line, not an arc")
    phase = cmath.exp(1j * angle)
    curve = CxBezier((start, end), (1.0, phase))
    sine = math.sin(angle)
    radius = abs(end - start) / (2.0 * abs(sine))
    center = start + (1j * phase / (2.0 * sine)) * (start - end)
    return CircleArc(curve, radius, center)
