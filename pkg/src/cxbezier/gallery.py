"""Classical curves obtained by unit inversion of conic arcs.

Each builder returns a pair ``(conic, inverted)``: a rational quadratic
arc and its image under z -> 1/z.  The product of the two evaluations is
identically 1 wherever both are defined.  The shape parameter ``a`` only
rescales the plane, so general values come from complex scaling of the
reference control data.
"""

from __future__ import annotations

import math

from .curve import CxBezier


def _scaled(points: tuple[complex, ...], factor: complex) -> tuple[complex, ...]:
    return tuple(factor * z for z in points)


def cissoid(a: float) -> tuple[CxBezier, CxBezier]:
    """Cissoid of Diocles: inversion of a parabola arc about its vertex.

    The conic is an arc of y = 2*a*x**2.  For a = 1/2 its polygon is
    {-1+i, -i, 1+i} with unit weights, the quadratic parameter covering the
    parabola as x = 2t - 1; against the classical rational form of the
    cissoid, 2*a*s**2 / (s + i), that is s = 1/(2t - 1), and the vertex
    (the center of inversion) sits at t = 1/2, where the inverted curve
    has its pole.
    """
    if a == 0:
        raise ValueError("shape parameter must be nonzero")
    base = (-1 + 1j, -1j, 1 + 1j)
    conic = CxBezier(_scaled(base, 0.5 / a), (1, 1, 1))
    return conic, conic.invert()


def cardioid(a: float) -> tuple[CxBezier, CxBezier]:
    """Cardioid: inversion of a parabola arc about its focus.

    The conic is an arc of the parabola with focus at the origin; for
    a = 1 its polygon is {-i, 1, i} with unit weights (the parabola
    x = (1 - y**2)/2, covered as y = 2t - 1).  The classical rational form
    -2*a / (s + i)**2 corresponds to s = 1 - 2t.  The conic never meets
    the origin, so the cardioid arc has no pole in [0, 1].
    """
    if a == 0:
        raise ValueError("shape parameter must be nonzero")
    base = (-1j, 1, 1j)
    conic = CxBezier(_scaled(base, 1.0 / a), (1, 1, 1))
    return conic, conic.invert()


def lemniscate(a: float) -> tuple[CxBezier, CxBezier]:
    """Lemniscate of Bernoulli: inversion of an equilateral hyperbola arc.

    For a = 1 the conic polygon is {sqrt2 - i, sqrt2/2, sqrt2 + i} with
    weights {1, sqrt2, 1}: an arc of x**2 - y**2 = 1 through the vertex
    (1, 0) at t = 1/2.  The classical rational form of the lemniscate,
    a*(1 - i)*s / (s**2 - i), meets this parametrization under the real
    Moebius substitution s = ((2 - sqrt2)*t + sqrt2 - 1) /
    ((sqrt2 - 2)*t + 1), which sends t = 0, 1/2, 1 to s = sqrt2 - 1, 1,
    sqrt2 + 1.
    """
    if a == 0:
        raise ValueError("shape parameter must be nonzero")
    root2 = math.sqrt(2.0)
    base = (root2 - 1j, root2 / 2.0, root2 + 1j)
    conic = CxBezier(_scaled(base, 1.0 / a), (1, root2, 1))
    return conic, conic.invert()
