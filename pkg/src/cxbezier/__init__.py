"""Rational complex Bezier plane curves.

Construct rational curves whose control points and weights are complex
numbers, transform them (Moebius maps, unit inversion, rational
reparametrization, degree elevation), decide whether the formal degree is
the true one via Bernstein-form resultants, cancel common factors via a
Bernstein-basis gcd, convert between the complex and the classical real
representation, and build circle arcs and a small gallery of classical
inverses of conics.
"""

from . import tolerances
from .algebra import (
    divide,
    gcd,
    is_coprime,
    normalize_reduced,
    resultant_bernstein,
    resultant_monomial,
)
from .bernstein import BPoly, extract_factors, multiply, shift_factors
from .curve import (
    CircleArc,
    CxBezier,
    MobiusMap,
    PoleError,
    RealBezier,
    circle_arc,
    same_curve,
)
from .gallery import cardioid, cissoid, lemniscate

__version__ = "0.1.0"

__all__ = [
    "BPoly",
    "CircleArc",
    "CxBezier",
    "MobiusMap",
    "PoleError",
    "RealBezier",
    "cardioid",
    "circle_arc",
    "cissoid",
    "divide",
    "extract_factors",
    "gcd",
    "is_coprime",
    "lemniscate",
    "multiply",
    "normalize_reduced",
    "resultant_bernstein",
    "resultant_monomial",
    "same_curve",
    "shift_factors",
    "tolerances",
]
