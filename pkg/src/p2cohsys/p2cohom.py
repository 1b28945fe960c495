"""Line bundles O(d) on the projective plane, tracked by their degree only."""
from __future__ import annotations

from fractions import Fraction

from .exactnum import QPoly

# omega of P^2 is O(-3); Serre duality twists are degree arithmetic.
CANONICAL_DEGREE = -3


def h0_line(d: int) -> int:
    """Number of degree-``d`` monomials in three variables (0 for ``d < 0``)."""
    return (d + 1) * (d + 2) // 2 if d >= 0 else 0


def h2_line(d: int) -> int:
    return h0_line(CANONICAL_DEGREE - d)


def chi_line(d: int) -> int:
    """Euler characteristic; h^1(O(d)) vanishes for every d on the plane."""
    return h0_line(d) + h2_line(d)


def hilbert_poly_line(d: int) -> QPoly:
    """Hilbert polynomial m^2/2 + (d + 3/2) m + (d^2 + 3d)/2 + 1 of O(d)."""
    return QPoly((Fraction(d * d + 3 * d, 2) + 1, Fraction(2 * d + 3, 2), Fraction(1, 2)))
