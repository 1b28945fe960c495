"""Non-emptiness of the moduli of alpha-(semi)stable systems of type (2, 2r - t, c2, 2)."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .errors import PreconditionError
from .exactnum import RationalLike, as_rational
from .stability import trivial_semistable
from .core import CsType


def _check_t(t: int) -> None:
    if t not in (0, 1):
        raise PreconditionError(f"t must be 0 or 1, got {t}")


def clause_thresholds(r: int, t: int) -> dict:
    """The c2 and a thresholds the sufficient clauses test against."""
    half_t = Fraction(t, 2)
    return {
        "large_c2": r * r - t + 2,
        "near_square_c2": r * r - r * t,
        "near_square_min_r": 2 + t,
        "near_square_a": half_t,
        "negative_s0": [
            {"s0": s0, "c2": r * r - s0 * s0 + (s0 - r) * t, "a": half_t - s0}
            for s0 in range(t + 2 - r, 0)
        ],
        "line_c2": [2 * r - t - 1, 2 * r - t],
        "line_a": r - 1 - half_t,
    }


def nonempty_sufficient(r: int, t: int, c2: int, a: RationalLike) -> Optional[int]:
    """First sufficient clause (1 to 4) that holds, or None.

    None means no clause applies; it does not say the moduli space is empty.
    """
    _check_t(t)
    a = as_rational(a)
    if 2 * r - t <= 0:
        raise PreconditionError("c1 = 2r - t must be positive")
    if a <= 0:
        raise PreconditionError("a must be positive")
    th = clause_thresholds(r, t)
    if c2 >= th["large_c2"]:
        return 1
    if th["near_square_c2"] <= c2 < th["large_c2"] and r >= th["near_square_min_r"] and a > th["near_square_a"]:
        return 2
    if any(a > row["a"] and c2 >= row["c2"] for row in th["negative_s0"]):
        return 3
    if c2 in th["line_c2"] and a > th["line_a"]:
        return 4
    return None


def in_window(r: int, t: int, c2: int, s0: int) -> bool:
    return (
        t + 2 - r <= s0 < 0
        and r * r - s0 * s0 + (s0 - r) * t <= c2 < r * r - (s0 + 1) ** 2 + (s0 - r + 1) * t
    )


def b_threshold(r: int, t: int, c2: int, s0: int) -> Fraction:
    """Bound on b at the edge a = t/2 - s0."""
    return (
        Fraction(c2 - r * r, 2) + r * t - r * s0 + Fraction(s0 * s0, 2)
        - Fraction(t * t, 4) - Fraction(3 * s0, 2) + Fraction(3 * t, 4)
    )


def nonempty_iff(
    r: int, t: int, c2: int, s0: int, a: RationalLike, b: RationalLike, semistable: bool = False
) -> bool:
    """Exact answer inside the window r^2 - s0^2 + (s0 - r)t <= c2 < r^2 - (s0+1)^2 + (s0 - r + 1)t."""
    _check_t(t)
    if not in_window(r, t, c2, s0):
        raise PreconditionError(f"(r={r}, t={t}, c2={c2}) is outside the window for s0={s0}")
    a, b = as_rational(a), as_rational(b)
    edge = Fraction(t, 2) - s0
    bound = b_threshold(r, t, c2, s0)
    if semistable:
        return a > edge or (a == edge and b >= bound)
    return a > edge or (a == edge and b > bound)


def trivial_only(r: int, t: int, c2: int, k: int) -> bool:
    """For c1 in {0, -1}: only O + O with all sections, type (2, 0, 0, 2), is semistable."""
    return trivial_semistable(CsType(r, t, c2, k))
