"""Segre invariant feasibility and the zero-cycle bookkeeping of the extension

    0 -> O(r - s) -> E -> O(r + s - t) (x) I_Z -> 0

for a rank-2 bundle E with c1 = 2r - t and Segre invariant S(E) = 2s - t.
"""
from __future__ import annotations

import enum

from .core import CsType
from .errors import FeasibilityError, PreconditionError


class Violation(str, enum.Enum):
    NEGATIVE_R = "NegativeR"
    S_OUT_OF_RANGE = "SOutOfRange"
    NEGATIVE_C2 = "NegativeC2"


def _check_t(t: int) -> None:
    if t not in (0, 1):
        raise PreconditionError(f"t must be 0 or 1, got {t}")


def segre_threshold(r: int, t: int, s: int) -> int:
    """Smallest c2 admitting a bundle with Segre invariant 2s - t."""
    _check_t(t)
    if s >= 1:
        return s * s + s + r * r - t * (r + s)
    return r * r - s * s - t * (r - s)


def segre_feasible(r: int, t: int, c2: int, s: int) -> bool:
    return c2 >= segre_threshold(r, t, s)


def cycle_length(r: int, t: int, c2: int, s: int) -> int:
    """Length of Z, i.e. c2 - (r - s)(r + s - t) by the Whitney formula."""
    _check_t(t)
    ell = c2 + s * s - r * r + t * (r - s)
    if ell < 0:
        raise FeasibilityError(f"negative cycle length {ell} for (r={r}, t={t}, c2={c2}, s={s})")
    return ell


def feasible_segre_values(r: int, t: int, c2: int) -> list[int]:
    if r < 0:
        raise PreconditionError("r must be nonnegative")
    return [s for s in range(-r + 1, r + 1) if segre_feasible(r, t, c2, s)]


def necessary_conditions(cs: CsType, s: int) -> list[Violation]:
    """Violated clauses of the alpha-semistability screen for k >= 2.

    The range clause -r < s <= r is only reported once r >= 0 holds; for
    negative r the range is empty and the failure is charged to r itself.
    """
    if cs.k < 2:
        raise PreconditionError("the screen applies to k >= 2")
    out = []
    if cs.r < 0:
        out.append(Violation.NEGATIVE_R)
    elif not (-cs.r < s <= cs.r):
        out.append(Violation.S_OUT_OF_RANGE)
    if cs.c2 < 0:
        out.append(Violation.NEGATIVE_C2)
    return out
