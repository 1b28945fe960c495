"""Alpha-stability tests of a rank-2 system against a line-bundle subsystem.

Every ``compare_sub_*`` function returns the ordering of the subsystem's
reduced Hilbert polynomial relative to the system's: ``LESS`` means the
subsystem does not destabilize.
"""
from __future__ import annotations

import enum
from typing import Iterator

from .core import (
    AlphaLinear,
    CsType,
    SubsystemData,
    constant_gap,
    slope_gap_a,
)
from .errors import PreconditionError
from .exactnum import Ordering, RationalLike, as_rational
from .p2cohom import h0_line
from .segre import segre_feasible


class Verdict(str, enum.Enum):
    ALPHA_UNSTABLE = "AlphaUnstable"
    ALPHA_STABLE = "AlphaStable"
    STRICTLY_SEMISTABLE = "StrictlySemistable"


def compare_sub_constant(cs: CsType, a: RationalLike, sub: SubsystemData) -> Ordering:
    a = as_rational(a)
    if a < 0:
        raise PreconditionError("constant alpha must be nonnegative")
    mu_gap = cs.slope - sub.c1L
    if mu_gap:
        return Ordering.from_sign(-mu_gap)
    # 4a(k - 2w) - (4c2 - c1^2) > 0 means the subsystem is strictly smaller
    margin = 4 * a * (cs.k - 2 * sub.w) - (4 * cs.c2 - cs.c1 ** 2)
    return Ordering.from_sign(-margin)


def compare_sub_highdeg(cs: CsType, sub: SubsystemData) -> Ordering:
    """alpha of degree >= 2 with positive leading coefficient.

    When dim W = k/2 and the slopes agree this returns ``EQUAL`` without
    looking at constant terms, which are treated as non-binding.
    """
    twice_w = 2 * sub.w
    if twice_w != cs.k:
        return Ordering.LESS if twice_w < cs.k else Ordering.GREATER
    return Ordering.from_sign(sub.c1L - cs.slope)


def compare_sub_linear(cs: CsType, alpha: AlphaLinear, sub: SubsystemData) -> Ordering:
    if alpha.a <= 0:
        raise PreconditionError("linear alpha needs a > 0")
    gap = slope_gap_a(cs, sub, alpha.a)
    if gap:
        return Ordering.from_sign(-gap)
    return Ordering.from_sign(-constant_gap(cs, alpha, sub))


def classify_with_maximal(cs: CsType, alpha: AlphaLinear, maxsub: SubsystemData, s: int) -> Verdict:
    """Stability verdict read off the maximal subsystem (O(r - s), W_max)."""
    if maxsub.c1L != cs.r - s:
        raise PreconditionError(f"maximal subbundle has degree r - s = {cs.r - s}, got {maxsub.c1L}")
    if maxsub.w > min(cs.k, h0_line(maxsub.c1L)):
        raise PreconditionError("dim W_max exceeds min(k, h0(L_max))")
    if not segre_feasible(cs.r, cs.t, cs.c2, s):
        raise PreconditionError(f"Segre invariant 2s - t with s={s} is not feasible")
    if alpha.a <= 0:
        raise PreconditionError("linear alpha needs a > 0")
    order = compare_sub_linear(cs, alpha, maxsub)
    if order is Ordering.LESS:
        return Verdict.ALPHA_STABLE
    if order is Ordering.EQUAL:
        return Verdict.STRICTLY_SEMISTABLE
    return Verdict.ALPHA_UNSTABLE


def trivial_semistable(cs: CsType) -> bool:
    """With c1 in {0, -1} and k >= 2, only O + O with all its sections is semistable."""
    if cs.c1 not in (0, -1) or cs.k < 2:
        raise PreconditionError("defined for c1 in {0, -1} and k >= 2")
    return (cs.t, cs.r, cs.c2, cs.k) == (0, 0, 0, 2)


def subsystem_candidates(cs: CsType, max_c1L: int, min_c1L: int, max_w: int | None = None) -> Iterator[SubsystemData]:
    """Line subsystems (c1L, w) with min_c1L <= c1L <= max_c1L and w <= min(k, h0(c1L))."""
    cap = cs.k if max_w is None else min(cs.k, max_w)
    for d in range(min_c1L, max_c1L + 1):
        for w in range(min(cap, h0_line(d)) + 1):
            yield SubsystemData(d, w)
