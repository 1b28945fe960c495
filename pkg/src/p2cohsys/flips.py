"""Dimensions of the loci that flip across a w = 2 wall.

At such a wall, systems of type (2, 2r - t, c2, 2) whose maximal subsystem
(O(r - s), V) with dim V = 2 destabilizes them on one side form a locus built
from three pieces: the choice of Z, the choice of V in Gr(2, H0(O(r - s))),
and a projectivized extension space.
"""
from __future__ import annotations

from .errors import EmptyGrassmannianError, FeasibilityError, NegativeDimensionError, PreconditionError
from .p2cohom import h0_line
from .segre import cycle_length, segre_feasible


def _check(r: int, s: int, t: int, c2: int) -> None:
    if t not in (0, 1):
        raise PreconditionError(f"t must be 0 or 1, got {t}")
    if s < 1:
        raise PreconditionError("flip dimensions are defined for s >= 1")
    if not segre_feasible(r, t, c2, s):
        raise FeasibilityError(f"Segre invariant 2s - t with s={s} is not feasible for c2={c2}")


def ext1_dim(r: int, s: int, t: int, c2: int) -> int:
    """dim Ext^1(O(r + s - t) (x) I_Z, O(r - s))."""
    _check(r, s, t, c2)
    twice = 2 * (c2 - r * r - s * s + 3 * s - 1) + t * (2 * r + 2 * s - 3 - t)
    value = twice // 2
    if value < 0:
        raise NegativeDimensionError(f"Ext^1 dimension {value} is negative")
    return value


def hom_ext2_vanish(r: int, s: int, t: int, c2: int) -> tuple[int, int]:
    """(dim Hom, dim Ext^2) of the same pair; both vanish on the stable side."""
    _check(r, s, t, c2)
    return (0, 0)


def base_dim(r: int, s: int, t: int, c2: int) -> int:
    """Choice of Z (2 * length) plus the Grassmannian Gr(2, H0(O(r - s)))."""
    _check(r, s, t, c2)
    h = h0_line(r - s)
    if h < 2:
        raise EmptyGrassmannianError(f"h0(O({r - s})) = {h} < 2")
    return 2 * cycle_length(r, t, c2, s) + 2 * (h - 2)


def sigma_minus_dim(r: int, s: int, t: int, c2: int) -> int:
    _check(r, s, t, c2)
    h = h0_line(r - s)
    if h < 2:
        raise EmptyGrassmannianError(f"h0(O({r - s})) = {h} < 2")
    ext1_dim(r, s, t, c2)
    twice = 2 * (3 * c2 - 3 * r * r + s * s + 3 * s + 2 * h - 6) + t * (6 * r - 2 * s - 3 - t)
    return twice // 2


def sigma_plus_empty() -> bool:
    """Nothing becomes unstable in the opposite direction across a w = 2 wall."""
    return True


def flip_dims(r: int, s: int, t: int, c2: int) -> dict[str, int]:
    return {
        "ext1": ext1_dim(r, s, t, c2),
        "base": base_dim(r, s, t, c2),
        "sigma_minus": sigma_minus_dim(r, s, t, c2),
    }
