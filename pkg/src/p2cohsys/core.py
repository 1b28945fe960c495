"""Numerical data of coherent systems on P^2 and their reduced Hilbert polynomials."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping, Union

from .errors import PreconditionError
from .exactnum import QPoly, RationalLike, as_rational, is_positive, rational_to_str
from .p2cohom import hilbert_poly_line


@dataclass(frozen=True)
class CsType:
    """Type (2, c1, c2, k) stored as (r, t, c2, k) with c1 = 2r - t."""

    r: int
    t: int
    c2: int
    k: int = 2

    def __post_init__(self):
        if self.t not in (0, 1):
            raise PreconditionError(f"t must be 0 or 1, got {self.t}")
        if self.k < 0:
            raise PreconditionError(f"k must be nonnegative, got {self.k}")

    @property
    def c1(self) -> int:
        return 2 * self.r - self.t

    @property
    def slope(self) -> Fraction:
        return Fraction(self.c1, 2)

    def to_json(self) -> dict[str, int]:
        return {"r": self.r, "t": self.t, "c2": self.c2, "k": self.k}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "CsType":
        return cls(int(data["r"]), int(data["t"]), int(data["c2"]), int(data.get("k", 2)))


@dataclass(frozen=True)
class SubsystemData:
    """A line-bundle subsystem (L, W): c1L = c1(L), w = dim W."""

    c1L: int
    w: int

    def __post_init__(self):
        if self.w < 0:
            raise PreconditionError(f"dim W must be nonnegative, got {self.w}")

    def to_json(self) -> dict[str, int]:
        return {"c1L": self.c1L, "w": self.w}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "SubsystemData":
        return cls(int(data["c1L"]), int(data["w"]))


@dataclass(frozen=True)
class AlphaLinear:
    """Stability parameter alpha(m) = a*m + b."""

    a: Fraction
    b: Fraction

    def __init__(self, a: RationalLike, b: RationalLike = 0):
        object.__setattr__(self, "a", as_rational(a))
        object.__setattr__(self, "b", as_rational(b))

    def as_poly(self) -> QPoly:
        return QPoly.linear(self.a, self.b)

    def is_positive(self) -> bool:
        return is_positive(self.as_poly())

    def key(self) -> tuple[Fraction, Fraction]:
        return (self.a, self.b)

    def to_json(self) -> dict[str, str]:
        return {"a": rational_to_str(self.a), "b": rational_to_str(self.b)}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "AlphaLinear":
        return cls(data["a"], data["b"])

    def __str__(self) -> str:
        return str(self.as_poly())


AlphaLike = Union[QPoly, AlphaLinear, int, Fraction, str]


def as_alpha_poly(alpha: AlphaLike) -> QPoly:
    if isinstance(alpha, QPoly):
        return alpha
    if isinstance(alpha, AlphaLinear):
        return alpha.as_poly()
    return QPoly.const(alpha)


def reduced_hilbert_rank2(cs: CsType, alpha: AlphaLike) -> QPoly:
    """(k/2) alpha + P_E(m)/2 for a rank-2 system of type ``cs``."""
    c1, c2 = cs.c1, cs.c2
    half_pe = QPoly((
        Fraction(Fraction(c1 * c1 + 3 * c1, 2) - c2, 2) + 1,
        Fraction(c1 + 3, 2),
        Fraction(1, 2),
    ))
    return Fraction(cs.k, 2) * as_alpha_poly(alpha) + half_pe


def reduced_hilbert_sub(sub: SubsystemData, alpha: AlphaLike) -> QPoly:
    return sub.w * as_alpha_poly(alpha) + hilbert_poly_line(sub.c1L)


def slope_gap_a(cs: CsType, sub: SubsystemData, a: RationalLike) -> Fraction:
    """mu_a(E, V) - mu_a(L, W) = (c1/2 - c1L) + a (k/2 - w)."""
    a = as_rational(a)
    return (cs.slope - sub.c1L) + a * (Fraction(cs.k, 2) - sub.w)


def constant_gap(cs: CsType, alpha: AlphaLinear, sub: SubsystemData) -> Fraction:
    """c1^2 - 2c2 - 2 c1L^2 - (4b - 6a)(w - k/2).

    Positive means the subsystem's constant term is smaller, once the linear
    terms agree.
    """
    lhs = cs.c1 ** 2 - 2 * cs.c2 - 2 * sub.c1L ** 2
    return lhs - (4 * alpha.b - 6 * alpha.a) * (sub.w - Fraction(cs.k, 2))
