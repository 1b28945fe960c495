"""Exact rationals and univariate polynomials in the formal variable ``m``.

Rationals are plain :class:`fractions.Fraction` values.  Polynomials are
ordered asymptotically: ``p < q`` iff ``p(m) < q(m)`` for every sufficiently
large ``m``, which is the same as comparing coefficient lists from the top
degree down.
"""
from __future__ import annotations

import enum
import functools
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

RationalLike = Union[int, Fraction, str]


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def from_sign(cls, x) -> "Ordering":
        return cls.GREATER if x > 0 else cls.LESS if x < 0 else cls.EQUAL

    def flip(self) -> "Ordering":
        return Ordering(-int(self))


def as_rational(x: RationalLike) -> Fraction:
    """Exact promotion of ints, Fractions and ``"p/q"`` strings.

    Floats are refused on purpose: they would silently carry binary rounding.
    """
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def rational_to_str(x: RationalLike) -> str:
    x = as_rational(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@functools.total_ordering
class QPoly:
    """Polynomial with rational coefficients, stored low degree first.

    Trailing zeros are stripped, so the zero polynomial has no coefficients
    and structural equality coincides with :func:`poly_compare` returning
    ``EQUAL``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c: RationalLike) -> "QPoly":
        return cls((c,))

    @classmethod
    def linear(cls, a: RationalLike, b: RationalLike) -> "QPoly":
        """``a*m + b``."""
        return cls((b, a))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self._coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else Fraction(0)

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)

    @staticmethod
    def _coerce(other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        return QPoly.const(other)

    def __add__(self, other) -> "QPoly":
        other = self._coerce(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return QPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self._coeffs)

    def __sub__(self, other) -> "QPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "QPoly":
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return QPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self._coeffs == other._coeffs
        try:
            return self._coeffs == QPoly.const(other)._coeffs
        except TypeError:
            return NotImplemented

    def __lt__(self, other) -> bool:
        return poly_compare(self, self._coerce(other)) is Ordering.LESS

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"QPoly({[rational_to_str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else "m" if i == 1 else f"m^{i}"
            if mono and c == 1:
                body = mono
            elif mono and c == -1:
                body = "-" + mono
            else:
                cs = rational_to_str(c)
                if mono and c.denominator != 1:
                    cs = f"({cs})"
                body = cs + ("*" + mono if mono else "")
            terms.append(body)
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> list[str]:
        return [rational_to_str(c) for c in self._coeffs]

    @classmethod
    def from_json(cls, data: Sequence[RationalLike]) -> "QPoly":
        return cls(data)


M = QPoly((0, 1))


def poly_compare(p: QPoly, q: QPoly) -> Ordering:
    """Asymptotic comparison: the first differing coefficient from the top decides."""
    n = max(len(p.coeffs), len(q.coeffs))
    for i in range(n - 1, -1, -1):
        d = p.coeff(i) - q.coeff(i)
        if d:
            return Ordering.from_sign(d)
    return Ordering.EQUAL


def poly_eval(p: QPoly, x: RationalLike) -> Fraction:
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def is_positive(p: QPoly) -> bool:
    """``p > 0`` in the asymptotic order (positive leading coefficient)."""
    return poly_compare(p, QPoly()) is Ordering.GREATER
