"""Reduced zero cycles in P^2 and exact section counts of their twisted ideals."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Any, Iterable, Sequence

from .errors import FeasibilityError, GenerationError, PreconditionError
from .exactnum import RationalLike, as_rational, rational_to_str
from .p2cohom import h0_line
from .segre import cycle_length, segre_feasible

Point = tuple[Fraction, Fraction, Fraction]


def normalize_point(p: Sequence[RationalLike]) -> Point:
    """Scale so the first nonzero coordinate is 1."""
    if len(p) != 3:
        raise PreconditionError(f"a point needs 3 homogeneous coordinates, got {len(p)}")
    x = tuple(as_rational(c) for c in p)
    lead = next((c for c in x if c != 0), None)
    if lead is None:
        raise PreconditionError("(0, 0, 0) is not a point")
    return tuple(c / lead for c in x)  # type: ignore[return-value]


@dataclass(frozen=True)
class PointConfig:
    points: tuple[Point, ...]

    def __init__(self, points: Iterable[Sequence[RationalLike]] = ()):
        pts = tuple(normalize_point(p) for p in points)
        if len(set(pts)) != len(pts):
            raise PreconditionError("points must be pairwise distinct")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def without(self, i: int) -> "PointConfig":
        return PointConfig(self.points[:i] + self.points[i + 1:])

    def to_json(self) -> list[list[str]]:
        return [[rational_to_str(c) for c in p] for p in self.points]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[Any]]) -> "PointConfig":
        return cls(data)


def monomials(d: int) -> list[tuple[int, int, int]]:
    """Exponent triples of the degree-d monomials in x, y, z."""
    if d < 0:
        return []
    return [(i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1)]


def evaluation_matrix(z: PointConfig, d: int) -> list[list[int]]:
    """Rows: points; columns: degree-d monomials.  Each row is cleared of
    denominators, which leaves the row space unchanged."""
    mons = monomials(d)
    rows = []
    for p in z.points:
        row = [p[0] ** i * p[1] ** j * p[2] ** k for i, j, k in mons]
        den = lcm(*(c.denominator for c in row)) if row else 1
        rows.append([int(c * den) for c in row])
    return rows


def _echelon(rows: list[list[int]]) -> tuple[int, list[list[int]]]:
    """Bareiss fraction-free elimination; returns (rank, reduced rows)."""
    m = [list(r) for r in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((i for i in range(rank, n_rows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, n_rows):
            f = m[i][col]
            m[i] = [(p * m[i][j] - f * m[rank][j]) // prev for j in range(n_cols)]
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank, m


def matrix_rank(rows: list[list[int]]) -> int:
    return _echelon(rows)[0]


def h0_ideal(z: PointConfig, d: int) -> int:
    """h0(O(d) (x) I_Z): forms of degree d vanishing on Z."""
    if d < 0:
        return 0
    return h0_line(d) - matrix_rank(evaluation_matrix(z, d))


def lies_on_no_curve(z: PointConfig, d: int) -> bool:
    return h0_ideal(z, d) == 0


def cayley_bacharach(z: PointConfig, d: int) -> bool:
    """Every degree-d form vanishing on all but one point of Z vanishes on Z."""
    if d < 0 or not z.points:
        return True
    full = h0_ideal(z, d)
    return all(h0_ideal(z.without(i), d) == full for i in range(len(z)))


def extension_twist_degree(r: int, s: int, t: int) -> int:
    """Degree of L^-1 (x) L0 (x) omega for L = O(r - s), L0 = O(r + s - t)."""
    return (s - r) + (r + s - t) - 3


# -- generators ---------------------------------------------------------------

_BOUND = 50
MAX_RETRIES = 64


def _rand_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-_BOUND, _BOUND), rng.randint(1, _BOUND))


# the fixed line y = 2x + 3z used for collinear configurations
def _on_line(u: Fraction) -> Point:
    return (Fraction(1), 2 + 3 * u, u)


def gen_collinear(l: int, seed: int) -> PointConfig:
    if l < 0:
        raise PreconditionError("length must be nonnegative")
    rng = random.Random(seed)
    us: list[Fraction] = []
    for _ in range(MAX_RETRIES * max(l, 1)):
        if len(us) == l:
            break
        u = _rand_rational(rng)
        if u not in us:
            us.append(u)
    if len(us) != l:
        raise GenerationError(f"could not draw {l} distinct points on the line")
    return PointConfig(_on_line(u) for u in us)


def is_general(z: PointConfig, max_degree: int = 6) -> bool:
    """Z imposes independent conditions in every degree up to ``max_degree``."""
    n = len(z)
    return all(h0_ideal(z, d) == max(0, h0_line(d) - n) for d in range(max_degree + 1))


def gen_general(l: int, seed: int, max_degree: int = 6) -> PointConfig:
    if l < 0:
        raise PreconditionError("length must be nonnegative")
    rng = random.Random(seed)
    for _ in range(MAX_RETRIES):
        pts = {(Fraction(1), _rand_rational(rng), _rand_rational(rng)) for _ in range(l)}
        if len(pts) < l:
            continue
        z = PointConfig(sorted(pts))
        if is_general(z, max_degree):
            return z
    raise GenerationError(f"no general configuration of {l} points after {MAX_RETRIES} attempts")


@dataclass(frozen=True)
class WitnessCertificate:
    config: PointConfig
    no_curve_degree: int
    no_curve: bool
    cb_degree: int
    cb: bool

    def to_json(self) -> dict:
        return {
            "points": self.config.to_json(),
            "length": len(self.config),
            "no_curve_degree": self.no_curve_degree,
            "no_curve": self.no_curve,
            "cb_degree": self.cb_degree,
            "cb": self.cb,
        }


def witness_config(r: int, t: int, c2: int, s: int, seed: int = 0) -> WitnessCertificate:
    """A reduced Z realizing the extension with maximal subbundle O(r - s).

    For s >= 1 the points are general, so they lie on no curve of degree
    2s - 1 - t and satisfy Cayley-Bacharach for degree 2s - 3 - t.  For
    s <= 0 Cayley-Bacharach is vacuous and the points are taken collinear.
    """
    if not segre_feasible(r, t, c2, s):
        raise FeasibilityError(f"Segre invariant 2s - t with s={s} is not feasible for c2={c2}")
    ell = cycle_length(r, t, c2, s)
    d_curve, d_cb = 2 * s - 1 - t, extension_twist_degree(r, s, t)
    if s <= 0:
        z = gen_collinear(ell, seed)
        return WitnessCertificate(z, d_curve, lies_on_no_curve(z, d_curve), d_cb, cayley_bacharach(z, d_cb))
    top = max(d_curve, 0)
    for attempt in range(MAX_RETRIES):
        z = gen_general(ell, seed + attempt, max_degree=top)
        cert = WitnessCertificate(z, d_curve, lies_on_no_curve(z, d_curve), d_cb, cayley_bacharach(z, d_cb))
        if cert.no_curve and cert.cb:
            return cert
    raise GenerationError("no certified witness configuration found")
