from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from p2cohsys.critical import equality_locus
from p2cohsys.core import CsType
from p2cohsys.errors import PreconditionError
from p2cohsys.nonempty import b_threshold, in_window, nonempty_iff, nonempty_sufficient, trivial_only


@pytest.mark.parametrize(
    "r,t,c2,a,clause",
    [
        (2, 0, 6, 1, 1),
        (2, 0, 4, 1, 2),
        (3, 0, 5, 3, 4),
        (3, 0, 5, 2, None),
        (4, 0, 12, 3, 3),
        (4, 0, 12, 2, None),
        (3, 1, 10, 1, 1),
        (3, 1, 8, 1, 2),
        (3, 1, 6, "1/2", None),
        (3, 1, 6, 1, 2),
    ],
)
def test_sufficient_clauses(r, t, c2, a, clause):
    assert nonempty_sufficient(r, t, c2, a) == clause


def test_sufficient_preconditions():
    with pytest.raises(PreconditionError):
        nonempty_sufficient(0, 0, 3, 1)
    with pytest.raises(PreconditionError):
        nonempty_sufficient(2, 0, 3, 0)


def test_iff_examples():
    assert b_threshold(4, 0, 12, -2) == 11
    assert nonempty_iff(4, 0, 12, -2, 2, 12)
    assert not nonempty_iff(4, 0, 12, -2, 2, 10)
    assert not nonempty_iff(4, 0, 12, -2, "3/2", 100)
    assert not nonempty_iff(4, 0, 12, -2, 2, 11)
    assert nonempty_iff(4, 0, 12, -2, 2, 11, semistable=True)
    with pytest.raises(PreconditionError):
        nonempty_iff(4, 0, 16, -2, 2, 11)


def test_trivial_only():
    assert trivial_only(0, 0, 0, 2)
    assert not trivial_only(0, 0, 1, 2)
    assert not trivial_only(0, 1, 0, 2)
    with pytest.raises(PreconditionError):
        trivial_only(2, 0, 0, 2)


windows = [
    (r, t, c2, s0)
    for r in range(2, 9)
    for t in (0, 1)
    for s0 in range(t + 2 - r, 0)
    for c2 in range(0, 81)
    if in_window(r, t, c2, s0)
]


@pytest.mark.parametrize("r,t,c2,s0", windows[::3])
def test_bound_is_the_edge_wall(r, t, c2, s0):
    # at a = t/2 - s0 the bound coincides with the w = 0 wall of witness s0
    edge = F(t, 2) - s0
    walls = {cv.key for cv in equality_locus(CsType(r, t, c2))}
    assert (edge, b_threshold(r, t, c2, s0)) in walls


@given(st.sampled_from(windows), st.fractions(0, 12, max_denominator=4), st.fractions(-40, 40, max_denominator=6))
def test_iff_consistent_with_sufficient_and_modes(w, a, b):
    r, t, c2, s0 = w
    if a <= 0:
        return
    strict = nonempty_iff(r, t, c2, s0, a, b)
    semi = nonempty_iff(r, t, c2, s0, a, b, semistable=True)
    assert not strict or semi
    if a > F(t, 2) - s0:
        assert nonempty_sufficient(r, t, c2, a) == 3


@given(st.sampled_from(windows), st.fractions(-40, 40, max_denominator=6), st.fractions(0, 10, max_denominator=6))
def test_iff_monotone_in_b(w, b, step):
    r, t, c2, s0 = w
    edge = F(t, 2) - s0
    for semi in (False, True):
        assert nonempty_iff(r, t, c2, s0, edge, b, semi) <= nonempty_iff(r, t, c2, s0, edge, b + step, semi)
