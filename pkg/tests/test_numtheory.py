from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, given, strategies as st

from reconalg.errors import DomainError
from reconalg.numtheory import HJFraction, check_group, hj_dual, hj_evaluate, hj_expand, versal_dimension


def _expand_by_hand(r, a):
    # oracle: Euclid with ceiling, written out independently
    out = []
    num, den = r, a
    while den:
        q = -(-num // den)
        out.append(q)
        num, den = den, q * den - num
    return out


@pytest.mark.parametrize(
    "r, a, expected",
    [(12, 7, [2, 4, 2]), (12, 5, [3, 2, 3]), (2, 1, [2]), (5, 2, [3, 2]), (5, 3, [2, 3]), (7, 3, [3, 2, 2])],
)
def test_known_expansions(r, a, expected):
    assert list(hj_expand(r, a)) == expected


def test_dual_of_12_7():
    assert str(hj_dual(12, 7)) == "[3,2,3]"
    assert versal_dimension(12, 7) == 5


@pytest.mark.parametrize("r", range(2, 11))
def test_r_1(r):
    assert list(hj_expand(r, 1)) == [r]
    assert list(hj_dual(r, 1)) == [2] * (r - 1)
    assert versal_dimension(r, 1) == r - 1


@pytest.mark.parametrize("r, a", [(1, 0), (4, 2), (6, 0), (6, 6), (6, 9), (0, 1), (-3, 1)])
def test_bad_groups(r, a):
    with pytest.raises(DomainError):
        check_group(r, a)
    with pytest.raises(DomainError):
        hj_expand(r, a)


def test_fraction_rejects_bad_entries():
    with pytest.raises(DomainError):
        HJFraction(3, 1, (1, 2))
    with pytest.raises(DomainError):
        HJFraction(5, 2, (2, 3))


coprime = st.integers(2, 400).flatmap(lambda r: st.tuples(st.just(r), st.integers(1, r - 1)))


@given(coprime)
def test_round_trip_and_entries(ra):
    r, a = ra
    assume(gcd(r, a) == 1)
    f = hj_expand(r, a)
    assert f.value() == Fraction(r, a)
    assert all(e >= 2 for e in f)
    assert list(f) == _expand_by_hand(r, a)


@given(coprime)
def test_duality(ra):
    r, a = ra
    assume(gcd(r, a) == 1)
    e, b = hj_expand(r, a), hj_dual(r, a)
    assert hj_evaluate(b.entries) == Fraction(r, r - a)
    # point diagram duality: both excess sums equal len(a) + len(b) - 1
    assert sum(x - 1 for x in e) == sum(x - 1 for x in b) == len(e) + len(b) - 1
    assert versal_dimension(r, a) == sum(x - 1 for x in e)
    assert list(hj_dual(r, r - a)) == list(e)
