import pytest
from hypothesis import given, strategies as st

from reconalg.errors import DomainError
from reconalg.monomial import (
    InvariantSemigroup,
    LaurentMonomial,
    MonomialModule,
    minimal_semigroup_generators,
    normalize_generators,
)

from conftest import coprime_pairs

exps = st.tuples(st.integers(-20, 20), st.integers(-20, 20))


@given(exps, exps, exps)
def test_laurent_group_laws(u, v, w):
    U, V, W = map(LaurentMonomial.of, (u, v, w))
    assert (U * V) * W == U * (V * W)
    assert U * V == V * U
    assert (U * V) / V == U
    assert (U * V).degree == U.degree + V.degree
    assert U ** 3 == U * U * U


def test_laurent_str():
    assert str(LaurentMonomial(5, 1)) == "x^5*y"
    assert str(LaurentMonomial(0, 0)) == "1"
    assert str(LaurentMonomial(-1, 2)) == "x^-1*y^2"


def test_semigroup_membership():
    s = InvariantSemigroup(12, 7)
    assert (12, 0) in s and (0, 12) in s and (5, 1) in s
    assert (1, 0) not in s
    assert (-7, 1) not in s


def test_generators_12_7():
    assert minimal_semigroup_generators(InvariantSemigroup(12, 7)) == [(12, 0), (5, 1), (3, 3), (1, 5), (0, 12)]


@pytest.mark.parametrize("r", range(2, 8))
def test_generators_r_1(r):
    # all monomials of degree r
    assert minimal_semigroup_generators(InvariantSemigroup(r, 1)) == [(r - k, k) for k in range(r + 1)]


@pytest.mark.parametrize("r, a", coprime_pairs(12))
def test_generators_generate_box(r, a):
    s = InvariantSemigroup(r, a)
    gens = minimal_semigroup_generators(s)
    reachable = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        c, d = frontier.pop()
        for g in gens:
            m = (c + g[0], d + g[1])
            if m[0] <= 2 * r and m[1] <= 2 * r and m not in reachable:
                reachable.add(m)
                frontier.append(m)
    members = {(c, d) for c in range(2 * r + 1) for d in range(2 * r + 1) if (c, d) in s}
    assert reachable == members


def test_normalize():
    gens, shift = normalize_generators([(9, 1), (2, 3)])
    assert gens == ((7, 0), (0, 2)) and shift == (2, 1)


def test_module_invariants():
    s = InvariantSemigroup(12, 7)
    M = MonomialModule(((7, 0), (0, 1)), s)
    assert M.weight == 7
    assert M.grading() == (1, 7)
    assert str(M) == "(x^7,y)"
    assert (12, 1) in M and (7, 12) in M
    assert (1, 0) not in M
    with pytest.raises(DomainError):
        MonomialModule(((8, 0), (1, 1)), s)  # not normalized
    with pytest.raises(DomainError):
        MonomialModule(((1, 0), (0, 0)), s)  # two weights
    with pytest.raises(DomainError):
        MonomialModule(((7, 0), (0, 1), (12, 1)), s)  # redundant


def test_from_exponents_drops_redundant():
    s = InvariantSemigroup(12, 7)
    M = MonomialModule.from_exponents([(9, 1), (2, 2), (21, 1)], s)
    assert M.generators == ((7, 0), (0, 1))


@given(st.sampled_from(coprime_pairs(15)), st.lists(exps, min_size=1, max_size=4))
def test_module_closed_under_ring(ra, raw):
    r, a = ra
    s = InvariantSemigroup(r, a)
    base = raw[0]
    # force a single weight class by shifting every generator into the class of the first
    gens = [(c + ((s.weight(base) - s.weight((c, d))) % r), d) for c, d in raw]
    M = MonomialModule.from_exponents(gens, s)
    for g in M.generators:
        assert g in M
        for h in minimal_semigroup_generators(s):
            assert (g[0] + h[0], g[1] + h[1]) in M
