"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line (with the
elapsed time) straight to the terminal, bypassing output capture.
"""
import random
import time
from contextlib import contextmanager

import pytest

from reconalg.deformation import (
    apply_permutation,
    deformed_module_classes,
    deformed_quiver,
    deformed_ring,
    specialize_central_fiber,
    weyl_generators,
)
from reconalg.fixtures import load_fixture, verify_fixture
from reconalg.groebner import buchberger, is_groebner_basis
from reconalg.invariant_ring import realize, ring_generators, ring_presentation
from reconalg.monomial import InvariantSemigroup, minimal_semigroup_generators
from reconalg.numtheory import hj_dual, hj_expand, versal_dimension
from reconalg.polyring import PolyRing
from reconalg.quiver import build_quiver
from reconalg.specials import module_classes

from conftest import coprime_pairs
from oracles import homogeneous_member, monomials_of_degree, same_label
from test_deformation import DEFORMED_EXPECTED_ARROWS_12_7
from test_quiver import EXPECTED_ARROWS_12_7


@contextmanager
def criterion(capsys, number, title, limit):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        ok = ok and elapsed < limit
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s, limit {limit}s)")
    assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"


def test_criterion_01_continued_fractions(capsys):
    with criterion(capsys, 1, "continued fractions", 1):
        assert list(hj_expand(12, 7)) == [2, 4, 2]
        assert list(hj_expand(12, 5)) == [3, 2, 3]
        for r in range(2, 11):
            assert list(hj_expand(r, 1)) == [r]


def test_criterion_02_generator_oracle(capsys):
    with criterion(capsys, 2, "ring generators equal brute-force semigroup generators, r <= 30", 30):
        for r, a in coprime_pairs(30):
            assert ring_generators(r, a) == minimal_semigroup_generators(InvariantSemigroup(r, a))


def test_criterion_03_relations_vanish(capsys):
    with criterion(capsys, 3, "relations vanish on monomial realizations, r <= 30", 30):
        for r, a in coprime_pairs(30):
            pres = ring_presentation(r, a)
            for rel in pres.relations:
                assert realize(rel, pres).is_zero()


def test_criterion_04_special_modules(capsys):
    with criterion(capsys, 4, "special module classes", 10):
        for r, a in coprime_pairs(30):
            assert len(module_classes(r, a)) == len(hj_expand(r, a)) + 1
        got = {str(c.normalized) for c in module_classes(12, 7)}
        assert got == {"(1)", "(x^7,y)", "(x^2,y^2)", "(x,y^7)"}


def test_criterion_05_quiver_arrows(capsys):
    with criterion(capsys, 5, "quiver arrows for 1/12(1,7) and 1/r(1,1)", 60):
        q = build_quiver(12, 7)
        assert len(q.vertices) == 4 and len(q.arrows) == 10
        assert q.adjacency() == {
            (0, 1): 1, (1, 2): 1, (2, 3): 1, (3, 0): 1, (1, 0): 1,
            (2, 1): 1, (3, 2): 1, (0, 3): 1, (2, 0): 2,
        }
        ring = PolyRing([f"Z{i}" for i in range(5)])
        remaining = list(EXPECTED_ARROWS_12_7)
        for ar in q.arrows:
            hit = next(f for f in remaining if f[:2] == (ar.src, ar.dst) and same_label(ar.zlabel, f[2], ring))
            remaining.remove(hit)
        for r in range(2, 7):
            q = build_quiver(r, 1)
            up = [ar.degree for ar in q.arrows if (ar.src, ar.dst) == (0, 1)]
            down = [ar.degree for ar in q.arrows if (ar.src, ar.dst) == (1, 0)]
            assert up == [1, 1] and down == [r - 1] * r


def test_criterion_06_relation_degrees(capsys):
    with criterion(capsys, 6, "relation degree r undeformed, r+1 deformed, r = 2,3,4", 60):
        for r in (2, 3, 4):
            assert build_quiver(r, 1).min_relation_degree() == r
            assert deformed_quiver(r, 1).min_relation_degree() == r + 1


def test_criterion_07_deformation_invariants(capsys):
    with criterion(capsys, 7, "versal dimension, central fiber, Weyl invariance, r <= 20", 60):
        for r, a in coprime_pairs(20):
            D = deformed_ring(r, a)
            excess = len(D.variables) - (len(hj_dual(r, a)) + 2)
            assert excess == versal_dimension(r, a) == sum(x - 1 for x in hj_expand(r, a))
            base = specialize_central_fiber(D)
            assert set(base.relations) == set(ring_presentation(r, a).relations)
            for perm in weyl_generators(r, a):
                for rel in D.relations:
                    assert apply_permutation(rel, perm) == rel


def test_criterion_08_deformed_lifts(capsys):
    with criterion(capsys, 8, "deformed modules and arrow labels for 1/12(1,7)", 120):
        D = deformed_ring(12, 7)
        classes = deformed_module_classes(12, 7, D)
        assert [m.label for m in classes[1]] == ["(Z0^(1),Z1^(1))"]
        assert [m.label for m in classes[2]] == ["(Z0^(1),Z1^(1)*Z1^(2))", "(Z1^(3),Z2^(1))", "(Z2^(2),Z3^(1))"]
        assert [m.label for m in classes[3]] == ["(Z2^(2),Z3^(1)*Z3^(2))", "(Z3^(3),Z4^(1))"]
        q = deformed_quiver(12, 7)
        G = D.groebner()
        remaining = list(DEFORMED_EXPECTED_ARROWS_12_7)
        for ar in q.arrows:
            hit = next(f for f in remaining if f[:2] == (ar.src, ar.dst) and same_label(ar.zlabel, f[2], D.ring))
            remaining.remove(hit)
            num, den = D.ring.monomial(ar.witness["num"]), D.ring.monomial(ar.witness["den"])
            H = buchberger(D.relations + [den * g for g in classes[ar.dst][0].generators], ring=D.ring)
            assert all(H.contains(num * g) for g in classes[ar.src][0].generators)
            assert not G.contains(den)
        a8 = next(ar for ar in q.arrows if (ar.src, ar.dst) == (3, 0))
        assert same_label(a8.zlabel, "Z3^(3)/Z2^(2)=Z4^(1)/(Z3^(1)*Z3^(2))", D.ring)


def test_criterion_09_golden_fixtures(capsys):
    with criterion(capsys, 9, "golden fixtures D5,2 and non-quotient (lambda = 2)", 120):
        d5 = load_fixture("D5_2")
        assert len(d5.undeformed.arrows) == 12
        assert verify_fixture(d5).passed
        nq = load_fixture("nonquotient_minus4", lam=2)
        assert len(nq.undeformed.arrows) == 16
        assert verify_fixture(nq).passed


def test_criterion_10_groebner_suite(capsys):
    with criterion(capsys, 10, "Groebner property suite on 50 random ideals", 60):
        rng = random.Random(20240610)
        for _ in range(50):
            n = rng.randint(1, 3)
            ring = PolyRing(["x", "y", "z"][:n])
            gens = []
            for _ in range(rng.randint(1, 3)):
                d = rng.randint(1, 3)
                g = ring.zero()
                for _ in range(rng.randint(1, 3)):
                    g = g + ring.monomial(rng.choice(monomials_of_degree(n, d)), rng.randint(-3, 3))
                if not g.is_zero():
                    gens.append(g)
            gens = gens or [ring.gens[0]]
            G = buchberger(gens)
            assert is_groebner_basis(G)
            for _ in range(4):
                d = rng.randint(1, 5)
                p = ring.zero()
                for _ in range(3):
                    p = p + ring.monomial(rng.choice(monomials_of_degree(n, d)), rng.randint(-3, 3))
                if rng.random() < 0.5:
                    k = d - gens[0].total_degree()
                    if k >= 0:
                        p = gens[0] * ring.monomial(rng.choice(monomials_of_degree(n, k)))
                nf = G.normal_form(p)
                assert G.normal_form(nf) == nf
                if not p.is_zero():
                    assert G.contains(p) == homogeneous_member(p, gens, n)
