import json

import pytest

from reconalg.deformation import (
    apply_permutation,
    deformed_module_classes,
    deformed_quiver,
    deformed_ring,
    dvar,
    multiplicities,
    specialize_central_fiber,
    weyl_generators,
)
from reconalg.invariant_ring import ring_presentation
from reconalg.numtheory import hj_dual, versal_dimension
from reconalg.polyring import display_name, internal_name

from conftest import coprime_pairs
from oracles import same_label

D12 = deformed_ring(12, 7)
ZD = D12.ring

# expected lifted arrows of 1/12(1,7)
DEFORMED_EXPECTED_ARROWS_12_7 = [
    (0, 1, "Z1^(1)"),
    (1, 2, "Z1^(2)"),
    (2, 3, "Z3^(1)*Z3^(2)/(Z1^(1)*Z1^(2))=Z2^(2)*Z3^(2)/Z0^(1)"),
    (3, 0, "Z3^(3)/Z2^(2)=Z4^(1)/(Z3^(1)*Z3^(2))"),
    (1, 0, "inc"),
    (2, 1, "inc"),
    (3, 2, "Z0^(1)/Z2^(2)=Z1^(1)*Z1^(2)/Z3^(1)"),
    (0, 3, "Z2^(2)"),
    (2, 0, "Z1^(3)/Z0^(1)=Z2^(1)/(Z1^(1)*Z1^(2))"),
    (2, 0, "Z2^(2)/Z0^(1)=Z3^(1)/(Z1^(1)*Z1^(2))"),
]


def _same(got, want):
    return same_label(got, want, ZD)


def test_variables_12_7():
    names = [display_name(n) for n in D12.variables]
    assert names == [
        "Z0^(1)", "Z1^(1)", "Z1^(2)", "Z1^(3)", "Z2^(1)", "Z2^(2)", "Z3^(1)", "Z3^(2)", "Z3^(3)", "Z4^(1)",
    ]
    assert D12.relation_strings()[0] == "Z0^(1)*Z2^(1) - Z1^(1)*Z1^(2)*Z1^(3)"
    assert multiplicities(12, 7) == [1, 3, 2, 3, 1]
    assert internal_name("Z3^(2)") == dvar(3, 2)


def test_central_fiber_12_7():
    base = specialize_central_fiber(D12)
    assert base.relation_strings() == ring_presentation(12, 7).relation_strings()


@pytest.mark.parametrize("r", range(2, 8))
def test_r_1_minors(r):
    D = deformed_ring(r, 1)
    V = lambda i, j: D.ring.var(dvar(i, j))  # noqa: E731
    top = [V(0, 1)] + [V(i, 2) for i in range(1, r)]
    bottom = [V(i, 1) for i in range(1, r + 1)]
    minors = {top[i] * bottom[j] - top[j] * bottom[i] for i in range(r) for j in range(i + 1, r)}
    assert set(D.relations) == minors


@pytest.mark.parametrize("r, a", coprime_pairs(20))
def test_invariants(r, a):
    D = deformed_ring(r, a)
    l = len(hj_dual(r, a))
    assert len(D.variables) - (l + 2) == versal_dimension(r, a)
    specialize_central_fiber(D)
    for perm in weyl_generators(r, a):
        for rel in D.relations:
            assert apply_permutation(rel, perm) == rel


def test_weyl_12_7():
    pairs = sorted(tuple(sorted(map(display_name, p))) for p in weyl_generators(12, 7))
    assert pairs == [("Z1^(1)", "Z1^(2)"), ("Z3^(2)", "Z3^(3)")]


def test_weyl_moves_something():
    # the generators act nontrivially on the variables
    for perm in weyl_generators(12, 7):
        x = next(iter(perm))
        assert apply_permutation(ZD.var(x), perm) == ZD.var(perm[x])


def test_modules_12_7():
    classes = deformed_module_classes(12, 7, D12)
    labels = [[m.label for m in members] for members in classes]
    assert labels == [
        ["(1)"],
        ["(Z0^(1),Z1^(1))"],
        ["(Z0^(1),Z1^(1)*Z1^(2))", "(Z1^(3),Z2^(1))", "(Z2^(2),Z3^(1))"],
        ["(Z2^(2),Z3^(1)*Z3^(2))", "(Z3^(3),Z4^(1))"],
    ]


@pytest.fixture(scope="module")
def dq12_7():
    return deformed_quiver(12, 7, path_bound=16)


def test_deformed_expected_arrows(dq12_7):
    remaining = list(DEFORMED_EXPECTED_ARROWS_12_7)
    for ar in dq12_7.arrows:
        hit = [f for f in remaining if f[:2] == (ar.src, ar.dst) and _same(ar.zlabel, f[2])]
        assert hit, f"a{ar.id} {ar.zlabel}"
        remaining.remove(hit[0])
    assert not remaining


def test_deformed_labels_are_module_maps(dq12_7):
    from reconalg.groebner import buchberger

    classes = deformed_module_classes(12, 7, D12)
    for ar in dq12_7.arrows:
        num = ZD.monomial(ar.witness["num"])
        den = ZD.monomial(ar.witness["den"])
        H = buchberger(D12.relations + [den * g for g in classes[ar.dst][0].generators], ring=ZD)
        for g in classes[ar.src][0].generators:
            assert H.contains(num * g)
        assert not D12.groebner().contains(den)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_degree_shift(r):
    q = deformed_quiver(r, 1)
    assert q.meta["base_min_relation_degree"] == r
    assert q.min_relation_degree() == r + 1
    # lifting keeps every arrow degree
    up = [ar.degree for ar in q.arrows if ar.src == 0]
    down = [ar.degree for ar in q.arrows if ar.src == 1]
    assert up == [1, 1] and down == [r - 1] * r


def test_conifold():
    q = deformed_quiver(2, 1)
    assert len(q.arrows) == 4
    assert [rel.degree for rel in q.relations] == [3, 3, 3, 3]


def test_json(dq12_7):
    data = json.loads(dq12_7.to_json())
    assert data["deformed"] is True
    ring_data = json.loads(json.dumps(D12.to_dict()))
    assert "_gb" not in ring_data and ring_data["deformed"] is True
