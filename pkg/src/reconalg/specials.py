"""Special MCM modules of C[x,y]^G, G = 1/r(1,a), as monomial modules.

The raw list is the trivial module, ``(Z_i, Z_{i+1}^k)`` for
``0 <= i <= l-1, 1 <= k <= b_{i+1}-1``, and ``(Z_l, Z_{l+1})``.
Modules are glued along ``(Z_i, Z_{i+1}^(b_{i+1}-1)) ~ (Z_{i+1}, Z_{i+2})``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import VerificationError
from .invariant_ring import ring_generators, zvar
from .monomial import InvariantSemigroup, MonomialModule, check_module, normalize_generators
from .numtheory import hj_dual, hj_expand

__all__ = [
    "RawSpecialModule",
    "SpecialModuleClass",
    "raw_special_modules",
    "identification_edges",
    "module_classes",
]


def _zmono_label(zexp: dict[int, int]) -> str:
    if not zexp:
        return "1"
    return "*".join(zvar(e) if k == 1 else f"{zvar(e)}^{k}" for e, k in sorted(zexp.items()))


@dataclass(frozen=True)
class RawSpecialModule:
    """``(Z_i, Z_{i+1}^k)`` (or the trivial module) before normalization.

    ``zgens`` holds each generator as ``{e: power}`` over ``Z_e``;
    ``exponents`` are their x,y-exponents and ``shift`` the componentwise
    minimum subtracted to normalize.
    """

    key: tuple
    zgens: tuple
    exponents: tuple
    shift: tuple[int, int]
    normalized: MonomialModule

    @property
    def label(self) -> str:
        return "(" + ",".join(_zmono_label(dict(g)) for g in self.zgens) + ")"


@dataclass
class SpecialModuleClass:
    class_id: int
    representatives: list[RawSpecialModule]
    normalized: MonomialModule

    @property
    def rep(self) -> RawSpecialModule:
        return self.representatives[0]

    @property
    def grading(self) -> tuple[int, ...]:
        return self.normalized.grading()

    def to_dict(self) -> dict:
        return {
            "id": self.class_id,
            "representatives": [m.label for m in self.representatives],
            "generators": [list(g) for g in self.normalized.generators],
            "grading": list(self.grading),
        }


def _raw(key, zgens, gens_xy, semigroup) -> RawSpecialModule:
    exps = []
    for g in zgens:
        c = sum(k * gens_xy[e][0] for e, k in g)
        d = sum(k * gens_xy[e][1] for e, k in g)
        exps.append((c, d))
    _, shift = normalize_generators(exps)
    label = "(" + ",".join(_zmono_label(dict(g)) for g in zgens) + ")"
    normalized = MonomialModule.from_exponents(exps, semigroup, label)
    return RawSpecialModule(key, tuple(zgens), tuple(exps), shift, normalized)


def raw_special_modules(r: int, a: int) -> list[RawSpecialModule]:
    gens_xy = ring_generators(r, a)
    b = hj_dual(r, a).entries
    l = len(b)
    s = InvariantSemigroup(r, a)
    out = [_raw(("trivial",), ((),), gens_xy, s)]
    for i in range(l):
        for k in range(1, b[i]):
            out.append(_raw((i, k), (((i, 1),), ((i + 1, k),)), gens_xy, s))
    out.append(_raw((l, 1), (((l, 1),), ((l + 1, 1),)), gens_xy, s))
    return out


def identification_edges(r: int, a: int) -> list[tuple[tuple, tuple]]:
    """Pairs of raw keys glued by multiplication with ``Z_{i+1}/Z_i``."""
    b = hj_dual(r, a).entries
    l = len(b)
    return [((i, b[i] - 1), (i + 1, 1)) for i in range(l)]


def _union_find_classes(keys, edges):
    parent = {k: k for k in keys}

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            # keep the earlier key as root so class order follows the raw list
            if keys.index(rv) < keys.index(ru):
                ru, rv = rv, ru
            parent[rv] = ru
    groups: dict = {}
    for k in keys:
        groups.setdefault(find(k), []).append(k)
    return sorted(groups.values(), key=lambda g: keys.index(g[0]))


def module_classes(r: int, a: int) -> list[SpecialModuleClass]:
    raws = raw_special_modules(r, a)
    by_key = {m.key: m for m in raws}
    keys = [m.key for m in raws]
    edges = identification_edges(r, a)
    for u, v in edges:
        if by_key[u].normalized.generators != by_key[v].normalized.generators:
            raise VerificationError(
                f"identified modules {by_key[u].label} and {by_key[v].label} normalize to "
                f"{by_key[u].normalized} and {by_key[v].normalized}"
            )
    classes = []
    for cid, group in enumerate(_union_find_classes(keys, edges)):
        members = [by_key[k] for k in group]
        norms = {m.normalized.generators for m in members}
        if len(norms) != 1:
            raise VerificationError(f"class {[m.label for m in members]} has several normal forms")
        classes.append(SpecialModuleClass(cid, members, members[0].normalized))
    seen = {}
    for c in classes:
        check_module(c.normalized)
        if c.normalized.generators in seen:
            raise VerificationError(
                f"classes {seen[c.normalized.generators]} and {c.class_id} share {c.normalized}"
            )
        seen[c.normalized.generators] = c.class_id
    expected = len(hj_expand(r, a)) + 1
    if len(classes) != expected:
        raise VerificationError(f"found {len(classes)} special modules, expected {expected}")
    return classes
