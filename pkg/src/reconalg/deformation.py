"""Artin-component deformation of the type A presentation.

Variables are ``Z_i^(j)`` with ``1 <= j <= m_i``, ``m_0 = m_{l+1} = 1`` and
``m_i = b_i`` otherwise.  Column ``e`` of the deformed matrix has top
entry ``Z_e^(m_e)``, bottom entry ``Z_{e+1}^(1)`` and the middle entries
between columns are ``prod_{1<m<b_beta} Z_beta^(m)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product

from .errors import LiftSearchExhausted, VerificationError
from .groebner import GroebnerBasis, buchberger
from .invariant_ring import RingPresentation, ring_presentation, zvar
from .monomial import LaurentMonomial
from .numtheory import check_group, hj_dual
from .polyring import LEX, Polynomial, PolyRing, display_name, substitute
from .quiver import (
    Arrow,
    QuiverPresentation,
    _zmonomials_for,
    build_quiver,
    compute_relations,
)
from .invariant_ring import ring_generators
from .specials import module_classes, raw_special_modules

__all__ = [
    "DeformedRingPresentation",
    "DeformedModule",
    "dvar",
    "multiplicities",
    "deformed_ring",
    "specialize_central_fiber",
    "weyl_generators",
    "apply_permutation",
    "deformed_modules",
    "deformed_module_classes",
    "deformed_quiver",
]


def dvar(i: int, j: int) -> str:
    """Internal name of ``Z_i^(j)``."""
    return f"Z{i}_{j}_"


def multiplicities(r: int, a: int) -> list[int]:
    b = hj_dual(r, a).entries
    return [1] + list(b) + [1]


@dataclass
class DeformedRingPresentation:
    ring: PolyRing
    relations: list[Polynomial]
    weyl: list[dict[str, str]]
    multiplicities: list[int]
    meta: dict = field(default_factory=dict)

    @property
    def variables(self):
        return self.ring.names

    def relation_strings(self) -> list[str]:
        return [p.format(LEX) for p in self.relations]

    def to_dict(self) -> dict:
        return {
            "variables": [{"name": display_name(n)} for n in self.variables],
            "relations": self.relation_strings(),
            "weyl": [
                [display_name(u), display_name(v)]
                for perm in self.weyl
                for u, v in perm.items()
                if u < v
            ],
            "deformed": True,
            **{k: v for k, v in self.meta.items() if not k.startswith("_")},
        }

    def format_text(self) -> str:
        lines = [f"# deformed ring (Artin component) for 1/{self.meta['r']}(1,{self.meta['a']})"]
        lines.append("variables: " + ", ".join(display_name(n) for n in self.variables))
        lines.append(f"relations ({len(self.relations)}):")
        lines.extend("  " + s for s in self.relation_strings())
        lines.append("weyl generators:")
        for perm in self.weyl:
            pair = sorted(perm)
            lines.append(f"  ({display_name(pair[0])} {display_name(pair[1])})")
        if not self.weyl:
            lines.append("  (trivial)")
        return "\n".join(lines)

    def specialization_map(self, target: PolyRing) -> dict:
        return {
            dvar(i, j): target.var(zvar(i))
            for i, m in enumerate(self.multiplicities)
            for j in range(1, m + 1)
        }

    def groebner(self) -> GroebnerBasis:
        if "_gb" not in self.meta:
            self.meta["_gb"] = buchberger(self.relations, ring=self.ring)
        return self.meta["_gb"]


def deformed_ring(r: int, a: int) -> DeformedRingPresentation:
    check_group(r, a)
    b = hj_dual(r, a).entries
    l = len(b)
    m = multiplicities(r, a)
    ring = PolyRing([dvar(i, j) for i in range(l + 2) for j in range(1, m[i] + 1)])
    V = lambda i, j: ring.var(dvar(i, j))  # noqa: E731

    def middle(beta):
        out = ring.one()
        for mm in range(2, b[beta - 1]):
            out = out * V(beta, mm)
        return out

    rels = []
    for i in range(l + 1):
        for j in range(i + 1, l + 1):
            mid = ring.one()
            for beta in range(i + 1, j + 1):
                mid = mid * middle(beta)
            rels.append(V(i, m[i]) * V(j + 1, 1) - V(i + 1, 1) * mid * V(j, m[j]))
    D = DeformedRingPresentation(ring, rels, weyl_generators(r, a), m, {"r": r, "a": a})
    return D


def weyl_generators(r: int, a: int) -> list[dict[str, str]]:
    """Adjacent transpositions generating S_{b_1-1} x S_{b_2-2} x ... x S_{b_l-1}."""
    b = hj_dual(r, a).entries
    l = len(b)
    factors = []
    if l == 1:
        # first and last factor coincide
        factors.append([dvar(1, j) for j in range(1, b[0])])
    else:
        factors.append([dvar(1, j) for j in range(1, b[0])])
        for i in range(2, l):
            factors.append([dvar(i, j) for j in range(2, b[i - 1])])
        factors.append([dvar(l, j) for j in range(2, b[l - 1] + 1)])
    gens = []
    for letters in factors:
        for u, v in zip(letters, letters[1:]):
            gens.append({u: v, v: u})
    return gens


def apply_permutation(p: Polynomial, perm: dict[str, str]) -> Polynomial:
    ring = p.ring
    return substitute(p, {u: ring.var(v) for u, v in perm.items()}, partial=True)


def _canonical(p: Polynomial) -> Polynomial:
    if p.is_zero():
        return p
    _, c = p.leading_term(LEX)
    return p * (1 / c)


def specialize_central_fiber(D: DeformedRingPresentation) -> RingPresentation:
    """Collapse ``Z_i^(j) -> Z_i`` and check the image is the undeformed
    relation set (up to sign and duplicates)."""
    base = ring_presentation(D.meta["r"], D.meta["a"])
    smap = D.specialization_map(base.ring)
    image = []
    for rel in D.relations:
        img = substitute(rel, smap)
        if img.is_zero():
            raise VerificationError(f"deformed relation {rel} specializes to 0")
        image.append(_canonical(img))
    expected = {_canonical(p) for p in base.relations}
    got = set(image)
    for rel, img in zip(D.relations, image):
        if img not in expected:
            raise VerificationError(f"deformed relation {rel} specializes to {img}, not an undeformed relation")
    missing = expected - got
    if missing:
        raise VerificationError(f"undeformed relations {sorted(map(str, missing))} are not hit")
    return RingPresentation(base.ring, [p for p in base.relations], base.realizations, base.gradings, dict(base.meta))


# -- deformed modules -----------------------------------------------------


@dataclass
class DeformedModule:
    key: tuple
    generators: list[Polynomial]
    lifts: object  # the undeformed RawSpecialModule
    class_id: int = -1

    @property
    def label(self) -> str:
        return "(" + ",".join(g.format(LEX) for g in self.generators) + ")"


def deformed_modules(r: int, a: int, D: DeformedRingPresentation | None = None) -> list[DeformedModule]:
    D = D or deformed_ring(r, a)
    ring = D.ring
    b = hj_dual(r, a).entries
    l = len(b)
    m = D.multiplicities
    raws = {raw.key: raw for raw in raw_special_modules(r, a)}
    V = lambda i, j: ring.var(dvar(i, j))  # noqa: E731
    out = [DeformedModule(("trivial",), [ring.one()], raws[("trivial",)])]
    for i in range(l):
        for k in range(1, b[i]):
            prod_ = ring.one()
            for j in range(1, k + 1):
                prod_ = prod_ * V(i + 1, j)
            out.append(DeformedModule((i, k), [V(i, m[i]), prod_], raws[(i, k)]))
    out.append(DeformedModule((l, 1), [V(l, m[l]), V(l + 1, 1)], raws[(l, 1)]))
    base_ring = PolyRing([zvar(e) for e in range(l + 2)])
    smap = D.specialization_map(base_ring)
    for mod in out:
        spec = [substitute(g, smap) for g in mod.generators]
        want = [base_ring.monomial_from_powers({zvar(e): k for e, k in zg}) for zg in mod.lifts.zgens]
        if spec != want:
            raise VerificationError(f"deformed module {mod.label} specializes to {spec}, not {want}")
    return out


def deformed_module_classes(r: int, a: int, D: DeformedRingPresentation | None = None):
    """Group the lifted modules like the undeformed classes and certify
    each gluing map by Groebner reduction."""
    D = D or deformed_ring(r, a)
    mods = deformed_modules(r, a, D)
    by_key = {mod.key: mod for mod in mods}
    classes = module_classes(r, a)
    G = D.groebner()
    out = []
    for c in classes:
        members = [by_key[raw.key] for raw in c.representatives]
        for mod in members:
            mod.class_id = c.class_id
        out.append(members)
    b = hj_dual(r, a).entries
    for i in range(len(b)):
        src, dst = by_key[(i, b[i] - 1)], by_key[(i + 1, 1)]
        # multiplication by dst[0]/src[0] must carry src[1] to dst[1]
        lhs = dst.generators[0] * src.generators[1] - dst.generators[1] * src.generators[0]
        if not G.contains(lhs):
            raise VerificationError(f"gluing {src.label} ~ {dst.label} fails: {lhs} not in the ideal")
    return out


# -- deformed quiver ----------------------------------------------------------


def _exp_to_poly(ring, exp):
    return ring.monomial(exp)


def _lifts_of(zmono: dict, m: list[int], ring: PolyRing):
    """Deformed monomials specializing to ``prod Z_e^k``, in search order."""
    choices = []
    for e, k in sorted(zmono.items()):
        choices.append([tuple(dvar(e, j) for j in combo) for combo in combinations_with_replacement(range(1, m[e] + 1), k)])
    cands = []
    for pick in product(*choices):
        names = [n for group in pick for n in group]
        exp = [0] * ring.ngens
        for n in names:
            exp[ring.index[n]] += 1
        cands.append(tuple(exp))
    cands.sort(key=lambda e: (sum(e), sorted(i for i, k in enumerate(e) for _ in range(k))))
    return cands


def _mono_text(ring, exp) -> str:
    return ring.monomial(exp).format(LEX)


def _frac_text(ring, num, den) -> str:
    common = tuple(min(x, y) for x, y in zip(num, den))
    num = tuple(x - c for x, c in zip(num, common))
    den = tuple(x - c for x, c in zip(den, common))
    if not any(den):
        return _mono_text(ring, num)
    d = _mono_text(ring, den)
    return f"{_mono_text(ring, num)}/{'(' + d + ')' if '*' in d else d}"


def _add(e1, e2):
    return tuple(x + y for x, y in zip(e1, e2))


def _lift_arrow(ar: Arrow, src_mod, dst_mod, src_raw, dst_raw, D, gens_xy, G, gb_cache):
    ring = D.ring
    F = ar.label * dst_raw.shift / src_raw.shift
    src_gens = [next(iter(g.terms)) for g in src_mod.generators]
    dst_gens = dst_mod.generators
    for k, (delta, ge) in enumerate(zip(src_gens, src_raw.exponents)):
        cache_key = (delta, id(dst_mod))
        if cache_key not in gb_cache:
            dpoly = _exp_to_poly(ring, delta)
            gb_cache[cache_key] = buchberger(D.relations + [dpoly * t for t in dst_gens], ring=ring)
        H = gb_cache[cache_key]
        for P in _zmonomials_for((F.xexp + ge[0], F.yexp + ge[1]), gens_xy):
            for n in _lifts_of(P, D.multiplicities, ring):
                if all(H.contains(ring.monomial(_add(n, g))) for g in src_gens):
                    forms = [_frac_text(ring, n, delta)]
                    for k2, (g2, ge2) in enumerate(zip(src_gens, src_raw.exponents)):
                        if k2 == k:
                            continue
                        for P2 in _zmonomials_for((F.xexp + ge2[0], F.yexp + ge2[1]), gens_xy):
                            hit = None
                            for n2 in _lifts_of(P2, D.multiplicities, ring):
                                cross = ring.monomial(_add(n, g2)) - ring.monomial(_add(n2, delta))
                                if G.contains(cross):
                                    hit = n2
                                    break
                            if hit is not None:
                                text = _frac_text(ring, hit, g2)
                                if text not in forms:
                                    forms.append(text)
                                break
                    return n, delta, forms
    raise LiftSearchExhausted(f"no certified lift for arrow a{ar.id}: M{ar.src} -> M{ar.dst} ({ar.zlabel})")


def deformed_quiver(r: int, a: int, bound: int | None = None, path_bound: int | None = None) -> QuiverPresentation:
    """Lift every undeformed arrow to a map between the deformed modules and
    recompute relations with equality certified modulo the deformed ideal."""
    base = build_quiver(r, a, bound, path_bound)
    D = deformed_ring(r, a)
    ring = D.ring
    G = D.groebner()
    classes = module_classes(r, a)
    dclasses = deformed_module_classes(r, a, D)
    gens_xy = ring_generators(r, a)
    base_ring = PolyRing([zvar(e) for e in range(len(gens_xy))])
    smap = D.specialization_map(base_ring)
    gb_cache: dict = {}
    lifted = []
    for ar in base.arrows:
        src_mod, dst_mod = dclasses[ar.src][0], dclasses[ar.dst][0]
        n, delta, forms = _lift_arrow(
            ar, src_mod, dst_mod, classes[ar.src].rep, classes[ar.dst].rep, D, gens_xy, G, gb_cache
        )
        if G.contains(ring.monomial(delta)):
            raise VerificationError(f"denominator of a{ar.id} vanishes modulo the ideal")
        if all(x == y for x, y in zip(n, delta)) and ar.src != ar.dst:
            text = "inc"
        else:
            text = "=".join(forms)
        # the lift must specialize to the undeformed map
        sn = substitute(ring.monomial(n), smap)
        sd = substitute(ring.monomial(delta), smap)
        fx = sum(k * gens_xy[e][0] for e, k in enumerate(next(iter(sn.terms)))) - sum(
            k * gens_xy[e][0] for e, k in enumerate(next(iter(sd.terms)))
        )
        fy = sum(k * gens_xy[e][1] for e, k in enumerate(next(iter(sn.terms)))) - sum(
            k * gens_xy[e][1] for e, k in enumerate(next(iter(sd.terms)))
        )
        F = ar.label * classes[ar.dst].rep.shift / classes[ar.src].rep.shift
        if (fx, fy) != (F.xexp, F.yexp):
            raise VerificationError(f"lift of a{ar.id} does not specialize to {ar.zlabel}")
        lifted.append(
            Arrow(ar.id, ar.src, ar.dst, _frac_text(ring, n, delta), text, ar.degree,
                  witness={"num": n, "den": delta, "base": ar.label})
        )

    ids = {ar.id: ar for ar in lifted}
    zero = (0,) * ring.ngens
    registry: dict = {}

    def extend(value, ar):
        coarse, num, den = value
        w = ids[ar.id].witness
        num, den = _add(num, w["num"]), _add(den, w["den"])
        common = tuple(min(x, y) for x, y in zip(num, den))
        num = tuple(x - c for x, c in zip(num, common))
        den = tuple(x - c for x, c in zip(den, common))
        return (coarse * w["base"], num, den)

    seen: dict = {}
    nf_cache: dict = {}

    def nf(exp):
        if exp not in nf_cache:
            nf_cache[exp] = G.normal_form(ring.monomial(exp))
        return nf_cache[exp]

    def canon(src, dst, value):
        if (src, dst, value) in seen:
            return seen[(src, dst, value)]
        coarse, num, den = value
        reps = registry.setdefault((src, dst, coarse), [])
        for idx, (n2, d2) in enumerate(reps):
            if (num, den) == (n2, d2) or nf(_add(num, d2)) == nf(_add(n2, den)):
                break
        else:
            reps.append((num, den))
            idx = len(reps) - 1
        seen[(src, dst, value)] = (coarse, idx)
        return (coarse, idx)

    rels = compute_relations(lifted, base.meta["path_bound"], extend, canon, (LaurentMonomial(0, 0), zero, zero))
    vertices = []
    for members in dclasses:
        vertices.append(
            {
                "id": members[0].class_id,
                "representatives": [mod.label for mod in members],
                "display": members[0].label,
                "lifts": classes[members[0].class_id].rep.label,
            }
        )
    meta = dict(base.meta)
    meta["deformed"] = True
    meta["base_min_relation_degree"] = base.min_relation_degree()
    return QuiverPresentation(vertices, lifted, rels, meta)
