"""The reconstruction algebra End(⊕ M_i) as a quiver with relations.

Hom spaces between normalized monomial modules are sets of monomials
``f`` with ``f*M ⊆ N``.  Arrows are the Hom elements that do not factor
through two non-isomorphisms; relations are coincidences of parallel
paths with equal evaluation, reduced to a minimal binomial set degree
by degree.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

from .errors import BoundExhausted, DomainError, VerificationError
from .invariant_ring import ring_generators, zvar
from .monomial import LaurentMonomial, MonomialModule, module_member, semigroup_member
from .specials import SpecialModuleClass, module_classes

__all__ = [
    "Arrow",
    "Relation",
    "QuiverPresentation",
    "is_hom",
    "hom_elements",
    "hom_generators",
    "arrows",
    "relations",
    "compute_relations",
    "build_quiver",
]


@dataclass
class Arrow:
    id: int
    src: int
    dst: int
    label: object
    zlabel: str
    degree: int
    witness: dict | None = field(default=None, compare=False)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "src": self.src,
            "dst": self.dst,
            "label": str(self.label),
            "zlabel": self.zlabel,
            "degree": self.degree,
        }


@dataclass
class Relation:
    lhs: tuple[int, ...]
    rhs: tuple[int, ...]
    degree: int

    def to_dict(self) -> dict:
        return {"lhs": list(self.lhs), "rhs": list(self.rhs), "degree": self.degree}


@dataclass
class QuiverPresentation:
    vertices: list[dict]
    arrows: list[Arrow]
    relations: list[Relation]
    meta: dict = field(default_factory=dict)
    # excluded Hom generators with their factorization witnesses
    composites: list[dict] = field(default_factory=list)

    def adjacency(self) -> dict[tuple[int, int], int]:
        out: dict = {}
        for ar in self.arrows:
            out[(ar.src, ar.dst)] = out.get((ar.src, ar.dst), 0) + 1
        return out

    def min_relation_degree(self) -> int | None:
        return min((rel.degree for rel in self.relations), default=None)

    def to_dict(self) -> dict:
        return {
            **self.meta,
            "vertices": self.vertices,
            "arrows": [ar.to_dict() for ar in self.arrows],
            "relations": [rel.to_dict() for rel in self.relations],
            "min_relation_degree": self.min_relation_degree(),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "QuiverPresentation":
        arrows_ = [
            Arrow(a["id"], a["src"], a["dst"], a["label"], a["zlabel"], a["degree"]) for a in data["arrows"]
        ]
        rels = [Relation(tuple(r["lhs"]), tuple(r["rhs"]), r["degree"]) for r in data["relations"]]
        meta = {
            k: v for k, v in data.items() if k not in ("vertices", "arrows", "relations", "min_relation_degree")
        }
        return cls(data["vertices"], arrows_, rels, meta)

    def to_dot(self) -> str:
        name = self.meta.get("name") or f"q_{self.meta.get('r')}_{self.meta.get('a')}"
        lines = [f'digraph "{name}" {{']
        for v in self.vertices:
            lines.append(f'  v{v["id"]} [label="M{v["id"]} {v.get("display", "")}"];')
        for ar in self.arrows:
            lines.append(f'  v{ar.src} -> v{ar.dst} [label="{ar.label} (deg {ar.degree})"];')
        lines.append("}")
        return "\n".join(lines)

    def format_text(self) -> str:
        kind = "deformed " if self.meta.get("deformed") else ""
        lines = [f"# {kind}quiver for 1/{self.meta.get('r')}(1,{self.meta.get('a')})"]
        lines.append(f"vertices ({len(self.vertices)}):")
        for v in self.vertices:
            lines.append(f"  M{v['id']} = {v.get('display', '')}  reps {', '.join(v.get('representatives', []))}")
        lines.append(f"arrows ({len(self.arrows)}):")
        for ar in self.arrows:
            lines.append(f"  a{ar.id}: M{ar.src} -> M{ar.dst}  {ar.label}  [{ar.zlabel}]  deg {ar.degree}")
        lines.append(f"relations ({len(self.relations)}), minimal degree {self.min_relation_degree()}:")
        for rel in self.relations:
            lhs = "*".join(f"a{i}" for i in rel.lhs)
            rhs = "*".join(f"a{i}" for i in rel.rhs)
            lines.append(f"  {lhs} = {rhs}  (deg {rel.degree})")
        return "\n".join(lines)


# -- Hom spaces ---------------------------------------------------------------


def is_hom(f, M: MonomialModule, N: MonomialModule) -> bool:
    """``f * M ⊆ N`` for a Laurent monomial ``f``."""
    u, v = f
    return all(module_member(N, (u + c, v + d)) for c, d in M.generators)


def _box(M: MonomialModule, N: MonomialModule):
    """A box containing every minimal Hom generator.

    If ``f`` is a Hom element with ``u >= r + max_x(N)`` then ``f - (r,0)``
    is one too, and likewise in ``y``.
    """
    r = M.parent.r
    ulo = -max(c for c, _ in M.generators)
    vlo = -max(d for _, d in M.generators)
    uhi = r + max(c for c, _ in N.generators)
    vhi = r + max(d for _, d in N.generators)
    return range(ulo, uhi), range(vlo, vhi)


def hom_elements(M: MonomialModule, N: MonomialModule, max_degree: int, min_degree: int = 0):
    """All Hom elements with ``min_degree <= degree <= max_degree``."""
    out = []
    lo_u = -max(c for c, _ in M.generators)
    lo_v = -max(d for _, d in M.generators)
    for u in range(lo_u, max_degree - lo_v + 1):
        for v in range(max(lo_v, min_degree - u), max_degree - u + 1):
            if is_hom((u, v), M, N):
                out.append(LaurentMonomial(u, v))
    return sorted(out, key=lambda m: (m.degree, -m.xexp))


def _is_hom_generator(f, M, N) -> bool:
    s = M.parent
    u, v = f
    lo_u = -max(c for c, _ in M.generators)
    lo_v = -max(d for _, d in M.generators)
    for su in range(0, u - lo_u + 1):
        for sv in range(0, v - lo_v + 1):
            if (su, sv) != (0, 0) and semigroup_member(s, (su, sv)) and is_hom((u - su, v - sv), M, N):
                return False
    return True


def _exact_hom_generators(M: MonomialModule, N: MonomialModule) -> list[LaurentMonomial]:
    ur, vr = _box(M, N)
    gens = [
        LaurentMonomial(u, v)
        for u, v in product(ur, vr)
        if is_hom((u, v), M, N) and _is_hom_generator((u, v), M, N)
    ]
    return sorted(gens, key=lambda m: (m.degree, -m.xexp))


def hom_generators(M: MonomialModule, N: MonomialModule, bound: int) -> list[LaurentMonomial]:
    """Minimal generators of Hom(M, N) of degree at most ``bound``."""
    if M.parent != N.parent:
        raise DomainError("modules over different semigroups")
    if bound < 1:
        raise DomainError("bound must be >= 1")
    return [g for g in _exact_hom_generators(M, N) if g.degree <= bound]


# -- arrows -----------------------------------------------------------------


def _check_degree_zero(classes) -> None:
    for ci in classes:
        for cj in classes:
            zero = hom_elements(ci.normalized, cj.normalized, 0, 0)
            expected = [LaurentMonomial(0, 0)] if ci is cj else []
            if zero != expected:
                raise VerificationError(
                    f"degree-0 Hom(M{ci.class_id}, M{cj.class_id}) is {list(map(str, zero))}, "
                    f"expected {list(map(str, expected))}"
                )


def _factorization(f: LaurentMonomial, i: int, j: int, classes):
    """A witness ``(k, h, g)`` with ``f = g*h``, ``h: i -> k``, ``g: k -> j``,
    both of positive degree, or None."""
    Mi, Mj = classes[i].normalized, classes[j].normalized
    for k, ck in enumerate(classes):
        for h in hom_elements(Mi, ck.normalized, f.degree - 1, 1):
            g = f / h
            if is_hom(g, ck.normalized, Mj):
                return {"via": k, "first": h, "second": g}
    return None


def _zmonomials_for(target, gens_xy):
    """Products of Z_e with x,y-exponent ``target``, fewest factors first."""
    n = len(gens_xy)
    found = []

    def rec(e, rem, acc):
        if e == n:
            if rem == (0, 0):
                found.append(dict(acc))
            return
        c, d = gens_xy[e]
        k = 0
        while rem[0] - k * c >= 0 and rem[1] - k * d >= 0:
            if k:
                acc[e] = k
            rec(e + 1, (rem[0] - k * c, rem[1] - k * d), acc)
            k += 1
        acc.pop(e, None)

    if target[0] < 0 or target[1] < 0:
        return []
    rec(0, tuple(target), {})
    found.sort(key=lambda z: (sum(z.values()), sorted((e for e, k in z.items() for _ in range(k)))))
    return found


def _zfrac(num: dict, den: dict) -> str:
    num, den = dict(num), dict(den)
    for e in list(num):
        common = min(num[e], den.get(e, 0))
        if common:
            num[e] -= common
            den[e] -= common
    num = {e: k for e, k in num.items() if k}
    den = {e: k for e, k in den.items() if k}

    def mono(z):
        return "*".join(zvar(e) if k == 1 else f"{zvar(e)}^{k}" for e, k in sorted(z.items())) or "1"

    if not den:
        return mono(num)
    d = mono(den)
    return f"{mono(num)}/{'(' + d + ')' if '*' in d else d}"


def z_label(f: LaurentMonomial, src: SpecialModuleClass, dst: SpecialModuleClass, gens_xy) -> str:
    """Z-fraction form of the map ``f`` between the first representatives."""
    sr, dr = src.rep, dst.rep
    F = f * dr.shift / sr.shift
    if (F.xexp, F.yexp) == (0, 0) and src.class_id != dst.class_id:
        return "inc"
    forms = []
    for zg, ge in zip(sr.zgens, sr.exponents):
        cands = _zmonomials_for((F.xexp + ge[0], F.yexp + ge[1]), gens_xy)
        if not cands:
            return str(f)
        text = _zfrac(cands[0], dict(zg))
        if text not in forms:
            forms.append(text)
    return "=".join(forms)


def arrows(classes: list[SpecialModuleClass], bound: int, r: int | None = None, a: int | None = None):
    """Irreducible maps between the special modules.

    Returns ``(arrow_list, composites)`` where ``composites`` records a
    factorization witness for every Hom generator that is not an arrow.
    """
    _check_degree_zero(classes)
    s = classes[0].normalized.parent
    gens_xy = ring_generators(s.r, s.a)
    out, composites = [], []
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            gens = _exact_hom_generators(ci.normalized, cj.normalized)
            too_big = [g for g in gens if g.degree > bound]
            if too_big:
                raise BoundExhausted(
                    f"Hom(M{i}, M{j}) has generators of degree {max(g.degree for g in too_big)} > bound {bound}"
                )
            for g in gens:
                if i == j and g.degree == 0:
                    continue
                w = _factorization(g, i, j, classes)
                if w is None:
                    out.append(Arrow(len(out), i, j, g, z_label(g, ci, cj, gens_xy), g.degree))
                else:
                    composites.append({"src": i, "dst": j, "map": g, **w})
    return out, composites


# -- relations ----------------------------------------------------------------


def compute_relations(arrow_list, max_degree: int, extend, canon, unit):
    """Minimal binomial relations among paths of degree <= ``max_degree``.

    Works on equivalence classes rather than paths: once all relations of
    degree < d are imposed, two paths of degree < d are equal iff their
    evaluations agree, so a degree-d path is determined up to lower
    relations by (class of its prefix, last arrow).  Lower relations only
    need to be re-applied where they rewrite the last arrow.

    ``extend(value, arrow)`` evaluates a path one arrow further, ``unit``
    is the value of a trivial path and ``canon(src, dst, value)`` returns
    a hashable key that is equal iff the evaluations are equal.
    """
    if any(ar.degree < 1 for ar in arrow_list):
        raise DomainError("relation search needs arrows of positive degree")
    ids = {ar.id: ar for ar in arrow_list}
    vertices = sorted({ar.src for ar in arrow_list} | {ar.dst for ar in arrow_list})
    # classes[d]: key -> (src, dst, value, representative path)
    classes: dict[int, dict] = {0: {}}
    for v in vertices:
        classes[0][(v, v, canon(v, v, unit))] = (v, v, unit, ())
    found: list[Relation] = []

    def lower_key(U, path):
        src, _, value, _ = U
        for i in path:
            value = extend(value, ids[i])
        dst = ids[path[-1]].dst if path else U[1]
        return (src, dst, canon(src, dst, value))

    for d in range(1, max_degree + 1):
        elements = {}
        for ar in arrow_list:
            for ckey, C in classes.get(d - ar.degree, {}).items():
                if C[1] != ar.src:
                    continue
                value = extend(C[2], ar)
                elements[(ckey, ar.id)] = (
                    (C[0], ar.dst, canon(C[0], ar.dst, value)),
                    value,
                    C[3] + (ar.id,),
                )
        if not elements:
            classes[d] = {}
            continue
        parent = {e: e for e in elements}

        def find(e):
            while parent[e] != e:
                parent[e] = parent[parent[e]]
                e = parent[e]
            return e

        for rel in found:
            e = rel.degree
            x, y = rel.lhs, rel.rhs
            for U in classes.get(d - e, {}).values():
                if U[1] != ids[x[0]].src:
                    continue
                ex = (lower_key(U, x[:-1]), x[-1])
                ey = (lower_key(U, y[:-1]), y[-1])
                if ex in elements and ey in elements:
                    ra, rb = find(ex), find(ey)
                    if ra != rb:
                        parent[rb] = ra
        groups: dict = {}
        for e in sorted(elements, key=lambda e: elements[e][2]):
            groups.setdefault(elements[e][0], []).append(e)
        level = {}
        for key, members in groups.items():
            roots = []
            for e in members:
                if find(e) not in roots:
                    roots.append(find(e))
            reps = [elements[rt][2] for rt in roots]
            for rp in reps[1:]:
                found.append(Relation(reps[0], rp, d))
            first = elements[members[0]]
            level[key] = (key[0], key[1], first[1], first[2])
        classes[d] = level
    return found


def relations(arrow_list, max_path_degree: int):
    """Relations of the undeformed algebra: paths compared by the product
    of their monomial labels."""
    return compute_relations(
        arrow_list,
        max_path_degree,
        lambda value, ar: value * ar.label,
        lambda src, dst, value: value,
        LaurentMonomial(0, 0),
    )


def _vertex_dict(c: SpecialModuleClass) -> dict:
    d = c.to_dict()
    d["display"] = str(c.normalized)
    return d


def build_quiver(r: int, a: int, bound: int | None = None, path_bound: int | None = None) -> QuiverPresentation:
    classes = module_classes(r, a)
    bound = 2 * r if bound is None else bound
    path_bound = 3 * r if path_bound is None else path_bound
    arrow_list, composites = arrows(classes, bound)
    rels = relations(arrow_list, path_bound)
    q = QuiverPresentation(
        [_vertex_dict(c) for c in classes],
        arrow_list,
        rels,
        {"r": r, "a": a, "deformed": False, "bound": bound, "path_bound": path_bound},
        composites,
    )
    verify_quiver(q, classes)
    return q


def verify_quiver(q: QuiverPresentation, classes) -> None:
    """Well-definedness of arrows, witnesses and relation soundness."""
    for ar in q.arrows:
        if not is_hom(ar.label, classes[ar.src].normalized, classes[ar.dst].normalized):
            raise VerificationError(f"arrow a{ar.id} label {ar.label} is not a module map")
        if ar.degree != ar.label.degree:
            raise VerificationError(f"arrow a{ar.id} degree mismatch")
    for c in q.composites:
        k, h, g = c["via"], c["first"], c["second"]
        if not (
            is_hom(h, classes[c["src"]].normalized, classes[k].normalized)
            and is_hom(g, classes[k].normalized, classes[c["dst"]].normalized)
            and h * g == c["map"]
            and h.degree > 0
            and g.degree > 0
        ):
            raise VerificationError(f"bad factorization witness {c}")
    ids = {ar.id: ar for ar in q.arrows}
    for rel in q.relations:
        lv = LaurentMonomial(0, 0)
        rv = LaurentMonomial(0, 0)
        for i in rel.lhs:
            lv = lv * ids[i].label
        for i in rel.rhs:
            rv = rv * ids[i].label
        same_ends = (ids[rel.lhs[0]].src, ids[rel.lhs[-1]].dst) == (ids[rel.rhs[0]].src, ids[rel.rhs[-1]].dst)
        if lv != rv or not same_ends:
            raise VerificationError(f"relation {rel} is not a coincidence of parallel paths")
