"""Presentation of C[x,y]^G for G = 1/r(1,a) by generators Z_0..Z_{l+1}.

With ``r/(r-a) = [b_1..b_l]`` the relations are the quasi-determinants

    Z_i Z_{j+1} - Z_{i+1} (prod_{i<beta<=j} Z_beta^(b_beta - 2)) Z_j,   0 <= i < j <= l.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import VerificationError
from .monomial import InvariantSemigroup, LaurentMonomial, minimal_semigroup_generators
from .numtheory import check_group, hj_dual
from .polyring import LEX, Polynomial, PolyRing, display_name, substitute

__all__ = [
    "RingPresentation",
    "ring_generators",
    "ring_presentation",
    "realize",
    "zvar",
]


def zvar(e: int) -> str:
    return f"Z{e}"


@dataclass
class RingPresentation:
    ring: PolyRing
    relations: list[Polynomial]
    realizations: dict[str, LaurentMonomial] | None = None
    gradings: dict[str, int] | None = None
    meta: dict = field(default_factory=dict)

    @property
    def variables(self) -> tuple[str, ...]:
        return self.ring.names

    def relation_strings(self) -> list[str]:
        return [p.format(LEX) for p in self.relations]

    def check_realizations(self) -> None:
        """Every relation vanishes after substituting the monomials."""
        if self.realizations is None:
            return
        xy = PolyRing(["x", "y"])
        assignment = {
            n: xy.monomial((m.xexp, m.yexp)) for n, m in self.realizations.items()
        }
        for rel in self.relations:
            image = substitute(rel, assignment)
            if not image.is_zero():
                raise VerificationError(f"relation {rel} maps to {image}, not 0")

    def to_dict(self) -> dict:
        variables = []
        for n in self.variables:
            entry = {"name": display_name(n)}
            if self.realizations is not None:
                m = self.realizations[n]
                entry["xexp"], entry["yexp"] = m.xexp, m.yexp
            if self.gradings is not None:
                entry["degree"] = self.gradings[n]
            variables.append(entry)
        return {"variables": variables, "relations": self.relation_strings(), **self.meta}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "RingPresentation":
        from .polyring import parse_polynomial

        names = [v["name"] for v in data["variables"]]
        ring = PolyRing(names)
        realizations = gradings = None
        if all("xexp" in v for v in data["variables"]):
            realizations = {
                ring.names[i]: LaurentMonomial(v["xexp"], v["yexp"]) for i, v in enumerate(data["variables"])
            }
        if all("degree" in v for v in data["variables"]):
            gradings = {ring.names[i]: v["degree"] for i, v in enumerate(data["variables"])}
        meta = {k: v for k, v in data.items() if k not in ("variables", "relations")}
        rels = [parse_polynomial(t, ring) for t in data["relations"]]
        return cls(ring, rels, realizations, gradings, meta)

    def format_text(self) -> str:
        lines = []
        if "r" in self.meta:
            lines.append(f"# C[x,y]^G, G = 1/{self.meta['r']}({1},{self.meta['a']})")
        for n in self.variables:
            line = display_name(n)
            if self.realizations is not None:
                line += f" = {self.realizations[n]}"
            if self.gradings is not None:
                line += f"  (deg {self.gradings[n]})"
            lines.append(line)
        lines.append(f"relations ({len(self.relations)}):")
        lines.extend("  " + s for s in self.relation_strings())
        return "\n".join(lines)


def ring_generators(r: int, a: int) -> list[tuple[int, int]]:
    """Exponents ``(c_e, d_e)`` of ``Z_e``, e = 0..l+1, by the b-recursion.

    The result is checked against brute-force enumeration of the minimal
    generators of the invariant semigroup.
    """
    check_group(r, a)
    b = hj_dual(r, a).entries
    gens = [(r, 0), (r - a, 1)]
    for e, be in enumerate(b, start=1):
        (c0, d0), (c1, d1) = gens[e - 1], gens[e]
        gens.append((be * c1 - c0, be * d1 - d0))
    if gens[-1] != (0, r):
        raise VerificationError(f"recursion for 1/{r}(1,{a}) ended at {gens[-1]}, not (0,{r})")
    oracle = minimal_semigroup_generators(InvariantSemigroup(r, a))
    if gens != oracle:
        raise VerificationError(f"recursion {gens} disagrees with enumeration {oracle}")
    return gens


def _z_ring(l: int) -> PolyRing:
    return PolyRing([zvar(e) for e in range(l + 2)])


def ring_presentation(r: int, a: int) -> RingPresentation:
    gens = ring_generators(r, a)
    b = hj_dual(r, a).entries
    l = len(b)
    ring = _z_ring(l)
    Z = ring.gens
    rels = []
    for i in range(l + 1):
        for j in range(i + 1, l + 1):
            middle = ring.one()
            for beta in range(i + 1, j + 1):
                middle = middle * Z[beta] ** (b[beta - 1] - 2)
            rels.append(Z[i] * Z[j + 1] - Z[i + 1] * middle * Z[j])
    realizations = {zvar(e): LaurentMonomial(c, d) for e, (c, d) in enumerate(gens)}
    gradings = {zvar(e): c + d for e, (c, d) in enumerate(gens)}
    pres = RingPresentation(ring, rels, realizations, gradings, {"r": r, "a": a})
    pres.check_realizations()
    return pres


def realize(p: Polynomial, pres: RingPresentation) -> Polynomial:
    """Image of ``p`` in Q[x, y] under the monomial realizations."""
    xy = PolyRing(["x", "y"])
    return substitute(
        p, {n: xy.monomial((m.xexp, m.yexp)) for n, m in pres.realizations.items()}
    )
