"""Buchberger's algorithm over Q.

Pairs are pruned with the product criterion and the Gebauer-Moeller
chain criterion and selected by the sugar strategy.  Everything is
exact and deterministic; the returned basis is reduced, monic and sorted
by decreasing leading monomial, hence unique for a given ideal and order.
"""
from __future__ import annotations

import heapq
from fractions import Fraction

from .errors import DomainError
from .polyring import DEGREVLEX, MonomialOrder, Polynomial, PolyRing

__all__ = [
    "GroebnerBasis",
    "buchberger",
    "normal_form",
    "s_polynomial",
    "is_groebner_basis",
    "ideal_contains",
    "ideal_quotient",
    "ideal_intersection",
    "exact_divide",
]


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _coprime(a, b):
    return all(not (x and y) for x, y in zip(a, b))


def _lead(terms, key):
    e = max(terms, key=key)
    return e, terms[e]


def _reduce(terms: dict, basis, key, full: bool = True) -> dict:
    """Remainder of ``terms`` on division by ``basis``.

    ``basis`` is a list of ``(lead_exp, lead_coeff, terms)``.  With
    ``full`` every term is reduced, otherwise only the leading one.
    """
    p = dict(terms)
    heap = [(tuple(-k for k in key(e)), e) for e in p]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = p.pop(e, None)
        if c is None:
            continue
        for lead, lc, g in basis:
            if _divides(lead, e):
                factor = c / lc
                shift = _sub(e, lead)
                for ge, gc in g.items():
                    if ge == lead:
                        continue
                    ne = tuple(x + y for x, y in zip(ge, shift))
                    old = p.get(ne)
                    if old is None:
                        nc = -factor * gc
                        p[ne] = nc
                        heapq.heappush(heap, (tuple(-k for k in key(ne)), ne))
                    else:
                        nc = old - factor * gc
                        if nc:
                            p[ne] = nc
                        else:
                            del p[ne]
                break
        else:
            rem[e] = c
            if not full:
                rem.update(p)
                return rem
    return rem


def _monic(terms, key):
    _, lc = _lead(terms, key)
    return {e: c / lc for e, c in terms.items()}


def _spoly(f, g, key):
    fe, fc = _lead(f, key)
    ge, gc = _lead(g, key)
    m = _lcm(fe, ge)
    out = {}
    sf, sg = _sub(m, fe), _sub(m, ge)
    for e, c in f.items():
        ne = tuple(x + y for x, y in zip(e, sf))
        out[ne] = out.get(ne, 0) + c / fc
    for e, c in g.items():
        ne = tuple(x + y for x, y in zip(e, sg))
        out[ne] = out.get(ne, 0) - c / gc
    return {e: c for e, c in out.items() if c}


def _interreduce(polys, key):
    """Reduced Groebner basis from a Groebner basis (list of term dicts)."""
    polys = [_monic(p, key) for p in polys if p]
    leads = [_lead(p, key)[0] for p in polys]
    keep = []
    for i, p in enumerate(polys):
        li = leads[i]
        redundant = False
        for j, lj in enumerate(leads):
            if j == i:
                continue
            if _divides(lj, li) and (lj != li or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(p)
    out = []
    for i, p in enumerate(keep):
        others = [(_lead(q, key)[0], Fraction(1), q) for j, q in enumerate(keep) if j != i]
        le = _lead(p, key)[0]
        tail = {e: c for e, c in p.items() if e != le}
        red = _reduce(tail, others, key)
        red[le] = Fraction(1)
        out.append(red)
    out.sort(key=lambda p: key(_lead(p, key)[0]), reverse=True)
    return out


def _buchberger_terms(polys, key):
    polys = [p for p in polys if p]
    f = []        # all polynomials produced, by index
    leads = []
    sugar = []
    G: list[int] = []
    B: set = set()

    def update(ih):
        nonlocal G, B
        mh = leads[ih]
        C = list(G)
        D = []
        while C:
            ig = C.pop()
            mg = leads[ig]
            lhg = _lcm(mh, mg)
            if _coprime(mh, mg):
                D.append(ig)
                continue
            if any(_divides(_lcm(mh, leads[k]), lhg) for k in C) or any(
                _divides(_lcm(mh, leads[k]), lhg) for k in D
            ):
                continue
            D.append(ig)
        E = {(ig, ih) for ig in D if not _coprime(mh, leads[ig])}
        newB = set()
        for i1, i2 in B:
            l12 = _lcm(leads[i1], leads[i2])
            if (
                not _divides(mh, l12)
                or _lcm(leads[i1], mh) == l12
                or _lcm(leads[i2], mh) == l12
            ):
                newB.add((i1, i2))
        B = newB | E
        G = [ig for ig in G if not _divides(mh, leads[ig])] + [ih]

    def add(p, s):
        p = _monic(p, key)
        f.append(p)
        leads.append(_lead(p, key)[0])
        sugar.append(s)
        update(len(f) - 1)

    # seed in a canonical order so the run is deterministic
    seeds = sorted((_monic(p, key) for p in polys), key=lambda p: key(_lead(p, key)[0]))
    for p in seeds:
        basis = [(leads[i], Fraction(1), f[i]) for i in G]
        h = _reduce(p, basis, key)
        if h:
            add(h, max(sum(e) for e in h))

    def pair_sugar(pair):
        i, j = pair
        m = _lcm(leads[i], leads[j])
        return max(sugar[i] + sum(m) - sum(leads[i]), sugar[j] + sum(m) - sum(leads[j]))

    while B:
        pair = min(B, key=lambda pr: (pair_sugar(pr), key(_lcm(leads[pr[0]], leads[pr[1]])), pr))
        B.discard(pair)
        i, j = pair
        s = _spoly(f[i], f[j], key)
        if not s:
            continue
        basis = [(leads[k], Fraction(1), f[k]) for k in G]
        h = _reduce(s, basis, key)
        if h:
            add(h, pair_sugar(pair))
    return _interreduce([f[i] for i in G], key)


class GroebnerBasis:
    """A reduced Groebner basis of an ideal of ``ring`` under ``order``."""

    def __init__(self, ring: PolyRing, generators, order: MonomialOrder = DEGREVLEX, reduced: bool = True):
        self.ring = ring
        self.order = order
        self.generators = list(generators)
        self.reduced = reduced
        self._basis = [
            (g.leading_term(order)[0], g.leading_term(order)[1], g.terms) for g in self.generators
        ]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, i):
        return self.generators[i]

    def __repr__(self):
        return f"GroebnerBasis({[g.format(self.order) for g in self.generators]}, {self.order!r})"

    def normal_form(self, p: Polynomial) -> Polynomial:
        p = p.to_ring(self.ring)
        return Polynomial(self.ring, _reduce(p.terms, self._basis, self.order.key))

    def contains(self, p: Polynomial) -> bool:
        return self.normal_form(p).is_zero()

    __contains__ = contains

    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.generators)


def buchberger(gens, order: MonomialOrder = DEGREVLEX, ring: PolyRing | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = list(gens)
    if ring is None:
        if not gens:
            raise DomainError("need a ring for the zero ideal")
        ring = gens[0].ring
    gens = [g.to_ring(ring) for g in gens]
    out = _buchberger_terms([g.terms for g in gens], order.key)
    return GroebnerBasis(ring, [Polynomial(ring, t) for t in out], order, reduced=True)


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.normal_form(p)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    return Polynomial(f.ring, _spoly(f.terms, g.terms, order.key))


def is_groebner_basis(G: GroebnerBasis) -> bool:
    """Every S-polynomial of basis pairs reduces to zero."""
    gens = G.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not G.normal_form(s_polynomial(gens[i], gens[j], G.order)).is_zero():
                return False
    return True


def ideal_contains(gens, p: Polynomial, order: MonomialOrder = DEGREVLEX) -> bool:
    return buchberger(gens, order, ring=p.ring).contains(p)


def exact_divide(p: Polynomial, f: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """``p / f``; raises DomainError unless ``f`` divides ``p``."""
    if f.is_zero():
        raise DomainError("division by zero polynomial")
    key = order.key
    fe, fc = f.leading_term(order)
    rest = dict(p.terms)
    quot = {}
    while rest:
        e, c = _lead(rest, key)
        if not _divides(fe, e):
            raise DomainError(f"{f} does not divide {p}")
        qe, qc = _sub(e, fe), c / fc
        quot[qe] = qc
        for ge, gc in f.terms.items():
            ne = tuple(x + y for x, y in zip(ge, qe))
            v = rest.get(ne, 0) - qc * gc
            if v:
                rest[ne] = v
            else:
                rest.pop(ne, None)
    return Polynomial(p.ring, quot)


def _fresh_name(ring: PolyRing, stem: str) -> str:
    name, k = stem, 0
    while name in ring.index:
        k += 1
        name = f"{stem}{k}"
    return name


def ideal_intersection(I, J, order: MonomialOrder = DEGREVLEX) -> list[Polynomial]:
    """Reduced Groebner basis of ``I ∩ J`` via ``w*I + (1-w)*J``."""
    I, J = list(I), list(J)
    ring = (I or J)[0].ring
    w = _fresh_name(ring, "w")
    big = ring.extend([w], front=True)
    wv = big.var(w)
    gens = [wv * g.to_ring(big) for g in I] + [(1 - wv) * g.to_ring(big) for g in J]
    G = buchberger(gens, MonomialOrder("elim", 1), ring=big)
    kept = [g for g in G if all(e[0] == 0 for e in g.terms)]
    if not kept:
        return []
    return buchberger([g.to_ring(ring) for g in kept], order, ring=ring).generators


def ideal_quotient(I, f: Polynomial, order: MonomialOrder = DEGREVLEX) -> list[Polynomial]:
    """Reduced Groebner basis of ``(I : f) = {g : g*f in I}``."""
    if f.is_zero():
        raise DomainError("ideal quotient by the zero polynomial")
    inter = ideal_intersection(I, [f], order)
    if not inter:
        return []
    quot = [exact_divide(g, f, order) for g in inter]
    return buchberger(quot, order, ring=f.ring).generators
