"""Monomials in x, y and the monomial modules over C[x,y]^G, G = 1/r(1,a).

G acts by ``x -> e*x``, ``y -> e^a*y`` so ``x^c y^d`` has weight
``c + a*d (mod r)`` and is invariant iff that weight is zero.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import DomainError, VerificationError

__all__ = [
    "LaurentMonomial",
    "InvariantSemigroup",
    "MonomialModule",
    "semigroup_member",
    "module_member",
    "minimal_semigroup_generators",
    "normalize_generators",
]

Exp = tuple[int, int]


@dataclass(frozen=True, order=True, slots=True)
class LaurentMonomial:
    xexp: int
    yexp: int

    @classmethod
    def of(cls, m) -> "LaurentMonomial":
        if isinstance(m, LaurentMonomial):
            return m
        c, d = m
        return cls(int(c), int(d))

    @property
    def degree(self) -> int:
        return self.xexp + self.yexp

    def __mul__(self, other):
        other = LaurentMonomial.of(other)
        return LaurentMonomial(self.xexp + other.xexp, self.yexp + other.yexp)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = LaurentMonomial.of(other)
        return LaurentMonomial(self.xexp - other.xexp, self.yexp - other.yexp)

    def __pow__(self, n: int):
        return LaurentMonomial(self.xexp * n, self.yexp * n)

    def __iter__(self):
        yield self.xexp
        yield self.yexp

    def is_polynomial(self) -> bool:
        return self.xexp >= 0 and self.yexp >= 0

    def __str__(self):
        parts = []
        for var, e in (("x", self.xexp), ("y", self.yexp)):
            if e == 1:
                parts.append(var)
            elif e:
                parts.append(f"{var}^{e}")
        return "*".join(parts) or "1"


@dataclass(frozen=True)
class InvariantSemigroup:
    r: int
    a: int

    def weight(self, m) -> int:
        c, d = m
        return (c + self.a * d) % self.r

    def __contains__(self, m) -> bool:
        return semigroup_member(self, m)


def semigroup_member(s: InvariantSemigroup, m) -> bool:
    c, d = m
    return c >= 0 and d >= 0 and (c + s.a * d) % s.r == 0


def minimal_semigroup_generators(s: InvariantSemigroup) -> list[Exp]:
    """Brute-force minimal generators of the invariant semigroup.

    Every minimal generator lies in the box ``c, d <= r`` because
    ``(r, 0)`` and ``(0, r)`` are members.
    """
    r = s.r
    if r < 2:
        raise DomainError("r must be >= 2")
    members = [m for m in product(range(r + 1), repeat=2) if m != (0, 0) and m in s]
    member_set = set(members)
    gens = []
    for c, d in members:
        decomposable = any(
            (c - u, d - v) in member_set
            for u, v in members
            if u <= c and v <= d and (u, v) != (c, d)
        )
        if not decomposable:
            gens.append((c, d))
    return sorted(gens, key=lambda m: -m[0])


def normalize_generators(gens) -> tuple[tuple[Exp, ...], Exp]:
    """Shift exponent pairs so their componentwise minimum is ``(0, 0)``.

    Returns the shifted, sorted, deduplicated generators and the shift.
    """
    gens = [tuple(g) for g in gens]
    if not gens:
        raise DomainError("a module needs at least one generator")
    shift = (min(g[0] for g in gens), min(g[1] for g in gens))
    out = sorted({(g[0] - shift[0], g[1] - shift[1]) for g in gens}, key=lambda m: (-m[0], m[1]))
    return tuple(out), shift


@dataclass(frozen=True)
class MonomialModule:
    """A normalized fractional monomial module ``sum_g x^c y^d * R_0``.

    ``label`` keeps the symbolic presentation it came from (e.g.
    ``(Z0,Z1^2)``); it is display metadata and does not take part in
    equality.
    """

    generators: tuple[Exp, ...]
    parent: InvariantSemigroup
    label: str = field(default="", compare=False)

    def __post_init__(self):
        gens, shift = normalize_generators(self.generators)
        if shift != (0, 0):
            raise DomainError(f"generators {self.generators} are not normalized")
        object.__setattr__(self, "generators", gens)
        weights = {self.parent.weight(g) for g in gens}
        if len(weights) != 1:
            raise DomainError(f"generators {gens} span several weight classes")
        for g in gens:
            for h in gens:
                if g != h and semigroup_member(self.parent, (g[0] - h[0], g[1] - h[1])):
                    raise DomainError(f"generator {g} is redundant (multiple of {h})")

    @classmethod
    def from_exponents(cls, gens, parent: InvariantSemigroup, label: str = "") -> "MonomialModule":
        """Normalize ``gens`` and drop non-minimal ones."""
        shifted, _ = normalize_generators(gens)
        minimal = [
            g
            for g in shifted
            if not any(h != g and semigroup_member(parent, (g[0] - h[0], g[1] - h[1])) for h in shifted)
        ]
        return cls(tuple(minimal), parent, label)

    @property
    def weight(self) -> int:
        return self.parent.weight(self.generators[0])

    def grading(self) -> tuple[int, ...]:
        """Total degrees of the generators, ascending."""
        return tuple(sorted(c + d for c, d in self.generators))

    def normalized(self) -> "MonomialModule":
        return MonomialModule.from_exponents(self.generators, self.parent, self.label)

    def __contains__(self, m) -> bool:
        return module_member(self, m)

    def __str__(self):
        return "(" + ",".join(str(LaurentMonomial.of(g)) for g in self.generators) + ")"


def module_member(M: MonomialModule, m) -> bool:
    c, d = m
    return any(semigroup_member(M.parent, (c - g0, d - g1)) for g0, g1 in M.generators)


def check_module(M: MonomialModule) -> None:
    """Re-assert the normalization, weight and minimality invariants."""
    try:
        MonomialModule(M.generators, M.parent)
    except DomainError as exc:
        raise VerificationError(str(exc)) from exc
