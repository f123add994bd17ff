"""Sparse multivariate polynomials over Q with named variables.

A :class:`PolyRing` is an ordered table of variable names; a
:class:`Polynomial` maps exponent vectors over that table to
:class:`fractions.Fraction` coefficients.  Names of the form ``Z1_2_``
are displayed as ``Z1^(2)`` (a superscript, not a power).
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import cached_property

from .errors import DomainError

__all__ = [
    "MonomialOrder",
    "LEX",
    "DEGREVLEX",
    "PolyRing",
    "Polynomial",
    "is_identically_zero",
    "substitute",
    "parse_polynomial",
    "parse_polynomials",
    "display_name",
    "internal_name",
]

_SUPER_RE = re.compile(r"^(.*)_(\d+)_$")


def display_name(name: str) -> str:
    m = _SUPER_RE.match(name)
    return f"{m.group(1)}^({m.group(2)})" if m else name


def internal_name(name: str) -> str:
    m = re.match(r"^(.*)\^\((\d+)\)$", name)
    return f"{m.group(1)}_{m.group(2)}_" if m else name


def _revneg(exp):
    return tuple(-e for e in reversed(exp))


class MonomialOrder:
    """``lex``, ``degrevlex`` or ``elim`` (degrevlex on a leading block of
    ``block`` variables, ties broken by degrevlex on the rest)."""

    KINDS = ("lex", "degrevlex", "elim")

    def __init__(self, kind: str = "degrevlex", block: int = 0):
        if kind not in self.KINDS:
            raise DomainError(f"unknown monomial order {kind!r}")
        if kind == "elim" and block <= 0:
            raise DomainError("elimination order needs a positive block size")
        self.kind = kind
        self.block = block

    def key(self, exp):
        # Flat integer tuples, so negating entrywise reverses the order.
        if self.kind == "lex":
            return tuple(exp)
        if self.kind == "degrevlex":
            return (sum(exp),) + _revneg(exp)
        head, tail = exp[: self.block], exp[self.block :]
        return (sum(head),) + _revneg(head) + (sum(tail),) + _revneg(tail)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.block) == (other.kind, other.block)

    def __hash__(self):
        return hash((self.kind, self.block))

    def __repr__(self):
        if self.kind == "elim":
            return f"MonomialOrder('elim', block={self.block})"
        return f"MonomialOrder({self.kind!r})"


LEX = MonomialOrder("lex")
DEGREVLEX = MonomialOrder("degrevlex")


class PolyRing:
    """Q[v_1, ..., v_n] with a fixed variable order."""

    def __init__(self, names):
        names = tuple(internal_name(str(n)) for n in names)
        if len(set(names)) != len(names):
            raise DomainError(f"duplicate variable names in {names}")
        for n in names:
            if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_']*", n):
                raise DomainError(f"bad variable name {n!r}")
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}

    @property
    def ngens(self) -> int:
        return len(self.names)

    @cached_property
    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(n) for n in self.names)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"PolyRing({[display_name(n) for n in self.names]})"

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self, {(0,) * self.ngens: c} if c else {})

    def var(self, name: str) -> "Polynomial":
        name = internal_name(name)
        if name not in self.index:
            raise DomainError(f"variable {display_name(name)} not in {self!r}")
        exp = [0] * self.ngens
        exp[self.index[name]] = 1
        return Polynomial(self, {tuple(exp): Fraction(1)})

    def monomial(self, exp, coeff=1) -> "Polynomial":
        exp = tuple(exp)
        if len(exp) != self.ngens:
            raise DomainError("exponent vector length does not match the ring")
        c = Fraction(coeff)
        return Polynomial(self, {exp: c} if c else {})

    def monomial_from_powers(self, powers: dict) -> "Polynomial":
        exp = [0] * self.ngens
        for name, e in powers.items():
            exp[self.index[internal_name(name)]] += e
        return self.monomial(exp)

    def extend(self, names, front: bool = False) -> "PolyRing":
        new = [internal_name(n) for n in names if internal_name(n) not in self.index]
        return PolyRing(new + list(self.names) if front else list(self.names) + new)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value.to_ring(self)
        if isinstance(value, str):
            return parse_polynomial(value, self)
        return self.const(value)


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}

    # -- coercion -----------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise DomainError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def to_ring(self, ring: PolyRing) -> "Polynomial":
        """Re-embed into ``ring`` (matching variables by name)."""
        if ring == self.ring:
            return self
        idx = []
        for i, n in enumerate(self.ring.names):
            if n in ring.index:
                idx.append(ring.index[n])
            else:
                idx.append(None)
        terms = {}
        for e, c in self.terms.items():
            new = [0] * ring.ngens
            for i, k in enumerate(e):
                if k:
                    if idx[i] is None:
                        raise DomainError(f"variable {display_name(self.ring.names[i])} missing from {ring!r}")
                    new[idx[i]] = k
            terms[tuple(new)] = c
        return Polynomial(ring, terms)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise DomainError("only nonnegative integer powers")
        result, base = self.ring.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- inspection ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def variables(self) -> list[str]:
        used = set()
        for e in self.terms:
            used.update(i for i, k in enumerate(e) if k)
        return [self.ring.names[i] for i in sorted(used)]

    def leading_term(self, order: MonomialOrder = DEGREVLEX):
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        _, c = self.leading_term(order)
        return Polynomial(self.ring, {e: v / c for e, v in self.terms.items()})

    def is_homogeneous(self, weights=None) -> bool:
        weights = weights or [1] * self.ring.ngens
        degs = {sum(w * k for w, k in zip(weights, e)) for e in self.terms}
        return len(degs) <= 1

    def substitute(self, assignment: dict, partial: bool = False) -> "Polynomial":
        return substitute(self, assignment, partial=partial)

    # -- printing -----------------------------------------------------
    def format(self, order: MonomialOrder = LEX) -> str:
        if not self.terms:
            return "0"
        out = []
        for e in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                display_name(n) if k == 1 else f"{display_name(n)}^{k}"
                for n, k in zip(self.ring.names, e)
                if k
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.format()!r})"


def is_identically_zero(p: Polynomial) -> bool:
    return not p.terms


def substitute(p: Polynomial, assignment: dict, partial: bool = False) -> Polynomial:
    """Ring homomorphism image of ``p`` under ``variable -> Polynomial``.

    All assigned values must live in one target ring; with ``partial``
    unassigned variables are carried over by name.
    """
    assignment = {internal_name(str(k)): v for k, v in assignment.items()}
    target = None
    for v in assignment.values():
        if isinstance(v, Polynomial):
            if target is not None and v.ring != target:
                raise DomainError("assignment values live in different rings")
            target = v.ring
    if target is None:
        target = p.ring
    images = []
    for n in p.ring.names:
        if n in assignment:
            v = assignment[n]
            images.append(v if isinstance(v, Polynomial) else target.const(v))
        elif partial:
            images.append(target.var(n))
        else:
            images.append(None)
    cache: dict = {}

    def power(i, k):
        if (i, k) not in cache:
            cache[(i, k)] = images[i] ** k
        return cache[(i, k)]

    result = target.zero()
    for e, c in p.terms.items():
        term = target.const(c)
        for i, k in enumerate(e):
            if k:
                if images[i] is None:
                    raise DomainError(f"no assignment for variable {display_name(p.ring.names[i])}")
                term = term * power(i, k)
        result = result + term
    return result


# -- parsing ------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_']*(?:\^\(\d+\))?)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    pos, tokens = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise DomainError(f"cannot parse {text!r} at position {pos}")
        pos = m.end()
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
    return tokens


class _Parser:
    def __init__(self, text, ring, names):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.ring = ring
        self.names = names

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise DomainError(f"cannot parse {self.text!r}: expected {value or 'token'}")
        self.pos += 1
        return tok

    def parse(self):
        node = self.expr()
        if self.pos != len(self.tokens):
            raise DomainError(f"cannot parse {self.text!r}: trailing {self.peek()[1]!r}")
        return node

    # Trees are built as closures so the ring can be fixed after a first
    # pass collects variable names.
    def expr(self):
        nodes = [(1, self.term())]
        while self.peek() in (("op", "+"), ("op", "-")):
            sign = 1 if self.take()[1] == "+" else -1
            nodes.append((sign, self.term()))
        return ("sum", nodes)

    def term(self):
        factors = [("mul", self.factor())]
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            f = self.factor()
            factors.append(("mul" if op == "*" else "div", f))
        return ("prod", factors)

    def factor(self):
        if self.peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
            return ("neg", self.factor()) if sign < 0 else self.factor()
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise DomainError(f"cannot parse {self.text!r}: exponent must be an integer")
            return ("pow", base, int(val))
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return ("num", int(val))
        if kind == "name":
            name = internal_name(val)
            if self.names is not None and name not in self.names:
                self.names.append(name)
            return ("var", name)
        if val == "(":
            node = self.expr()
            self.take(")")
            return node
        raise DomainError(f"cannot parse {self.text!r}: unexpected {val!r}")


def _build(node, ring):
    kind = node[0]
    if kind == "num":
        return ring.const(node[1])
    if kind == "var":
        return ring.var(node[1])
    if kind == "neg":
        return -_build(node[1], ring)
    if kind == "pow":
        return _build(node[1], ring) ** node[2]
    if kind == "sum":
        out = ring.zero()
        for sign, sub in node[1]:
            p = _build(sub, ring)
            out = out + p if sign > 0 else out - p
        return out
    if kind == "prod":
        out = ring.one()
        for op, sub in node[1]:
            p = _build(sub, ring)
            if op == "mul":
                out = out * p
            else:
                if not p.is_constant() or p.is_zero():
                    raise DomainError("division only by nonzero constants")
                out = out * (1 / p.terms[(0,) * ring.ngens])
        return out
    raise AssertionError(kind)


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    return _build(_Parser(text, ring, None).parse(), ring)


def parse_polynomials(texts, names=None) -> tuple[PolyRing, list[Polynomial]]:
    """Parse several polynomials into a common ring.

    Without ``names`` the ring's variables are taken in order of first
    appearance.
    """
    collected = [internal_name(n) for n in names] if names is not None else []
    trees = [_Parser(t, None, collected).parse() for t in texts]
    if names is not None and len(collected) != len(names):
        extra = [display_name(n) for n in collected[len(names):]]
        raise DomainError(f"unknown variables {extra}")
    ring = PolyRing(collected)
    return ring, [_build(t, ring) for t in trees]
