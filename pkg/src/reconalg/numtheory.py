"""Hirzebruch-Jung continued fractions.

The expansion ``r/a = a_1 - 1/(a_2 - 1/(... - 1/a_k))`` with every
``a_i >= 2`` is computed by repeated ceiling division.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError

__all__ = [
    "HJFraction",
    "check_group",
    "hj_expand",
    "hj_dual",
    "hj_evaluate",
    "versal_dimension",
]


@dataclass(frozen=True)
class HJFraction:
    numerator: int
    denominator: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if any(e < 2 for e in self.entries):
            raise DomainError(f"entries must be >= 2, got {self.entries}")
        if hj_evaluate(self.entries) != Fraction(self.numerator, self.denominator):
            raise DomainError(
                f"{list(self.entries)} does not evaluate to "
                f"{self.numerator}/{self.denominator}"
            )

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def value(self) -> Fraction:
        return hj_evaluate(self.entries)

    def __str__(self):
        return "[" + ",".join(map(str, self.entries)) + "]"


def check_group(r: int, a: int) -> None:
    """Raise DomainError unless 1/r(1,a) is a nontrivial small cyclic group."""
    if not (isinstance(r, int) and isinstance(a, int)):
        raise DomainError("r and a must be integers")
    if r < 2:
        raise DomainError(f"r must be >= 2, got {r}")
    if not 0 < a < r:
        raise DomainError(f"need 0 < a < r, got r={r}, a={a}")
    if gcd(r, a) != 1:
        raise DomainError(f"r={r} and a={a} are not coprime")


def hj_evaluate(entries) -> Fraction:
    """Evaluate ``[a_1, ..., a_k]`` from the inside out."""
    entries = list(entries)
    if not entries:
        raise DomainError("empty continued fraction")
    value = Fraction(entries[-1])
    for e in reversed(entries[:-1]):
        value = e - 1 / value
    return value


def hj_expand(r: int, a: int) -> HJFraction:
    check_group(r, a)
    entries = []
    num, den = r, a
    while den:
        q = -(-num // den)
        entries.append(q)
        num, den = den, q * den - num
    return HJFraction(r, a, tuple(entries))


def hj_dual(r: int, a: int) -> HJFraction:
    """Expansion of ``r/(r-a)``; its entries are the ``b_j`` of the ring presentation."""
    check_group(r, a)
    return hj_expand(r, r - a)


def versal_dimension(r: int, a: int) -> int:
    """Sum of ``a_i - 1`` over the expansion of ``r/a``."""
    return sum(e - 1 for e in hj_expand(r, a))
