"""Positive and group elements in left normal form, and their arithmetic.

A group element is stored as Delta^p a_1 ... a_l with every a_i a proper simple
(neither 1 nor Delta) and every consecutive pair left-weighted. The pair
(p, factors) is therefore a complete identity of the element: two elements are
equal in the group exactly when their keys are equal.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from garside.core.structure import AtomId, GarsideStructure, Simple
from garside.errors import NotPositiveError, StructureMismatchError

logger = logging.getLogger(__name__)

ElementKey = tuple[int, tuple[Simple, ...]]


@dataclass(frozen=True)
class PositiveElement:
    """A product of simples in the monoid, not necessarily normalized."""

    structure: GarsideStructure
    factors: tuple[Simple, ...]

    @classmethod
    def of(cls, structure: GarsideStructure, factors: Iterable[Simple]) -> PositiveElement:
        return cls(structure, tuple(f for f in factors if f != structure.identity))


@dataclass(frozen=True)
class GroupElement:
    """Delta^p a_1 ... a_l in left normal form."""

    structure: GarsideStructure
    p: int
    factors: tuple[Simple, ...]

    @property
    def inf(self) -> int:
        return self.p

    @property
    def sup(self) -> int:
        return self.p + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def key(self) -> ElementKey:
        return (self.p, self.factors)

    @property
    def is_identity(self) -> bool:
        return self.p == 0 and not self.factors

    @property
    def is_positive(self) -> bool:
        return self.p >= 0

    @property
    def word_length(self) -> int:
        """Exponent sum in atoms; the word length of positive elements of homogeneous monoids."""
        s = self.structure
        return self.p * s.delta_length + sum(s.simple_length(f) for f in self.factors)

    def positive_factors(self) -> tuple[Simple, ...]:
        """Delta^p expanded into p copies of Delta followed by the normal factors."""
        if self.p < 0:
            raise NotPositiveError(f"{self} has negative infimum")
        return (self.structure.delta,) * self.p + self.factors

    def __mul__(self, other: GroupElement) -> GroupElement:
        return multiply(self, other)

    def inverse(self) -> GroupElement:
        return invert(self)

    def __str__(self) -> str:
        body = "".join(f"({self.structure.format_simple(f)})" for f in self.factors)
        return f"D^{self.p} {body}".rstrip()


def identity(structure: GarsideStructure) -> GroupElement:
    return GroupElement(structure, 0, ())


def delta_power(structure: GarsideStructure, k: int) -> GroupElement:
    return GroupElement(structure, k, ())


def from_simple(structure: GarsideStructure, s: Simple) -> GroupElement:
    if s == structure.identity:
        return identity(structure)
    if s == structure.delta:
        return delta_power(structure, 1)
    return GroupElement(structure, 0, (s,))


def from_atom(structure: GarsideStructure, atom: AtomId, exponent: int = 1) -> GroupElement:
    return power(from_simple(structure, structure.atoms[atom]), exponent)


# Normal forms


def is_left_weighted(structure: GarsideStructure, a: Simple, b: Simple) -> bool:
    return structure.meet(structure.right_complement(a), b) == structure.identity


def _left_weight(structure: GarsideStructure, a: Simple, b: Simple) -> tuple[Simple, Simple]:
    t = structure.meet(structure.right_complement(a), b)
    if t == structure.identity:
        return a, b
    return structure.product(a, t), structure.left_quotient(t, b)


def _right_weight(structure: GarsideStructure, a: Simple, b: Simple) -> tuple[Simple, Simple]:
    t = structure.right_meet(a, structure.left_complement(b))
    if t == structure.identity:
        return a, b
    return structure.right_quotient(a, t), structure.product(t, b)


def _slide_left(structure: GarsideStructure, seq: Iterable[Simple]) -> list[Simple]:
    """Make every adjacent pair left-weighted, backtracking one step after a change."""
    unit = structure.identity
    factors = [f for f in seq if f != unit]
    i = 0
    while i < len(factors) - 1:
        a, b = factors[i], factors[i + 1]
        a2, b2 = _left_weight(structure, a, b)
        if a2 == a:
            i += 1
            continue
        factors[i] = a2
        if b2 == unit:
            del factors[i + 1]
        else:
            factors[i + 1] = b2
        if i > 0:
            i -= 1
    return factors


def _slide_right(structure: GarsideStructure, seq: Iterable[Simple]) -> list[Simple]:
    """Mirror of _slide_left: every adjacent pair right-weighted."""
    unit = structure.identity
    factors = [f for f in seq if f != unit]
    i = len(factors) - 2
    while i >= 0:
        a, b = factors[i], factors[i + 1]
        a2, b2 = _right_weight(structure, a, b)
        if b2 == b:
            i -= 1
            continue
        factors[i + 1] = b2
        if a2 == unit:
            del factors[i]
        else:
            factors[i] = a2
            i += 1
        i = min(i, len(factors) - 2)
    return factors


def _normalize(structure: GarsideStructure, p: int, seq: Iterable[Simple]) -> GroupElement:
    factors = _slide_left(structure, seq)
    lead = 0
    while lead < len(factors) and factors[lead] == structure.delta:
        lead += 1
    return GroupElement(structure, p + lead, tuple(factors[lead:]))


def left_normal_form(w: PositiveElement) -> GroupElement:
    """Delta^p a_1 ... a_l for an arbitrary product of simples."""
    return _normalize(w.structure, 0, w.factors)


def right_normal_form(w: PositiveElement) -> tuple[tuple[Simple, ...], int]:
    """x_1 ... x_l Delta^p for an arbitrary product of simples."""
    structure = w.structure
    factors = _slide_right(structure, w.factors)
    trail = 0
    while trail < len(factors) and factors[len(factors) - 1 - trail] == structure.delta:
        trail += 1
    return tuple(factors[: len(factors) - trail]), trail


def right_normal_form_of(a: GroupElement) -> tuple[tuple[Simple, ...], int]:
    """Right normal form of a group element: Delta^p x = tau^-p(x) Delta^p."""
    structure = a.structure
    shifted = PositiveElement(structure, tuple(structure.tau(f, -a.p) for f in a.factors))
    factors, extra = right_normal_form(shifted)
    return factors, a.p + extra


def lm(w: GroupElement) -> Simple:
    """Maximal simple left divisor of a positive element."""
    if w.p < 0:
        raise NotPositiveError(f"LM is defined on the monoid only, got inf={w.p}")
    if w.p >= 1:
        return w.structure.delta
    return w.factors[0] if w.factors else w.structure.identity


def rm(w: GroupElement) -> Simple:
    """Maximal simple right divisor of a positive element."""
    if w.p < 0:
        raise NotPositiveError(f"RM is defined on the monoid only, got inf={w.p}")
    if w.p >= 1:
        return w.structure.delta
    factors, _ = right_normal_form_of(w)
    return factors[-1] if factors else w.structure.identity


# Group arithmetic


def _check_same(a: GroupElement, b: GroupElement) -> None:
    if a.structure != b.structure:
        raise StructureMismatchError(f"cannot combine {a.structure} with {b.structure}")


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    """(Delta^p A)(Delta^q B) = Delta^(p+q) tau^q(A) B, renormalized."""
    _check_same(a, b)
    structure = a.structure
    if b.p == 0 and (
        not a.factors or not b.factors or is_left_weighted(structure, a.factors[-1], b.factors[0])
    ):
        return GroupElement(structure, a.p, a.factors + b.factors)
    shifted = [structure.tau(f, b.p) for f in a.factors]
    return _normalize(structure, a.p + b.p, [*shifted, *b.factors])


def invert(a: GroupElement) -> GroupElement:
    """a_i^-1 = Delta^-1 L(a_i), where L is the left complement; the Delta^-1's
    are then pushed to the front through tau."""
    structure = a.structure
    length = len(a.factors)
    seq = [
        structure.tau(structure.left_complement(a.factors[i]), -i - a.p)
        for i in range(length - 1, -1, -1)
    ]
    return _normalize(structure, -a.p - length, seq)


def conjugate(a: GroupElement, c: GroupElement) -> GroupElement:
    """c^-1 a c."""
    return multiply(multiply(invert(c), a), c)


def conjugate_by_simple(a: GroupElement, s: Simple) -> GroupElement:
    return conjugate(a, from_simple(a.structure, s))


def power(a: GroupElement, k: int) -> GroupElement:
    result = identity(a.structure)
    base = a if k >= 0 else invert(a)
    k = abs(k)
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def product_of(structure: GarsideStructure, elements: Sequence[GroupElement]) -> GroupElement:
    result = identity(structure)
    for element in elements:
        result = multiply(result, element)
    return result


# Cycling and decycling


def cycling_conjugator(a: GroupElement) -> Simple:
    """tau^-p(a_1); cycling(a) is a conjugated by it."""
    return a.structure.tau(a.factors[0], -a.p)


def cycling(a: GroupElement) -> GroupElement:
    """Delta^p a_2 ... a_l tau^-p(a_1)."""
    if not a.factors:
        return a
    return _normalize(a.structure, a.p, [*a.factors[1:], cycling_conjugator(a)])


def decycling(a: GroupElement) -> GroupElement:
    """Delta^p tau^p(a_l) a_1 ... a_(l-1); a conjugated by a_l^-1."""
    if not a.factors:
        return a
    structure = a.structure
    return _normalize(structure, a.p, [structure.tau(a.factors[-1], a.p), *a.factors[:-1]])


def decycling_conjugator(a: GroupElement) -> GroupElement:
    return invert(from_simple(a.structure, a.factors[-1]))
