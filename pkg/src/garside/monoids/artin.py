"""Positive braid monoid B_n+ with permutation-braid simples."""

from __future__ import annotations

import functools
import itertools
import logging
from collections.abc import Iterator
from dataclasses import dataclass
from typing import ClassVar

from garside.core.structure import AtomId, GarsideStructure, Simple

logger = logging.getLogger(__name__)

# A simple is stored in one-line notation: perm[k] is the strand sitting at
# position k. Products compose as (u*v)[k] = u[v[k]], so right multiplication
# by sigma_i swaps positions i, i+1 and left multiplication swaps the values.


def compose(u: Simple, v: Simple) -> Simple:
    return tuple(u[k] for k in v)


def inverse(u: Simple) -> Simple:
    inv = [0] * len(u)
    for k, value in enumerate(u):
        inv[value] = k
    return tuple(inv)


@functools.lru_cache(maxsize=1 << 16)
def inversions(u: Simple) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(u)), 2) if u[i] > u[j])


@dataclass(frozen=True)
class ArtinStructure(GarsideStructure):
    """B_n+ with atoms sigma_1..sigma_(n-1); AtomId i stands for sigma_(i+1)."""

    monoid: ClassVar[str] = "artin"

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"artin monoid needs n >= 2, got {self.n}")

    def _build_atoms(self) -> list[Simple]:
        atoms = []
        for i in range(self.n - 1):
            perm = list(range(self.n))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            atoms.append(tuple(perm))
        return atoms

    def _build_identity(self) -> Simple:
        return tuple(range(self.n))

    def _build_delta(self) -> Simple:
        return tuple(range(self.n - 1, -1, -1))

    def simple_length(self, s: Simple) -> int:
        return inversions(s)

    def try_product(self, a: Simple, b: Simple) -> Simple | None:
        c = compose(a, b)
        if inversions(c) != inversions(a) + inversions(b):
            return None
        return c

    def left_quotient(self, a: Simple, b: Simple) -> Simple:
        return compose(inverse(a), b)

    def right_quotient(self, b: Simple, a: Simple) -> Simple:
        return compose(b, inverse(a))

    def atom_divides_left(self, atom: AtomId, s: Simple) -> bool:
        return s.index(atom + 1) < s.index(atom)

    def atom_divides_right(self, atom: AtomId, s: Simple) -> bool:
        return s[atom] > s[atom + 1]

    def right_complement(self, s: Simple) -> Simple:
        return compose(inverse(s), self.delta)

    def left_complement(self, s: Simple) -> Simple:
        return compose(self.delta, inverse(s))

    def tau(self, s: Simple, m: int = 1) -> Simple:
        """Conjugation by Delta maps sigma_i to sigma_(n-i); it is an involution."""
        if m % 2 == 0:
            return s
        last = self.n - 1
        return tuple(last - s[last - k] for k in range(self.n))

    def iter_simples(self) -> Iterator[Simple]:
        return itertools.permutations(range(self.n))

    def encode_simple(self, s: Simple) -> bytes:
        return bytes(s)

    def format_atom(self, atom: AtomId) -> str:
        return f"s{atom + 1}"
