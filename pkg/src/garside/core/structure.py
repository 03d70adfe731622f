"""Abstract Garside structure and the lattice machinery shared by every monoid."""

from __future__ import annotations

import functools
import logging
from abc import ABC, abstractmethod
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import ClassVar

from garside.errors import CapExceededError, NotSimpleError

logger = logging.getLogger(__name__)

# A simple element is stored as a tuple of small integers whose meaning is
# monoid specific (one-line permutation, non-crossing block labels, ...).
# Equal tuples are equal simples, and tuple order is the canonical key order.
Simple = tuple[int, ...]
AtomId = int

_CACHE_SIZE = 1 << 17


@dataclass(frozen=True)
class GarsideStructure(ABC):
    """A Garside monoid with its finite lattice of simple elements.

    Subclasses provide the monoid-specific primitives (products and quotients
    of simples, atom divisibility, enumeration, encoding). Everything else,
    including gcd/lcm, complements and the Delta-conjugation tau, is derived
    here from those primitives.
    """

    n: int

    monoid: ClassVar[str] = ""
    homogeneous: ClassVar[bool] = True

    # Primitives

    @abstractmethod
    def _build_atoms(self) -> list[Simple]:
        """Return the atoms in AtomId order."""

    @abstractmethod
    def _build_identity(self) -> Simple: ...

    @abstractmethod
    def _build_delta(self) -> Simple: ...

    @abstractmethod
    def simple_length(self, s: Simple) -> int:
        """Word length of a simple in atoms."""

    @abstractmethod
    def try_product(self, a: Simple, b: Simple) -> Simple | None:
        """Return a*b if it is simple, otherwise None."""

    @abstractmethod
    def left_quotient(self, a: Simple, b: Simple) -> Simple:
        """Return a^-1 b. Requires a to left-divide b."""

    @abstractmethod
    def right_quotient(self, b: Simple, a: Simple) -> Simple:
        """Return b a^-1. Requires a to right-divide b."""

    @abstractmethod
    def atom_divides_left(self, atom: AtomId, s: Simple) -> bool: ...

    @abstractmethod
    def atom_divides_right(self, atom: AtomId, s: Simple) -> bool: ...

    @abstractmethod
    def iter_simples(self) -> Iterator[Simple]:
        """Enumerate every divisor of Delta exactly once."""

    @abstractmethod
    def encode_simple(self, s: Simple) -> bytes:
        """Fixed-width byte encoding (see docs/ENCODING.md)."""

    @abstractmethod
    def format_atom(self, atom: AtomId) -> str:
        """Token text of an atom in the CLI word syntax."""

    # Derived data

    @cached_property
    def atoms(self) -> tuple[Simple, ...]:
        return tuple(self._build_atoms())

    @property
    def atom_count(self) -> int:
        return len(self.atoms)

    @cached_property
    def identity(self) -> Simple:
        return self._build_identity()

    @cached_property
    def delta(self) -> Simple:
        return self._build_delta()

    @cached_property
    def delta_length(self) -> int:
        return self.simple_length(self.delta)

    @cached_property
    def simples(self) -> tuple[Simple, ...]:
        """All simples sorted by canonical key."""
        return tuple(sorted(self.iter_simples()))

    def atom_index(self, s: Simple) -> AtomId:
        try:
            return self.atoms.index(s)
        except ValueError as e:
            raise NotSimpleError(f"{s!r} is not an atom of {self.monoid}_{self.n}") from e

    def count_simples(self, cap: int | None = None) -> int:
        """Cardinality of the simple set, generated explicitly."""
        if cap is not None and self.n > cap:
            raise CapExceededError(
                f"enumerating simples of {self.monoid}_{self.n} exceeds cap n <= {cap}"
            )
        return sum(1 for _ in self.iter_simples())

    # Arithmetic on simples

    def product(self, a: Simple, b: Simple) -> Simple:
        """Product of two simples whose product is known to be simple."""
        result = self.try_product(a, b)
        if result is None:
            raise NotSimpleError(f"product of {a!r} and {b!r} is not simple")
        return result

    def right_complement(self, s: Simple) -> Simple:
        """The simple c with s*c = Delta."""
        return self.left_quotient(s, self.delta)

    def left_complement(self, s: Simple) -> Simple:
        """The simple c with c*s = Delta."""
        return self.right_quotient(self.delta, s)

    def tau(self, s: Simple, m: int = 1) -> Simple:
        """Delta^-m s Delta^m, computed as iterated double complements."""
        if m >= 0:
            for _ in range(m):
                s = self.right_complement(self.right_complement(s))
        else:
            for _ in range(-m):
                s = self.left_complement(self.left_complement(s))
        return s

    # Lattice

    @functools.lru_cache(maxsize=_CACHE_SIZE)  # noqa: B019
    def meet(self, a: Simple, b: Simple) -> Simple:
        """Left gcd: strip common left atoms one at a time."""
        result = self.identity
        while True:
            for atom in range(self.atom_count):
                if self.atom_divides_left(atom, a) and self.atom_divides_left(atom, b):
                    x = self.atoms[atom]
                    result = self.product(result, x)
                    a = self.left_quotient(x, a)
                    b = self.left_quotient(x, b)
                    break
            else:
                return result

    @functools.lru_cache(maxsize=_CACHE_SIZE)  # noqa: B019
    def right_meet(self, a: Simple, b: Simple) -> Simple:
        """Right gcd, the mirror of meet."""
        result = self.identity
        while True:
            for atom in range(self.atom_count):
                if self.atom_divides_right(atom, a) and self.atom_divides_right(atom, b):
                    x = self.atoms[atom]
                    result = self.product(x, result)
                    a = self.right_quotient(a, x)
                    b = self.right_quotient(b, x)
                    break
            else:
                return result

    @functools.lru_cache(maxsize=_CACHE_SIZE)  # noqa: B019
    def join(self, a: Simple, b: Simple) -> Simple:
        """Left lcm. The right complement reverses divisibility, so
        d(a v b) is the right gcd of d(a) and d(b)."""
        return self.left_complement(
            self.right_meet(self.right_complement(a), self.right_complement(b))
        )

    def left_divides(self, a: Simple, b: Simple) -> bool:
        return self.meet(a, b) == a

    def right_divides(self, a: Simple, b: Simple) -> bool:
        return self.right_meet(a, b) == a

    # Words

    def word_to_simple(self, atoms: Sequence[AtomId]) -> Simple | None:
        """The simple spelled by an atom word, or None if the word is not simple."""
        current = self.identity
        for atom in atoms:
            nxt = self.try_product(current, self.atoms[atom])
            if nxt is None:
                return None
            current = nxt
        return current

    @functools.lru_cache(maxsize=_CACHE_SIZE)  # noqa: B019
    def simple_word(self, s: Simple) -> tuple[AtomId, ...]:
        """Atom word of a simple, taking the lowest dividing atom first."""
        word: list[AtomId] = []
        while s != self.identity:
            for atom in range(self.atom_count):
                if self.atom_divides_left(atom, s):
                    word.append(atom)
                    s = self.left_quotient(self.atoms[atom], s)
                    break
            else:
                raise NotSimpleError(f"no atom divides {s!r}")
        return tuple(word)

    def format_simple(self, s: Simple) -> str:
        if s == self.identity:
            return "1"
        if s == self.delta:
            return "D"
        return ".".join(self.format_atom(atom) for atom in self.simple_word(s))

    def __str__(self) -> str:
        return f"{self.monoid}_{self.n}"
