"""Birman-Ko-Lee band monoid BKL_n+ with non-crossing partition simples.

A simple is a non-crossing partition of {0..n-1}, stored as block-minimum
labels: labels[i] is the least element of the block containing i. The block
{b_1 < ... < b_k} stands for the descending cycle a_(b_k,b_(k-1)) ... a_(b_2,b_1),
so products and quotients go through permutations and come back as partitions.
Divisibility on either side is refinement of partitions.
"""

from __future__ import annotations

import functools
import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import ClassVar

from garside.core.structure import AtomId, GarsideStructure, Simple
from garside.monoids.artin import compose, inverse

logger = logging.getLogger(__name__)

_CACHE_SIZE = 1 << 16

# (generator index, exponent) pairs on sigma_1..sigma_(n-1), 1-based.
ArtinWord = list[tuple[int, int]]


def blocks_of(labels: Simple) -> list[list[int]]:
    blocks: dict[int, list[int]] = {}
    for i, label in enumerate(labels):
        blocks.setdefault(label, []).append(i)
    return list(blocks.values())


def labels_of(n: int, blocks: Sequence[Sequence[int]]) -> Simple:
    labels = [0] * n
    for block in blocks:
        low = min(block)
        for i in block:
            labels[i] = low
    return tuple(labels)


def is_noncrossing(labels: Simple) -> bool:
    """Stack scan: when a block is revisited, every block opened since must be closed."""
    last: dict[int, int] = {}
    for i, label in enumerate(labels):
        last[label] = i
    stack: list[int] = []
    for i, label in enumerate(labels):
        if label == i:
            stack.append(label)
        elif not stack or stack[-1] != label:
            return False
        if last[label] == i:
            stack.pop()
    return True


@functools.lru_cache(maxsize=_CACHE_SIZE)
def partition_to_perm(labels: Simple) -> Simple:
    perm = list(range(len(labels)))
    for block in blocks_of(labels):
        for j in range(1, len(block)):
            perm[block[j]] = block[j - 1]
        perm[block[0]] = block[-1]
    return tuple(perm)


@functools.lru_cache(maxsize=_CACHE_SIZE)
def perm_to_partition(perm: Simple) -> Simple | None:
    """The partition whose descending cycles give perm, or None if there is none."""
    n = len(perm)
    seen = [False] * n
    blocks = []
    for start in range(n):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = perm[i]
        block = sorted(cycle)
        for j in range(1, len(block)):
            if perm[block[j]] != block[j - 1]:
                return None
        if perm[block[0]] != block[-1]:
            return None
        blocks.append(block)
    labels = labels_of(n, blocks)
    return labels if is_noncrossing(labels) else None


def _block_count(labels: Simple) -> int:
    return sum(1 for i, label in enumerate(labels) if label == i)


@dataclass(frozen=True)
class BKLStructure(GarsideStructure):
    """BKL_n+ with atoms a_(t,s), n >= t > s >= 1, in lexicographic (t, s) order."""

    monoid: ClassVar[str] = "bkl"

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"bkl monoid needs n >= 2, got {self.n}")

    def _build_atoms(self) -> list[Simple]:
        atoms = []
        for t in range(1, self.n):
            for s in range(t):
                labels = list(range(self.n))
                labels[t] = s
                atoms.append(tuple(labels))
        return atoms

    def _build_identity(self) -> Simple:
        return tuple(range(self.n))

    def _build_delta(self) -> Simple:
        return (0,) * self.n

    def atom_pair(self, atom: AtomId) -> tuple[int, int]:
        """(t, s), 1-based, of an atom a_(t,s)."""
        t = 1
        while atom >= t:
            atom -= t
            t += 1
        return t + 1, atom + 1

    def atom_of_pair(self, t: int, s: int) -> AtomId:
        return (t - 1) * (t - 2) // 2 + (s - 1)

    def simple_length(self, s: Simple) -> int:
        return self.n - _block_count(s)

    def try_product(self, a: Simple, b: Simple) -> Simple | None:
        c = perm_to_partition(compose(partition_to_perm(a), partition_to_perm(b)))
        if c is None or self.simple_length(c) != self.simple_length(a) + self.simple_length(b):
            return None
        return c

    def left_quotient(self, a: Simple, b: Simple) -> Simple:
        c = perm_to_partition(compose(inverse(partition_to_perm(a)), partition_to_perm(b)))
        if c is None:
            raise ValueError(f"{a!r} does not left-divide {b!r}")
        return c

    def right_quotient(self, b: Simple, a: Simple) -> Simple:
        c = perm_to_partition(compose(partition_to_perm(b), inverse(partition_to_perm(a))))
        if c is None:
            raise ValueError(f"{a!r} does not right-divide {b!r}")
        return c

    def atom_divides_left(self, atom: AtomId, s: Simple) -> bool:
        t, u = self.atom_pair(atom)
        return s[t - 1] == s[u - 1]

    def atom_divides_right(self, atom: AtomId, s: Simple) -> bool:
        return self.atom_divides_left(atom, s)

    @functools.lru_cache(maxsize=_CACHE_SIZE)  # noqa: B019
    def meet(self, a: Simple, b: Simple) -> Simple:
        """Common refinement."""
        lows: dict[tuple[int, int], int] = {}
        return tuple(lows.setdefault((la, lb), i) for i, (la, lb) in enumerate(zip(a, b)))

    def right_meet(self, a: Simple, b: Simple) -> Simple:
        return self.meet(a, b)

    @functools.lru_cache(maxsize=_CACHE_SIZE)  # noqa: B019
    def join(self, a: Simple, b: Simple) -> Simple:
        """Union of the two partitions, then merge crossing blocks until non-crossing."""
        parent = list(range(self.n))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        def union(i: int, j: int) -> None:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)

        for i in range(self.n):
            union(i, a[i])
            union(i, b[i])
        while True:
            roots = [find(i) for i in range(self.n)]
            labels = tuple(roots.index(root) for root in roots)
            crossing = _find_crossing(labels)
            if crossing is None:
                return labels
            union(*crossing)

    def tau(self, s: Simple, m: int = 1) -> Simple:
        """Conjugation by delta shifts every label by one, modulo n."""
        shift = m % self.n
        if shift == 0:
            return s
        blocks = [[(i + shift) % self.n for i in block] for block in blocks_of(s)]
        return labels_of(self.n, blocks)

    def iter_simples(self) -> Iterator[Simple]:
        """Non-crossing partitions, built left to right on a stack of open blocks."""
        n = self.n
        labels = [0] * n

        def extend(i: int, stack: tuple[int, ...]) -> Iterator[Simple]:
            if i == n:
                yield tuple(labels)
                return
            labels[i] = i
            yield from extend(i + 1, (*stack, i))
            for depth in range(len(stack)):
                labels[i] = stack[depth]
                yield from extend(i + 1, stack[: depth + 1])

        return extend(0, ())

    def encode_simple(self, s: Simple) -> bytes:
        return bytes(s)

    def format_atom(self, atom: AtomId) -> str:
        t, s = self.atom_pair(atom)
        return f"a({t},{s})"

    def band_to_artin(self, atoms: Sequence[tuple[AtomId, int]]) -> ArtinWord:
        """a_(t,s) = (s_(t-1) ... s_(s+1)) s_s (s_(s+1)^-1 ... s_(t-1)^-1).

        Each atom carries an exponent; a_(t,s)^e conjugates s_s^e by the same
        prefix.
        """
        word: ArtinWord = []
        for atom, exponent in atoms:
            t, s = self.atom_pair(atom)
            prefix = [(k, 1) for k in range(t - 1, s, -1)]
            word.extend(prefix)
            word.append((s, exponent))
            word.extend((k, -1) for k, _ in reversed(prefix))
        return word

    def delta_to_artin(self, exponent: int = 1) -> ArtinWord:
        """delta = s_(n-1) ... s_1."""
        word = [(k, 1) for k in range(self.n - 1, 0, -1)]
        if exponent >= 0:
            return word * exponent
        return [(k, -1) for k, _ in reversed(word)] * (-exponent)


def _find_crossing(labels: Simple) -> tuple[int, int] | None:
    """Two elements of crossing blocks, or None when labels is non-crossing."""
    n = len(labels)
    for a in range(n):
        for b in range(a + 1, n):
            if labels[b] == labels[a]:
                continue
            for c in range(b + 1, n):
                if labels[c] != labels[a]:
                    continue
                for d in range(c + 1, n):
                    if labels[d] == labels[b]:
                        return a, b
    return None
