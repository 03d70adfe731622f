"""Minimal simple conjugators and the minimal simple sets built from them."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field
from enum import StrEnum

from garside.core.element import (
    ElementKey,
    GroupElement,
    PositiveElement,
    conjugate_by_simple,
    right_normal_form_of,
)
from garside.core.structure import AtomId, GarsideStructure, Simple
from garside.errors import InvariantError, NotSimpleError

logger = logging.getLogger(__name__)

# Returns True when the candidate under construction can be dropped early.
AbandonCheck = Callable[[Simple], bool]


class ClassMode(StrEnum):
    """Which conjugacy subset a minimal set or a graph describes."""

    GE = "ge"
    SUM = "sum"


@dataclass(frozen=True)
class MinimalSimpleSet:
    """Antichain of minimal simple conjugators of one base element."""

    base: ElementKey
    mode: ClassMode
    m: int | None
    elements: tuple[Simple, ...]
    # conjugate_by_simple calls spent inside rho_x while growing the candidates
    search_conjugations: int = field(default=0, compare=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Simple]:
        return iter(self.elements)


def lcm_simple_with_positive(
    structure: GarsideStructure, s: Simple, v: PositiveElement | GroupElement | Sequence[Simple]
) -> Simple:
    """The simple s' with join(s, v) = v s', walking the factors of v left to right."""
    if isinstance(v, GroupElement):
        factors: Sequence[Simple] = v.positive_factors()
    elif isinstance(v, PositiveElement):
        factors = v.factors
    else:
        factors = v
    for factor in factors:
        if s == structure.identity:
            break
        s = structure.left_quotient(factor, structure.join(s, factor))
    return s


def minimal_conjugator_ge(
    v: GroupElement, m: int, x: AtomId, *, abandon: AbandonCheck | None = None
) -> Simple | None:
    """r_x: the least simple above atom x conjugating v to infimum >= m.

    Returns None only when `abandon` accepts an intermediate candidate.
    """
    structure = v.structure
    if v.inf < m:
        raise ValueError(f"element has inf={v.inf} < m={m}")
    s = structure.atoms[x]
    if v.inf > m:
        return s
    # v = Delta^m w; s works iff tau^m(s) left-divides w s.
    w = v.factors
    for _ in range(structure.delta_length + 1):
        if abandon is not None and abandon(s):
            return None
        grow = lcm_simple_with_positive(structure, structure.tau(s, m), [*w, s])
        if grow == structure.identity:
            return s
        try:
            s = structure.product(s, grow)
        except NotSimpleError as e:
            raise InvariantError(f"r_x growth left the simple set: {e}") from e
    raise InvariantError(f"r_x did not stabilise within {structure.delta_length + 1} steps")


def minimal_conjugator_sum(
    v: GroupElement, x: AtomId, *, abandon: AbandonCheck | None = None
) -> Simple | None:
    """rho_x: the least simple above atom x keeping v in its summit class.

    Starts from r_x at the summit infimum and pushes the first right normal
    factor of the conjugate into s until the canonical length is restored.
    """
    return _rho(v, x, abandon)[0]


def _rho(v: GroupElement, x: AtomId, abandon: AbandonCheck | None) -> tuple[Simple | None, int]:
    structure = v.structure
    s = minimal_conjugator_ge(v, v.inf, x, abandon=abandon)
    target = v.canonical_length
    tried = 0
    for _ in range(structure.delta_length + 1):
        if s is None:
            return None, tried
        u = conjugate_by_simple(v, s)
        tried += 1
        if u.canonical_length == target:
            return s, tried
        factors, _ = right_normal_form_of(u)
        try:
            s = structure.product(s, factors[0])
        except NotSimpleError as e:
            raise InvariantError(f"rho_x growth left the simple set: {e}") from e
        if abandon is not None and abandon(s):
            return None, tried
    raise InvariantError(f"rho_x did not stabilise within {structure.delta_length + 1} steps")


def _divided_by(structure: GarsideStructure, atoms: list[AtomId]) -> AbandonCheck:
    def check(s: Simple) -> bool:
        return any(structure.atom_divides_left(j, s) for j in atoms)

    return check


def _minimal_set(
    v: GroupElement,
    mode: ClassMode,
    m: int | None,
    compute: Callable[[AtomId, AbandonCheck | None], tuple[Simple | None, int]],
    fast_path: bool,
) -> MinimalSimpleSet:
    """Keep r_i unless an atom kept earlier, or any later atom, divides it."""
    structure = v.structure
    count = structure.atom_count
    kept: list[int] = []
    chosen: dict[int, Simple] = {}
    searched = 0
    for i in range(count):
        abandon = _divided_by(structure, [*kept, *range(i + 1, count)]) if fast_path else None
        r, tried = compute(i, abandon)
        searched += tried
        if r is None:
            continue
        if any(structure.atom_divides_left(j, r) for j in kept):
            continue
        if any(structure.atom_divides_left(j, r) for j in range(i + 1, count)):
            continue
        kept.append(i)
        chosen[i] = r
    elements = tuple(chosen[i] for i in kept)
    if len(elements) > count:
        raise InvariantError(f"minimal set of size {len(elements)} exceeds {count} atoms")
    return MinimalSimpleSet(v.key, mode, m, elements, searched)


def minimal_simple_set_ge(v: GroupElement, m: int, *, fast_path: bool = False) -> MinimalSimpleSet:
    """Minimal simples s with inf(s^-1 v s) >= m."""
    return _minimal_set(
        v,
        ClassMode.GE,
        m,
        lambda x, abandon: (minimal_conjugator_ge(v, m, x, abandon=abandon), 0),
        fast_path,
    )


def minimal_simple_set_sum(v: GroupElement, *, fast_path: bool = False) -> MinimalSimpleSet:
    """Minimal simples s keeping v in its summit class."""
    return _minimal_set(
        v,
        ClassMode.SUM,
        None,
        lambda x, abandon: _rho(v, x, abandon),
        fast_path,
    )
