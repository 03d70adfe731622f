"""Raising the infimum and lowering the supremum by cycling and decycling."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from garside.core.element import (
    GroupElement,
    cycling,
    cycling_conjugator,
    decycling,
    decycling_conjugator,
    from_simple,
    identity,
    multiply,
)
from garside.errors import InvariantError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Ascent:
    """An element reached from `start` by conjugation: conjugator^-1 start conjugator."""

    start: GroupElement
    element: GroupElement
    conjugator: GroupElement
    cyclings: int = 0
    decyclings: int = 0


def ascend_infimum(a: GroupElement, m: int) -> Ascent | None:
    """Cycle until the infimum reaches m; None when the summit infimum is below m.

    A repeated key at unchanged infimum means the cycling orbit has closed.
    """
    structure = a.structure
    current = a
    conjugator = identity(structure)
    visited = {current.key}
    cyclings = since_increment = 0
    while current.inf < m:
        if not current.factors:
            return None
        x = cycling_conjugator(current)
        nxt = cycling(current)
        conjugator = multiply(conjugator, from_simple(structure, x))
        cyclings += 1
        if nxt.inf > current.inf:
            if structure.homogeneous and since_increment > structure.delta_length:
                raise InvariantError(
                    f"infimum rose after {since_increment} cyclings, more than |Delta| = "
                    f"{structure.delta_length}"
                )
            visited = {nxt.key}
            since_increment = 0
        else:
            since_increment += 1
            if nxt.key in visited:
                logger.debug("cycling orbit closed at inf=%d below m=%d", nxt.inf, m)
                return None
            visited.add(nxt.key)
        current = nxt
    return Ascent(a, current, conjugator, cyclings=cyclings)


def _cycle_to_top(
    current: GroupElement, conjugator: GroupElement
) -> tuple[GroupElement, GroupElement, int]:
    """Cycle until |Delta| cyclings in a row leave the infimum unchanged."""
    structure = current.structure
    steps = stalled = 0
    while current.factors and stalled < structure.delta_length:
        nxt = cycling(current)
        conjugator = multiply(conjugator, from_simple(structure, cycling_conjugator(current)))
        steps += 1
        stalled = 0 if nxt.inf > current.inf else stalled + 1
        current = nxt
    return current, conjugator, steps


def _decycle_to_bottom(
    current: GroupElement, conjugator: GroupElement
) -> tuple[GroupElement, GroupElement, int]:
    """Decycle until |Delta| decyclings in a row leave the supremum unchanged."""
    structure = current.structure
    steps = stalled = 0
    while current.factors and stalled < structure.delta_length:
        nxt = decycling(current)
        conjugator = multiply(conjugator, decycling_conjugator(current))
        steps += 1
        stalled = 0 if nxt.sup < current.sup else stalled + 1
        current = nxt
    return current, conjugator, steps


def ascend_summit(a: GroupElement) -> Ascent:
    """Conjugate a into its summit class, recording the conjugator."""
    current = a
    conjugator = identity(a.structure)
    cyclings = decyclings = 0
    while True:
        before = (current.inf, current.sup)
        current, conjugator, steps = _cycle_to_top(current, conjugator)
        cyclings += steps
        current, conjugator, steps = _decycle_to_bottom(current, conjugator)
        decyclings += steps
        if (current.inf, current.sup) == before:
            break
    logger.debug(
        "summit inf=%d sup=%d after %d cyclings and %d decyclings",
        current.inf,
        current.sup,
        cyclings,
        decyclings,
    )
    return Ascent(a, current, conjugator, cyclings=cyclings, decyclings=decyclings)
