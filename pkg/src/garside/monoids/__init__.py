"""Concrete Garside structures and the structure registry."""

from __future__ import annotations

import functools
from enum import StrEnum

from garside.core.structure import GarsideStructure
from garside.monoids.artin import ArtinStructure
from garside.monoids.bkl import BKLStructure


class Monoid(StrEnum):
    """Supported presentations of the braid group."""

    ARTIN = "artin"
    BKL = "bkl"


_STRUCTURES: dict[Monoid, type[GarsideStructure]] = {
    Monoid.ARTIN: ArtinStructure,
    Monoid.BKL: BKLStructure,
}


@functools.cache
def get_structure(monoid: Monoid | str, n: int) -> GarsideStructure:
    """Shared structure instance, so per-instance caches are reused."""
    return _STRUCTURES[Monoid(monoid)](n)


__all__ = ["ArtinStructure", "BKLStructure", "Monoid", "get_structure"]
