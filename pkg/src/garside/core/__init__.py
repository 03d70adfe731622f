"""Monoid-generic Garside machinery: simples, normal forms, group arithmetic."""

from garside.core.element import (
    GroupElement,
    PositiveElement,
    conjugate,
    cycling,
    decycling,
    delta_power,
    from_atom,
    from_simple,
    identity,
    invert,
    left_normal_form,
    lm,
    multiply,
    power,
    right_normal_form,
    right_normal_form_of,
    rm,
)
from garside.core.encoding import ENCODING_VERSION, encode_element
from garside.core.structure import AtomId, GarsideStructure, Simple

__all__ = [
    "ENCODING_VERSION",
    "AtomId",
    "GarsideStructure",
    "GroupElement",
    "PositiveElement",
    "Simple",
    "conjugate",
    "cycling",
    "decycling",
    "delta_power",
    "encode_element",
    "from_atom",
    "from_simple",
    "identity",
    "invert",
    "left_normal_form",
    "lm",
    "multiply",
    "power",
    "right_normal_form",
    "right_normal_form_of",
    "rm",
]
