"""Conjugacy classes in Garside groups via minimal simple conjugators."""

from garside.conjugacy.classes import (
    DEFAULT_BUDGET,
    ConjugacyResult,
    are_conjugate,
    conjugate_class_ge,
    elrifai_morton_class_ge,
    elrifai_morton_summit_class,
    summit_class,
)
from garside.conjugacy.graph import ConjugacyGraph
from garside.conjugacy.minimal import (
    ClassMode,
    MinimalSimpleSet,
    lcm_simple_with_positive,
    minimal_conjugator_ge,
    minimal_conjugator_sum,
    minimal_simple_set_ge,
    minimal_simple_set_sum,
)
from garside.conjugacy.summit import Ascent, ascend_infimum, ascend_summit

__all__ = [
    "DEFAULT_BUDGET",
    "Ascent",
    "ClassMode",
    "ConjugacyGraph",
    "ConjugacyResult",
    "MinimalSimpleSet",
    "are_conjugate",
    "ascend_infimum",
    "ascend_summit",
    "conjugate_class_ge",
    "elrifai_morton_class_ge",
    "elrifai_morton_summit_class",
    "lcm_simple_with_positive",
    "minimal_conjugator_ge",
    "minimal_conjugator_sum",
    "minimal_simple_set_ge",
    "minimal_simple_set_sum",
    "summit_class",
]
