"""Positive braid monoid with permutation-braid simples."""

import math

import pytest

from garside.errors import CapExceededError, NotSimpleError
from garside.monoids import ArtinStructure, Monoid, get_structure


def test_atoms_and_delta_n3() -> None:
    b3 = ArtinStructure(3)
    assert b3.atoms == ((1, 0, 2), (0, 2, 1))
    assert b3.identity == (0, 1, 2)
    assert b3.delta == (2, 1, 0)
    assert b3.delta_length == 3
    assert b3.simple_word(b3.delta) == (0, 1, 0)


def test_atom_divisibility() -> None:
    b3 = ArtinStructure(3)
    s12 = b3.word_to_simple([0, 1])
    assert s12 is not None
    assert b3.atom_divides_left(0, s12)
    assert not b3.atom_divides_left(1, s12)
    assert b3.atom_divides_right(1, s12)
    assert not b3.atom_divides_right(0, s12)


def test_word_to_simple() -> None:
    b3 = ArtinStructure(3)
    assert b3.word_to_simple([0, 0]) is None
    assert b3.word_to_simple([0, 1, 0]) == b3.delta
    assert b3.word_to_simple([1, 0, 1]) == b3.delta
    assert b3.word_to_simple([]) == b3.identity


def test_product_rejects_non_simple() -> None:
    b3 = ArtinStructure(3)
    s1 = b3.atoms[0]
    with pytest.raises(NotSimpleError):
        b3.product(s1, s1)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_simple_count_is_factorial(n: int) -> None:
    assert ArtinStructure(n).count_simples() == math.factorial(n)


def test_count_simples_respects_cap() -> None:
    with pytest.raises(CapExceededError):
        ArtinStructure(9).count_simples(cap=8)


def test_tau_reverses_generators() -> None:
    b3 = ArtinStructure(3)
    assert b3.tau(b3.atoms[0]) == b3.atoms[1]
    b4 = ArtinStructure(4)
    assert b4.tau(b4.atoms[0]) == b4.atoms[2]
    assert b4.tau(b4.atoms[1]) == b4.atoms[1]
    for s in b4.simples:
        assert b4.tau(b4.tau(s)) == s


def test_meet_and_join_examples() -> None:
    b3 = ArtinStructure(3)
    s1, s2 = b3.atoms
    assert b3.meet(s1, s2) == b3.identity
    assert b3.join(s1, s2) == b3.delta
    s12 = b3.product(s1, s2)
    assert b3.meet(s12, b3.delta) == s12
    assert b3.right_meet(s12, s2) == s2


def test_format() -> None:
    b4 = get_structure(Monoid.ARTIN, 4)
    assert str(b4) == "artin_4"
    s = b4.word_to_simple([0, 2])
    assert s is not None
    assert b4.format_simple(s) == "s1.s3"
    assert b4.format_simple(b4.delta) == "D"
    assert b4.format_simple(b4.identity) == "1"


def test_rejects_too_few_strands() -> None:
    with pytest.raises(ValueError):
        ArtinStructure(1)


def test_structure_registry_is_shared() -> None:
    assert get_structure("artin", 5) is get_structure(Monoid.ARTIN, 5)
