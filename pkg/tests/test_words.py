"""Word parsing and display."""

import pytest

from garside.errors import WordParseError
from garside.monoids import Monoid
from garside.words import element_word, parse_element, parse_word


def test_parse_tokens() -> None:
    expr = parse_word("s1^3 s2.D^-1", "artin", 3)
    assert expr.monoid == Monoid.ARTIN
    assert [(t.atom, t.exponent, t.column) for t in expr.tokens] == [
        (0, 3, 1),
        (1, 1, 6),
        (None, -1, 9),
    ]
    assert str(expr) == "s1^3 s2 D^-1"


def test_parse_is_case_insensitive() -> None:
    assert parse_element("S1 d", "artin", 3).key == parse_element("s1 D", "artin", 3).key


def test_band_tokens() -> None:
    expr = parse_word("a(3,1) a( 2 , 1 )^2", "bkl", 3)
    assert [(t.atom, t.exponent) for t in expr.tokens] == [(1, 1), (0, 2)]


def test_identity_token_and_empty_word() -> None:
    assert parse_element("", "artin", 4).is_identity
    assert parse_element("1", "artin", 4).is_identity
    assert parse_element("1 s1 1", "artin", 4).key == parse_element("s1", "artin", 4).key


@pytest.mark.parametrize(
    ("text", "monoid", "column"),
    [
        ("s1 s3", "artin", 4),
        ("s1 x", "artin", 4),
        ("s1s2", "artin", 3),
        ("s1^0", "artin", 1),
        ("a(2,1)", "artin", 1),
        ("s1", "bkl", 1),
        ("a(2,3)", "bkl", 1),
        ("s0", "artin", 1),
    ],
)
def test_parse_errors_report_column(text: str, monoid: str, column: int) -> None:
    with pytest.raises(WordParseError) as excinfo:
        parse_word(text, monoid, 3)
    assert excinfo.value.column == column
    assert f"column {column}" in str(excinfo.value)


def test_element_word() -> None:
    assert element_word(parse_element("s1 s1 s1 s2", "artin", 3)) == "s1^3 s2"
    assert element_word(parse_element("s2 s1 s2", "artin", 3)) == "D"
    assert element_word(parse_element("D^-1 s1", "artin", 3)) == "D^-1 s1"
    assert element_word(parse_element("s1 s1^-1", "artin", 3)) == "1"
    assert element_word(parse_element("a(2,1) a(2,1)", "bkl", 3)) == "a(2,1)^2"


@pytest.mark.parametrize(
    ("word", "monoid", "n"),
    [
        ("s1^3 s2 D^-2 s3^-1", "artin", 4),
        ("a(4,2) a(3,1)^-1 D", "bkl", 4),
        ("s2^-1 s1 s2 s1", "artin", 3),
    ],
)
def test_element_word_parses_back(word: str, monoid: str, n: int) -> None:
    a = parse_element(word, monoid, n)
    assert parse_element(element_word(a), monoid, n).key == a.key
