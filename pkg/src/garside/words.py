"""Word syntax shared by the CLI and census output.

Tokens are separated by whitespace or `.`: `s<k>` for the Artin generator
sigma_k, `a(<t>,<s>)` for the band generator a_(t,s), `D` for the Garside
element and `1` for the identity. Any token may carry `^<int>`. Matching is
case-insensitive.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from itertools import groupby

from garside.core.element import GroupElement, delta_power, from_atom, identity, multiply
from garside.core.structure import AtomId, GarsideStructure
from garside.errors import WordParseError
from garside.monoids import BKLStructure, Monoid, get_structure

logger = logging.getLogger(__name__)

_SEPARATOR = re.compile(r"[\s.]+")
_TOKEN = re.compile(
    r"(?:s(?P<k>\d+)|a\(\s*(?P<t>\d+)\s*,\s*(?P<s>\d+)\s*\)|(?P<delta>d)|(?P<one>1))"
    r"(?:\^(?P<exp>[+-]?\d+))?",
    re.IGNORECASE,
)


@dataclass(frozen=True)
class WordToken:
    """One generator (atom is set) or Delta (atom is None) raised to a nonzero power."""

    atom: AtomId | None
    exponent: int = 1
    column: int = 1

    @property
    def is_delta(self) -> bool:
        return self.atom is None


@dataclass(frozen=True)
class WordExpr:
    monoid: Monoid
    n: int
    tokens: tuple[WordToken, ...]

    @property
    def structure(self) -> GarsideStructure:
        return get_structure(self.monoid, self.n)

    def __str__(self) -> str:
        return format_tokens(self.structure, self.tokens)


def _atom_for(match: re.Match[str], monoid: Monoid, n: int, column: int) -> AtomId:
    if match.group("k") is not None:
        if monoid != Monoid.ARTIN:
            raise WordParseError("generator s<k> needs --monoid artin", column)
        k = int(match.group("k"))
        if not 1 <= k <= n - 1:
            raise WordParseError(f"generator s{k} out of range 1..{n - 1}", column)
        return k - 1
    if monoid != Monoid.BKL:
        raise WordParseError("generator a(t,s) needs --monoid bkl", column)
    t, s = int(match.group("t")), int(match.group("s"))
    if not n >= t > s >= 1:
        raise WordParseError(f"generator a({t},{s}) needs {n} >= t > s >= 1", column)
    return BKLStructure(n).atom_of_pair(t, s)


def parse_word(text: str, monoid: Monoid | str, n: int) -> WordExpr:
    """Parse a word; columns in errors are 1-based."""
    monoid = Monoid(monoid)
    tokens: list[WordToken] = []
    pos = 0
    while pos < len(text):
        sep = _SEPARATOR.match(text, pos)
        if sep is not None:
            pos = sep.end()
            continue
        column = pos + 1
        match = _TOKEN.match(text, pos)
        if match is None:
            raise WordParseError(f"unexpected character {text[pos]!r}", column)
        end = match.end()
        if end < len(text) and not _SEPARATOR.match(text, end):
            raise WordParseError(f"unexpected character {text[end]!r}", end + 1)
        exponent = int(match.group("exp")) if match.group("exp") is not None else 1
        if exponent == 0:
            raise WordParseError("zero exponent", column)
        pos = end
        if match.group("one"):
            continue
        atom = None if match.group("delta") else _atom_for(match, monoid, n, column)
        tokens.append(WordToken(atom, exponent, column))
    return WordExpr(monoid, n, tuple(tokens))


def element_from_word(expr: WordExpr) -> GroupElement:
    """Evaluate a word, normalizing after every token."""
    structure = expr.structure
    result = identity(structure)
    for token in expr.tokens:
        if token.atom is None:
            factor = delta_power(structure, token.exponent)
        else:
            factor = from_atom(structure, token.atom, token.exponent)
        result = multiply(result, factor)
    return result


def parse_element(text: str, monoid: Monoid | str, n: int) -> GroupElement:
    return element_from_word(parse_word(text, monoid, n))


def format_tokens(structure: GarsideStructure, tokens: tuple[WordToken, ...]) -> str:
    parts = []
    for token in tokens:
        name = "D" if token.atom is None else structure.format_atom(token.atom)
        parts.append(name if token.exponent == 1 else f"{name}^{token.exponent}")
    return " ".join(parts) if parts else "1"


def element_tokens(a: GroupElement) -> tuple[WordToken, ...]:
    """Delta power followed by the atom words of the normal factors, runs collapsed."""
    structure = a.structure
    tokens: list[WordToken] = []
    if a.p:
        tokens.append(WordToken(None, a.p))
    atoms = [atom for factor in a.factors for atom in structure.simple_word(factor)]
    for atom, run in groupby(atoms):
        tokens.append(WordToken(atom, sum(1 for _ in run)))
    return tuple(tokens)


def element_word(a: GroupElement) -> str:
    """Display word of an element, e.g. `s1^3 s2` or `D^-1 s1`."""
    return format_tokens(a.structure, element_tokens(a))


def band_to_artin(expr: WordExpr) -> WordExpr:
    """Rewrite a band-generator word as an Artin word on the same strands."""
    if expr.monoid != Monoid.BKL:
        return expr
    bkl = BKLStructure(expr.n)
    tokens: list[WordToken] = []
    for token in expr.tokens:
        if token.atom is None:
            pairs = bkl.delta_to_artin(token.exponent)
        else:
            pairs = bkl.band_to_artin([(token.atom, token.exponent)])
        tokens.extend(WordToken(k - 1, e, token.column) for k, e in pairs)
    return WordExpr(Monoid.ARTIN, expr.n, tuple(tokens))
