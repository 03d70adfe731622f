"""Operation-count benchmark: minimal simple sets against the full simple set."""

from __future__ import annotations

import logging
import random
import time
from collections.abc import Callable

from garside.config import Settings
from garside.conjugacy import (
    ConjugacyGraph,
    ascend_summit,
    elrifai_morton_summit_class,
    summit_class,
)
from garside.core.element import GroupElement, conjugate, from_atom, identity, multiply
from garside.core.structure import GarsideStructure
from garside.errors import CapExceededError, InvariantError
from garside.models.entities import BenchReport, BenchTrial
from garside.monoids import Monoid
from garside.words import element_word

logger = logging.getLogger(__name__)


def random_positive(structure: GarsideStructure, length: int, rng: random.Random) -> GroupElement:
    result = identity(structure)
    for _ in range(length):
        result = multiply(result, from_atom(structure, rng.randrange(structure.atom_count)))
    return result


def random_mixed(structure: GarsideStructure, length: int, rng: random.Random) -> GroupElement:
    result = identity(structure)
    for _ in range(length):
        atom = rng.randrange(structure.atom_count)
        result = multiply(result, from_atom(structure, atom, rng.choice((-1, 1))))
    return result


def random_conjugate_pair(
    structure: GarsideStructure,
    length: int,
    rng: random.Random,
    max_conjugator: int | None = None,
) -> tuple[GroupElement, GroupElement]:
    """A positive word a of the given length and c^-1 a c for a random mixed-sign c."""
    a = random_positive(structure, length, rng)
    c = random_mixed(structure, rng.randint(1, max_conjugator or max(length, 1)), rng)
    return a, conjugate(a, c)


def _decide(
    graph_of: Callable[[GroupElement], ConjugacyGraph], a: GroupElement, b: GroupElement
) -> tuple[bool, ConjugacyGraph]:
    graph = graph_of(a)
    return ascend_summit(b).element.key in graph, graph


def run_bench(
    structure: GarsideStructure,
    length: int,
    trials: int,
    seed: int,
    settings: Settings,
    on_trial: Callable[[BenchTrial], None] | None = None,
) -> BenchReport:
    """Decide `trials` seeded conjugate pairs with both algorithms and compare the counts.

    Both sides build the summit class of the first element and look up the
    summit representative of the second, so the node sets must agree exactly.
    """
    cap = settings.caps.oracle_cap(structure.monoid)
    if structure.n > cap:
        raise CapExceededError(f"bench on {structure} exceeds oracle cap n <= {cap}")
    search = settings.search
    rng = random.Random(seed)
    report = BenchReport(
        monoid=Monoid(structure.monoid),
        n=structure.n,
        l=length,
        seed=seed,
        simple_count=len(structure.simples),
        atom_count=structure.atom_count,
    )
    for index in range(trials):
        a, b = random_conjugate_pair(structure, length, rng)

        started = time.perf_counter()
        answer, minimal = _decide(
            lambda x: summit_class(x, budget=search.budget, fast_path=search.fast_path), a, b
        )
        minimal_seconds = time.perf_counter() - started

        started = time.perf_counter()
        oracle_answer, oracle = _decide(
            lambda x: elrifai_morton_summit_class(x, cap=cap, budget=search.budget), a, b
        )
        oracle_seconds = time.perf_counter() - started

        if not answer or answer != oracle_answer:
            raise InvariantError(
                f"trial {index}: minimal-set answer {answer}, full-set answer {oracle_answer}"
            )
        if set(minimal.nodes) != set(oracle.nodes):
            raise InvariantError(
                f"trial {index}: summit classes differ ({len(minimal)} vs {len(oracle)} nodes)"
            )
        trial = BenchTrial(
            index=index,
            a=element_word(a),
            b=element_word(b),
            answer=answer,
            nodes=len(minimal),
            minimal_conjugations=minimal.conjugations,
            minimal_search_conjugations=minimal.search_conjugations,
            oracle_conjugations=oracle.conjugations,
            minimal_seconds=minimal_seconds,
            oracle_seconds=oracle_seconds,
        )
        logger.debug(
            "bench trial %d: %d nodes, %d (+%d in rho_x) vs %d conjugations",
            index,
            trial.nodes,
            trial.minimal_conjugations,
            trial.minimal_search_conjugations,
            trial.oracle_conjugations,
        )
        report.trials.append(trial)
        if on_trial is not None:
            on_trial(trial)
    return report
