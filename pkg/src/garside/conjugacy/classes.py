"""Class computations: C^{>=m}(a), summit classes, conjugacy decisions, and the full-S oracle."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from garside.config import CapsConfig, SearchConfig
from garside.conjugacy.graph import ConjugacyGraph
from garside.conjugacy.minimal import (
    ClassMode,
    MinimalSimpleSet,
    minimal_simple_set_ge,
    minimal_simple_set_sum,
)
from garside.conjugacy.summit import Ascent, ascend_infimum, ascend_summit
from garside.core.element import (
    GroupElement,
    conjugate,
    conjugate_by_simple,
    identity,
    invert,
    multiply,
)
from garside.core.structure import Simple
from garside.errors import (
    BudgetExceededError,
    CapExceededError,
    InvariantError,
    StructureMismatchError,
)

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = SearchConfig().budget
DEFAULT_CAPS = CapsConfig()

# Simples to try at a node, and the conjugations already spent choosing them.
Candidates = Callable[[GroupElement], tuple[Sequence[Simple], int]]
Accept = Callable[[GroupElement], bool]


@dataclass(frozen=True)
class ConjugacyResult:
    """Outcome of a conjugacy decision; `witness` satisfies witness^-1 a witness = b."""

    is_conjugate: bool
    witness: GroupElement | None
    nodes: int = 0
    conjugations: int = 0
    search_conjugations: int = 0


def _expand(
    v: GroupElement, candidates: Candidates, accept: Accept | None
) -> tuple[list[tuple[GroupElement, Simple]], int, int]:
    simples, searched = candidates(v)
    children = []
    for s in simples:
        child = conjugate_by_simple(v, s)
        if accept is None or accept(child):
            children.append((child, s))
    children.sort(key=lambda pair: pair[0].key)
    return children, len(simples), searched


def _explore(
    graph: ConjugacyGraph,
    candidates: Candidates,
    accept: Accept | None,
    *,
    budget: int,
    parallel: int,
) -> ConjugacyGraph:
    """Level-synchronous BFS, merged in frontier order so parallel runs equal sequential ones."""
    if graph.root is None:
        return graph
    frontier = [graph.root]
    pool = ThreadPoolExecutor(max_workers=parallel) if parallel > 1 else None
    try:
        while frontier:
            if pool is not None:
                results = list(pool.map(lambda v: _expand(v, candidates, accept), frontier))
            else:
                results = [_expand(v, candidates, accept) for v in frontier]
            next_frontier: list[GroupElement] = []
            for v, (children, tried, searched) in zip(frontier, results, strict=True):
                graph.expanded += 1
                graph.conjugations += tried
                graph.search_conjugations += searched
                for child, s in children:
                    if child.key in graph.nodes:
                        continue
                    graph.add(child, v.key, s)
                    if len(graph) > budget:
                        raise BudgetExceededError(len(graph), budget)
                    next_frontier.append(child)
            logger.debug("level done: %d nodes, next frontier %d", len(graph), len(next_frontier))
            frontier = next_frontier
    finally:
        if pool is not None:
            pool.shutdown()
    return graph


def _candidates(found: MinimalSimpleSet) -> tuple[Sequence[Simple], int]:
    return found.elements, found.search_conjugations


def _ge_accept(m: int, verify: bool) -> Accept | None:
    if not verify:
        return None

    def accept(child: GroupElement) -> bool:
        if child.inf < m:
            raise InvariantError(f"minimal conjugator produced inf={child.inf} < {m}")
        return True

    return accept


def _sum_accept(inf: int, sup: int, verify: bool) -> Accept | None:
    if not verify:
        return None

    def accept(child: GroupElement) -> bool:
        if (child.inf, child.sup) != (inf, sup):
            raise InvariantError(f"minimal conjugator left the summit class: {child}")
        return True

    return accept


def conjugate_class_ge(
    a: GroupElement,
    m: int,
    *,
    budget: int = DEFAULT_BUDGET,
    parallel: int = 1,
    fast_path: bool = False,
    verify: bool = False,
) -> ConjugacyGraph:
    """All conjugates of a with infimum >= m; m = 0 gives the positive conjugates."""
    ascent = ascend_infimum(a, m)
    if ascent is None:
        logger.debug("summit infimum of %s is below %d", a, m)
        return ConjugacyGraph(a.structure, ClassMode.GE, m)
    graph = ConjugacyGraph.rooted(
        ascent.element, ascent.conjugator, ClassMode.GE, m, verify=verify
    )
    _explore(
        graph,
        lambda v: _candidates(minimal_simple_set_ge(v, m, fast_path=fast_path)),
        _ge_accept(m, verify),
        budget=budget,
        parallel=parallel,
    )
    logger.debug("C^>=%d class of size %d, %d conjugations", m, len(graph), graph.conjugations)
    return graph


def _summit_graph(
    ascent: Ascent, *, budget: int, parallel: int, fast_path: bool, verify: bool
) -> ConjugacyGraph:
    root = ascent.element
    graph = ConjugacyGraph.rooted(root, ascent.conjugator, ClassMode.SUM, verify=verify)
    return _explore(
        graph,
        lambda v: _candidates(minimal_simple_set_sum(v, fast_path=fast_path)),
        _sum_accept(root.inf, root.sup, verify),
        budget=budget,
        parallel=parallel,
    )


def summit_class(
    a: GroupElement,
    *,
    budget: int = DEFAULT_BUDGET,
    parallel: int = 1,
    fast_path: bool = False,
    verify: bool = False,
) -> ConjugacyGraph:
    """The summit class of a: conjugates of minimal canonical length."""
    return _summit_graph(
        ascend_summit(a), budget=budget, parallel=parallel, fast_path=fast_path, verify=verify
    )


def are_conjugate(
    a: GroupElement,
    b: GroupElement,
    *,
    budget: int = DEFAULT_BUDGET,
    parallel: int = 1,
    fast_path: bool = False,
) -> ConjugacyResult:
    """Decide conjugacy by looking up b's summit representative in a's summit class."""
    if a.structure != b.structure:
        raise StructureMismatchError(f"cannot compare {a.structure} with {b.structure}")
    if a.key == b.key:
        return ConjugacyResult(True, identity(a.structure), nodes=1)
    if a.structure.homogeneous and a.word_length != b.word_length:
        return ConjugacyResult(False, None)
    summit_a = ascend_summit(a)
    summit_b = ascend_summit(b)
    if (summit_a.element.inf, summit_a.element.sup) != (summit_b.element.inf, summit_b.element.sup):
        return ConjugacyResult(False, None)
    graph = _summit_graph(
        summit_a, budget=budget, parallel=parallel, fast_path=fast_path, verify=False
    )
    target = summit_b.element.key
    if target not in graph:
        return ConjugacyResult(
            False, None, len(graph), graph.conjugations, graph.search_conjugations
        )
    # a -> summit(a) -> node == summit(b) <- b
    witness = multiply(graph.witness_from_input(target), invert(summit_b.conjugator))
    if conjugate(a, witness).key != b.key:
        raise InvariantError(f"recovered witness {witness} does not conjugate {a} to {b}")
    return ConjugacyResult(
        True, witness, len(graph), graph.conjugations, graph.search_conjugations
    )


def _oracle_simples(a: GroupElement, cap: int | None) -> Sequence[Simple]:
    structure = a.structure
    limit = DEFAULT_CAPS.oracle_cap(structure.monoid) if cap is None else cap
    if structure.n > limit:
        raise CapExceededError(
            f"full simple-set oracle for {structure} exceeds cap n <= {limit}"
        )
    return structure.simples


def elrifai_morton_summit_class(
    a: GroupElement,
    *,
    cap: int | None = None,
    budget: int = DEFAULT_BUDGET,
    parallel: int = 1,
) -> ConjugacyGraph:
    """Summit class by conjugating every node with every simple, 1 and Delta included."""
    simples = _oracle_simples(a, cap)
    ascent = ascend_summit(a)
    root = ascent.element
    graph = ConjugacyGraph.rooted(root, ascent.conjugator, ClassMode.SUM)
    return _explore(
        graph,
        lambda v: (simples, 0),
        lambda child: (child.inf, child.sup) == (root.inf, root.sup),
        budget=budget,
        parallel=parallel,
    )


def elrifai_morton_class_ge(
    a: GroupElement,
    m: int,
    *,
    cap: int | None = None,
    budget: int = DEFAULT_BUDGET,
    parallel: int = 1,
) -> ConjugacyGraph:
    """C^{>=m}(a) by the same full-S closure, with the infimum condition as the filter."""
    simples = _oracle_simples(a, cap)
    ascent = ascend_infimum(a, m)
    if ascent is None:
        return ConjugacyGraph(a.structure, ClassMode.GE, m)
    graph = ConjugacyGraph.rooted(ascent.element, ascent.conjugator, ClassMode.GE, m)
    return _explore(
        graph,
        lambda v: (simples, 0),
        lambda child: child.inf >= m,
        budget=budget,
        parallel=parallel,
    )
