"""Class census of positive elements of fixed word length."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from pydantic import ValidationError

from garside.config import Settings
from garside.conjugacy import ConjugacyGraph, conjugate_class_ge, summit_class
from garside.core.element import ElementKey, GroupElement, from_simple, identity, multiply
from garside.core.encoding import ENCODING_VERSION, encode_element
from garside.core.structure import GarsideStructure
from garside.errors import CacheVersionError, InvariantError
from garside.models.entities import CensusCacheEntry, CensusRow
from garside.monoids import Monoid
from garside.words import element_word

logger = logging.getLogger(__name__)


@dataclass
class CensusResult:
    """A census row with the data behind it."""

    row: CensusRow
    representative: GroupElement
    elements: int
    classes: list[ConjugacyGraph]
    summit_sizes: list[int]


def positive_elements(structure: GarsideStructure, length: int) -> list[GroupElement]:
    """Distinct positive elements of word length `length`, sorted by canonical key.

    Every element of length k+1 is an element of length k times one atom, so
    the set is grown one level at a time with key dedup.
    """
    atoms = [from_simple(structure, atom) for atom in structure.atoms]
    level: dict[ElementKey, GroupElement] = {(0, ()): identity(structure)}
    for _ in range(length):
        nxt: dict[ElementKey, GroupElement] = {}
        for element in level.values():
            for atom in atoms:
                child = multiply(element, atom)
                nxt.setdefault(child.key, child)
        level = nxt
    return [level[key] for key in sorted(level)]


def census_row(structure: GarsideStructure, length: int, settings: Settings) -> CensusResult:
    """Partition W_l into positive conjugacy classes and measure their summit classes."""
    search = settings.search
    elements = positive_elements(structure, length)
    remaining = {e.key for e in elements}
    classes: list[ConjugacyGraph] = []
    for element in elements:
        if element.key not in remaining:
            continue
        graph = conjugate_class_ge(
            element,
            0,
            budget=search.budget,
            parallel=search.parallel,
            fast_path=search.fast_path,
            verify=search.verify_witnesses,
        )
        for key in graph.nodes:
            if key not in remaining:
                raise InvariantError(f"conjugate {key} of {element} is outside W_{length}")
            remaining.discard(key)
        classes.append(graph)
    total = sum(len(graph) for graph in classes)
    if total != len(elements) or remaining:
        raise InvariantError(f"classes cover {total} of {len(elements)} elements of W_{length}")

    def summit_size(graph: ConjugacyGraph) -> int:
        if graph.root is None:
            return 0
        return len(
            summit_class(
                graph.root,
                budget=search.budget,
                fast_path=search.fast_path,
                verify=search.verify_witnesses,
            )
        )

    workers = settings.census.parallel
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            summit_sizes = list(pool.map(summit_size, classes))
    else:
        summit_sizes = [summit_size(graph) for graph in classes]

    max_csum = max(summit_sizes, default=0)
    representative = min(
        (
            element
            for graph, size in zip(classes, summit_sizes, strict=True)
            if size == max_csum
            for element in graph
        ),
        key=lambda e: e.key,
        default=identity(structure),
    )
    row = CensusRow(
        n=structure.n,
        l=length,
        cc_pos=len(classes),
        max_cpos=max((len(graph) for graph in classes), default=0),
        max_csum=max_csum,
        representative=element_word(representative),
    )
    logger.info(
        "census %s l=%d: %d elements, %d classes", structure, length, len(elements), len(classes)
    )
    return CensusResult(row, representative, len(elements), classes, summit_sizes)


def cache_path(cache_dir: Path, monoid: Monoid | str, n: int, length: int) -> Path:
    return Path(cache_dir) / f"{Monoid(monoid)}-n{n}-l{length}.json"


def load_cached_row(path: Path) -> CensusCacheEntry | None:
    """Read a cache entry; None when absent or unreadable."""
    if not path.exists():
        return None
    try:
        entry = CensusCacheEntry.model_validate_json(path.read_text(encoding="utf-8"))
    except (OSError, ValidationError) as e:
        logger.warning("Ignoring unreadable census cache %s: %s", path, e)
        return None
    if entry.encoding_version != ENCODING_VERSION:
        raise CacheVersionError(
            f"{path} has encoding version {entry.encoding_version}, expected {ENCODING_VERSION}"
        )
    return entry


def save_cached_row(path: Path, entry: CensusCacheEntry) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(entry.model_dump_json(indent=2), encoding="utf-8")
        logger.debug("Census cache written to %s", path)
    except OSError as e:
        logger.warning("Could not write census cache %s: %s", path, e)


def run_census(
    structure: GarsideStructure,
    lengths: Iterable[int],
    settings: Settings,
    on_row: Callable[[CensusRow, bool], None] | None = None,
) -> list[CensusRow]:
    """Census rows for each length, served from the cache directory when possible."""
    rows: list[CensusRow] = []
    use_cache = settings.census.use_cache
    for length in sorted(set(lengths)):
        path = cache_path(settings.cache_dir, structure.monoid, structure.n, length)
        entry = None
        if use_cache:
            try:
                entry = load_cached_row(path)
            except CacheVersionError as e:
                logger.warning("%s; recomputing", e)
        if entry is not None:
            logger.info("Census cache hit for %s l=%d", structure, length)
            row, cached = entry.row, True
        else:
            result = census_row(structure, length, settings)
            row, cached = result.row, False
            if use_cache:
                save_cached_row(
                    path,
                    CensusCacheEntry(
                        monoid=Monoid(structure.monoid),
                        row=row,
                        representative_key=encode_element(result.representative).hex(),
                        elements=result.elements,
                    ),
                )
        rows.append(row)
        if on_row is not None:
            on_row(row, cached)
    return rows
