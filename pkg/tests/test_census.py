"""Class census rows against published values, and the census cache."""

import json
from pathlib import Path

import pytest

from garside.census import (
    cache_path,
    census_row,
    load_cached_row,
    positive_elements,
    run_census,
)
from garside.config import Settings
from garside.conjugacy import summit_class
from garside.errors import CacheVersionError
from garside.models.entities import CensusRow
from garside.monoids import ArtinStructure, BKLStructure, get_structure
from garside.words import parse_element

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = json.loads((FIXTURES / "census_artin.json").read_text(encoding="utf-8"))
FAST = {(3, 4), (3, 5), (3, 6), (3, 7), (3, 8), (4, 4), (4, 5)}


def _golden_params() -> list:
    params = []
    for expected in GOLDEN:
        marks = [] if (expected["n"], expected["l"]) in FAST else [pytest.mark.slow]
        params.append(pytest.param(expected, marks=marks, id=f"n{expected['n']}-l{expected['l']}"))
    return params


@pytest.fixture
def settings(tmp_path: Path) -> Settings:
    return Settings(cache_dir=tmp_path / "cache")


def test_positive_elements_counts() -> None:
    b3 = ArtinStructure(3)
    assert len(positive_elements(b3, 0)) == 1
    assert len(positive_elements(b3, 2)) == 4
    # s1 s2 s1 = s2 s1 s2
    assert len(positive_elements(b3, 3)) == 7
    elements = positive_elements(b3, 4)
    assert [e.key for e in elements] == sorted(e.key for e in elements)
    assert all(e.word_length == 4 for e in elements)


@pytest.mark.parametrize("expected", _golden_params())
def test_census_matches_published_rows(expected: dict, settings: Settings) -> None:
    result = census_row(get_structure("artin", expected["n"]), expected["l"], settings)
    row = result.row
    assert (row.n, row.l, row.cc_pos, row.max_cpos, row.max_csum) == (
        expected["n"],
        expected["l"],
        expected["cc_pos"],
        expected["max_cpos"],
        expected["max_csum"],
    )
    representative = parse_element(row.representative, "artin", row.n)
    assert representative.word_length == row.l
    assert len(summit_class(representative)) == row.max_csum


def test_census_classes_partition_the_level(settings: Settings) -> None:
    result = census_row(BKLStructure(3), 4, settings)
    assert sum(len(graph) for graph in result.classes) == result.elements
    assert result.row.cc_pos == len(result.classes)
    assert max(result.summit_sizes) == result.row.max_csum


def test_census_parallel_matches_sequential(settings: Settings) -> None:
    b4 = ArtinStructure(4)
    sequential = census_row(b4, 4, settings)
    threaded = settings.model_copy(
        update={"census": settings.census.model_copy(update={"parallel": 3})}
    )
    assert census_row(b4, 4, threaded).row == sequential.row


def test_run_census_uses_cache(settings: Settings) -> None:
    b3 = ArtinStructure(3)
    seen: list[tuple[int, bool]] = []

    def record(row: CensusRow, cached: bool) -> None:
        seen.append((row.l, cached))

    first = run_census(b3, [4, 5], settings, on_row=record)
    assert seen == [(4, False), (5, False)]
    assert cache_path(settings.cache_dir, "artin", 3, 4).exists()

    seen.clear()
    second = run_census(b3, [5, 4], settings, on_row=record)
    assert seen == [(4, True), (5, True)]
    assert second == first


def test_cache_version_mismatch_recomputes(settings: Settings) -> None:
    b3 = ArtinStructure(3)
    run_census(b3, [4], settings)
    path = cache_path(settings.cache_dir, "artin", 3, 4)
    data = json.loads(path.read_text(encoding="utf-8"))
    data["encoding_version"] = 99
    path.write_text(json.dumps(data), encoding="utf-8")

    with pytest.raises(CacheVersionError):
        load_cached_row(path)
    seen: list[bool] = []
    rows = run_census(b3, [4], settings, on_row=lambda row, cached: seen.append(cached))
    assert seen == [False]
    assert rows[0].max_csum == 2
    entry = load_cached_row(path)
    assert entry is not None and entry.encoding_version != 99


def test_unreadable_cache_is_ignored(settings: Settings) -> None:
    path = cache_path(settings.cache_dir, "bkl", 3, 2)
    path.parent.mkdir(parents=True)
    path.write_text("{not json", encoding="utf-8")
    assert load_cached_row(path) is None


def test_no_cache_writes_nothing(settings: Settings) -> None:
    settings = settings.model_copy(
        update={"census": settings.census.model_copy(update={"use_cache": False})}
    )
    rows = run_census(ArtinStructure(3), [4], settings)
    assert isinstance(rows[0], CensusRow)
    assert not cache_path(settings.cache_dir, "artin", 3, 4).exists()
