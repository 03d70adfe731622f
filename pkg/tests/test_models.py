"""Tests for Pydantic models."""

import pytest
from pydantic import ValidationError

from garside.core.encoding import ENCODING_VERSION
from garside.models.entities import BenchReport, BenchTrial, CensusCacheEntry, CensusRow
from garside.monoids import Monoid


def test_census_row_bounds() -> None:
    row = CensusRow(n=3, l=4, cc_pos=3, max_cpos=6, max_csum=2, representative="s1^3 s2")
    assert row.csv_values() == ["3", "4", "3", "6", "2", "s1^3 s2"]
    with pytest.raises(ValidationError):
        CensusRow(n=3, l=4, cc_pos=3, max_cpos=2, max_csum=6, representative="x")
    with pytest.raises(ValidationError):
        CensusRow(n=3, l=4, cc_pos=0, max_cpos=0, max_csum=0, representative="1")


def test_empty_length_row_is_allowed() -> None:
    row = CensusRow(n=3, l=0, cc_pos=1, max_cpos=1, max_csum=1, representative="1")
    assert row.l == 0


def test_cache_entry_roundtrip() -> None:
    row = CensusRow(n=4, l=4, cc_pos=7, max_cpos=12, max_csum=4, representative="s1^3 s2")
    entry = CensusCacheEntry(
        monoid=Monoid.ARTIN, row=row, representative_key="00000000", elements=10
    )
    assert entry.encoding_version == ENCODING_VERSION
    loaded = CensusCacheEntry.model_validate_json(entry.model_dump_json())
    assert loaded == entry


def test_bench_per_node_metrics() -> None:
    trials = [
        BenchTrial(
            index=i,
            a="s1",
            b="s2",
            answer=True,
            nodes=nodes,
            minimal_conjugations=conj,
            oracle_conjugations=6 * nodes,
        )
        for i, (nodes, conj) in enumerate([(2, 3), (4, 4)])
    ]
    report = BenchReport(
        monoid=Monoid.ARTIN, n=3, l=1, seed=0, simple_count=6, atom_count=2, trials=trials
    )
    assert report.max_minimal_per_node == 1.5
    assert report.max_oracle_per_node == 6.0
    assert BenchTrial(
        index=0, a="1", b="1", answer=True, nodes=0, minimal_conjugations=0, oracle_conjugations=0
    ).minimal_per_node == 0.0


def test_bench_total_per_node_includes_rho_search() -> None:
    trial = BenchTrial(
        index=0,
        a="s1",
        b="s2",
        answer=True,
        nodes=2,
        minimal_conjugations=2,
        oracle_conjugations=12,
        minimal_search_conjugations=4,
    )
    assert trial.minimal_per_node == 1.0
    assert trial.minimal_total_per_node == 3.0
