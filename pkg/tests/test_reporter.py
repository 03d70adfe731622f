"""Report generation tests."""

import json
from pathlib import Path

import pytest
from rich.console import Console

from garside.models.entities import BenchReport, BenchTrial, CensusRow
from garside.monoids import Monoid
from garside.reporter import (
    bench_json,
    bench_table,
    census_csv,
    census_json,
    census_table,
    save_report,
)

ROWS = [
    CensusRow(n=3, l=4, cc_pos=3, max_cpos=6, max_csum=2, representative="s1^3 s2"),
    CensusRow(n=3, l=5, cc_pos=3, max_cpos=10, max_csum=6, representative="s1^3 s2^2"),
]


def _report() -> BenchReport:
    return BenchReport(
        monoid=Monoid.ARTIN,
        n=3,
        l=4,
        seed=0,
        simple_count=6,
        atom_count=2,
        trials=[
            BenchTrial(
                index=0,
                a="s1^3 s2",
                b="s2 s1^3",
                answer=True,
                nodes=2,
                minimal_conjugations=2,
                oracle_conjugations=12,
                minimal_seconds=0.01,
                oracle_seconds=0.05,
            )
        ],
    )


def test_census_csv() -> None:
    body = census_csv(ROWS)
    assert body.splitlines() == [
        "n,l,cc_pos,max_cpos,max_csum,representative",
        "3,4,3,6,2,s1^3 s2",
        "3,5,3,10,6,s1^3 s2^2",
    ]
    assert "\r" not in body


def test_census_json() -> None:
    data = json.loads(census_json(ROWS))
    assert data[1]["max_cpos"] == 10
    assert data[0]["representative"] == "s1^3 s2"


def test_census_table_renders() -> None:
    console = Console(record=True, width=120)
    console.print(census_table(ROWS))
    assert "s1^3 s2^2" in console.export_text()


def test_bench_json_reproducible_drops_timing() -> None:
    full = json.loads(bench_json(_report()))
    assert full["trials"][0]["minimal_seconds"] == 0.01
    reduced = json.loads(bench_json(_report(), reproducible=True))
    assert "created_at" not in reduced
    assert "oracle_seconds" not in reduced["trials"][0]
    assert reduced["trials"][0]["oracle_conjugations"] == 12


def test_bench_table_renders() -> None:
    console = Console(record=True, width=160)
    console.print(bench_table(_report()))
    text = console.export_text()
    assert "1.00 / 6" in text


def test_save_report_fixes_suffix(tmp_path: Path) -> None:
    path = save_report(census_csv(ROWS), tmp_path / "out" / "census.txt", "csv")
    assert path == tmp_path / "out" / "census.csv"
    assert path.read_text(encoding="utf-8").startswith("n,l,")


def test_save_report_unsupported_format(tmp_path: Path) -> None:
    with pytest.raises(ValueError):
        save_report("x", tmp_path / "report.md", "markdown")
