"""Census and benchmark report rendering."""

import csv
import io
import json
import logging
from collections.abc import Iterable
from pathlib import Path

from rich.table import Table

from garside.models.entities import CSV_FIELDS, BenchReport, CensusRow

logger = logging.getLogger(__name__)


def census_csv(rows: Iterable[CensusRow]) -> str:
    """RFC 4180 CSV with `\\n` line endings and a fixed header."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for row in rows:
        writer.writerow(row.csv_values())
    return buffer.getvalue()


def census_json(rows: Iterable[CensusRow]) -> str:
    return json.dumps([row.model_dump(mode="json") for row in rows], indent=2, ensure_ascii=False)


def census_table(rows: Iterable[CensusRow], title: str = "Class census") -> Table:
    table = Table(title=title)
    table.add_column("n", justify="right")
    table.add_column("l", justify="right")
    table.add_column("CC+", justify="right", style="cyan")
    table.add_column("max C+", justify="right", style="green")
    table.add_column("max Csum", justify="right", style="green")
    table.add_column("representative")
    for row in rows:
        table.add_row(
            str(row.n),
            str(row.l),
            str(row.cc_pos),
            str(row.max_cpos),
            str(row.max_csum),
            row.representative,
        )
    return table


def bench_json(report: BenchReport, *, reproducible: bool = False) -> str:
    """Full report, or only the fields that a seeded rerun reproduces."""
    if reproducible:
        return json.dumps(report.reproducible_dump(), indent=2, ensure_ascii=False)
    return report.model_dump_json_pretty()


def bench_table(report: BenchReport) -> Table:
    table = Table(title=f"{report.monoid}_{report.n}, l={report.l}, seed={report.seed}")
    table.add_column("trial", justify="right")
    table.add_column("nodes", justify="right")
    table.add_column("minimal conj.", justify="right", style="green")
    table.add_column("rho_x conj.", justify="right", style="green")
    table.add_column("full-S conj.", justify="right", style="yellow")
    table.add_column("per node", justify="right")
    table.add_column("minimal s", justify="right", style="dim")
    table.add_column("full-S s", justify="right", style="dim")
    for trial in report.trials:
        table.add_row(
            str(trial.index),
            str(trial.nodes),
            str(trial.minimal_conjugations),
            str(trial.minimal_search_conjugations),
            str(trial.oracle_conjugations),
            f"{trial.minimal_per_node:.2f} / {trial.oracle_per_node:.0f}",
            f"{trial.minimal_seconds:.4f}",
            f"{trial.oracle_seconds:.4f}",
        )
    return table


def save_report(
    report_content: str,
    output_path: Path,
    format_type: str = "json",
) -> Path:
    """Save a report to a file.

    Args:
        report_content: Report body.
        output_path: Output file path.
        format_type: Report format (csv or json).

    Returns:
        The path written, with the suffix matching the format.

    Raises:
        ValueError: If the format is not supported.
    """
    if format_type not in ["csv", "json"]:
        raise ValueError(f"Unsupported format: {format_type}")

    extension = f".{format_type}"
    if not output_path.suffix == extension:
        output_path = output_path.with_suffix(extension)

    try:
        output_path.parent.mkdir(parents=True, exist_ok=True)
        with output_path.open("w", encoding="utf-8", newline="") as f:
            f.write(report_content)
        logger.info("Report saved to %s", output_path)
    except OSError as e:
        logger.error("Error saving report: %s", e)
        raise
    return output_path
