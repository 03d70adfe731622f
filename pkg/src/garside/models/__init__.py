"""Pydantic models for census rows, cache files and benchmark reports."""

from garside.models.entities import (
    CSV_FIELDS,
    BenchReport,
    BenchTrial,
    CensusCacheEntry,
    CensusRow,
)

__all__ = [
    "CSV_FIELDS",
    "BenchReport",
    "BenchTrial",
    "CensusCacheEntry",
    "CensusRow",
]
