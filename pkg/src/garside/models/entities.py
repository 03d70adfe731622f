"""Core data models for census rows, cache files and benchmark reports."""

from __future__ import annotations

from datetime import UTC, datetime
from typing import Any

from pydantic import BaseModel, Field, model_validator

from garside import __version__
from garside.core.encoding import ENCODING_VERSION
from garside.monoids import Monoid

CSV_FIELDS = ("n", "l", "cc_pos", "max_cpos", "max_csum", "representative")


class CensusRow(BaseModel):
    """Class census of the positive elements of word length l."""

    n: int
    l: int  # noqa: E741
    cc_pos: int = Field(description="Conjugacy classes meeting W_l")
    max_cpos: int = Field(description="Largest positive conjugacy class")
    max_csum: int = Field(description="Largest summit class")
    representative: str = Field(description="Word of an element with a largest summit class")

    @model_validator(mode="after")
    def _check_bounds(self) -> CensusRow:
        if self.max_csum > self.max_cpos:
            raise ValueError(f"max_csum {self.max_csum} exceeds max_cpos {self.max_cpos}")
        if self.l >= 1 and self.cc_pos < 1:
            raise ValueError("a nonempty census has at least one class")
        return self

    def csv_values(self) -> list[str]:
        return [str(getattr(self, name)) for name in CSV_FIELDS]


class CensusCacheEntry(BaseModel):
    """On-disk cache for one (monoid, n, l) census row."""

    encoding_version: int = ENCODING_VERSION
    tool_version: str = Field(default_factory=lambda: __version__)
    monoid: Monoid
    row: CensusRow
    representative_key: str = Field(description="Hex of the encoded representative")
    elements: int = Field(description="Distinct elements of W_l")
    created_at: str = Field(
        default_factory=lambda: datetime.now(UTC).isoformat(),
    )


class BenchTrial(BaseModel):
    """One conjugate pair decided by both algorithms.

    `minimal_conjugations` counts the edges tried from each node, at most one per atom.
    `minimal_search_conjugations` counts the extra conjugations rho_x makes while choosing
    those edges. `oracle_conjugations` is nodes times #S.
    """

    index: int
    a: str
    b: str
    answer: bool
    nodes: int
    minimal_conjugations: int
    oracle_conjugations: int
    minimal_search_conjugations: int = 0
    minimal_seconds: float = 0.0
    oracle_seconds: float = 0.0

    @property
    def minimal_per_node(self) -> float:
        return self.minimal_conjugations / self.nodes if self.nodes else 0.0

    @property
    def minimal_total_per_node(self) -> float:
        total = self.minimal_conjugations + self.minimal_search_conjugations
        return total / self.nodes if self.nodes else 0.0

    @property
    def oracle_per_node(self) -> float:
        return self.oracle_conjugations / self.nodes if self.nodes else 0.0


_TIMING_FIELDS = {"minimal_seconds", "oracle_seconds", "created_at", "tool_version"}


class BenchReport(BaseModel):
    """Operation counts of the minimal-set algorithm against the full-S baseline."""

    schema_version: str = "1.0"
    tool_version: str = Field(default_factory=lambda: __version__)
    created_at: str = Field(
        default_factory=lambda: datetime.now(UTC).isoformat(),
    )
    monoid: Monoid
    n: int
    l: int  # noqa: E741
    seed: int
    simple_count: int
    atom_count: int
    trials: list[BenchTrial] = Field(default_factory=list)

    @property
    def max_minimal_per_node(self) -> float:
        return max((t.minimal_per_node for t in self.trials), default=0.0)

    @property
    def max_minimal_total_per_node(self) -> float:
        return max((t.minimal_total_per_node for t in self.trials), default=0.0)

    @property
    def max_oracle_per_node(self) -> float:
        return max((t.oracle_per_node for t in self.trials), default=0.0)

    def reproducible_dump(self) -> dict[str, Any]:
        """The report without timing and provenance fields."""
        data = self.model_dump(mode="json", exclude=_TIMING_FIELDS)
        data["trials"] = [t.model_dump(mode="json", exclude=_TIMING_FIELDS) for t in self.trials]
        return data

    def model_dump_json_pretty(self) -> str:
        return self.model_dump_json(indent=2)
