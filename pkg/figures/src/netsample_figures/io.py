"""Readers for the benchmark harness CSV files.

Each reader validates the exact header of its schema and returns typed rows.
Cells left empty by the harness (undefined metrics, missing std) come back
as None; failure rows (metric == "error") are dropped here since nothing in
them can be drawn.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

RAW_HEADER = ("experiment", "method", "size", "replicate", "metric", "value")
SUMMARY_HEADER = (
    "experiment", "method", "size", "metric",
    "mean", "std", "min", "q1", "median", "q3", "max", "count",
)
TEMPORAL_RAW_HEADER = ("method", "replicates_group", "replicate", "t", "metric", "value")
TEMPORAL_SUMMARY_HEADER = (
    "method", "replicates_group", "t", "metric",
    "mean", "std", "min", "q1", "median", "q3", "max", "count",
)

ORIGINAL = "ORIGINAL"
ERROR_METRIC = "error"


class SchemaError(ValueError):
    """The file does not carry the expected harness schema."""


@dataclass(frozen=True)
class RawRow:
    experiment: str
    method: str
    size: int
    replicate: int
    metric: str
    value: float | None


@dataclass(frozen=True)
class SummaryRow:
    experiment: str
    method: str
    size: int
    metric: str
    mean: float
    std: float | None
    min: float
    q1: float
    median: float
    q3: float
    max: float
    count: int


@dataclass(frozen=True)
class TemporalSummaryRow:
    method: str
    group: int
    t: int
    metric: str
    mean: float
    std: float | None
    min: float
    q1: float
    median: float
    q3: float
    max: float
    count: int


def _opt_float(cell: str) -> float | None:
    return None if cell == "" else float(cell)


def peek_header(path: str | Path) -> tuple[str, ...]:
    """First CSV row of a file, used to tell the harness schemas apart."""
    with open(path, newline="", encoding="utf-8") as fh:
        row = next(csv.reader(fh), None)
    return tuple(row) if row else ()


def _read_table(path: str | Path, header: tuple[str, ...]) -> list[list[str]]:
    path = Path(path)
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            got = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file, expected header {','.join(header)}") from None
        if got != list(header):
            missing = [c for c in header if c not in got]
            if missing:
                raise SchemaError(f"{path}: missing column {missing[0]!r}")
            raise SchemaError(
                f"{path}: header mismatch, expected {','.join(header)} got {','.join(got)}"
            )
        rows = [r for r in reader if r]
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    return rows


def read_raw(path: str | Path) -> list[RawRow]:
    out = []
    for r in _read_table(path, RAW_HEADER):
        if r[4] == ERROR_METRIC:
            continue
        out.append(RawRow(r[0], r[1], int(r[2]), int(r[3]), r[4], _opt_float(r[5])))
    return out


def read_summary(path: str | Path) -> list[SummaryRow]:
    return [
        SummaryRow(
            r[0], r[1], int(r[2]), r[3],
            float(r[4]), _opt_float(r[5]),
            float(r[6]), float(r[7]), float(r[8]), float(r[9]), float(r[10]),
            int(r[11]),
        )
        for r in _read_table(path, SUMMARY_HEADER)
    ]


def read_temporal_summary(path: str | Path) -> list[TemporalSummaryRow]:
    return [
        TemporalSummaryRow(
            r[0], int(r[1]), int(r[2]), r[3],
            float(r[4]), _opt_float(r[5]),
            float(r[6]), float(r[7]), float(r[8]), float(r[9]), float(r[10]),
            int(r[11]),
        )
        for r in _read_table(path, TEMPORAL_SUMMARY_HEADER)
    ]


def ordered_unique(items) -> list:
    seen = set()
    out = []
    for item in items:
        if item not in seen:
            seen.add(item)
            out.append(item)
    return out


__all__ = [
    "RAW_HEADER",
    "SUMMARY_HEADER",
    "TEMPORAL_RAW_HEADER",
    "TEMPORAL_SUMMARY_HEADER",
    "ORIGINAL",
    "ERROR_METRIC",
    "SchemaError",
    "RawRow",
    "SummaryRow",
    "TemporalSummaryRow",
    "read_raw",
    "read_summary",
    "read_temporal_summary",
    "peek_header",
    "ordered_unique",
]
