"""Batch rendering of sampling-benchmark CSV output as figures.

Consumes only the CSV files the benchmark harness writes; computes no
statistics of its own beyond histogram binning.
"""

from .io import (
    ORIGINAL,
    RAW_HEADER,
    SUMMARY_HEADER,
    TEMPORAL_RAW_HEADER,
    TEMPORAL_SUMMARY_HEADER,
    RawRow,
    SchemaError,
    SummaryRow,
    TemporalSummaryRow,
    read_raw,
    read_summary,
    read_temporal_summary,
)
from .render import (
    CLT_METRICS,
    HISTOGRAM_BIN_FLOOR,
    KINDS,
    METRIC_LABELS,
    METRIC_ORDER,
    REFERENCE_LABEL,
    FigureSpec,
    build_boxplot,
    build_clt,
    build_convergence,
    build_temporal,
    histogram_bin_count,
    render,
    render_boxplot,
    render_clt,
    render_convergence,
    render_temporal,
    save_figure,
)

__version__ = "0.1.0"

__all__ = [
    "ORIGINAL",
    "RAW_HEADER",
    "SUMMARY_HEADER",
    "TEMPORAL_RAW_HEADER",
    "TEMPORAL_SUMMARY_HEADER",
    "RawRow",
    "SchemaError",
    "SummaryRow",
    "TemporalSummaryRow",
    "read_raw",
    "read_summary",
    "read_temporal_summary",
    "CLT_METRICS",
    "HISTOGRAM_BIN_FLOOR",
    "KINDS",
    "METRIC_LABELS",
    "METRIC_ORDER",
    "REFERENCE_LABEL",
    "FigureSpec",
    "build_boxplot",
    "build_clt",
    "build_convergence",
    "build_temporal",
    "histogram_bin_count",
    "render",
    "render_boxplot",
    "render_clt",
    "render_convergence",
    "render_temporal",
    "save_figure",
    "__version__",
]
