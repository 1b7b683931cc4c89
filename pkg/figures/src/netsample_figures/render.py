"""Figure builders for the four benchmark figure families.

Every number drawn here comes straight out of a CSV cell; the only
statistics computed locally are histogram bin edges and the boxplot
quartiles matplotlib derives from the raw replicate values (drawn with
``whis=(0, 100)`` so they coincide with the summary-file quartiles and
min/max whiskers). Rendering is byte-stable: fixed style, fixed SVG hash
salt, no timestamps in the output metadata.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.ticker import MaxNLocator

from .io import (
    ORIGINAL,
    RAW_HEADER,
    SUMMARY_HEADER,
    TEMPORAL_SUMMARY_HEADER,
    RawRow,
    SchemaError,
    SummaryRow,
    TemporalSummaryRow,
    ordered_unique,
    peek_header,
    read_raw,
    read_summary,
    read_temporal_summary,
)

KINDS = ("convergence", "boxplot", "clt_histogram", "temporal")

METRIC_ORDER = (
    "avg_degree",
    "avg_clustering",
    "global_clustering",
    "lcc_ratio",
    "avg_shortest_path",
    "density",
    "s_metric",
    "edge_percentage",
)

METRIC_LABELS = {
    "avg_degree": "Average degree",
    "avg_clustering": "Average clustering coefficient",
    "global_clustering": "Global clustering coefficient",
    "lcc_ratio": "Largest component ratio",
    "avg_shortest_path": "Average shortest path",
    "density": "Density",
    "s_metric": "s-metric",
    "edge_percentage": "Edge percentage",
}

CLT_METRICS = ("avg_degree", "global_clustering")
HISTOGRAM_BIN_FLOOR = 10

REFERENCE_LABEL = "original network"
SVG_HASHSALT = "netsample-figures"

_STYLE = {
    "figure.dpi": 100,
    "savefig.dpi": 150,
    "font.family": "DejaVu Sans",
    "font.size": 9,
    "axes.titlesize": 10,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "grid.linewidth": 0.5,
    "lines.linewidth": 1.2,
    "svg.hashsalt": SVG_HASHSALT,
    "svg.fonttype": "path",
    "path.simplify": False,
}


@dataclass(frozen=True)
class FigureSpec:
    """One figure to render: input CSVs, figure family, output path."""

    kind: str
    inputs: tuple[Path, ...] = field(default=())
    out: Path = Path("figure.png")
    reference: bool = True

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown figure kind {self.kind!r}, expected one of {KINDS}")
        object.__setattr__(self, "inputs", tuple(Path(p) for p in self.inputs))
        object.__setattr__(self, "out", Path(self.out))
        if not self.inputs:
            raise ValueError("at least one input CSV is required")
        for p in self.inputs:
            if not p.is_file():
                raise FileNotFoundError(f"input CSV not found: {p}")


def _ordered_metrics(found: Sequence[str]) -> list[str]:
    found = ordered_unique(found)
    known = [m for m in METRIC_ORDER if m in found]
    return known + [m for m in found if m not in METRIC_ORDER]


def _metric_label(metric: str) -> str:
    return METRIC_LABELS.get(metric, metric)


def _check_requested(metrics, present) -> list[str]:
    missing = [m for m in metrics if m not in present]
    if missing:
        raise SchemaError(f"no rows for metric {missing[0]!r}")
    return list(metrics)


def _panel_grid(n: int, panel_w: float = 4.2, panel_h: float = 3.2):
    ncols = 1 if n == 1 else 2 if n <= 4 else 3
    nrows = math.ceil(n / ncols)
    fig, axes = plt.subplots(
        nrows, ncols, figsize=(panel_w * ncols, panel_h * nrows), squeeze=False
    )
    flat = axes.ravel()
    for ax in flat[n:]:
        ax.set_visible(False)
    return fig, flat[:n]


def _figure_legend(fig, axes):
    seen: dict[str, object] = {}
    for ax in axes:
        for handle, label in zip(*ax.get_legend_handles_labels()):
            seen.setdefault(label, handle)
    if seen:
        fig.legend(
            seen.values(),
            seen.keys(),
            loc="upper center",
            ncol=min(len(seen), 5),
            frameon=False,
        )
    fig.tight_layout(rect=(0, 0, 1, 0.92))


def build_convergence(
    rows: Sequence[SummaryRow],
    *,
    metrics: Sequence[str] | None = None,
    reference: bool = True,
):
    """Mean metric value per method as a function of sample size."""
    sampled = [r for r in rows if r.method != ORIGINAL]
    ref_vals = {r.metric: r.mean for r in rows if r.method == ORIGINAL}
    present = _ordered_metrics([r.metric for r in sampled])
    metrics = _check_requested(metrics, present) if metrics is not None else present
    if not metrics:
        raise SchemaError("no sampled-method rows to plot")
    methods = ordered_unique(r.method for r in sampled)
    colors = {m: f"C{i}" for i, m in enumerate(methods)}
    if reference and not ref_vals:
        warnings.warn("no ORIGINAL rows in summary; reference lines omitted")

    with matplotlib.rc_context(_STYLE):
        fig, axes = _panel_grid(len(metrics))
        references: dict[str, float] = {}
        for ax, metric in zip(axes, metrics):
            for method in methods:
                pts = sorted(
                    (r.size, r.mean)
                    for r in sampled
                    if r.method == method and r.metric == metric
                )
                if not pts:
                    continue
                xs, ys = zip(*pts)
                ax.plot(xs, ys, marker="o", markersize=3, color=colors[method], label=method)
            if reference and metric in ref_vals:
                ax.axhline(
                    ref_vals[metric],
                    color="black",
                    linestyle="--",
                    linewidth=1.0,
                    label=REFERENCE_LABEL,
                )
                references[metric] = ref_vals[metric]
            ax.set_title(_metric_label(metric))
            ax.set_xlabel("sample size (nodes)")
        _figure_legend(fig, axes)
    fig.netsample_artists = {"kind": "convergence", "references": references}
    return fig


def build_boxplot(
    rows: Sequence[RawRow],
    *,
    metrics: Sequence[str] | None = None,
    reference: bool = True,
):
    """Replicate distribution per method, one panel per metric.

    Whiskers span the full range (``whis=(0, 100)``) so box and whisker
    positions coincide with the q1/median/q3/min/max columns the harness
    writes to the summary file.
    """
    sampled = [r for r in rows if r.method != ORIGINAL and r.value is not None]
    ref_vals = {r.metric: r.value for r in rows if r.method == ORIGINAL and r.value is not None}
    present = _ordered_metrics([r.metric for r in sampled])
    metrics = _check_requested(metrics, present) if metrics is not None else present
    if not metrics:
        raise SchemaError("no sampled-method rows to plot")
    methods = ordered_unique(r.method for r in sampled)
    if reference and not ref_vals:
        warnings.warn("no ORIGINAL rows; reference lines omitted")

    with matplotlib.rc_context(_STYLE):
        fig, axes = _panel_grid(len(metrics))
        panels: dict[str, dict] = {}
        for ax, metric in zip(axes, metrics):
            cols = [
                (m, [r.value for r in sampled if r.method == m and r.metric == metric])
                for m in methods
            ]
            cols = [(m, vals) for m, vals in cols if vals]
            data = [vals for _, vals in cols]
            names = [m for m, _ in cols]
            bxp = ax.boxplot(data, whis=(0, 100), showfliers=False, widths=0.6)
            ax.set_xticks(range(1, len(names) + 1))
            ax.set_xticklabels(names, rotation=45, ha="right")
            panels[metric] = {"methods": names, "bxp": bxp}
            if reference and metric in ref_vals:
                ax.axhline(
                    ref_vals[metric],
                    color="black",
                    linestyle="--",
                    linewidth=1.0,
                    label=REFERENCE_LABEL,
                )
                panels[metric]["reference"] = ref_vals[metric]
            ax.set_title(_metric_label(metric))
        _figure_legend(fig, axes)
    fig.netsample_artists = {"kind": "boxplot", "panels": panels}
    return fig


def _normal_pdf(xs: np.ndarray, mean: float, std: float) -> np.ndarray:
    return np.exp(-0.5 * ((xs - mean) / std) ** 2) / (std * math.sqrt(2.0 * math.pi))


def histogram_bin_count(values: Sequence[float]) -> int:
    """Freedman-Diaconis bin count, floored to keep sparse panels readable."""
    edges = np.histogram_bin_edges(np.asarray(values, dtype=float), bins="fd")
    return max(HISTOGRAM_BIN_FLOOR, len(edges) - 1)


def build_clt(raw: Sequence[RawRow], summary: Sequence[SummaryRow]):
    """Histogram of replicate metric values per sample-count group.

    Each panel gets a normal-density overlay parameterized by the group's
    mean and std exactly as recorded in the summary file; groups whose
    summary carries no std (single replicate) get no overlay.
    """
    sampled = [
        r
        for r in raw
        if r.method != ORIGINAL and r.metric in CLT_METRICS and r.value is not None
    ]
    if not sampled:
        raise SchemaError(f"no rows for metrics {CLT_METRICS} to plot")
    metrics = [m for m in CLT_METRICS if any(r.metric == m for r in sampled)]
    groups = ordered_unique(r.size for r in sampled)
    stats = {
        (r.metric, r.size): (r.mean, r.std)
        for r in summary
        if r.method != ORIGINAL and r.metric in CLT_METRICS
    }

    with matplotlib.rc_context(_STYLE):
        nrows, ncols = len(metrics), len(groups)
        fig, axes = plt.subplots(
            nrows, ncols, figsize=(3.4 * ncols, 2.8 * nrows), squeeze=False
        )
        panels: dict[tuple[str, int], dict] = {}
        for i, metric in enumerate(metrics):
            for j, group in enumerate(groups):
                ax = axes[i][j]
                values = [
                    r.value for r in sampled if r.metric == metric and r.size == group
                ]
                counts, edges, _ = ax.hist(
                    values,
                    bins=histogram_bin_count(values),
                    density=True,
                    color="tab:blue",
                    alpha=0.7,
                    edgecolor="white",
                    linewidth=0.4,
                )
                panel = {"counts": counts, "edges": edges, "overlay": None}
                key = (metric, group)
                if key not in stats:
                    warnings.warn(
                        f"no summary row for metric {metric!r} group {group}; overlay omitted"
                    )
                else:
                    mean, std = stats[key]
                    if std is None or std == 0.0:
                        warnings.warn(
                            f"summary std missing for metric {metric!r} group {group}; "
                            "overlay omitted"
                        )
                    else:
                        xs = np.linspace(edges[0], edges[-1], 200)
                        (line,) = ax.plot(
                            xs, _normal_pdf(xs, mean, std), color="tab:orange", linewidth=1.5
                        )
                        panel["overlay"] = line
                        panel["mean"] = mean
                        panel["std"] = std
                panels[key] = panel
                if i == 0:
                    ax.set_title(f"{group} samples")
                if j == 0:
                    ax.set_ylabel(f"{_metric_label(metric)}\ndensity")
        fig.tight_layout()
    fig.netsample_artists = {"kind": "clt_histogram", "panels": panels}
    return fig


def build_temporal(
    rows: Sequence[TemporalSummaryRow],
    *,
    metrics: Sequence[str] | None = None,
    reference: bool = True,
):
    """Mean metric trajectory over snapshots per method and replicate group.

    Series whose summary rows carry a std get a +-1 std band; single
    replicate series (count 1, empty std) are drawn without a band. The
    unsampled multiplex trajectory is the blue reference line.
    """
    sampled = [r for r in rows if r.method != ORIGINAL]
    original = [r for r in rows if r.method == ORIGINAL]
    present = _ordered_metrics([r.metric for r in sampled])
    metrics = _check_requested(metrics, present) if metrics is not None else present
    if not metrics:
        raise SchemaError("no sampled-method rows to plot")
    series_keys = ordered_unique((r.method, r.group) for r in sampled)
    colors = {key: f"C{i if i < 10 else i % 10}" for i, key in enumerate(series_keys)}
    if reference and not original:
        warnings.warn("no ORIGINAL rows; reference trajectory omitted")

    with matplotlib.rc_context(_STYLE):
        fig, axes = _panel_grid(len(metrics))
        panels: dict[str, dict] = {}
        for ax, metric in zip(axes, metrics):
            panel: dict = {"series": {}, "reference": None}
            for method, group in series_keys:
                pts = sorted(
                    (r.t, r.mean, r.std)
                    for r in sampled
                    if r.method == method and r.group == group and r.metric == metric
                )
                if not pts:
                    continue
                ts = [p[0] for p in pts]
                means = [p[1] for p in pts]
                stds = [p[2] for p in pts]
                color = colors[(method, group)]
                (line,) = ax.plot(
                    ts, means, marker="o", markersize=3, color=color,
                    label=f"{method} (n={group})",
                )
                banded = all(s is not None for s in stds)
                if banded:
                    ax.fill_between(
                        ts,
                        [m - s for m, s in zip(means, stds)],
                        [m + s for m, s in zip(means, stds)],
                        color=color,
                        alpha=0.15,
                        linewidth=0,
                    )
                panel["series"][(method, group)] = {"line": line, "band": banded}
            if reference and original:
                pts = sorted((r.t, r.mean) for r in original if r.metric == metric)
                if pts:
                    ts, means = zip(*pts)
                    (ref_line,) = ax.plot(
                        ts, means, color="tab:blue", linewidth=2.0, label=REFERENCE_LABEL
                    )
                    panel["reference"] = ref_line
            ax.set_title(_metric_label(metric))
            ax.set_xlabel("snapshot")
            ax.xaxis.set_major_locator(MaxNLocator(integer=True))
            panels[metric] = panel
        _figure_legend(fig, axes)
    fig.netsample_artists = {"kind": "temporal", "panels": panels}
    return fig


def save_figure(fig, out: str | Path) -> tuple[Path, Path]:
    """Write the figure as a PNG/SVG pair next to each other.

    Output carries no timestamps and uses a fixed SVG hash salt, so
    re-rendering identical CSV input reproduces identical bytes.
    """
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    png = out.with_suffix(".png")
    svg = out.with_suffix(".svg")
    with matplotlib.rc_context(_STYLE):
        fig.savefig(png, format="png", metadata={"Software": "netsample-figures"})
        fig.savefig(svg, format="svg", metadata={"Date": None})
    return png, svg


def _classify_clt_inputs(spec: FigureSpec) -> tuple[Path, Path]:
    raw_path = summary_path = None
    for p in spec.inputs:
        header = peek_header(p)
        if header == RAW_HEADER:
            raw_path = p
        elif header == SUMMARY_HEADER:
            summary_path = p
    if raw_path is None or summary_path is None:
        raise SchemaError(
            "clt_histogram needs one raw CSV and one summary CSV "
            f"(got headers {[','.join(peek_header(p)) for p in spec.inputs]})"
        )
    return raw_path, summary_path


def render_convergence(spec: FigureSpec) -> tuple[Path, Path]:
    fig = build_convergence(read_summary(spec.inputs[0]), reference=spec.reference)
    try:
        return save_figure(fig, spec.out)
    finally:
        plt.close(fig)


def render_boxplot(spec: FigureSpec) -> tuple[Path, Path]:
    fig = build_boxplot(read_raw(spec.inputs[0]), reference=spec.reference)
    try:
        return save_figure(fig, spec.out)
    finally:
        plt.close(fig)


def render_clt(spec: FigureSpec) -> tuple[Path, Path]:
    raw_path, summary_path = _classify_clt_inputs(spec)
    fig = build_clt(read_raw(raw_path), read_summary(summary_path))
    try:
        return save_figure(fig, spec.out)
    finally:
        plt.close(fig)


def render_temporal(spec: FigureSpec) -> tuple[Path, Path]:
    fig = build_temporal(read_temporal_summary(spec.inputs[0]), reference=spec.reference)
    try:
        return save_figure(fig, spec.out)
    finally:
        plt.close(fig)


_RENDERERS = {
    "convergence": render_convergence,
    "boxplot": render_boxplot,
    "clt_histogram": render_clt,
    "temporal": render_temporal,
}


def render(spec: FigureSpec) -> tuple[Path, Path]:
    """Render one figure per its spec and return the (png, svg) paths."""
    return _RENDERERS[spec.kind](spec)


__all__ = [
    "KINDS",
    "METRIC_ORDER",
    "METRIC_LABELS",
    "CLT_METRICS",
    "HISTOGRAM_BIN_FLOOR",
    "REFERENCE_LABEL",
    "FigureSpec",
    "histogram_bin_count",
    "build_convergence",
    "build_boxplot",
    "build_clt",
    "build_temporal",
    "save_figure",
    "render_convergence",
    "render_boxplot",
    "render_clt",
    "render_temporal",
    "render",
]
