"""Experiment orchestration: replicate sweeps, deterministic seeding, replicate
statistics, and CSV emission for the four benchmark experiments.

All randomness flows through ``derive_seed``, so a config (including its
``master_seed``) pins every byte of the output CSVs. Raw rows are written
in deterministic (method, size, replicate) order; summary rows aggregate
them with n-1 standard deviations and linear-interpolation quartiles.
"""

from __future__ import annotations

import csv
import hashlib
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import datasets
from .graph import Graph, build_graph, induced_subgraph
from .ingest import ParseError, SECONDS_PER_DAY, load_multiplex, load_static_edgelist
from .metrics import (
    METRIC_NAMES,
    UndefinedMetricError,
    average_clustering,
    average_degree,
    full_report,
    global_clustering,
)
from .sampling import METHODS, SamplingError, draw_sample

EXPERIMENT_KINDS = ("convergence", "boxplot", "clt", "temporal")
STATIC_METHODS = ("UNS", "WNS", "UES", "IES", "RWS", "MHRWS", "SS", "BFS")

ORIGINAL = "ORIGINAL"
ERROR_METRIC = "error"

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
DEVIATION_HEADER = ("snapshot", "expected_edges", "actual_edges", "deviation", "relative_deviation")

TEMPORAL_METRICS = ("avg_degree", "avg_clustering", "global_clustering", "edge_percentage")


class ConfigError(ValueError):
    """Bad experiment configuration (unknown key, unparsable value, bad range)."""


class ExperimentError(RuntimeError):
    """The experiment could not run to completion."""


@dataclass(frozen=True)
class ExperimentConfig:
    """One experiment cell sweep. Defaults reproduce the benchmark setup."""

    experiment: str
    dataset: str
    methods: tuple[str, ...]
    size_grid: tuple[int, ...]
    replicates: int = 100
    sample_counts: tuple[int, ...] = ()
    master_seed: int = 42
    output_dir: str = "results"
    bin_days: int = 40
    expected_snapshot_edges: tuple[int, ...] = ()

    def validate(self) -> None:
        if self.experiment not in EXPERIMENT_KINDS:
            raise ConfigError(f"unknown experiment {self.experiment!r}")
        if not self.dataset:
            raise ConfigError("dataset path is required")
        unknown = [m for m in self.methods if m not in METHODS]
        if unknown:
            raise ConfigError(f"unknown methods: {', '.join(unknown)}")
        if not self.methods:
            raise ConfigError("at least one method is required")
        if not self.size_grid or any(s < 1 for s in self.size_grid):
            raise ConfigError("size_grid must hold positive node budgets")
        if self.replicates < 1:
            raise ConfigError("replicates must be >= 1")
        if self.experiment in ("clt", "temporal") and not self.sample_counts:
            raise ConfigError(f"{self.experiment} needs sample_counts")
        if any(c < 1 for c in self.sample_counts):
            raise ConfigError("sample_counts must be positive")
        if self.bin_days < 1:
            raise ConfigError("bin_days must be >= 1")


_DEFAULTS = {
    "convergence": dict(
        methods=STATIC_METHODS,
        size_grid=(250, 500, 1000, 1500, 2000, 2500, 3000, 4000),
        replicates=100,
    ),
    "boxplot": dict(methods=STATIC_METHODS, size_grid=(1000,), replicates=100),
    "clt": dict(methods=("UNS",), size_grid=(2500,), sample_counts=(10, 50, 100, 500, 1000)),
    "temporal": dict(
        methods=("UNS", "PRS"),
        size_grid=(30,),
        sample_counts=(10, 50, 100, 500),
        expected_snapshot_edges=datasets.COLLEGEMSG_SNAPSHOT_EDGES,
    ),
}


def default_config(experiment: str, dataset: str, output_dir: str = "results") -> ExperimentConfig:
    if experiment not in _DEFAULTS:
        raise ConfigError(f"unknown experiment {experiment!r}")
    return ExperimentConfig(
        experiment=experiment, dataset=dataset, output_dir=output_dir, **_DEFAULTS[experiment]
    )


def _parse_int_list(value: str) -> tuple[int, ...]:
    value = value.strip()
    if not value:
        return ()
    return tuple(int(tok) for tok in value.replace(",", " ").split())


_CONFIG_PARSERS = {
    "experiment": str,
    "dataset": str,
    "methods": lambda v: tuple(tok.upper() for tok in v.replace(",", " ").split()),
    "size_grid": _parse_int_list,
    "replicates": int,
    "sample_counts": _parse_int_list,
    "master_seed": int,
    "output_dir": str,
    "bin_days": int,
    "expected_snapshot_edges": _parse_int_list,
}


def load_config(path: str | Path, experiment: str | None = None) -> ExperimentConfig:
    """Parse a flat ``key = value`` config file ('#' starts a comment).

    Unset keys fall back to the defaults of the experiment kind, which may
    come from the file's ``experiment`` key or the ``experiment`` argument
    (the argument wins).
    """
    raw: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.split("#", 1)[0].strip()
            if not stripped:
                continue
            if "=" not in stripped:
                raise ConfigError(f"line {lineno}: expected 'key = value', got {stripped!r}")
            key, value = (part.strip() for part in stripped.split("=", 1))
            if key not in _CONFIG_PARSERS:
                raise ConfigError(f"line {lineno}: unknown key {key!r}")
            raw[key] = value

    kind = experiment or raw.get("experiment")
    if kind is None:
        raise ConfigError("experiment kind missing (set it in the file or on the command line)")
    if kind not in _DEFAULTS:
        raise ConfigError(f"unknown experiment {kind!r}")
    if "dataset" not in raw:
        raise ConfigError("dataset path is required")

    cfg = default_config(kind, raw.pop("dataset"))
    raw.pop("experiment", None)
    updates = {}
    for key, value in raw.items():
        try:
            updates[key] = _CONFIG_PARSERS[key](value)
        except ValueError as exc:
            raise ConfigError(f"bad value for {key}: {value!r} ({exc})") from None
    cfg = replace(cfg, **updates)
    cfg.validate()
    return cfg


def derive_seed(master_seed: int, method: str, size: int, replicate_index: int) -> int:
    """Stable 64-bit replicate seed.

    SHA-256 over ``"netsample|{master}|{method}|{size}|{replicate}"``, first
    8 bytes big-endian. ``size`` is the cell's grid coordinate: the node
    budget for size sweeps, the replicate-count group for clt/temporal.
    """
    payload = f"netsample|{master_seed}|{method}|{size}|{replicate_index}".encode()
    return int.from_bytes(hashlib.sha256(payload).digest()[:8], "big")


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def _write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) if not isinstance(v, str) else v for v in row])


@dataclass(frozen=True)
class SummaryRow:
    key: tuple
    mean: float
    std: float | None
    q: tuple[float, float, float, float, float]  # min, q1, median, q3, max
    count: int


def summarize(groups: dict[tuple, list[float]]) -> list[SummaryRow]:
    """Mean, n-1 std, and five-number summary per group, insertion order."""
    out = []
    for key, values in groups.items():
        if not values:
            continue
        arr = np.asarray(values, dtype=np.float64)
        std = float(arr.std(ddof=1)) if len(arr) > 1 else None
        qs = np.percentile(arr, [0, 25, 50, 75, 100])
        out.append(SummaryRow(key, float(arr.mean()), std, tuple(float(x) for x in qs), len(arr)))
    return out


def _group_static_rows(rows: list[tuple]) -> dict[tuple, list[float]]:
    groups: dict[tuple, list[float]] = {}
    for experiment, method, size, _replicate, metric, value in rows:
        if metric == ERROR_METRIC or value is None:
            continue
        groups.setdefault((experiment, method, size, metric), []).append(float(value))
    return groups


def _static_summary_rows(rows: list[tuple]) -> list[tuple]:
    return [
        (*s.key, s.mean, s.std, *s.q, s.count)
        for s in summarize(_group_static_rows(rows))
    ]


def load_static_graph(path: str | Path) -> Graph:
    return build_graph(load_static_edgelist(path))


def _report_rows(experiment: str, method: str, size: int, replicate: int, g: Graph) -> list[tuple]:
    report = full_report(g)
    return [
        (experiment, method, size, replicate, name, value)
        for name, value in report.as_dict().items()
    ]


def _sanitize(message: str) -> str:
    return message.replace(",", ";").replace("\n", " ")


def _run_static_sweep(cfg: ExperimentConfig) -> dict[str, Path]:
    g = load_static_graph(cfg.dataset)
    rows: list[tuple] = _report_rows(cfg.experiment, ORIGINAL, g.node_count, 0, g)
    for method in cfg.methods:
        for size in cfg.size_grid:
            for rep in range(cfg.replicates):
                seed = derive_seed(cfg.master_seed, method, size, rep)
                try:
                    sample = draw_sample(g, method, size, seed)
                except SamplingError as exc:
                    # record the failed cell once and move on
                    rows.append((cfg.experiment, method, size, rep, ERROR_METRIC, _sanitize(str(exc))))
                    break
                rows.extend(_report_rows(cfg.experiment, method, size, rep, sample.subgraph))
    return _write_static_outputs(cfg, rows)


def _write_static_outputs(cfg: ExperimentConfig, rows: list[tuple]) -> dict[str, Path]:
    out = Path(cfg.output_dir)
    raw_path = out / f"{cfg.experiment}_raw.csv"
    summary_path = out / f"{cfg.experiment}_summary.csv"
    _write_csv(raw_path, RAW_HEADER, rows)
    numeric = [r for r in rows if r[4] != ERROR_METRIC]
    _write_csv(summary_path, SUMMARY_HEADER, _static_summary_rows(numeric))
    return {"raw": raw_path, "summary": summary_path}


def run_convergence(cfg: ExperimentConfig) -> dict[str, Path]:
    """Replicate sweep over methods x size grid on the static network."""
    return _run_static_sweep(cfg)


def run_boxplot(cfg: ExperimentConfig) -> dict[str, Path]:
    """Fixed-size replicate comparison across methods (raw rows feed boxplots)."""
    return _run_static_sweep(cfg)


def run_clt(cfg: ExperimentConfig) -> dict[str, Path]:
    """Repeated fixed-size UNS sampling at several replicate counts.

    The ``size`` column of the output carries the replicate-count group;
    the node budget is ``size_grid[0]`` throughout.
    """
    g = load_static_graph(cfg.dataset)
    budget = cfg.size_grid[0]
    method = cfg.methods[0]
    rows: list[tuple] = [
        ("clt", ORIGINAL, g.node_count, 0, "avg_degree", average_degree(g)),
        ("clt", ORIGINAL, g.node_count, 0, "global_clustering", global_clustering(g)),
    ]
    for group in cfg.sample_counts:
        for rep in range(group):
            seed = derive_seed(cfg.master_seed, method, group, rep)
            try:
                sample = draw_sample(g, method, budget, seed)
            except SamplingError as exc:
                rows.append(("clt", method, group, rep, ERROR_METRIC, _sanitize(str(exc))))
                break
            sub = sample.subgraph
            rows.append(("clt", method, group, rep, "avg_degree", average_degree(sub)))
            rows.append(("clt", method, group, rep, "global_clustering", global_clustering(sub)))
    return _write_static_outputs(cfg, rows)


def _snapshot_metric_rows(
    method: str, group: int, rep: int, series: list[Graph]
) -> list[tuple]:
    rows = []
    first_edges = series[0].edge_count
    for t, snap in enumerate(series):
        for metric, fn in (
            ("avg_degree", average_degree),
            ("avg_clustering", average_clustering),
            ("global_clustering", global_clustering),
        ):
            try:
                value = fn(snap)
            except UndefinedMetricError:
                value = None
            rows.append((method, group, rep, t, metric, value))
        ratio = snap.edge_count / first_edges if first_edges > 0 else None
        rows.append((method, group, rep, t, "edge_percentage", ratio))
    return rows


def run_temporal(cfg: ExperimentConfig) -> dict[str, Path]:
    """Sample the first snapshot, induce the same nodes on every snapshot.

    Emits raw per-replicate trajectories, their summary, and a deviation
    report comparing snapshot edge counts against the expected reference
    (when configured).
    """
    multiplex = load_multiplex(cfg.dataset, cfg.bin_days * SECONDS_PER_DAY)
    first = multiplex.snapshots[0]
    budget = cfg.size_grid[0]

    rows: list[tuple] = _snapshot_metric_rows(ORIGINAL, 0, 0, multiplex.snapshots)
    for method in cfg.methods:
        for group in cfg.sample_counts:
            for rep in range(group):
                seed = derive_seed(cfg.master_seed, method, group, rep)
                try:
                    sample = draw_sample(first, method, budget, seed)
                except SamplingError as exc:
                    rows.append((method, group, rep, 0, ERROR_METRIC, _sanitize(str(exc))))
                    break
                ids = sample.node_ids_in(first)
                series = [induced_subgraph(snap, ids) for snap in multiplex.snapshots]
                rows.extend(_snapshot_metric_rows(method, group, rep, series))

    out = Path(cfg.output_dir)
    raw_path = out / "temporal_raw.csv"
    _write_csv(raw_path, TEMPORAL_RAW_HEADER, rows)

    groups: dict[tuple, list[float]] = {}
    for method, group, _rep, t, metric, value in rows:
        if metric == ERROR_METRIC or value is None:
            continue
        groups.setdefault((method, group, t, metric), []).append(float(value))
    summary_path = out / "temporal_summary.csv"
    _write_csv(
        summary_path,
        TEMPORAL_SUMMARY_HEADER,
        [(*s.key, s.mean, s.std, *s.q, s.count) for s in summarize(groups)],
    )

    outputs = {"raw": raw_path, "summary": summary_path}
    if cfg.expected_snapshot_edges:
        outputs["deviation"] = _write_deviation_report(out, multiplex.edge_counts(), cfg.expected_snapshot_edges)
    return outputs


def snapshot_deviations(
    actual: Sequence[int], expected: Sequence[int]
) -> list[tuple[int, int, int, int, float]]:
    """Per-snapshot (t, expected, actual, deviation, relative deviation)."""
    rows = []
    for t in range(max(len(actual), len(expected))):
        exp = expected[t] if t < len(expected) else 0
        act = actual[t] if t < len(actual) else 0
        diff = act - exp
        rel = abs(diff) / exp if exp else float("inf")
        rows.append((t, exp, act, diff, rel))
    return rows


def _write_deviation_report(out: Path, actual: Sequence[int], expected: Sequence[int]) -> Path:
    path = out / "temporal_deviation_report.csv"
    _write_csv(path, DEVIATION_HEADER, snapshot_deviations(actual, expected))
    return path


_RUNNERS = {
    "convergence": run_convergence,
    "boxplot": run_boxplot,
    "clt": run_clt,
    "temporal": run_temporal,
}


def run_experiment(cfg: ExperimentConfig) -> dict[str, Path]:
    cfg.validate()
    try:
        return _RUNNERS[cfg.experiment](cfg)
    except (SamplingError, UndefinedMetricError, ValueError) as exc:
        if isinstance(exc, (ConfigError, ParseError)):
            raise  # bad config / bad dataset keep their own exit codes
        raise ExperimentError(str(exc)) from exc


__all__ = [
    "EXPERIMENT_KINDS",
    "STATIC_METHODS",
    "ORIGINAL",
    "ERROR_METRIC",
    "RAW_HEADER",
    "SUMMARY_HEADER",
    "TEMPORAL_RAW_HEADER",
    "TEMPORAL_SUMMARY_HEADER",
    "DEVIATION_HEADER",
    "ConfigError",
    "ExperimentError",
    "ExperimentConfig",
    "SummaryRow",
    "default_config",
    "load_config",
    "load_static_graph",
    "derive_seed",
    "summarize",
    "snapshot_deviations",
    "run_convergence",
    "run_boxplot",
    "run_clt",
    "run_temporal",
    "run_experiment",
]
