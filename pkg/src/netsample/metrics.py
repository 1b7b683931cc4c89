"""Structural metrics: degree, clustering (local and global), component size,
shortest paths, density, s-metric, and the per-snapshot edge ratio.

Metrics that are undefined for a given graph (empty graph, degenerate
component) surface as ``UndefinedMetricError`` from the individual
functions and as ``None`` fields in ``full_report``, never as silent zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.sparse import csgraph

from .graph import Graph, connected_components, induced_subgraph
from .ingest import TemporalMultiplexGraph

# Fixed ordering for CSV emission.
METRIC_NAMES = (
    "avg_degree",
    "avg_clustering",
    "global_clustering",
    "lcc_ratio",
    "avg_shortest_path",
    "density",
    "s_metric",
)

_APSP_CHUNK = 256


class UndefinedMetricError(ValueError):
    """The metric has no value on this graph (e.g. empty graph)."""


@dataclass(frozen=True)
class MetricReport:
    """One graph's metric vector; None marks an undefined metric."""

    avg_degree: float | None
    avg_clustering: float | None
    global_clustering: float | None
    lcc_ratio: float | None
    avg_shortest_path: float | None
    density: float | None
    s_metric: int | None

    def as_dict(self) -> dict[str, float | int | None]:
        return {name: getattr(self, name) for name in METRIC_NAMES}


def average_degree(g: Graph) -> float:
    """Mean node degree, 2|E| / n."""
    if g.node_count == 0:
        raise UndefinedMetricError("average degree of an empty graph")
    return 2.0 * g.edge_count / g.node_count


def _closed_two_paths(g: Graph) -> np.ndarray:
    """Per node: number of (ordered) neighbor pairs that are connected.

    Entry i equals 2 * triangles through i; computed as the row sums of
    (A @ A) masked to existing edges.
    """
    adj = g.to_sparse()
    closed = (adj @ adj).multiply(adj)
    return np.asarray(closed.sum(axis=1)).ravel()


def average_clustering(g: Graph) -> float:
    """Mean local clustering; nodes of degree < 2 contribute 0."""
    if g.node_count == 0:
        raise UndefinedMetricError("average clustering of an empty graph")
    if g.edge_count == 0:
        return 0.0
    deg = g.degrees.astype(np.float64)
    pairs = deg * (deg - 1.0)
    local = np.zeros(g.node_count)
    mask = pairs > 0
    local[mask] = _closed_two_paths(g)[mask] / pairs[mask]
    return float(local.mean())


def global_clustering(g: Graph) -> float:
    """Transitivity: 3 * triangles / connected triples, 0 when no triples."""
    if g.node_count == 0:
        raise UndefinedMetricError("global clustering of an empty graph")
    if g.edge_count == 0:
        return 0.0
    deg = g.degrees.astype(np.float64)
    triples2 = (deg * (deg - 1.0)).sum()  # 2 * number of connected triples
    if triples2 == 0:
        return 0.0
    return float(_closed_two_paths(g).sum() / triples2)


def largest_component_ratio(g: Graph) -> float:
    """Largest connected component size as a fraction of all nodes."""
    if g.node_count == 0:
        raise UndefinedMetricError("component ratio of an empty graph")
    return float(connected_components(g).component_sizes[0]) / g.node_count


def avg_shortest_path_lcc(g: Graph) -> float:
    """Mean hop distance over ordered node pairs of the largest component."""
    if g.node_count == 0:
        raise UndefinedMetricError("shortest paths of an empty graph")
    parts = connected_components(g)
    if parts.component_sizes[0] < 2:
        raise UndefinedMetricError("largest component has fewer than 2 nodes")
    lcc = induced_subgraph(g, np.flatnonzero(parts.component_id == 0))
    adj = lcc.to_sparse()
    s = lcc.node_count
    total = 0.0
    for start in range(0, s, _APSP_CHUNK):
        idx = np.arange(start, min(start + _APSP_CHUNK, s))
        dist = csgraph.shortest_path(adj, method="D", unweighted=True, indices=idx)
        total += float(dist.sum())
    return total / (s * (s - 1))


def s_metric(g: Graph) -> int:
    """Sum over edges of the endpoint degree product, each edge once."""
    deg = g.degrees
    if g.edge_count == 0:
        return 0
    return int((deg[g.edges[:, 0]] * deg[g.edges[:, 1]]).sum())


def density(g: Graph) -> float:
    """2|E| / (n (n - 1))."""
    if g.node_count < 2:
        raise UndefinedMetricError("density needs at least 2 nodes")
    n = g.node_count
    return 2.0 * g.edge_count / (n * (n - 1))


def edge_percentage(series: TemporalMultiplexGraph | Sequence[Graph]) -> list[float]:
    """Per-snapshot edge count divided by the first snapshot's edge count."""
    if isinstance(series, TemporalMultiplexGraph):
        counts = series.edge_counts()
    else:
        counts = [g.edge_count for g in series]
    if not counts or counts[0] == 0:
        raise UndefinedMetricError("edge percentage undefined: first snapshot has no edges")
    return [c / counts[0] for c in counts]


def full_report(g: Graph) -> MetricReport:
    """All seven metrics at once; undefined ones come back as None."""

    def attempt(fn):
        try:
            return fn(g)
        except UndefinedMetricError:
            return None

    return MetricReport(
        avg_degree=attempt(average_degree),
        avg_clustering=attempt(average_clustering),
        global_clustering=attempt(global_clustering),
        lcc_ratio=attempt(largest_component_ratio),
        avg_shortest_path=attempt(avg_shortest_path_lcc),
        density=attempt(density),
        s_metric=attempt(s_metric),
    )


__all__ = [
    "METRIC_NAMES",
    "MetricReport",
    "UndefinedMetricError",
    "average_degree",
    "average_clustering",
    "global_clustering",
    "largest_component_ratio",
    "avg_shortest_path_lcc",
    "s_metric",
    "density",
    "edge_percentage",
    "full_report",
]
