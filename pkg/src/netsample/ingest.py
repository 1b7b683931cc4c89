"""Parsers for SNAP-style edge list files plus the temporal preprocessing pipeline.

Static files hold one ``u v`` pair per line ('#' lines are comments);
temporal files hold ``u v t`` with t in Unix seconds. The temporal pipeline
bins events into fixed-width windows anchored at the earliest timestamp and
extracts the multiplex over the nodes active in every window.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .graph import Graph, build_graph

SECONDS_PER_DAY = 86400
DEFAULT_BIN_SECONDS = 40 * SECONDS_PER_DAY


class ParseError(ValueError):
    """Malformed input line; message carries the 1-based line number."""


@dataclass(frozen=True)
class TemporalEvent:
    source: int
    target: int
    timestamp: int


@dataclass(frozen=True)
class TemporalMultiplexGraph:
    """Ordered snapshots over one fixed node set.

    Every snapshot is a simple undirected Graph over exactly
    ``node_labels`` (isolates retained, so node_count is constant).
    Snapshot ``i`` covers ``t0 + i*bin_width <= t < t0 + (i+1)*bin_width``.
    """

    node_labels: np.ndarray
    snapshots: list[Graph]
    bin_width: int
    t0: int

    @property
    def node_count(self) -> int:
        return len(self.node_labels)

    @property
    def snapshot_count(self) -> int:
        return len(self.snapshots)

    def edge_counts(self) -> list[int]:
        return [g.edge_count for g in self.snapshots]


def _int_tokens(line: str, lineno: int, arity: int) -> list[int]:
    tokens = line.split()
    if len(tokens) != arity:
        raise ParseError(f"line {lineno}: expected {arity} fields, got {len(tokens)}")
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer token in {tokens!r}") from None


def load_static_edgelist(path: str | Path) -> list[tuple[int, int]]:
    """Read all (u, v) pairs verbatim; no deduplication happens here."""
    pairs: list[tuple[int, int]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            u, v = _int_tokens(stripped, lineno, 2)
            pairs.append((u, v))
    return pairs


def load_temporal_edgelist(path: str | Path) -> list[TemporalEvent]:
    """Read (u, v, t) events in file order."""
    events: list[TemporalEvent] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            u, v, t = _int_tokens(stripped, lineno, 3)
            events.append(TemporalEvent(u, v, t))
    return events


def bin_temporal(
    events: list[TemporalEvent], bin_width: int = DEFAULT_BIN_SECONDS
) -> list[list[tuple[int, int]]]:
    """Group events into half-open bins of ``bin_width`` seconds.

    The bin origin is the minimum timestamp; an event at time t lands in
    bin ``(t - t0) // bin_width``. Trailing empty bins are not created.
    """
    if not events:
        raise ValueError("no events")
    if bin_width <= 0:
        raise ValueError("bin_width must be positive")
    t0 = min(e.timestamp for e in events)
    bins: dict[int, list[tuple[int, int]]] = {}
    for e in events:
        bins.setdefault((e.timestamp - t0) // bin_width, []).append((e.source, e.target))
    n_bins = max(bins) + 1
    return [bins.get(i, []) for i in range(n_bins)]


def constant_node_multiplex(
    binned: list[list[tuple[int, int]]],
    bin_width: int = DEFAULT_BIN_SECONDS,
    t0: int = 0,
) -> TemporalMultiplexGraph:
    """Multiplex over the labels that appear as an endpoint in every bin.

    Membership is tested on the raw directed events (before merging
    directions); each snapshot is then the simple undirected graph of that
    bin restricted to the constant node set, isolates retained.
    """
    if not binned:
        raise ValueError("need at least one bin")
    constant: set[int] | None = None
    for pairs in binned:
        seen = {u for u, _ in pairs} | {v for _, v in pairs}
        constant = seen if constant is None else constant & seen
    if not constant:
        raise ValueError("no constant nodes: the per-bin node sets have empty intersection")
    labels = np.array(sorted(constant), dtype=np.int64)
    snapshots = []
    for pairs in binned:
        kept = [(u, v) for u, v in pairs if u in constant and v in constant]
        snapshots.append(build_graph(kept, node_labels=labels))
    return TemporalMultiplexGraph(labels, snapshots, bin_width, t0)


def load_multiplex(
    path: str | Path, bin_width: int = DEFAULT_BIN_SECONDS
) -> TemporalMultiplexGraph:
    """Full pipeline: parse temporal file, bin, extract constant-node multiplex."""
    events = load_temporal_edgelist(path)
    if not events:
        raise ValueError("no events")
    binned = bin_temporal(events, bin_width)
    t0 = min(e.timestamp for e in events)
    return constant_node_multiplex(binned, bin_width, t0)


def static_projection(events: list[TemporalEvent]) -> list[tuple[int, int]]:
    """Forget timestamps: the raw (u, v) pairs of all events."""
    return [(e.source, e.target) for e in events]


__all__ = [
    "ParseError",
    "TemporalEvent",
    "TemporalMultiplexGraph",
    "SECONDS_PER_DAY",
    "DEFAULT_BIN_SECONDS",
    "load_static_edgelist",
    "load_temporal_edgelist",
    "bin_temporal",
    "constant_node_multiplex",
    "load_multiplex",
    "static_projection",
]
