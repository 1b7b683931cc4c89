"""Immutable simple undirected graph with the traversal primitives used everywhere else.

Nodes carry dense internal ids ``0..n-1`` assigned by ascending original
label; the original labels are kept for traceability. Adjacency is stored
CSR-style (``indptr``/``indices``) with each neighbor list sorted, so every
iteration order is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

UNREACHABLE = -1


# eq=False keeps identity hashing so graphs can key weak caches.
@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph: no self-loops, no parallel edges.

    Attributes:
        labels: original dataset label per internal id, ascending.
        indptr: CSR row pointer, length ``node_count + 1``.
        indices: concatenated sorted neighbor lists.
        edges: ``(m, 2)`` array with ``u < v``, lexicographically sorted,
            each undirected edge exactly once.
    """

    labels: np.ndarray
    indptr: np.ndarray
    indices: np.ndarray
    edges: np.ndarray

    @property
    def node_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor ids of ``v`` (read-only view)."""
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def label_edges(self) -> np.ndarray:
        """Edge list expressed in original labels."""
        return self.labels[self.edges]

    def to_sparse(self) -> sparse.csr_matrix:
        """Zero-copy CSR adjacency matrix view (0/1 weights)."""
        n = self.node_count
        data = np.ones(len(self.indices), dtype=np.float64)
        return sparse.csr_matrix((data, self.indices, self.indptr), shape=(n, n))


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components of a graph.

    ``component_id[v]`` indexes into ``component_sizes``, which is sorted
    descending; component 0 is the largest, ties broken by the smallest
    node id contained.
    """

    component_id: np.ndarray
    component_sizes: list[int] = field(default_factory=list)


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def _assemble(labels: np.ndarray, edges: np.ndarray) -> Graph:
    """Build a Graph from an ascending label array and deduplicated id edges."""
    n = len(labels)
    if len(edges) == 0:
        edges = np.empty((0, 2), dtype=np.int64)
        indptr = np.zeros(n + 1, dtype=np.int64)
        indices = np.empty(0, dtype=np.int64)
        return Graph(_freeze(labels), _freeze(indptr), _freeze(indices), _freeze(edges))

    src = np.concatenate([edges[:, 0], edges[:, 1]])
    dst = np.concatenate([edges[:, 1], edges[:, 0]])
    order = np.lexsort((dst, src))
    indices = dst[order]
    counts = np.bincount(src, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return Graph(_freeze(labels), _freeze(indptr), _freeze(indices), _freeze(edges))


def build_graph(
    raw_edges: Iterable[tuple[int, int]] | np.ndarray,
    node_labels: Iterable[int] | None = None,
) -> Graph:
    """Build a simple undirected graph from raw (label, label) pairs.

    Self-loops are dropped, duplicate and reversed-duplicate pairs merged.
    Labels are mapped to dense ids by ascending label value. Labels that
    occur only in self-loops vanish with the loop. With ``node_labels``
    given, the node set is exactly those labels (isolates retained) and
    every edge endpoint must belong to it.
    """
    arr = np.asarray(raw_edges if not isinstance(raw_edges, np.ndarray) else raw_edges, dtype=np.int64)
    if arr.size == 0:
        arr = np.empty((0, 2), dtype=np.int64)
    arr = arr.reshape(-1, 2)
    arr = arr[arr[:, 0] != arr[:, 1]]

    if node_labels is None:
        labels = np.unique(arr)
    else:
        labels = np.unique(np.fromiter(node_labels, dtype=np.int64))
        if len(arr) > 0:
            if len(labels) == 0:
                raise ValueError("edge endpoint outside the supplied node label set")
            pos = np.clip(np.searchsorted(labels, arr), 0, len(labels) - 1)
            if not np.array_equal(labels[pos], arr):
                raise ValueError("edge endpoint outside the supplied node label set")

    if len(labels) == 0:
        return _assemble(np.empty(0, dtype=np.int64), np.empty((0, 2), dtype=np.int64))

    ids = np.searchsorted(labels, arr)
    lo = np.minimum(ids[:, 0], ids[:, 1])
    hi = np.maximum(ids[:, 0], ids[:, 1])
    edges = np.unique(np.column_stack([lo, hi]), axis=0) if len(lo) else np.empty((0, 2), dtype=np.int64)
    return _assemble(labels, edges)


def induced_subgraph(g: Graph, nodes: Iterable[int]) -> Graph:
    """Subgraph on ``nodes`` with every original edge between them.

    Nodes are re-indexed densely; original labels are preserved, so the
    result's id order follows ascending original label. Nodes without an
    internal edge stay as isolates.
    """
    keep = np.unique(np.fromiter(nodes, dtype=np.int64))
    if len(keep) and (keep[0] < 0 or keep[-1] >= g.node_count):
        raise ValueError("node id out of range")
    if len(keep) == 0:
        return _assemble(np.empty(0, dtype=np.int64), np.empty((0, 2), dtype=np.int64))
    mask = np.zeros(g.node_count, dtype=bool)
    mask[keep] = True
    e = g.edges
    sel = e[mask[e[:, 0]] & mask[e[:, 1]]] if len(e) else e
    remapped = np.searchsorted(keep, sel)
    return _assemble(g.labels[keep].copy(), remapped)


def connected_components(g: Graph) -> ComponentPartition:
    """Partition nodes by reachability; sizes sorted descending."""
    n = g.node_count
    if n == 0:
        return ComponentPartition(np.empty(0, dtype=np.int64), [])
    _, raw = csgraph.connected_components(g.to_sparse(), directed=False)
    sizes = np.bincount(raw)
    # first occurrence index per raw label = smallest node id it contains
    _, first = np.unique(raw, return_index=True)
    order = sorted(range(len(sizes)), key=lambda c: (-int(sizes[c]), int(first[c])))
    remap = np.empty(len(sizes), dtype=np.int64)
    remap[order] = np.arange(len(sizes))
    return ComponentPartition(_freeze(remap[raw]), [int(sizes[c]) for c in order])


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Hop distance from ``source`` to every node; UNREACHABLE (-1) if none."""
    n = g.node_count
    if not 0 <= source < n:
        raise ValueError(f"source {source} out of range for {n} nodes")
    dist = np.full(n, UNREACHABLE, dtype=np.int64)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    d = 0
    while frontier.size:
        starts = g.indptr[frontier]
        counts = g.indptr[frontier + 1] - starts
        total = int(counts.sum())
        if total == 0:
            break
        # gather all neighbor slices without a Python-level loop
        base = np.repeat(starts, counts)
        within = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
        nbrs = g.indices[base + within]
        nbrs = nbrs[dist[nbrs] == UNREACHABLE]
        if nbrs.size == 0:
            break
        frontier = np.unique(nbrs)
        d += 1
        dist[frontier] = d
    return dist


def largest_component_nodes(g: Graph) -> np.ndarray:
    """Node ids of the largest connected component (component 0)."""
    parts = connected_components(g)
    return np.flatnonzero(parts.component_id == 0)


def positive_degree_nodes(g: Graph) -> np.ndarray:
    return np.flatnonzero(g.degrees > 0)


__all__ = [
    "Graph",
    "ComponentPartition",
    "UNREACHABLE",
    "build_graph",
    "induced_subgraph",
    "connected_components",
    "bfs_distances",
    "largest_component_nodes",
    "positive_degree_nodes",
]
