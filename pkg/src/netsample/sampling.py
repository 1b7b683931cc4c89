"""The nine node-budgeted sampling algorithms and the PageRank scores PRS needs.

Every sampler maps (graph, node budget, seed) to a Sample and draws all of
its randomness from one ``random.Random(seed)`` instance, so identical
inputs give identical samples on any platform. Budgets count nodes for all
methods; the edge-based methods stop once the drawn endpoints reach the
budget and may overshoot by one node.
"""

from __future__ import annotations

import random
import weakref
from dataclasses import dataclass

import numpy as np

from .graph import Graph, build_graph, induced_subgraph, positive_degree_nodes

METHODS = ("UNS", "WNS", "UES", "IES", "RWS", "MHRWS", "SS", "BFS", "PRS")

# Consecutive walk steps without a new node before the walk restarts from a
# fresh random start (keeping the nodes collected so far), scaled by budget.
STALL_FACTOR = 100

PAGERANK_DAMPING = 0.85
PAGERANK_TOL = 1e-10
PAGERANK_MAX_ITER = 1000


class SamplingError(ValueError):
    """Budget or graph precondition violated for the requested method."""


class PageRankConvergenceError(RuntimeError):
    """Power iteration did not converge; carries the last iterate."""

    def __init__(self, message: str, last_iterate: np.ndarray):
        super().__init__(message)
        self.last_iterate = last_iterate


@dataclass(frozen=True)
class Sample:
    """A sampled subgraph plus the provenance needed to reproduce it."""

    subgraph: Graph
    method: str
    target_nodes: int
    replicate_seed: int
    actual_nodes: int
    induced: bool

    def node_ids_in(self, g: Graph) -> np.ndarray:
        """Positions of the sample's nodes inside the source graph ``g``."""
        return np.searchsorted(g.labels, self.subgraph.labels)


@dataclass(frozen=True)
class PageRankVector:
    scores: np.ndarray
    damping: float
    iterations: int


def _check_budget(g: Graph, k: int) -> None:
    if not 1 <= k <= g.node_count:
        raise SamplingError(f"budget {k} out of range for {g.node_count} nodes")


def _require_edges(g: Graph, method: str) -> None:
    if g.edge_count == 0:
        raise SamplingError(f"{method} needs at least one edge")


def _induced_sample(g: Graph, nodes, method: str, k: int, seed: int) -> Sample:
    sub = induced_subgraph(g, nodes)
    return Sample(sub, method, k, seed, sub.node_count, induced=True)


def sample_uns(g: Graph, k: int, seed: int) -> Sample:
    """Uniform node sampling: k distinct nodes, equal probability."""
    _check_budget(g, k)
    rng = random.Random(seed)
    nodes = rng.sample(range(g.node_count), k)
    return _induced_sample(g, nodes, "UNS", k, seed)


def _weighted_without_replacement(weights: np.ndarray, k: int, rng: random.Random) -> list[int]:
    """k successive draws proportional to weight among the remaining items."""
    w = weights.astype(np.float64).copy()
    chosen: list[int] = []
    for _ in range(k):
        total = w.sum()
        cum = np.cumsum(w)
        idx = int(np.searchsorted(cum, rng.random() * total, side="right"))
        idx = min(idx, len(w) - 1)
        while w[idx] == 0.0:  # guard against float edge at the very top of cum
            idx -= 1
        chosen.append(idx)
        w[idx] = 0.0
    return chosen


def sample_wns(g: Graph, k: int, seed: int) -> Sample:
    """Degree-weighted node sampling; zero-degree nodes are never selected."""
    _check_budget(g, k)
    degrees = g.degrees
    eligible = int((degrees > 0).sum())
    if k > eligible:
        raise SamplingError(f"budget {k} exceeds the {eligible} nodes with degree >= 1")
    rng = random.Random(seed)
    nodes = _weighted_without_replacement(degrees, k, rng)
    return _induced_sample(g, nodes, "WNS", k, seed)


def _draw_edges_until(g: Graph, k: int, rng: random.Random) -> tuple[list[int], set[int]]:
    """Uniform edges without replacement until the endpoints cover >= k nodes."""
    m = g.edge_count
    perm = np.arange(m)
    covered: set[int] = set()
    drawn: list[int] = []
    for i in range(m):
        j = rng.randrange(i, m)
        perm[i], perm[j] = perm[j], perm[i]
        e = int(perm[i])
        drawn.append(e)
        covered.add(int(g.edges[e, 0]))
        covered.add(int(g.edges[e, 1]))
        if len(covered) >= k:
            return drawn, covered
    raise SamplingError(f"edges cover only {len(covered)} nodes, budget {k} unreachable")


def sample_ues(g: Graph, k: int, seed: int) -> Sample:
    """Uniform edge sampling; the subgraph keeps only the drawn edges."""
    _check_budget(g, k)
    _require_edges(g, "UES")
    rng = random.Random(seed)
    drawn, covered = _draw_edges_until(g, k, rng)
    sub = build_graph(g.labels[g.edges[drawn]])
    return Sample(sub, "UES", k, seed, len(covered), induced=False)


def sample_ies(g: Graph, k: int, seed: int) -> Sample:
    """Edge sampling with induction: node set as in UES, all mutual edges kept."""
    _check_budget(g, k)
    _require_edges(g, "IES")
    rng = random.Random(seed)
    _, covered = _draw_edges_until(g, k, rng)
    return _induced_sample(g, covered, "IES", k, seed)


def _walk_step(g: Graph, cur: int, rng: random.Random, metropolis: bool) -> int:
    """One transition: uniform neighbor, with the Metropolis degree
    correction rejecting moves to higher-degree nodes with probability
    1 - deg(cur)/deg(next) (a rejection stays put but consumes the step)."""
    nbrs = g.neighbors(cur)
    nxt = int(nbrs[rng.randrange(len(nbrs))])
    if metropolis:
        deg_cur, deg_nxt = len(nbrs), g.degree(nxt)
        if deg_nxt > deg_cur and rng.random() >= deg_cur / deg_nxt:
            return cur
    return nxt


def _walk_nodes(g: Graph, k: int, rng: random.Random, metropolis: bool) -> set[int]:
    starts = positive_degree_nodes(g)
    if k > len(starts):
        raise SamplingError(f"budget {k} exceeds the {len(starts)} nodes reachable by a walk")
    cur = int(starts[rng.randrange(len(starts))])
    visited = {cur}
    stall = 0
    limit = STALL_FACTOR * k
    while len(visited) < k:
        nxt = _walk_step(g, cur, rng, metropolis)
        if nxt in visited:
            stall += 1
        else:
            visited.add(nxt)
            stall = 0
        cur = nxt
        if stall >= limit:
            cur = int(starts[rng.randrange(len(starts))])
            visited.add(cur)
            stall = 0
    return visited


def sample_rws(g: Graph, k: int, seed: int) -> Sample:
    """Simple random walk: uniform neighbor steps, restart on 100*k stalls."""
    _check_budget(g, k)
    _require_edges(g, "RWS")
    rng = random.Random(seed)
    nodes = _walk_nodes(g, k, rng, metropolis=False)
    return _induced_sample(g, nodes, "RWS", k, seed)


def sample_mhrws(g: Graph, k: int, seed: int) -> Sample:
    """Metropolis-Hastings walk: accept neighbor y with min(1, deg(x)/deg(y))."""
    _check_budget(g, k)
    _require_edges(g, "MHRWS")
    rng = random.Random(seed)
    nodes = _walk_nodes(g, k, rng, metropolis=True)
    return _induced_sample(g, nodes, "MHRWS", k, seed)


def sample_ss(g: Graph, k: int, seed: int) -> Sample:
    """Snowball sampling: whole neighbor waves, the overflowing wave truncated
    uniformly at random; exhausted components trigger a fresh random seed."""
    _check_budget(g, k)
    rng = random.Random(seed)
    n = g.node_count
    seed_node = rng.randrange(n)
    visited = {seed_node}
    wave = [seed_node]
    while len(visited) < k:
        frontier: set[int] = set()
        for v in wave:
            frontier.update(int(w) for w in g.neighbors(v))
        frontier -= visited
        if not frontier:
            outside = sorted(set(range(n)) - visited)
            fresh = outside[rng.randrange(len(outside))]
            visited.add(fresh)
            wave = [fresh]
            continue
        nxt = sorted(frontier)
        room = k - len(visited)
        if len(nxt) <= room:
            visited.update(nxt)
            wave = nxt
        else:
            visited.update(rng.sample(nxt, room))
    return _induced_sample(g, visited, "SS", k, seed)


def sample_bfs(g: Graph, k: int, seed: int) -> Sample:
    """Breadth-first sampling: first k dequeued nodes, neighbors enqueued in
    sorted-id order; exhausted components trigger a fresh random seed."""
    _check_budget(g, k)
    rng = random.Random(seed)
    n = g.node_count
    enqueued = np.zeros(n, dtype=bool)
    queue: list[int] = []
    head = 0
    taken: list[int] = []
    start = rng.randrange(n)
    queue.append(start)
    enqueued[start] = True
    while len(taken) < k:
        if head == len(queue):
            outside = np.flatnonzero(~enqueued)
            fresh = int(outside[rng.randrange(len(outside))])
            queue.append(fresh)
            enqueued[fresh] = True
        v = queue[head]
        head += 1
        taken.append(v)
        for w in g.neighbors(v):
            if not enqueued[w]:
                enqueued[w] = True
                queue.append(int(w))
    return _induced_sample(g, taken, "BFS", k, seed)


def pagerank(
    g: Graph,
    damping: float = PAGERANK_DAMPING,
    tol: float = PAGERANK_TOL,
    max_iter: int = PAGERANK_MAX_ITER,
) -> PageRankVector:
    """Power iteration with uniform teleport; degree-0 nodes spread their
    mass uniformly over all nodes. Converged when the L1 change dips below
    ``tol``."""
    n = g.node_count
    if n < 1:
        raise ValueError("pagerank needs at least one node")
    if not 0.0 < damping < 1.0:
        raise ValueError("damping must lie in (0, 1)")
    adj = g.to_sparse()
    degrees = g.degrees.astype(np.float64)
    dangling = degrees == 0
    safe_deg = np.where(dangling, 1.0, degrees)
    x = np.full(n, 1.0 / n)
    for it in range(1, max_iter + 1):
        outflow = x / safe_deg
        spread = adj.dot(outflow)  # symmetric adjacency: A @ (x / deg) = P^T x
        spread += x[dangling].sum() / n
        x_new = (1.0 - damping) / n + damping * spread
        if np.abs(x_new - x).sum() < tol:
            return PageRankVector(x_new, damping, it)
        x = x_new
    raise PageRankConvergenceError(f"pagerank did not converge in {max_iter} iterations", x)


# Graphs are immutable, so default-parameter scores can be reused across
# replicates on the same graph object.
_pagerank_cache: "weakref.WeakKeyDictionary[Graph, PageRankVector]" = weakref.WeakKeyDictionary()


def _cached_pagerank(g: Graph) -> PageRankVector:
    pr = _pagerank_cache.get(g)
    if pr is None:
        pr = pagerank(g)
        _pagerank_cache[g] = pr
    return pr


def sample_prs(g: Graph, k: int, seed: int) -> Sample:
    """PageRank-weighted node sampling via successive proportional draws."""
    _check_budget(g, k)
    scores = _cached_pagerank(g).scores
    rng = random.Random(seed)
    nodes = _weighted_without_replacement(scores, k, rng)
    return _induced_sample(g, nodes, "PRS", k, seed)


SAMPLERS = {
    "UNS": sample_uns,
    "WNS": sample_wns,
    "UES": sample_ues,
    "IES": sample_ies,
    "RWS": sample_rws,
    "MHRWS": sample_mhrws,
    "SS": sample_ss,
    "BFS": sample_bfs,
    "PRS": sample_prs,
}


def draw_sample(g: Graph, method: str, k: int, seed: int) -> Sample:
    """Dispatch by canonical method name."""
    try:
        sampler = SAMPLERS[method]
    except KeyError:
        raise SamplingError(f"unknown method {method!r}; choose from {', '.join(METHODS)}") from None
    return sampler(g, k, seed)


__all__ = [
    "METHODS",
    "SAMPLERS",
    "STALL_FACTOR",
    "Sample",
    "PageRankVector",
    "SamplingError",
    "PageRankConvergenceError",
    "draw_sample",
    "pagerank",
    "sample_uns",
    "sample_wns",
    "sample_ues",
    "sample_ies",
    "sample_rws",
    "sample_mhrws",
    "sample_ss",
    "sample_bfs",
    "sample_prs",
]
