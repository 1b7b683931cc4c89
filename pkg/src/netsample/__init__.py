"""Graph sampling toolkit and Monte Carlo benchmark harness.

Build undirected graphs from edge lists (static or timestamped), draw
node-budgeted samples with nine methods, score subgraphs with standard
structural metrics, and run deterministic replicate experiments that
emit CSV results.
"""

from .graph import (
    ComponentPartition,
    Graph,
    UNREACHABLE,
    bfs_distances,
    build_graph,
    connected_components,
    induced_subgraph,
    largest_component_nodes,
)
from .ingest import (
    DEFAULT_BIN_SECONDS,
    ParseError,
    SECONDS_PER_DAY,
    TemporalEvent,
    TemporalMultiplexGraph,
    bin_temporal,
    constant_node_multiplex,
    load_multiplex,
    load_static_edgelist,
    load_temporal_edgelist,
    static_projection,
)
from .metrics import (
    METRIC_NAMES,
    MetricReport,
    UndefinedMetricError,
    average_clustering,
    average_degree,
    avg_shortest_path_lcc,
    density,
    edge_percentage,
    full_report,
    global_clustering,
    largest_component_ratio,
    s_metric,
)
from .sampling import (
    METHODS,
    PageRankConvergenceError,
    PageRankVector,
    Sample,
    SamplingError,
    draw_sample,
    pagerank,
    sample_bfs,
    sample_ies,
    sample_mhrws,
    sample_prs,
    sample_rws,
    sample_ss,
    sample_ues,
    sample_uns,
    sample_wns,
)
from .harness import (
    ConfigError,
    ExperimentConfig,
    ExperimentError,
    default_config,
    derive_seed,
    load_config,
    run_experiment,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # graph
    "Graph",
    "ComponentPartition",
    "UNREACHABLE",
    "build_graph",
    "induced_subgraph",
    "connected_components",
    "largest_component_nodes",
    "bfs_distances",
    # ingest
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
    # sampling
    "METHODS",
    "SamplingError",
    "PageRankConvergenceError",
    "PageRankVector",
    "Sample",
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
    # metrics
    "METRIC_NAMES",
    "MetricReport",
    "UndefinedMetricError",
    "average_degree",
    "average_clustering",
    "global_clustering",
    "largest_component_ratio",
    "avg_shortest_path_lcc",
    "density",
    "s_metric",
    "edge_percentage",
    "full_report",
    # harness
    "ConfigError",
    "ExperimentError",
    "ExperimentConfig",
    "default_config",
    "load_config",
    "derive_seed",
    "run_experiment",
]
