"""Command line front end.

Subcommands: ``stats`` (metric report for a network file), ``sample``
(draw one sample and emit its edge list), ``experiment`` (run a benchmark
experiment from a config file), ``fetch`` (download the reference datasets).

Exit codes: 0 ok, 1 bad usage/config, 2 dataset parse failure, 3 experiment
failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import datasets
from .graph import Graph
from .harness import ConfigError, EXPERIMENT_KINDS, ExperimentError, load_config, load_static_graph, run_experiment
from .ingest import SECONDS_PER_DAY, ParseError, load_multiplex
from .metrics import average_clustering, average_degree, edge_percentage, full_report, global_clustering
from .sampling import METHODS, SamplingError, draw_sample

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_EXPERIMENT = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="netsample", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    stats = sub.add_parser("stats", help="print structural metrics for a network file")
    stats.add_argument("path", help="edge list file")
    stats.add_argument("--temporal", action="store_true", help="treat the file as timestamped events")
    stats.add_argument("--bin-days", type=int, default=40, help="snapshot bin width in days (temporal only)")

    sample = sub.add_parser("sample", help="draw one sample and print its edge list")
    sample.add_argument("path", help="edge list file")
    sample.add_argument("--method", required=True, choices=METHODS)
    sample.add_argument("--nodes", required=True, type=int, help="node budget")
    sample.add_argument("--seed", required=True, type=int)
    sample.add_argument("--out", default="-", help="output path ('-' for stdout)")

    experiment = sub.add_parser("experiment", help="run a benchmark experiment")
    experiment.add_argument("kind", choices=EXPERIMENT_KINDS)
    experiment.add_argument("--config", required=True, help="key = value config file")

    fetch = sub.add_parser("fetch", help="download the reference datasets")
    fetch.add_argument("--data-dir", default=str(datasets.DEFAULT_DATA_DIR))
    fetch.add_argument("--dataset", choices=sorted(datasets.DATASETS), action="append",
                       help="fetch only this dataset (repeatable)")
    return parser


def _fmt_value(value) -> str:
    if value is None:
        return "undefined"
    if isinstance(value, int):
        return str(value)
    return f"{value:.6f}"


def _print_static_stats(g: Graph) -> None:
    print(f"nodes: {g.node_count}")
    print(f"edges: {g.edge_count}")
    for name, value in full_report(g).as_dict().items():
        print(f"{name}: {_fmt_value(value)}")


def _print_temporal_stats(path: str, bin_days: int) -> None:
    multiplex = load_multiplex(path, bin_days * SECONDS_PER_DAY)
    print(f"snapshots: {len(multiplex.snapshots)}")
    print(f"constant nodes: {len(multiplex.node_labels)}")
    ratios = edge_percentage(multiplex)
    for t, snap in enumerate(multiplex.snapshots):
        cells = [
            f"t={t}",
            f"edges={snap.edge_count}",
            f"avg_degree={_fmt_value(average_degree(snap))}",
            f"avg_clustering={_fmt_value(average_clustering(snap))}",
            f"global_clustering={_fmt_value(global_clustering(snap))}",
            f"edge_percentage={_fmt_value(ratios[t])}",
        ]
        print(" ".join(cells))


def _cmd_stats(args: argparse.Namespace) -> int:
    try:
        if args.temporal:
            _print_temporal_stats(args.path, args.bin_days)
        else:
            _print_static_stats(load_static_graph(args.path))
    except (ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK


def _cmd_sample(args: argparse.Namespace) -> int:
    try:
        g = load_static_graph(args.path)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        sample = draw_sample(g, args.method, args.nodes, args.seed)
    except SamplingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    lines = [f"{u} {v}" for u, v in sample.subgraph.label_edges()]
    body = "\n".join(lines) + ("\n" if lines else "")
    if args.out == "-":
        sys.stdout.write(body)
    else:
        Path(args.out).write_text(body, encoding="utf-8")
    print(
        f"# method={sample.method} nodes={sample.actual_nodes} "
        f"edges={sample.subgraph.edge_count} seed={sample.replicate_seed}",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_experiment(args: argparse.Namespace) -> int:
    try:
        cfg = load_config(args.config, experiment=args.kind)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        outputs = run_experiment(cfg)
    except (ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ExperimentError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXPERIMENT
    for kind, path in outputs.items():
        print(f"{kind}: {path}")
    return EXIT_OK


def _cmd_fetch(args: argparse.Namespace) -> int:
    names = args.dataset or sorted(datasets.DATASETS)
    data_dir = Path(args.data_dir)
    status = EXIT_OK
    for name in names:
        info = datasets.DATASETS[name]
        try:
            path = datasets.fetch_dataset(info, data_dir)
        except OSError as exc:
            print(f"error fetching {name}: {exc}", file=sys.stderr)
            status = EXIT_PARSE
            continue
        print(f"{name}: {path}")
    return status


_COMMANDS = {
    "stats": _cmd_stats,
    "sample": _cmd_sample,
    "experiment": _cmd_experiment,
    "fetch": _cmd_fetch,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
