import os
import random
from pathlib import Path

import pytest

from netsample import build_graph, datasets


def gnp_edges(n, p, seed):
    """Erdos-Renyi edge list, deterministic for a given seed."""
    rng = random.Random(seed)
    return [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]


def gnp_graph(n, p, seed):
    return build_graph(gnp_edges(n, p, seed))


def ring_edges(n):
    return [(i, (i + 1) % n) for i in range(n)]


def data_dir() -> Path:
    return Path(os.environ.get("NETSAMPLE_DATA", "data"))


def require_dataset(info) -> Path:
    path = datasets.dataset_path(info, data_dir())
    if not path.exists():
        pytest.skip(
            f"{info.name} dataset not present at {path}; "
            f"run `netsample fetch --data-dir {data_dir()}` first"
        )
    return path


@pytest.fixture(scope="session")
def hepth_graph():
    from netsample.harness import load_static_graph

    return load_static_graph(require_dataset(datasets.CA_HEPTH))


@pytest.fixture(scope="session")
def collegemsg_path():
    return require_dataset(datasets.COLLEGE_MSG)
