"""The two SNAP datasets the benchmark targets, with download helpers.

The files are not redistributed with the package; ``fetch_dataset`` pulls
them from the SNAP mirror and decompresses in place. Reference values are
the published statistics used for validation and for the temporal
deviation report.
"""

from __future__ import annotations

import gzip
import shutil
import urllib.request
from dataclasses import dataclass
from pathlib import Path

DEFAULT_DATA_DIR = Path("data")


@dataclass(frozen=True)
class DatasetInfo:
    name: str
    url: str
    filename: str
    temporal: bool


CA_HEPTH = DatasetInfo(
    name="ca-HepTh",
    url="https://snap.stanford.edu/data/ca-HepTh.txt.gz",
    filename="ca-HepTh.txt",
    temporal=False,
)

COLLEGE_MSG = DatasetInfo(
    name="CollegeMsg",
    url="https://snap.stanford.edu/data/CollegeMsg.txt.gz",
    filename="CollegeMsg.txt",
    temporal=True,
)

DATASETS = {d.name: d for d in (CA_HEPTH, COLLEGE_MSG)}

# Published statistics for the standard preprocessing (simple undirected
# graphs, 40-day bins anchored at the earliest event).
CA_HEPTH_NODES = 9877
CA_HEPTH_EDGES = 25973
CA_HEPTH_LCC_NODES = 8638
CA_HEPTH_AVG_DEGREE = 5.26
CA_HEPTH_AVG_CLUSTERING = 0.4714
CA_HEPTH_LCC_RATIO = 0.8746
CA_HEPTH_AVG_SHORTEST_PATH = 5.95

COLLEGEMSG_NODES = 1899
COLLEGEMSG_EVENTS = 59835
COLLEGEMSG_STATIC_EDGES = 20296
COLLEGEMSG_SNAPSHOTS = 5
COLLEGEMSG_CONSTANT_NODES = 116
COLLEGEMSG_SNAPSHOT_EDGES = (382, 250, 188, 119, 69)
COLLEGEMSG_SNAPSHOT_CLUSTERING = (0.1187, 0.0751, 0.1065, 0.0452, 0.0119)
COLLEGEMSG_SNAPSHOT_AVG_DEGREE = (6.5862, 4.3103, 3.2414, 2.0517, 1.1897)


def dataset_path(info: DatasetInfo, data_dir: str | Path = DEFAULT_DATA_DIR) -> Path:
    return Path(data_dir) / info.filename


def fetch_dataset(info: DatasetInfo, data_dir: str | Path = DEFAULT_DATA_DIR) -> Path:
    """Download and decompress one dataset; returns the text file path."""
    target = dataset_path(info, data_dir)
    if target.exists():
        return target
    target.parent.mkdir(parents=True, exist_ok=True)
    archive = target.with_suffix(target.suffix + ".gz")
    urllib.request.urlretrieve(info.url, archive)
    with gzip.open(archive, "rb") as src, open(target, "wb") as dst:
        shutil.copyfileobj(src, dst)
    archive.unlink()
    return target


def fetch_all(data_dir: str | Path = DEFAULT_DATA_DIR) -> list[Path]:
    return [fetch_dataset(info, data_dir) for info in DATASETS.values()]


__all__ = [
    "DatasetInfo",
    "DATASETS",
    "CA_HEPTH",
    "COLLEGE_MSG",
    "DEFAULT_DATA_DIR",
    "CA_HEPTH_NODES",
    "CA_HEPTH_EDGES",
    "CA_HEPTH_LCC_NODES",
    "COLLEGEMSG_NODES",
    "COLLEGEMSG_EVENTS",
    "COLLEGEMSG_STATIC_EDGES",
    "COLLEGEMSG_SNAPSHOTS",
    "COLLEGEMSG_CONSTANT_NODES",
    "COLLEGEMSG_SNAPSHOT_EDGES",
    "dataset_path",
    "fetch_dataset",
    "fetch_all",
]
