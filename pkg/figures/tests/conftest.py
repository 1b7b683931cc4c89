import matplotlib.pyplot as plt
import pytest

import schemas


@pytest.fixture(autouse=True)
def _close_figures():
    yield
    plt.close("all")


@pytest.fixture
def write_csv(tmp_path):
    def _write(name, header, rows):
        return schemas.write(tmp_path / name, header, rows)

    return _write


@pytest.fixture
def tiny_convergence_csv(write_csv):
    """One method, one metric, two sizes, plus the ORIGINAL reference row."""
    rows = [
        ["convergence", "ORIGINAL", 100, "avg_degree", 4.0, "", 4.0, 4.0, 4.0, 4.0, 4.0, 1],
        ["convergence", "UNS", 10, "avg_degree", 3.0, 0.5, 2.0, 2.75, 3.0, 3.25, 4.0, 5],
        ["convergence", "UNS", 20, "avg_degree", 3.5, 0.4, 2.8, 3.2, 3.5, 3.8, 4.2, 5],
    ]
    return write_csv("convergence_summary.csv", schemas.SUMMARY_HEADER, rows)


@pytest.fixture
def temporal_summary_csv(write_csv):
    """Five snapshots; one banded series, one single-replicate series."""
    rows = []
    original = {
        "avg_degree": [6.58, 4.31, 3.24, 2.05, 1.19],
        "edge_percentage": [1.0, 0.65, 0.49, 0.31, 0.18],
    }
    for metric, values in original.items():
        for t, v in enumerate(values):
            rows.append(["ORIGINAL", 0, t, metric, v, "", v, v, v, v, v, 1])
    for t in range(5):
        mean = 5.0 - t
        rows.append(["UNS", 10, t, "avg_degree", mean, 0.3, mean - 1, mean - 0.2,
                     mean, mean + 0.2, mean + 1, 10])
        rows.append(["UNS", 10, t, "edge_percentage", 1.0 - 0.2 * t, 0.05,
                     0.7 - 0.2 * t, 0.9 - 0.2 * t, 1.0 - 0.2 * t,
                     1.1 - 0.2 * t, 1.3 - 0.2 * t, 10])
        rows.append(["PRS", 1, t, "avg_degree", 4.5 - t, "", 4.5 - t, 4.5 - t,
                     4.5 - t, 4.5 - t, 4.5 - t, 1])
    return write_csv("temporal_summary.csv", schemas.TEMPORAL_SUMMARY_HEADER, rows)
