import numpy as np
import pytest

from netsample_figures.io import (
    SchemaError,
    read_raw,
    read_summary,
    read_temporal_summary,
)
from netsample_figures.render import (
    FigureSpec,
    REFERENCE_LABEL,
    build_boxplot,
    build_clt,
    build_convergence,
    build_temporal,
    histogram_bin_count,
    render,
    render_convergence,
    save_figure,
)

from schemas import RAW_HEADER, SUMMARY_HEADER, TEMPORAL_SUMMARY_HEADER

METRICS = (
    "avg_degree", "avg_clustering", "global_clustering",
    "lcc_ratio", "avg_shortest_path", "density", "s_metric",
)


def visible_axes(fig):
    return [ax for ax in fig.axes if ax.get_visible()]


def line_by_label(ax, label):
    matches = [l for l in ax.get_lines() if l.get_label() == label]
    assert matches, f"no line labelled {label!r}"
    return matches[0]


def test_convergence_single_panel(tiny_convergence_csv):
    fig = build_convergence(read_summary(tiny_convergence_csv))
    axes = visible_axes(fig)
    assert len(axes) == 1
    line = line_by_label(axes[0], "UNS")
    assert list(line.get_xdata()) == [10, 20]
    assert list(line.get_ydata()) == [3.0, 3.5]
    assert fig.netsample_artists["references"] == {"avg_degree": 4.0}
    ref = line_by_label(axes[0], REFERENCE_LABEL)
    assert set(ref.get_ydata()) == {4.0}


def test_convergence_panel_per_metric(write_csv):
    rows = []
    for metric in METRICS:
        rows.append(["convergence", "ORIGINAL", 100, metric, 1.0, "", 1, 1, 1, 1, 1, 1])
        for method in ("UNS", "RWS"):
            for size in (250, 500):
                rows.append(["convergence", method, size, metric,
                             2.0, 0.1, 1.5, 1.8, 2.0, 2.2, 2.5, 100])
    path = write_csv("summary.csv", SUMMARY_HEADER, rows)
    fig = build_convergence(read_summary(path))
    axes = visible_axes(fig)
    assert len(axes) == len(METRICS)
    for ax in axes:
        labels = {l.get_label() for l in ax.get_lines()}
        assert labels == {"UNS", "RWS", REFERENCE_LABEL}


def test_convergence_sorts_sizes(write_csv):
    rows = [
        ["convergence", "UNS", 500, "density", 0.2, 0.01, 0.1, 0.15, 0.2, 0.25, 0.3, 5],
        ["convergence", "UNS", 250, "density", 0.4, 0.01, 0.3, 0.35, 0.4, 0.45, 0.5, 5],
    ]
    path = write_csv("summary.csv", SUMMARY_HEADER, rows)
    with pytest.warns(UserWarning, match="ORIGINAL"):
        fig = build_convergence(read_summary(path))
    line = line_by_label(visible_axes(fig)[0], "UNS")
    assert list(line.get_xdata()) == [250, 500]
    assert list(line.get_ydata()) == [0.4, 0.2]


def test_convergence_metric_panels_follow_canonical_order(write_csv):
    rows = [
        ["convergence", "UNS", 250, "density", 0.2, 0.01, 0.1, 0.15, 0.2, 0.25, 0.3, 5],
        ["convergence", "UNS", 250, "avg_degree", 3.0, 0.1, 2.5, 2.8, 3.0, 3.2, 3.5, 5],
    ]
    path = write_csv("summary.csv", SUMMARY_HEADER, rows)
    fig = build_convergence(read_summary(path), reference=False)
    titles = [ax.get_title() for ax in visible_axes(fig)]
    assert titles == ["Average degree", "Density"]


def test_convergence_requested_metric_missing(tiny_convergence_csv):
    rows = read_summary(tiny_convergence_csv)
    with pytest.raises(SchemaError, match="'density'"):
        build_convergence(rows, metrics=["density"])


def test_convergence_empty_csv_errors(write_csv, tmp_path):
    path = write_csv("summary.csv", SUMMARY_HEADER, [])
    spec = FigureSpec(kind="convergence", inputs=(path,), out=tmp_path / "fig.png")
    with pytest.raises(SchemaError, match="no data rows"):
        render_convergence(spec)


def test_convergence_missing_original_warns(write_csv):
    rows = [["convergence", "UNS", 10, "avg_degree", 3.0, 0.5, 2, 2.75, 3, 3.25, 4, 5]]
    path = write_csv("summary.csv", SUMMARY_HEADER, rows)
    with pytest.warns(UserWarning, match="ORIGINAL"):
        fig = build_convergence(read_summary(path))
    assert fig.netsample_artists["references"] == {}


def test_convergence_reference_toggle_off(tiny_convergence_csv, recwarn):
    fig = build_convergence(read_summary(tiny_convergence_csv), reference=False)
    assert fig.netsample_artists["references"] == {}
    labels = {l.get_label() for l in visible_axes(fig)[0].get_lines()}
    assert REFERENCE_LABEL not in labels
    assert len(recwarn) == 0


def boxplot_raw_rows():
    data = {
        ("UNS", "avg_degree"): [1.0, 2.0, 4.0, 8.0],
        ("UNS", "density"): [0.1, 0.2, 0.3, 0.4],
        ("RWS", "avg_degree"): [2.0, 3.0, 5.0, 10.0],
        ("RWS", "density"): [0.2, 0.3, 0.4, 0.5],
    }
    rows = [
        ["boxplot", "ORIGINAL", 100, 0, "avg_degree", 4.0],
        ["boxplot", "ORIGINAL", 100, 0, "density", 0.08],
    ]
    for (method, metric), values in data.items():
        for rep, v in enumerate(values):
            rows.append(["boxplot", method, 1000, rep, metric, v])
    return rows, data


def summary_rows_for(data):
    rows = []
    for (method, metric), values in data.items():
        arr = np.asarray(values)
        lo, q1, med, q3, hi = np.percentile(arr, [0, 25, 50, 75, 100])
        rows.append(["boxplot", method, 1000, metric,
                     repr(float(arr.mean())), repr(float(arr.std(ddof=1))),
                     repr(float(lo)), repr(float(q1)), repr(float(med)),
                     repr(float(q3)), repr(float(hi)), len(values)])
    return rows


def test_boxplot_box_per_method(write_csv):
    raw_rows, _ = boxplot_raw_rows()
    path = write_csv("raw.csv", RAW_HEADER, raw_rows)
    fig = build_boxplot(read_raw(path))
    panels = fig.netsample_artists["panels"]
    assert set(panels) == {"avg_degree", "density"}
    for panel in panels.values():
        assert panel["methods"] == ["UNS", "RWS"]
        assert len(panel["bxp"]["boxes"]) == 2


def test_boxplot_quartiles_match_summary(write_csv):
    raw_rows, data = boxplot_raw_rows()
    raw_path = write_csv("raw.csv", RAW_HEADER, raw_rows)
    summary_path = write_csv("summary.csv", SUMMARY_HEADER, summary_rows_for(data))
    fig = build_boxplot(read_raw(raw_path))
    panels = fig.netsample_artists["panels"]
    expected = {(r.method, r.metric): r for r in read_summary(summary_path)}
    for metric, panel in panels.items():
        bxp = panel["bxp"]
        for i, method in enumerate(panel["methods"]):
            row = expected[(method, metric)]
            box_y = bxp["boxes"][i].get_ydata()
            assert min(box_y) == pytest.approx(row.q1)
            assert max(box_y) == pytest.approx(row.q3)
            assert bxp["medians"][i].get_ydata()[0] == pytest.approx(row.median)
            caps = sorted(c.get_ydata()[0] for c in bxp["caps"][2 * i:2 * i + 2])
            assert caps[0] == pytest.approx(row.min)
            assert caps[1] == pytest.approx(row.max)


def test_boxplot_reference_lines(write_csv):
    raw_rows, _ = boxplot_raw_rows()
    path = write_csv("raw.csv", RAW_HEADER, raw_rows)
    fig = build_boxplot(read_raw(path))
    panels = fig.netsample_artists["panels"]
    assert panels["avg_degree"]["reference"] == 4.0
    assert panels["density"]["reference"] == 0.08


def test_boxplot_missing_original_warns(write_csv):
    raw_rows, _ = boxplot_raw_rows()
    rows = [r for r in raw_rows if r[1] != "ORIGINAL"]
    path = write_csv("raw.csv", RAW_HEADER, rows)
    with pytest.warns(UserWarning, match="ORIGINAL"):
        fig = build_boxplot(read_raw(path))
    for panel in fig.netsample_artists["panels"].values():
        assert "reference" not in panel


def clt_inputs(write_csv, groups=(10, 50), mean_offset=0.0):
    raw = [
        ["clt", "ORIGINAL", 100, 0, "avg_degree", 4.0],
        ["clt", "ORIGINAL", 100, 0, "global_clustering", 0.3],
    ]
    summary = []
    rng = np.random.default_rng(5)
    for metric, center, spread in (("avg_degree", 4.0, 0.5), ("global_clustering", 0.3, 0.05)):
        for group in groups:
            values = center + spread * rng.standard_normal(group)
            for rep, v in enumerate(values):
                raw.append(["clt", "UNS", group, rep, metric, repr(float(v))])
            mean = float(values.mean()) + mean_offset
            std = float(values.std(ddof=1))
            lo, q1, med, q3, hi = np.percentile(values, [0, 25, 50, 75, 100])
            summary.append(["clt", "UNS", group, metric,
                            repr(mean), repr(std), repr(float(lo)), repr(float(q1)),
                            repr(float(med)), repr(float(q3)), repr(float(hi)), group])
    raw_path = write_csv("clt_raw.csv", RAW_HEADER, raw)
    summary_path = write_csv("clt_summary.csv", SUMMARY_HEADER, summary)
    return raw_path, summary_path


def test_clt_grid_and_overlays(write_csv):
    raw_path, summary_path = clt_inputs(write_csv)
    summary = read_summary(summary_path)
    fig = build_clt(read_raw(raw_path), summary)
    panels = fig.netsample_artists["panels"]
    assert set(panels) == {("avg_degree", 10), ("avg_degree", 50),
                           ("global_clustering", 10), ("global_clustering", 50)}
    stats = {(r.metric, r.size): (r.mean, r.std) for r in summary}
    for key, panel in panels.items():
        assert len(panel["edges"]) - 1 >= 10
        line = panel["overlay"]
        assert line is not None
        mean, std = stats[key]
        xs = line.get_xdata()
        assert xs[0] == panel["edges"][0] and xs[-1] == panel["edges"][-1]
        expected = np.exp(-0.5 * ((xs - mean) / std) ** 2) / (std * np.sqrt(2 * np.pi))
        assert np.allclose(line.get_ydata(), expected, rtol=1e-12)


def test_clt_overlay_uses_csv_mean_verbatim(write_csv):
    raw_path, summary_path = clt_inputs(write_csv, groups=(10,), mean_offset=0.5)
    summary = read_summary(summary_path)
    fig = build_clt(read_raw(raw_path), summary)
    panel = fig.netsample_artists["panels"][("avg_degree", 10)]
    mean, std = next((r.mean, r.std) for r in summary
                     if r.metric == "avg_degree" and r.size == 10)
    assert panel["mean"] == mean and panel["std"] == std
    xs = panel["overlay"].get_xdata()
    ys = panel["overlay"].get_ydata()
    assert xs[int(np.argmax(ys))] == pytest.approx(mean, abs=(xs[1] - xs[0]) * 1.01)


def test_clt_single_group_two_panels(write_csv):
    raw_path, summary_path = clt_inputs(write_csv, groups=(10,))
    fig = build_clt(read_raw(raw_path), read_summary(summary_path))
    assert set(fig.netsample_artists["panels"]) == {
        ("avg_degree", 10), ("global_clustering", 10)}
    assert len(visible_axes(fig)) == 2


def test_clt_missing_std_skips_overlay(write_csv):
    raw = [["clt", "UNS", 1, 0, "avg_degree", 4.2]]
    summary = [["clt", "UNS", 1, "avg_degree", 4.2, "", 4.2, 4.2, 4.2, 4.2, 4.2, 1]]
    raw_path = write_csv("raw.csv", RAW_HEADER, raw)
    summary_path = write_csv("summary.csv", SUMMARY_HEADER, summary)
    with pytest.warns(UserWarning, match="std missing"):
        fig = build_clt(read_raw(raw_path), read_summary(summary_path))
    assert fig.netsample_artists["panels"][("avg_degree", 1)]["overlay"] is None


def test_histogram_bin_floor():
    assert histogram_bin_count([float(v) for v in range(12)]) == 10
    assert histogram_bin_count([5.0] * 20) == 10
    assert histogram_bin_count(np.linspace(0.0, 1.0, 10000)) > 10


def test_temporal_reference_trajectory(temporal_summary_csv):
    fig = build_temporal(read_temporal_summary(temporal_summary_csv))
    panels = fig.netsample_artists["panels"]
    assert set(panels) == {"avg_degree", "edge_percentage"}
    ref = panels["edge_percentage"]["reference"]
    assert list(ref.get_xdata()) == [0, 1, 2, 3, 4]
    assert ref.get_ydata()[0] == 1.0
    assert ref.get_color() == "tab:blue"


def test_temporal_band_only_with_std(temporal_summary_csv):
    fig = build_temporal(read_temporal_summary(temporal_summary_csv))
    series = fig.netsample_artists["panels"]["avg_degree"]["series"]
    assert series[("UNS", 10)]["band"] is True
    assert series[("PRS", 1)]["band"] is False


def test_temporal_series_match_csv(temporal_summary_csv):
    fig = build_temporal(read_temporal_summary(temporal_summary_csv))
    line = fig.netsample_artists["panels"]["avg_degree"]["series"][("UNS", 10)]["line"]
    assert list(line.get_xdata()) == [0, 1, 2, 3, 4]
    assert list(line.get_ydata()) == [5.0, 4.0, 3.0, 2.0, 1.0]


def test_temporal_missing_original_warns(write_csv):
    rows = [["UNS", 10, t, "avg_degree", 5.0 - t, 0.3, 4.0 - t, 4.8 - t,
             5.0 - t, 5.2 - t, 6.0 - t, 10] for t in range(3)]
    path = write_csv("tsummary.csv", TEMPORAL_SUMMARY_HEADER, rows)
    with pytest.warns(UserWarning, match="ORIGINAL"):
        fig = build_temporal(read_temporal_summary(path))
    assert fig.netsample_artists["panels"]["avg_degree"]["reference"] is None


def test_spec_validation(tmp_path, tiny_convergence_csv):
    with pytest.raises(ValueError, match="unknown figure kind"):
        FigureSpec(kind="pie", inputs=(tiny_convergence_csv,), out=tmp_path / "f.png")
    with pytest.raises(FileNotFoundError):
        FigureSpec(kind="convergence", inputs=(tmp_path / "nope.csv",), out=tmp_path / "f.png")
    with pytest.raises(ValueError, match="at least one input"):
        FigureSpec(kind="convergence", inputs=(), out=tmp_path / "f.png")


def test_save_writes_png_and_svg(tiny_convergence_csv, tmp_path):
    fig = build_convergence(read_summary(tiny_convergence_csv))
    png, svg = save_figure(fig, tmp_path / "out" / "fig.svg")
    assert png.suffix == ".png" and png.is_file()
    assert svg.suffix == ".svg" and svg.is_file()
    assert png.parent == svg.parent


def test_clt_inputs_any_order(write_csv, tmp_path):
    raw_path, summary_path = clt_inputs(write_csv, groups=(10,))
    spec = FigureSpec(kind="clt_histogram", inputs=(summary_path, raw_path),
                      out=tmp_path / "clt.png")
    png, svg = render(spec)
    assert png.is_file() and svg.is_file()


def test_clt_rejects_duplicate_schemas(write_csv, tmp_path):
    raw_path, _ = clt_inputs(write_csv, groups=(10,))
    spec = FigureSpec(kind="clt_histogram", inputs=(raw_path, raw_path),
                      out=tmp_path / "clt.png")
    with pytest.raises(SchemaError, match="raw CSV and one summary CSV"):
        render(spec)


def _specs_for_all_kinds(write_csv, tmp_path, out_prefix):
    raw_rows, _ = boxplot_raw_rows()
    box_path = write_csv("box_raw.csv", RAW_HEADER, raw_rows)
    clt_raw, clt_summary = clt_inputs(write_csv, groups=(10,))
    conv_rows = [
        ["convergence", "ORIGINAL", 100, "avg_degree", 4.0, "", 4, 4, 4, 4, 4, 1],
        ["convergence", "UNS", 10, "avg_degree", 3.0, 0.5, 2, 2.75, 3, 3.25, 4, 5],
        ["convergence", "UNS", 20, "avg_degree", 3.5, 0.4, 2.8, 3.2, 3.5, 3.8, 4.2, 5],
    ]
    conv_path = write_csv("conv_summary.csv", SUMMARY_HEADER, conv_rows)
    trows = []
    for t in range(3):
        trows.append(["ORIGINAL", 0, t, "edge_percentage", 1.0 - 0.3 * t, "",
                      1.0 - 0.3 * t, 1.0 - 0.3 * t, 1.0 - 0.3 * t,
                      1.0 - 0.3 * t, 1.0 - 0.3 * t, 1])
        trows.append(["UNS", 10, t, "edge_percentage", 0.9 - 0.3 * t, 0.05,
                      0.7 - 0.3 * t, 0.85 - 0.3 * t, 0.9 - 0.3 * t,
                      0.95 - 0.3 * t, 1.1 - 0.3 * t, 10])
    t_path = write_csv("t_summary.csv", TEMPORAL_SUMMARY_HEADER, trows)
    return {
        "convergence": FigureSpec(kind="convergence", inputs=(conv_path,),
                                  out=tmp_path / f"{out_prefix}_conv.png"),
        "boxplot": FigureSpec(kind="boxplot", inputs=(box_path,),
                              out=tmp_path / f"{out_prefix}_box.png"),
        "clt_histogram": FigureSpec(kind="clt_histogram", inputs=(clt_raw, clt_summary),
                                    out=tmp_path / f"{out_prefix}_clt.png"),
        "temporal": FigureSpec(kind="temporal", inputs=(t_path,),
                               out=tmp_path / f"{out_prefix}_temp.png"),
    }


@pytest.mark.parametrize("kind", ["convergence", "boxplot", "clt_histogram", "temporal"])
def test_rerun_is_byte_identical(write_csv, tmp_path, kind):
    first = _specs_for_all_kinds(write_csv, tmp_path, "a")[kind]
    second = _specs_for_all_kinds(write_csv, tmp_path, "b")[kind]
    png_a, svg_a = render(first)
    png_b, svg_b = render(second)
    assert png_a.read_bytes() == png_b.read_bytes()
    assert svg_a.read_bytes() == svg_b.read_bytes()
