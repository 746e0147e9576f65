import io
import json
import math
import xml.etree.ElementTree as ET

import pytest

from e2zeros import export, plots
from e2zeros.eisenstein import SQRT3_2, V0
from e2zeros.equivariant import STRIP_EPS
from e2zeros.modular import farey_labels
from e2zeros.verify import Report
from e2zeros.zerofinder import build_catalog

SVG = "{http://www.w3.org/2000/svg}"


def parse_svg(path):
    root = ET.parse(path).getroot()
    assert root.tag == SVG + "svg"
    assert root.get("width") and root.get("height")
    w, h = int(root.get("width")), int(root.get("height"))
    assert root.get("viewBox") == f"0 0 {w} {h}"
    return root


def markers(root):
    return [c for c in root.iter(SVG + "circle") if c.get("class") == "marker"]


def polylines(root):
    return [[tuple(map(float, p.split(","))) for p in pl.get("points").split()]
            for pl in root.iter(SVG + "polyline")]


# --- CSV / JSON --------------------------------------------------------------

def test_csv_single(tmp_path):
    out = tmp_path / "z.csv"
    export.export_csv(build_catalog(1), out)
    lines = out.read_text().splitlines()
    assert lines[0] == "c,d,a,b,x_pred1,y_pred1,x_pred2,y_pred2,x_refined,y_refined,residual,theta_scaled,newton_iters"
    assert len(lines) == 2
    row = export.read_csv(out)[0]
    assert abs(row["x_refined"]) < 1e-15
    assert (row["c"], row["d"], row["a"], row["b"]) == (1, 0, 0, -1)


def test_csv_round_trip(tmp_path):
    cat = build_catalog(5)
    out = tmp_path / "z.csv"
    export.export_csv(cat, out)
    rows = export.read_csv(out)
    assert len(rows) == len(farey_labels(5))
    for rec, row in zip(cat, rows):
        assert row["x_refined"] == rec.refined.real and row["y_refined"] == rec.refined.imag
        assert row["theta_scaled"] == rec.theta_scaled
        assert row["residual"] == rec.residual
        assert row["newton_iters"] == rec.newton_iters
        assert (row["c"], row["d"]) == (rec.c, rec.d)


def test_csv_rejects_empty(tmp_path):
    with pytest.raises(ValueError):
        export.export_csv([], tmp_path / "z.csv")


def test_csv_unwritable(tmp_path):
    with pytest.raises(OSError):
        export.export_csv(build_catalog(1), tmp_path / "missing" / "z.csv")


def test_json_catalog(tmp_path):
    out = tmp_path / "z.json"
    export.export_json(build_catalog(3), out)
    doc = json.loads(out.read_text())
    assert set(doc) == {"constants", "records", "generated_by"}
    assert len(doc["records"]) == 4
    assert 0.000281 < float(doc["constants"]["lambda0"]) < 0.000282
    assert float(doc["constants"]["v0"]) == V0
    rec = doc["records"][0]
    assert rec["label"] == "0" and isinstance(rec["x_refined"], str)


def test_json_empty_report():
    buf = io.StringIO()
    export.export_json(Report(), buf)
    doc = json.loads(buf.getvalue())
    assert doc["checks"] == [] and doc["passed"] is True
    assert "records" not in doc and "generated_by" in doc


def test_json_report_content():
    rep = Report()
    rep.add("x", 0.5, 1.0)
    rep.add("y", 2.0, 1.0)
    doc = export.report_document(rep)
    assert [c["passed"] for c in doc["checks"]] == [True, False]
    assert doc["checks"][0]["measured"] == "0.5"
    assert doc["passed"] is False


def test_exports_byte_identical(tmp_path):
    cat_a, cat_b = build_catalog(6), build_catalog(6)
    for name, fn in (("a", export.export_csv), ("b", export.export_json)):
        p1, p2 = tmp_path / f"{name}1", tmp_path / f"{name}2"
        fn(cat_a, p1)
        fn(cat_b, p2)
        assert p1.read_bytes() == p2.read_bytes()


# --- SVG -----------------------------------------------------------------------

def test_plot_spec_validation():
    with pytest.raises(ValueError):
        plots.PlotSpec("zeros_scatter", (1, 0), (0, 1))
    with pytest.raises(ValueError):
        plots.PlotSpec("zeros_scatter", (0, 1), (0, 1), width_px=10)
    with pytest.raises(ValueError):
        plots.PlotSpec("pie", (0, 1), (0, 1))
    with pytest.raises(ValueError):
        plots.plot_real_locus_svg(plots.default_spec("h_image"), "unused.svg")


def test_zeros_empty(tmp_path):
    out = tmp_path / "z.svg"
    plots.plot_zeros_svg([], plots.default_spec("zeros_scatter"), out)
    assert markers(parse_svg(out)) == []


def test_zeros_marker_count(tmp_path):
    cat = build_catalog(min_height=0.002)
    spec = plots.default_spec("zeros_scatter")
    out = tmp_path / "z.svg"
    cv = plots.plot_zeros_svg(cat, spec, out)
    in_band = [r for r in cat if 0.002 <= r.refined.imag <= 0.022]
    assert len(markers(parse_svg(out))) == cv.markers == len(in_band)


def test_parabola_endpoint(tmp_path):
    spec = plots.default_spec("zeros_scatter", y_range=(0.0, 0.2))
    out = tmp_path / "p.svg"
    cv = plots.plot_zeros_svg([], spec, out)
    first = polylines(parse_svg(out))[0][0]
    sx, sy = cv.px(-0.5, math.pi / 24)
    assert first == pytest.approx((round(sx, 2), round(sy, 2)), abs=0.006)


def test_real_locus_figure(tmp_path):
    spec = plots.default_spec("real_locus", samples=200)
    out = tmp_path / "r.svg"
    cv = plots.plot_real_locus_svg(spec, out)
    curve, upper, lower = polylines(parse_svg(out))
    _, top = cv.px(0, V0 + STRIP_EPS)
    _, bottom = cv.px(0, V0 - STRIP_EPS)
    _, mid = cv.px(0, V0)
    assert all(top < y < bottom for _, y in curve)
    # svg y points down: above 6/pi at x = 0, below at the edges
    assert curve[100][1] < mid or curve[99][1] < mid
    assert curve[0][1] > mid and curve[-1][1] > mid


def test_real_locus_two_samples(tmp_path):
    out = tmp_path / "r.svg"
    plots.plot_real_locus_svg(plots.default_spec("real_locus", samples=2), out)
    assert len(polylines(parse_svg(out))[0]) == 2


def test_h_image_curves():
    curves = plots.h_image_curves(plots.default_spec("h_image", samples=200))
    assert all(abs(w.real + 0.5) < 1e-9 for w in curves["left"])
    assert all(abs(w.real - 0.5) < 1e-9 for w in curves["right"])
    rho = complex(-0.5, SQRT3_2)
    assert abs(curves["left"][0] - rho.conjugate()) < 1e-10
    assert abs(curves["right"][0] - (1 + rho.conjugate())) < 1e-10
    assert all(w.imag < 0 for w in curves["arc"])


def test_h_image_svg(tmp_path):
    out = tmp_path / "h.svg"
    plots.plot_h_image_svg(plots.default_spec("h_image", samples=100), out)
    assert len(polylines(parse_svg(out))) == 4


def test_circles(tmp_path):
    cat = build_catalog(2)
    out = tmp_path / "c.svg"
    cv = plots.plot_circles_svg(cat, plots.default_spec("circles"), out)
    root = parse_svg(out)
    ellipses = list(root.iter(SVG + "ellipse"))
    kx, ky = cv.scale()
    # the z1 circle: tangent at 0 with diameter 1/v0
    e = ellipses[0]
    cx, cy = cv.px(0, 1 / (2 * V0))
    assert float(e.get("cx")) == pytest.approx(cx, abs=0.01)
    assert float(e.get("cy")) == pytest.approx(cy, abs=0.01)
    assert 2 * float(e.get("ry")) / ky == pytest.approx(0.523599, abs=1e-4)
    # label 1/2: diameter 1/(4 v0), plus its translate at -1/2
    assert 2 * float(ellipses[1].get("ry")) / ky == pytest.approx(0.130899, abs=1e-4)
    assert len(ellipses) == 3 and len(markers(root)) == 3


def test_circles_empty(tmp_path):
    out = tmp_path / "c.svg"
    plots.plot_circles_svg([], plots.default_spec("circles"), out)
    root = parse_svg(out)
    assert markers(root) == [] and list(root.iter(SVG + "ellipse")) == []
