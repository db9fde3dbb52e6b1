import json
import math
import subprocess
import sys

import pytest

from isoperim.cli import RunSpec, build_parser, main, run, spec_from_args
from isoperim.region import Region

SQUARE = {"kind": "convex_polygon", "vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]}


@pytest.fixture
def regions(tmp_path):
    paths = {}
    for name, data in {"square": SQUARE, "stripe": {"kind": "stripe", "width": 1}, "cusp": {"kind": "cusp"},
                       "bad": {"kind": "stripe", "width": 1, "height": 2}}.items():
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(data))
        paths[name] = str(p)
    return paths


def _contained(svg_report_polygon, region, tol=1e-6):
    return region.contains(svg_report_polygon, tol=tol).all()


def test_incircle_square(regions, tmp_path, capsys):
    out = tmp_path / "o"
    assert main(["incircle", "--region", regions["square"], "--out", str(out)]) == 0
    data = json.loads((out / "incircle.json").read_text())
    assert data == {"center": [0.5, 0.5], "radius": 0.5, "attained": True, "unique": True}
    svg = (out / "incircle.svg").read_text()
    assert "stroke-dasharray" in svg and "<circle" in svg


def test_solve_p_on_stripe(regions, tmp_path):
    out = tmp_path / "o"
    assert main(["solve-p", "--region", regions["stripe"], "--L", str(math.pi + 2), "--out", str(out)]) == 0
    rep = json.loads((out / "report.json").read_text())
    assert rep["area"] == pytest.approx(1.7854, abs=1e-3)
    verts = rep["polygon"]["vertices"]
    assert _contained(verts, Region.stripe(1.0))
    ys = [v[1] for v in verts]
    assert min(ys) == pytest.approx(0.0, abs=1e-5) and max(ys) == pytest.approx(1.0, abs=1e-5)


def test_solve_p_rejects_long_perimeter(regions, tmp_path, capsys):
    code = main(["solve-p", "--region", regions["square"], "--L", "5", "--out", str(tmp_path / "o")])
    assert code == 2
    assert "do not exist" in capsys.readouterr().err


def test_malformed_region_names_field(regions, tmp_path, capsys):
    assert main(["incircle", "--region", regions["bad"], "--out", str(tmp_path / "o")]) == 2
    assert "height" in capsys.readouterr().err


def test_missing_region_file(tmp_path, capsys):
    assert main(["incircle", "--region", str(tmp_path / "nope.json"), "--out", str(tmp_path)]) == 2
    assert main(["solve-p", "--out", str(tmp_path)]) == 2


def test_bad_solver_flags(regions, tmp_path):
    assert main(["solve-p", "--region", regions["square"], "--L", "3", "--n-angles", "33",
                 "--out", str(tmp_path)]) == 2


def test_unbounded_profile_needs_truncation(regions, tmp_path):
    assert main(["profile", "--region", regions["stripe"], "--out", str(tmp_path)]) == 2


def test_cusp_solve_reports_nonexistence(regions, tmp_path):
    out = tmp_path / "o"
    code = main(["solve-p", "--region", regions["cusp"], "--L", str(2 * math.pi), "--n-angles", "128",
                 "--out", str(out)])
    assert code == 2
    data = json.loads((out / "nonexistence.json").read_text())
    assert all(a < math.pi for a in data["areas"])


def test_solve_pstar_and_render(regions, tmp_path):
    out = tmp_path / "o"
    assert main(["solve-pstar", "--region", regions["square"], "--A", "0.5", "--n-angles", "128",
                 "--out", str(out)]) == 0
    rep = json.loads((out / "report.json").read_text())
    assert rep["area"] == pytest.approx(0.5, abs=1e-6)
    assert main(["render", "--region", regions["square"], "--report", str(out / "report.json"),
                 "--out", str(out)]) == 0
    assert (out / "render.svg").read_text().count("<path") == 2


def test_profile_writes_csv(regions, tmp_path):
    out = tmp_path / "o"
    assert main(["profile", "--region", regions["square"], "--grid", "3", "--n-angles", "64",
                 "--out", str(out)]) == 0
    lines = (out / "profile_ell.csv").read_text().splitlines()
    assert lines[0] == "independent,dependent,converged,residual"
    assert len(lines) == 4
    assert (out / "profile.svg").read_text().count("<path") == 4


def test_reciprocity_command(regions, tmp_path):
    out = tmp_path / "o"
    assert main(["reciprocity", "--region", regions["square"], "--grid", "3", "--n-angles", "64",
                 "--out", str(out)]) == 0
    assert json.loads((out / "reciprocity.json").read_text())["passed"] is True


def test_slice_command(regions, tmp_path):
    out = tmp_path / "o"
    assert main(["slice", "--region", regions["square"], "--A", "0.25", "--out", str(out)]) == 0
    data = json.loads((out / "slice.json").read_text())
    assert data["alpha0"] == pytest.approx(0.75)
    assert data["perim_after"] == pytest.approx(2.5)


def test_nonexistence_demo_command(regions, tmp_path):
    out = tmp_path / "o"
    assert main(["nonexistence-demo", "--region", regions["square"], "--L", "6", "--out", str(out)]) == 0
    rows = (out / "comb.csv").read_text().splitlines()
    assert rows[0] == "k,area,perimeter" and len(rows) == 11
    assert all(r.endswith(",6.000000") for r in rows[1:])


def test_cusp_demo_command(tmp_path):
    out = tmp_path / "o"
    assert main(["cusp-demo", "--k", "5", "--k", "10", "--n-angles", "128", "--out", str(out)]) == 0
    data = json.loads((out / "cusp.json").read_text())
    assert data["increasing"] and data["below_reference"]


def test_outputs_are_deterministic(regions, tmp_path):
    files = []
    for name in ("a", "b"):
        out = tmp_path / name
        main(["solve-p", "--region", regions["square"], "--L", "3", "--n-angles", "64", "--seed", "7",
              "--out", str(out)])
        files.append(((out / "report.json").read_bytes(), (out / "shape.svg").read_bytes()))
    assert files[0] == files[1]


def test_svg_floats_have_six_decimals(regions, tmp_path):
    import re

    out = tmp_path / "o"
    main(["solve-p", "--region", regions["square"], "--L", "3", "--n-angles", "64", "--out", str(out)])
    svg = (out / "shape.svg").read_text().split("<svg", 1)[1]
    nums = re.findall(r"\d+\.\d+", svg)
    assert nums and all(len(n.split(".")[1]) == 6 for n in nums)


def test_spec_validation_before_dispatch(tmp_path):
    args = build_parser().parse_args(["slice", "--region", "x.json", "--out", str(tmp_path)])
    spec = spec_from_args(args)
    assert isinstance(spec, RunSpec)
    assert run(spec) == 2


def test_module_entry_point_and_logging(regions, tmp_path):
    env = {"ISOPERIM_LOG": "INFO", "PATH": "/usr/bin:/bin"}
    import os

    env = {**os.environ, **env}
    proc = subprocess.run([sys.executable, "-m", "isoperim", "incircle", "--region", regions["square"],
                           "--out", str(tmp_path / "o")], capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert "wrote" in proc.stderr
