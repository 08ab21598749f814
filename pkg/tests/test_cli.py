import csv
import hashlib
import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from hcv import cli
from hcv.cli import SWEEP_COLUMNS, fmt, main, sweep_points


def run(*argv):
    return main([str(a) for a in argv])


def test_verify_pass(capsys):
    assert run("verify", "--n", 5, "--a", 0.6, "--theta", 0.9) == 0
    out = capsys.readouterr().out
    assert "verdict: pass" in out
    minors = [float(l.split("=")[1]) for l in out.splitlines() if l.strip().startswith("M_")]
    assert len(minors) == 7 and all(m > 0 for m in minors)


def test_verify_bad_a(capsys):
    assert run("verify", "--n", 5, "--a", 1.5) == 64
    assert "(-1, 1)" in capsys.readouterr().err


def test_verify_bad_flag():
    with pytest.raises(SystemExit) as exc:
        run("verify", "--n", 5, "--a", 0.5, "--bogus")
    assert exc.value.code == 64


def test_verify_endpoint_routing(capsys):
    assert run("verify", "--n", 4, "--a", 0.333333333, "--theta", 1.0, "--radial", 16, "--angular", 32) == 0
    assert "branch: endpoint" in capsys.readouterr().out


def test_verify_grid_too_small():
    assert run("verify", "--n", 4, "--a", 0.5, "--radial", 4) == 64


def test_fmt():
    assert fmt(0.1) == "0.10000000000000001"
    assert fmt(3) == "3" and fmt(None) == ""
    assert fmt(1 + 2j) == "1+2j"


def test_sweep_csv(tmp_path):
    out = tmp_path / "s.csv"
    code = run("sweep", "--n-min", 3, "--n-max", 4, "--a-count", 2, "--theta-count", 2,
               "--radial", 8, "--angular", 16, "--no-chd", "--output", out)
    rows = list(csv.reader(out.open()))
    assert tuple(rows[0]) == SWEEP_COLUMNS
    assert len(rows) == 1 + 2 * 2 * 2
    assert [r[:3] for r in rows[1:]] == sorted((r[:3] for r in rows[1:]), key=lambda r: tuple(map(float, r)))
    assert code == (0 if all(r[-1] == "pass" for r in rows[1:]) else 2)
    # a = (n-2)/(n+2) starts each block
    assert float(rows[1][1]) == pytest.approx(0.2, abs=1e-16) and rows[1][3] == "endpoint"


def test_sweep_empty_is_header_only(capsys):
    assert run("sweep", "--n-min", 3, "--n-max", 2) == 0
    assert capsys.readouterr().out.strip().split(",") == list(SWEEP_COLUMNS)


def test_sweep_json_fields(capsys):
    run("sweep", "--n-min", 3, "--n-max", 3, "--a-count", 2, "--theta-count", 1, "--radial", 8,
        "--angular", 16, "--no-chd", "--format", "json")
    data = json.loads(capsys.readouterr().out)
    assert len(data) == 2 and all(set(d) == set(SWEEP_COLUMNS) for d in data)


def test_sweep_abort_marker(tmp_path, monkeypatch):
    def interrupted(*args, **kw):
        yield from ()
        raise KeyboardInterrupt
    monkeypatch.setattr(cli.V, "sweep", interrupted)
    out = tmp_path / "s.csv"
    assert run("sweep", "--n-max", 2, "--output", out) == 130
    lines = out.read_text().splitlines()
    assert lines[-1] == "#ABORTED" and lines[0].split(",") == list(SWEEP_COLUMNS)


def test_sweep_points_grid():
    pts = sweep_points(1, 2, 3, 0.999, 4)
    assert len(pts) == 24 and pts == sorted(pts)


def test_tables_commands(capsys):
    assert run("tables", "--table", 1, "--n", 7, "--a", 0.75, "--theta", 1.1) == 0
    out = capsys.readouterr().out
    assert out.count(" ok") >= 4 and "nonzero split determinants: 4" in out
    assert run("tables", "--table", 4, "--n", 6, "--a", 0.7, "--theta", 0.4) == 0
    assert "nonzero split determinants: 49" in capsys.readouterr().out
    assert run("tables", "--table", 3, "--n", 6, "--a", 0.7, "--theta", 0.4) == 64


def test_tables_env_tolerance(monkeypatch, capsys):
    monkeypatch.setenv("HCV_TOLERANCE_MINOR", "1e-30")
    assert run("tables", "--table", 1, "--n", 7, "--a", 0.75, "--theta", 1.1) == 2


def _digest(path):
    return hashlib.md5(path.read_bytes()).hexdigest()


@pytest.mark.parametrize("argv", [
    ["--map", "F_a", "--a", 0],
    ["--map", "f_beta", "--beta", 1.5707963, "--n", 1, "--theta", 0],
])
def test_render_svg(tmp_path, argv):
    out = tmp_path / "a.svg"
    assert run("render", *argv, "--samples", 64, "--output", out) == 0
    root = ET.parse(out).getroot()
    polys = root.findall("{http://www.w3.org/2000/svg}polyline")
    assert len(polys) == 8 + 16
    assert "RunConfig" in out.read_text().splitlines()[1]
    first = _digest(out)
    run("render", *argv, "--samples", 64, "--output", out)
    assert _digest(out) == first


def test_render_conv_csv(tmp_path):
    out = tmp_path / "c.svg"
    assert run("render", "--map", "conv", "--n", 3, "--a", 0.5, "--theta", 0, "--samples", 64,
               "--output", out) == 0
    rows = list(csv.reader((tmp_path / "c.csv").open()))
    assert rows[0] == ["t", "f_re", "f_im", "phi_re", "phi_im"] and len(rows) == 4097


def test_render_bad_radius():
    assert run("render", "--map", "F_a", "--r", 1.0) == 64


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "hcv", "verify", "--n", "3", "--a", "0.5",
                        "--radial", "8", "--angular", "16", "--no-chd"], capture_output=True, text=True)
    assert r.returncode == 0 and "verdict: pass" in r.stdout
