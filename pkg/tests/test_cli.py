"""Command-line interface tests."""

import json

import pytest

from thermsched.assets import demo15_floorplan_path, demo15_power_path
from thermsched.cli import SWEEP_HEADER, _parse_axis, main


FLP_3 = """\
# three cores in a row, 4 mm x 4 mm each
a 0.004 0.004 0.0 0.0
b 0.004 0.004 0.004 0.0
c 0.004 0.004 0.008 0.0
"""

POWER_3 = """\
a,1.0,1.0
b,1.2,1.0
c,0.8,1.0
"""


@pytest.fixture
def three_core_files(tmp_path):
    flp = tmp_path / "die.flp"
    flp.write_text(FLP_3)
    power = tmp_path / "power.csv"
    power.write_text(POWER_3)
    return flp, power


# ── axis parsing ─────────────────────────────────────────────────────────


def test_parse_axis_range_inclusive():
    assert _parse_axis("145:185:5") == [145.0 + 5 * k for k in range(9)]
    assert _parse_axis("20:100:10") == [20.0 + 10 * k for k in range(9)]
    assert _parse_axis("7:7:1") == [7.0]


def test_parse_axis_comma_list_and_single():
    assert _parse_axis("1,2.5,4") == [1.0, 2.5, 4.0]
    assert _parse_axis("42") == [42.0]


def test_parse_axis_errors():
    from thermsched.cli import _UsageError

    with pytest.raises(_UsageError):
        _parse_axis("1:2:0")
    with pytest.raises(_UsageError):
        _parse_axis("5:1:1")
    with pytest.raises(_UsageError):
        _parse_axis("a,b")
    with pytest.raises(_UsageError):
        _parse_axis("1:2:3:4")


def test_sweep_spec_and_row_types():
    from thermsched.cli import SweepRow, SweepSpec

    spec = SweepSpec(tl_values=(145.0,), stcl_values=(20.0, 30.0))
    assert spec.stcl_values == (20.0, 30.0)
    with pytest.raises(ValueError):
        SweepSpec(tl_values=(), stcl_values=(20.0,))
    row = SweepRow(145.0, 20.0, 7.0, 8.0, 144.29)
    assert row.csv_line() == "145,20,7,8,144.2900"
    assert len(row.csv_line().split(",")) == len(SWEEP_HEADER.split(","))


# ── single runs ──────────────────────────────────────────────────────────


def test_single_run_json(three_core_files, tmp_path, capsys):
    flp, power = three_core_files
    out = tmp_path / "schedule.json"
    code = main(
        [
            "--floorplan", str(flp),
            "--power", str(power),
            "--tl", "200",
            "--stcl", "500",
            "--out", str(out),
        ]
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["config"]["tl_c"] == 200.0
    assert len(doc["sessions"]) == 1  # generous limits: everything in one go
    assert sorted(doc["sessions"][0]["cores"]) == ["a", "b", "c"]
    assert doc["max_temperature_c"] < 200.0


def test_single_run_text_format(three_core_files, capsys):
    flp, power = three_core_files
    code = main(
        [
            "--floorplan", str(flp),
            "--power", str(power),
            "--tl", "200",
            "--stcl", "500",
            "--format", "text",
        ]
    )
    assert code == 0
    text = capsys.readouterr().out
    assert "session 1:" in text
    assert "total length" in text


def test_single_run_screening_failure_exit_2(three_core_files, capsys):
    flp, power = three_core_files
    code = main(
        ["--floorplan", str(flp), "--power", str(power), "--tl", "46", "--stcl", "10"]
    )
    assert code == 2
    err = capsys.readouterr().err
    assert "screening failed" in err
    assert "b:" in err  # the hottest core is named with its temperature
    assert "raise the temperature limit" in err


def test_missing_floorplan_exit_1(capsys):
    code = main(
        ["--floorplan", "no/such/file.flp", "--power", "also_missing.csv",
         "--tl", "100", "--stcl", "10"]
    )
    assert code == 1
    assert "no/such/file.flp" in capsys.readouterr().err


def test_malformed_floorplan_exit_1(tmp_path, capsys):
    flp = tmp_path / "bad.flp"
    flp.write_text("a 1 1 0\n")
    power = tmp_path / "p.csv"
    power.write_text("a,1,1\n")
    code = main(
        ["--floorplan", str(flp), "--power", str(power), "--tl", "100", "--stcl", "10"]
    )
    assert code == 1
    assert "line 1" in capsys.readouterr().err


def test_mode_flag_conflicts(three_core_files, capsys):
    flp, power = three_core_files
    base = ["--floorplan", str(flp), "--power", str(power)]
    assert main(base + ["--tl", "100", "--stcl", "10", "--sweep-tl", "1:2:1"]) == 1
    assert main(base + ["--sweep-tl", "100:110:10"]) == 1  # missing --sweep-stcl
    assert main(base) == 1  # no mode at all
    assert main(base + ["--tl", "100"]) == 1  # missing --stcl


def test_param_overrides_change_results(three_core_files, tmp_path):
    flp, power = three_core_files
    out_a = tmp_path / "a.json"
    out_b = tmp_path / "b.json"
    base = ["--floorplan", str(flp), "--power", str(power), "--tl", "300", "--stcl", "500"]
    assert main(base + ["--out", str(out_a)]) == 0
    assert main(base + ["--ambient", "25", "--out", str(out_b)]) == 0
    doc_a = json.loads(out_a.read_text())
    doc_b = json.loads(out_b.read_text())
    assert doc_b["thermal_params"]["t_ambient"] == 25.0
    # shifting ambient shifts every steady temperature by the same offset
    assert doc_b["max_temperature_c"] == pytest.approx(
        doc_a["max_temperature_c"] - 20.0, abs=1e-9
    )


def test_params_file_loaded(three_core_files, tmp_path):
    flp, power = three_core_files
    conf = tmp_path / "bench.conf"
    conf.write_text("t_ambient = 30\nk_silicon = 150\n")
    out = tmp_path / "s.json"
    code = main(
        ["--floorplan", str(flp), "--power", str(power), "--tl", "300",
         "--stcl", "500", "--params", str(conf), "--out", str(out)]
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["thermal_params"]["t_ambient"] == 30.0
    assert doc["thermal_params"]["k_silicon"] == 150.0


# ── sweeps ───────────────────────────────────────────────────────────────


def test_sweep_single_point(three_core_files, capsys):
    flp, power = three_core_files
    code = main(
        ["--floorplan", str(flp), "--power", str(power),
         "--sweep-tl", "200", "--sweep-stcl", "500"]
    )
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == SWEEP_HEADER
    assert len(lines) == 2


def test_sweep_grid_shape_and_invariants(three_core_files, capsys):
    flp, power = three_core_files
    code = main(
        ["--floorplan", str(flp), "--power", str(power),
         "--sweep-tl", "150:200:25", "--sweep-stcl", "20:500:240"]
    )
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 1 + 3 * 3
    tl_order = []
    for row in lines[1:]:
        tl, stcl, length, effort, max_temp = (float(x) for x in row.split(","))
        assert max_temp < tl
        assert effort >= length
        tl_order.append((tl, stcl))
    assert tl_order == sorted(tl_order)  # row-major emission


def test_sweep_skips_failing_tl(three_core_files, capsys):
    flp, power = three_core_files
    code = main(
        ["--floorplan", str(flp), "--power", str(power),
         "--sweep-tl", "46,200", "--sweep-stcl", "500"]
    )
    assert code == 0
    captured = capsys.readouterr()
    lines = captured.out.strip().splitlines()
    assert len(lines) == 2  # header + the TL=200 row only
    assert lines[1].startswith("200,")
    assert "skipping TL=46" in captured.err


def test_sweep_all_tls_failing_exit_2(three_core_files, capsys):
    flp, power = three_core_files
    code = main(
        ["--floorplan", str(flp), "--power", str(power),
         "--sweep-tl", "46,47", "--sweep-stcl", "10"]
    )
    assert code == 2
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == [SWEEP_HEADER]


def test_sweep_deterministic_bytes(three_core_files, tmp_path):
    flp, power = three_core_files
    args = ["--floorplan", str(flp), "--power", str(power),
            "--sweep-tl", "150:200:25", "--sweep-stcl", "50,500"]
    out1 = tmp_path / "s1.csv"
    out2 = tmp_path / "s2.csv"
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_sweep_on_bundled_demo_assets(tmp_path):
    out = tmp_path / "demo.csv"
    code = main(
        ["--floorplan", str(demo15_floorplan_path()),
         "--power", str(demo15_power_path()),
         "--sweep-tl", "165", "--sweep-stcl", "30", "--out", str(out)]
    )
    assert code == 0
    header, row = out.read_text().strip().splitlines()
    assert header == SWEEP_HEADER
    tl, stcl, length, effort, max_temp = (float(x) for x in row.split(","))
    assert (tl, stcl) == (165.0, 30.0)
    assert max_temp < 165.0
