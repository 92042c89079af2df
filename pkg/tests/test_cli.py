import json
import math
import subprocess
import sys

import pytest


def run_cli(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "hyper2d", *args],
        capture_output=True, text=True, cwd=cwd,
    )


def csv_rows(text):
    lines = [ln for ln in text.splitlines() if ln]
    header = lines[0].split(",")
    return header, [ln.split(",") for ln in lines[1:]]


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------


def test_classify_elliptic_csv():
    out = run_cli("classify", "--alpha", "-1", "--beta", "0")
    assert out.returncode == 0
    header, rows = csv_rows(out.stdout)
    assert header[:2] == ["class", "delta"]
    assert rows[0][0] == "elliptic"
    assert float(rows[0][1]) == -4.0


def test_classify_generic_hyperbolic_json():
    out = run_cli("classify", "--alpha", "2", "--beta", "3", "--format", "json")
    assert out.returncode == 0
    row = json.loads(out.stdout)["rows"][0]
    assert row["class"] == "hyperbolic"
    assert row["delta"] == 17.0
    assert (row["canonical_alpha"], row["canonical_beta"]) == (1.0, 0.0)
    assert row["map_yy"] == pytest.approx(math.sqrt(17) / 2, rel=1e-15)


def test_classify_parabolic_combination():
    out = run_cli("classify", "--alpha", "-0.25", "--beta", "1")
    assert out.returncode == 0
    _, rows = csv_rows(out.stdout)
    assert rows[0][0] == "parabolic"
    assert float(rows[0][1]) == 0.0


def test_classify_bad_number_is_usage_error():
    out = run_cli("classify", "--alpha", "two", "--beta", "0")
    assert out.returncode == 2


def test_classify_nonfinite_is_domain_error():
    out = run_cli("classify", "--alpha", "nan", "--beta", "0")
    assert out.returncode == 3


# ---------------------------------------------------------------------------
# boost
# ---------------------------------------------------------------------------


@pytest.fixture()
def events_file(tmp_path):
    path = tmp_path / "events.csv"
    path.write_text("x,t\n1,0\n3,2\n1,1\n", encoding="utf-8")
    return path


def test_boost_with_zero_velocity_reproduces_events(events_file):
    out = run_cli("boost", "--v", "0", "--events", str(events_file))
    assert out.returncode == 0
    _, rows = csv_rows(out.stdout)
    for row in rows:
        assert row[0] == row[2] and row[1] == row[3]


def test_boost_three_four_five(events_file):
    out = run_cli("boost", "--v", "0.6", "--events", str(events_file))
    assert out.returncode == 0
    _, rows = csv_rows(out.stdout)
    assert float(rows[0][2]) == 1.25
    assert float(rows[0][3]) == 0.75


def test_boost_preserves_interval_columns(events_file):
    out = run_cli("boost", "--rapidity", "1.3", "--events", str(events_file))
    assert out.returncode == 0
    _, rows = csv_rows(out.stdout)
    for row in rows:
        before, after = float(row[4]), float(row[5])
        assert abs(before - after) <= 1e-10 * (1 + abs(before))


def test_boost_superluminal_is_domain_error(events_file):
    out = run_cli("boost", "--v", "1", "--events", str(events_file))
    assert out.returncode == 3


def test_boost_requires_exactly_one_parameter(events_file):
    assert run_cli("boost", "--events", str(events_file)).returncode == 2
    both = run_cli("boost", "--v", "0.1", "--rapidity", "1", "--events", str(events_file))
    assert both.returncode == 2


def test_boost_rejects_malformed_events(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("a,b\n1,2\n", encoding="utf-8")
    assert run_cli("boost", "--v", "0.5", "--events", str(bad)).returncode == 2
    worse = tmp_path / "worse.csv"
    worse.write_text("x,t\n1,zebra\n", encoding="utf-8")
    assert run_cli("boost", "--v", "0.5", "--events", str(worse)).returncode == 2


# ---------------------------------------------------------------------------
# map
# ---------------------------------------------------------------------------


def test_map_row_count_and_header():
    out = run_cli("map", "--fn", "exp", "--grid", "-1:1:11,-1:1:11")
    assert out.returncode == 0
    header, rows = csv_rows(out.stdout)
    assert header == ["x", "t", "u", "v", "in_domain"]
    assert len(rows) == 121


def test_map_log_outside_sector_flags_every_row():
    out = run_cli("map", "--fn", "log", "--grid", "-3:-2:5,-1:1:5", "--format", "json")
    assert out.returncode == 0
    rows = json.loads(out.stdout)["rows"]
    assert len(rows) == 25
    assert all(row["in_domain"] is False for row in rows)
    assert all(row["u"] is None for row in rows)  # NaN maps to null in JSON


def test_map_log_exp_roundtrip_columns():
    out = run_cli("map", "--fn", "comp(log,exp)", "--grid", "-1:1:9,-1:1:9")
    assert out.returncode == 0
    _, rows = csv_rows(out.stdout)
    for row in rows:
        assert row[4] == "true"
        assert abs(float(row[2]) - float(row[0])) <= 1e-12
        assert abs(float(row[3]) - float(row[1])) <= 1e-12


def test_map_rejects_unknown_function():
    assert run_cli("map", "--fn", "sinh").returncode == 2


def test_map_rejects_malformed_grid():
    assert run_cli("map", "--fn", "exp", "--grid", "0:1").returncode == 2
    assert run_cli("map", "--fn", "exp", "--grid", "0:1:4,0:1:1").returncode == 2


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------


def test_check_passes_for_exp_on_default_grid():
    out = run_cli("check", "--fn", "exp")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["passed"] is True
    assert doc["cr"]["max_abs_cr_residual"] <= doc["tolerances"]["cr"]
    assert doc["wave"]["max_abs_wave_residual"] <= doc["tolerances"]["wave"]
    for section in ("cr", "wave"):
        total = (
            doc[section]["points_evaluated"]
            + doc[section]["points_skipped_out_of_domain"]
        )
        assert total == 41 * 41


def test_check_fails_for_the_nonanalytic_control():
    out = run_cli("check", "--fn", "test-nonanalytic")
    assert out.returncode == 1
    doc = json.loads(out.stdout)
    assert doc["passed"] is False
    assert doc["cr"]["max_abs_cr_residual"] == pytest.approx(1.0, abs=1e-6)


def test_check_usage_error_on_bad_function():
    assert run_cli("check", "--fn", "wavelet").returncode == 2


def test_check_respects_config_tolerances(tmp_path):
    cfg = tmp_path / "strict.json"
    cfg.write_text(json.dumps({"cr_tolerance": 1e-30}), encoding="utf-8")
    out = run_cli("check", "--fn", "exp", "--config", str(cfg))
    assert out.returncode == 1


def test_unknown_config_key_is_usage_error(tmp_path):
    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps({"cr_tol": 1.0}), encoding="utf-8")
    assert run_cli("check", "--fn", "exp", "--config", str(cfg)).returncode == 2


# ---------------------------------------------------------------------------
# trajectory
# ---------------------------------------------------------------------------


def test_trajectory_default_range_and_center_row():
    out = run_cli("trajectory", "--g", "1")
    assert out.returncode == 0
    header, rows = csv_rows(out.stdout)
    assert header == ["tau", "t", "x", "proper_acceleration", "hyperbola_residual"]
    assert len(rows) == 101
    middle = [float(v) for v in rows[50]]
    assert middle == [0.0, 0.0, 1.0, 1.0, 0.0]


def test_trajectory_columns_hold_their_invariants():
    out = run_cli("trajectory", "--g", "2", "--tau", "-6:6:201")
    assert out.returncode == 0
    _, rows = csv_rows(out.stdout)
    for row in rows:
        assert abs(float(row[3]) - 0.5) <= 1e-12
        assert float(row[4]) <= 1e-12


def test_trajectory_rejects_nonpositive_g():
    assert run_cli("trajectory", "--g", "0").returncode == 3
    assert run_cli("trajectory", "--g", "-1").returncode == 3


# ---------------------------------------------------------------------------
# potential
# ---------------------------------------------------------------------------


def test_potential_hyperbolic_constant_on_hyperbola():
    # corners of the grid stay inside the sector; value is log of interval
    out = run_cli("potential", "--mode", "hyperbolic", "--grid", "2:4:9,-0.5:0.5:9",
                  "--format", "json")
    assert out.returncode == 0
    rows = json.loads(out.stdout)["rows"]
    for row in rows:
        assert row["in_domain"] is True
        expected = 0.5 * math.log(row["x"] ** 2 - row["t"] ** 2)
        assert abs(row["potential"] - expected) <= 1e-12


def test_potential_hyperbolic_flags_points_outside_sector():
    out = run_cli("potential", "--mode", "hyperbolic", "--grid", "-1:1:5,-1:1:5")
    assert out.returncode == 0
    header, rows = csv_rows(out.stdout)
    assert header == ["x", "t", "potential", "in_domain"]
    flags = {row[3] for row in rows}
    assert flags == {"true", "false"}


def test_potential_euclidean_matches_formula():
    out = run_cli("potential", "--mode", "euclidean", "--slope", "2", "--intercept", "1",
                  "--grid", "0.5:1.5:5,0.5:1.5:5", "--format", "json")
    assert out.returncode == 0
    rows = json.loads(out.stdout)["rows"]
    for row in rows:
        expected = 2 * math.log(math.hypot(row["x"], row["y"])) + 1
        assert abs(row["potential"] - expected) <= 1e-12


def test_potential_requires_mode():
    assert run_cli("potential").returncode == 2


# ---------------------------------------------------------------------------
# output plumbing
# ---------------------------------------------------------------------------


def test_outputs_are_byte_identical_across_runs(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        out = run_cli("map", "--fn", "comp(exp,pow:2)", "--grid", "-1:1:21,-1:1:21",
                      "--out", str(path))
        assert out.returncode == 0
    assert a.read_bytes() == b.read_bytes()
    ja, jb = tmp_path / "a.json", tmp_path / "b.json"
    for path in (ja, jb):
        assert run_cli("check", "--fn", "log", "--grid", "0.5:2:21,-0.4:0.4:21",
                       "--out", str(path)).returncode == 0
    assert ja.read_bytes() == jb.read_bytes()


def test_csv_uses_17_significant_digits():
    out = run_cli("trajectory", "--g", "1", "--tau", "0:1:2")
    _, rows = csv_rows(out.stdout)
    # sinh(1) needs the full precision to round-trip
    assert rows[1][1] == format(math.sinh(1.0), ".17g")


def test_config_sets_default_format_and_flag_overrides(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"format": "json"}), encoding="utf-8")
    out = run_cli("classify", "--alpha", "1", "--beta", "0", "--config", str(cfg))
    assert out.stdout.lstrip().startswith("{")
    over = run_cli("classify", "--alpha", "1", "--beta", "0", "--config", str(cfg),
                   "--format", "csv")
    assert over.stdout.startswith("class,")
