"""Scenario files, traces, export tables, reproduction, and the CLI."""

import subprocess
import sys

import numpy as np
import pytest

import nff
from nff import (
    DEFAULT_CONTEXT,
    FRONT,
    BoundarySpec,
    ConfigError,
    DipoleArrayScenario,
    Direction,
    ErrorCurve,
    FieldTrace,
    InconsistentFarField,
    ScenarioConfig,
    TraceFormatError,
    analytic_angular_distribution,
    array_field,
    error_sweep,
    export_table,
    export_trace,
    ff_precoder,
    import_trace,
    load_scenario,
    parse_boundaries,
    parse_direction,
    reproduce_reference,
    run_sweep,
    trace_error_curve,
    uniform_linear_array,
    unit_vector,
)
from nff.cli import main

K = DEFAULT_CONTEXT.wavenumber


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


# ---------------------------------------------------------------------------
# scenario files


def test_load_scenario_minimal_defaults(tmp_path):
    path = _write(tmp_path, "s.cfg", "source = dipole-ula\nn = 8\nspacing_lambda = 0.5\n")
    cfg = load_scenario(path)
    assert cfg.n == 8 and cfg.spacing == 0.5
    assert cfg.direction == FRONT
    assert cfg.excitation == "ff-bf"
    assert (cfg.grid_lo, cfg.grid_hi, cfg.grid_ppd) == (0.1, 1e4, 100)
    assert cfg.boundaries == ()


def test_load_scenario_full(tmp_path):
    path = _write(
        tmp_path,
        "s.cfg",
        "# comment line\n"
        "source = dipole-ula\n"
        "n = 4\n"
        "spacing_lambda = 0.25   # trailing comment\n"
        "direction = 45, 120\n"
        "excitation = nf-bf\n"
        "grid_lo = 0.5\n"
        "grid_hi = 100\n"
        "grid_ppd = 20\n"
        "boundaries = qr, ar, up:0.8, wc:0.01\n",
    )
    cfg = load_scenario(path)
    assert cfg.direction == Direction(45.0, 120.0)
    assert cfg.excitation == "nf-bf"
    assert [s.kind for s in cfg.boundaries] == ["qr", "ar", "up", "wc"]
    assert cfg.boundaries[2].threshold == 0.8


def test_load_scenario_reports_offending_line(tmp_path):
    path = _write(tmp_path, "s.cfg", "source = dipole-ula\nn = 8\nwavelength = 2\n")
    with pytest.raises(ConfigError, match=r"s\.cfg:3.*unknown key 'wavelength'"):
        load_scenario(path)
    path = _write(tmp_path, "d.cfg", "n = 8\nn = 9\nspacing_lambda = 0.5\n")
    with pytest.raises(ConfigError, match=r"d\.cfg:2.*duplicate"):
        load_scenario(path)
    path = _write(tmp_path, "e.cfg", "just words\n")
    with pytest.raises(ConfigError, match=r"e\.cfg:1.*key = value"):
        load_scenario(path)


def test_scenario_semantic_validation(tmp_path):
    with pytest.raises(ConfigError, match="need n"):
        ScenarioConfig(source="dipole-ula")
    with pytest.raises(ConfigError, match="spacing_lambda"):
        ScenarioConfig(n=8)
    with pytest.raises(ConfigError, match="trace"):
        ScenarioConfig(source="imported-trace")
    with pytest.raises(ConfigError, match="nf-bf"):
        ScenarioConfig(source="imported-trace", trace_path="t.csv", excitation="nf-bf")
    with pytest.raises(ConfigError, match="geometry"):
        ScenarioConfig(
            source="imported-trace",
            trace_path="t.csv",
            excitation="none",
            boundaries=(BoundarySpec("qr"),),
        )
    with pytest.raises(ConfigError, match="grid_lo"):
        ScenarioConfig(n=1, grid_lo=5.0, grid_hi=1.0)


def test_parse_direction():
    assert parse_direction("front") == FRONT
    assert parse_direction("SIDE") == Direction(90.0, 90.0)
    assert parse_direction(" 30 , 200 ") == Direction(30.0, 200.0)
    with pytest.raises(ConfigError):
        parse_direction("up-and-left")
    with pytest.raises(ConfigError):
        parse_direction("190, 0")


def test_parse_boundaries():
    specs = parse_boundaries("qr, en:1.01, ep")
    assert [s.kind for s in specs] == ["qr", "en", "ep"]
    assert specs[1].threshold == 1.01
    assert specs[2].threshold == 0.99
    with pytest.raises(ConfigError):
        parse_boundaries("up:high")
    with pytest.raises(ConfigError):
        parse_boundaries("zz")


# ---------------------------------------------------------------------------
# sweeps from configs


def test_run_sweep_single_element_matches_direct_engine(tmp_path):
    cfg = ScenarioConfig(n=1, grid_lo=0.5, grid_hi=50.0, grid_ppd=10)
    result = run_sweep(cfg)
    # steering a single element degrades to uniform excitation
    assert result.curve.excitation == "none"
    scenario = DipoleArrayScenario(uniform_linear_array(1, 0.0))
    want = error_sweep(scenario, FRONT, result.curve.r)
    np.testing.assert_array_equal(result.curve.epsilon, want.epsilon)


def test_run_sweep_is_deterministic(tmp_path):
    cfg = ScenarioConfig(
        n=8, spacing=0.5, grid_lo=0.5, grid_hi=100.0, grid_ppd=10,
        boundaries=(BoundarySpec("qr"), BoundarySpec("ar")),
    )
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    export_table(run_sweep(cfg).curve, a)
    export_table(run_sweep(cfg).curve, b)
    assert a.read_bytes() == b.read_bytes()


def test_run_sweep_evaluates_boundaries():
    cfg = ScenarioConfig(
        n=8, spacing=0.5, grid_lo=1.0, grid_hi=10.0, grid_ppd=5,
        boundaries=(BoundarySpec("qr"), BoundarySpec("ar")),
    )
    result = run_sweep(cfg)
    pairs = dict((spec.kind, res) for spec, res in result.boundaries)
    assert pairs["qr"].value == 24.5
    assert pairs["ar"].status == "found"


# ---------------------------------------------------------------------------
# traces


def _make_trace(grid, with_sample=False):
    geo = uniform_linear_array(8, 0.5)
    w = ff_precoder(geo, FRONT)
    rhat = unit_vector(FRONT)
    e = np.empty((grid.size, 3), complex)
    h = np.empty((grid.size, 3), complex)
    for i, r in enumerate(grid):
        e[i], h[i] = array_field(geo, w, r * rhat)
    if with_sample:
        se, sh = array_field(geo, w, 1e6 * rhat)
        return FieldTrace(r=grid, e=e, h=h, sample_r=1e6, sample_e=se, sample_h=sh)
    f = analytic_angular_distribution(geo, w, FRONT).f
    return FieldTrace(r=grid, e=e, h=h, f=f, direction=FRONT)


def test_trace_round_trip_ff_f(tmp_path):
    grid = np.geomspace(0.5, 200.0, 50)
    trace = _make_trace(grid)
    path = tmp_path / "trace.csv"
    export_trace(trace, path)
    back = import_trace(path)
    np.testing.assert_array_equal(back.r, trace.r)
    np.testing.assert_array_equal(back.e, trace.e)
    np.testing.assert_array_equal(back.h, trace.h)
    np.testing.assert_array_equal(back.f, trace.f)

    # epsilon from the imported trace equals the in-process sweep
    scenario = DipoleArrayScenario(uniform_linear_array(8, 0.5), "ff-bf", FRONT)
    want = error_sweep(scenario, FRONT, grid)
    got = trace_error_curve(back, FRONT)
    assert np.max(np.abs(got.epsilon - want.epsilon)) < 1e-9


def test_trace_ff_f_needs_direction():
    grid = np.geomspace(1.0, 10.0, 5)
    trace = _make_trace(grid)
    imported = FieldTrace(r=trace.r, e=trace.e, h=trace.h, f=trace.f)
    with pytest.raises(ValueError, match="direction"):
        trace_error_curve(imported)


def test_trace_round_trip_ff_sample(tmp_path):
    grid = np.geomspace(0.5, 200.0, 40)
    trace = _make_trace(grid, with_sample=True)
    # direction was recovered from the power flow of the far-zone sample
    assert trace.direction.theta_deg == pytest.approx(90.0, abs=1e-4)
    assert trace.eh_discrepancy is not None and trace.eh_discrepancy < 1e-5
    path = tmp_path / "trace.csv"
    export_trace(trace, path)
    back = import_trace(path)

    scenario = DipoleArrayScenario(uniform_linear_array(8, 0.5), "ff-bf", FRONT)
    want = error_sweep(scenario, FRONT, grid)
    got = trace_error_curve(back)
    assert np.max(np.abs(got.epsilon - want.epsilon)) < 1e-5


def test_trace_sample_cross_check_rejects_corruption(tmp_path):
    grid = np.geomspace(0.5, 10.0, 5)
    geo = uniform_linear_array(8, 0.5)
    w = ff_precoder(geo, FRONT)
    rhat = unit_vector(FRONT)
    e = np.empty((grid.size, 3), complex)
    h = np.empty((grid.size, 3), complex)
    for i, r in enumerate(grid):
        e[i], h[i] = array_field(geo, w, r * rhat)
    se, sh = array_field(geo, w, 1e6 * rhat)
    with pytest.raises(InconsistentFarField):
        FieldTrace(r=grid, e=e, h=h, sample_r=1e6, sample_e=se, sample_h=2.0 * sh)


def test_trace_schema_violations(tmp_path):
    grid = np.geomspace(1.0, 10.0, 6)
    trace = _make_trace(grid)
    path = tmp_path / "t.csv"
    export_trace(trace, path)
    lines = path.read_text().splitlines()

    # shuffled data rows break monotonicity
    bad = lines[:3] + [lines[5], lines[4]] + lines[6:]
    p = _write(tmp_path, "bad1.csv", "\n".join(bad) + "\n")
    with pytest.raises(TraceFormatError, match="increasing"):
        import_trace(p)

    # non-finite field value
    bad = list(lines)
    bad[3] = bad[3].replace(bad[3].split(",")[1], "nan", 1)
    p = _write(tmp_path, "bad2.csv", "\n".join(bad) + "\n")
    with pytest.raises(TraceFormatError, match="finite"):
        import_trace(p)

    # wrong column count
    bad = list(lines)
    bad[3] = bad[3] + ",0"
    p = _write(tmp_path, "bad3.csv", "\n".join(bad) + "\n")
    with pytest.raises(TraceFormatError, match="13"):
        import_trace(p)

    # missing the far-field record entirely
    bad = [l for l in lines if not l.startswith("# ff_f")]
    p = _write(tmp_path, "bad4.csv", "\n".join(bad) + "\n")
    with pytest.raises(TraceFormatError, match="far-field record"):
        import_trace(p)

    # two far-field records
    bad = list(lines)
    bad.insert(2, "# ff_sample = " + ",".join(["1"] * 13))
    p = _write(tmp_path, "bad5.csv", "\n".join(bad) + "\n")
    with pytest.raises(TraceFormatError, match="exactly one"):
        import_trace(p)

    # unsupported version
    bad = ["# trace_version = 99"] + lines[1:]
    p = _write(tmp_path, "bad6.csv", "\n".join(bad) + "\n")
    with pytest.raises(TraceFormatError, match="version"):
        import_trace(p)

    # missing data header
    bad = [l for l in lines if not l.startswith("r_lambda")]
    p = _write(tmp_path, "bad7.csv", "\n".join(bad) + "\n")
    with pytest.raises(TraceFormatError, match="header"):
        import_trace(p)


def test_trace_scenario_rejects_off_grid_radius():
    grid = np.geomspace(1.0, 10.0, 5)
    trace = _make_trace(grid)
    from nff import TraceScenario

    scenario = TraceScenario(trace)
    with pytest.raises(ValueError, match="no sample"):
        scenario.fields(np.array([2.345, 0.0, 0.0]))


# ---------------------------------------------------------------------------
# export tables


def test_export_table_curve(tmp_path):
    curve = ErrorCurve(
        np.array([1.0, 2.0, 4.0]), np.array([0.25, 0.0625, 0.015625]),
        FRONT, "none", "dipole-ula",
    )
    path = tmp_path / "c.csv"
    export_table(curve, path)
    lines = path.read_text().splitlines()
    assert lines[0] == "r_lambda,epsilon"
    assert len(lines) == 4
    assert lines[1] == "1,0.25"

    empty = ErrorCurve(np.array([]), np.array([]), FRONT, "none", "dipole-ula")
    export_table(empty, path)
    assert path.read_text() == "r_lambda,epsilon\n"


def test_export_table_boundaries(tmp_path):
    from nff import BoundaryResult

    pairs = (
        (BoundarySpec("qr"), BoundaryResult("found", 24.5, (0.0, float("inf")), 0)),
        (BoundarySpec("ep", 1.01), BoundaryResult("unbounded", None, (1e-3, 1e6), 0)),
        (BoundarySpec("en", 1.05), BoundaryResult("not-found", None, (1e-3, 1e6), 0)),
    )
    path = tmp_path / "b.csv"
    export_table(pairs, path)
    lines = path.read_text().splitlines()
    assert lines[0] == "kind,threshold,status,value_lambda,crossings"
    assert lines[1] == "qr,,found,24.5,0"
    assert lines[2] == "ep,1.01,unbounded,,0"
    assert lines[3] == "en,1.05,not-found,,0"


# ---------------------------------------------------------------------------
# figure reproduction


def test_reproduce_fig4_file_set(tmp_path):
    files = reproduce_reference("fig4", tmp_path, grid_ppd=5)
    names = [p.name for p in files]
    assert len(names) == 19
    assert "fig4_eps_n1_front.csv" in names
    for label in ("n8", "n64"):
        for direction in ("front", "diagonal", "side"):
            for exc in ("ff", "nf"):
                assert f"fig4_eps_{label}_{direction}_{exc}.csv" in names
            assert f"fig4_boundaries_{label}_{direction}.csv" in names
    # boundary tables hold one row per configured spec
    table = (tmp_path / "fig4_boundaries_n8_front.csv").read_text().splitlines()
    assert len(table) == 11


def test_reproduce_fig5_file_set_and_traces(tmp_path):
    trace_dir = tmp_path / "traces"
    trace_dir.mkdir()
    # external traces carry a far-zone sample, so the direction travels with them
    export_trace(
        _make_trace(np.geomspace(1.0, 10.0, 5), with_sample=True),
        trace_dir / "sim_patch.csv",
    )

    out = tmp_path / "out"
    files = reproduce_reference("fig5", out, traces_dir=trace_dir, grid_ppd=5)
    names = [p.name for p in files]
    assert len(names) == 13
    for label in ("n8", "n15"):
        for direction in ("front", "diagonal", "side"):
            for exc in ("ff", "nf"):
                assert f"fig5_eps_{label}_{direction}_{exc}.csv" in names
    assert "fig5_eps_trace_sim_patch.csv" in names

    with pytest.raises(ValueError, match="fig4"):
        reproduce_reference("fig7", tmp_path)


# ---------------------------------------------------------------------------
# command-line interface


def test_cli_sweep_and_override(tmp_path, capsys):
    cfg = _write(
        tmp_path, "s.cfg",
        "n = 1\ngrid_lo = 1\ngrid_hi = 10\ngrid_ppd = 5\nexcitation = none\n",
    )
    out = tmp_path / "curve.csv"
    assert main(["sweep", "--config", str(cfg), "--out", str(out)]) == 0
    assert out.read_text().splitlines()[0] == "r_lambda,epsilon"
    n_default = len(out.read_text().splitlines())
    assert main(["sweep", "--config", str(cfg), "--out", str(out), "--grid-ppd", "10"]) == 0
    assert len(out.read_text().splitlines()) > n_default


def test_cli_error_paths(tmp_path, capsys):
    bad = _write(tmp_path, "bad.cfg", "mystery = 1\n")
    out = tmp_path / "x.csv"
    assert main(["sweep", "--config", str(bad), "--out", str(out)]) == 1
    assert "unknown key" in capsys.readouterr().err
    assert main(["sweep", "--config", str(tmp_path / "absent.cfg"), "--out", str(out)]) == 2

    no_bounds = _write(tmp_path, "nb.cfg", "n = 1\n")
    assert main(["boundaries", "--config", str(no_bounds), "--out", str(out)]) == 1
    assert "no boundaries" in capsys.readouterr().err


def test_cli_boundaries(tmp_path, capsys):
    cfg = _write(
        tmp_path, "b.cfg",
        "n = 8\nspacing_lambda = 0.5\nboundaries = qr, ar\n",
    )
    out = tmp_path / "bounds.csv"
    assert main(["boundaries", "--config", str(cfg), "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "kind,threshold,status,value_lambda,crossings"
    assert len(lines) == 3
    assert lines[1].startswith("qr,,found,24.5,")


def test_cli_validate_trace(tmp_path, capsys):
    path = tmp_path / "t.csv"
    export_trace(_make_trace(np.geomspace(1.0, 10.0, 5)), path)
    assert main(["validate-trace", str(path)]) == 0
    assert "5 rows" in capsys.readouterr().out

    bad = path.read_text().replace("trace_version = 1", "trace_version = 9")
    corrupt = _write(tmp_path, "c.csv", bad)
    assert main(["validate-trace", str(corrupt)]) == 1
    assert main(["validate-trace", str(tmp_path / "ghost.csv")]) == 2


def test_cli_reproduce(tmp_path, capsys):
    out = tmp_path / "repro"
    assert main(["reproduce", "--figure", "fig5", "--out", str(out), "--grid-ppd", "5"]) == 0
    assert len(list(out.glob("*.csv"))) == 12


def test_module_entry_point(tmp_path):
    path = tmp_path / "t.csv"
    export_trace(_make_trace(np.geomspace(1.0, 10.0, 5)), path)
    proc = subprocess.run(
        [sys.executable, "-m", "nff", "validate-trace", str(path)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "5 rows" in proc.stdout


def test_package_version():
    assert nff.__version__ == "0.1.0"
