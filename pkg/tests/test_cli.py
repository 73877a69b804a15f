"""Tests for the benchmark CLI: grid, CSV round trip, exit codes."""

import math

import pytest

import desinc.cli as cli
from desinc.cli import (
    ExperimentRow,
    RunConfig,
    evaluation_grid,
    format_rows,
    main,
    parse_rows,
    run,
)
from desinc.params import ParameterRegimeError
from desinc.testfns import FunctionId, Method


def test_evaluation_grid_shape():
    points = evaluation_grid()
    assert len(points) == 403
    assert points == sorted(points)
    assert len(set(points)) == 403
    assert 0.0 in points
    assert points[0] == -(2.0**50) and points[-1] == 2.0**50
    assert 2.0**-50 in points and -(2.0**-49.5) in points


def test_run_minimum_n_row():
    rows, status = run(RunConfig(FunctionId.F2, (Method.T23,), n_values=(2,), check_bounds=True))
    assert status == 0
    assert len(rows) == 1
    row = rows[0]
    assert row.method is Method.T23 and row.n == 2
    assert row.error_bound is not None
    assert 0.0 < row.observed_max_error <= row.error_bound


def test_run_rejects_bad_sweeps():
    with pytest.raises(ValueError, match="ascending"):
        run(RunConfig(FunctionId.F1, (Method.T22,), n_values=(10, 5)))
    with pytest.raises(ValueError, match="positive"):
        run(RunConfig(FunctionId.F1, (Method.T22,), n_values=(0, 5)))
    with pytest.raises(ValueError, match="empty"):
        run(RunConfig(FunctionId.F1, (Method.T22,), n_values=()))


def test_run_regime_error_for_n_below_bound_minimum():
    with pytest.raises(ParameterRegimeError, match="n >="):
        run(RunConfig(FunctionId.F1, (Method.T23,), n_values=(1,)))


def test_run_emits_rows_in_method_then_n_order():
    config = RunConfig(FunctionId.F1, (Method.T23, Method.T21), n_values=(5, 10))
    rows, _ = run(config)
    assert [(r.method, r.n) for r in rows] == [
        (Method.T21, 5),
        (Method.T21, 10),
        (Method.T23, 5),
        (Method.T23, 10),
    ]
    for row in rows:
        assert (row.error_bound is not None) == (row.method is not Method.T21)


def test_method_ordering_at_n_40():
    for function_id in FunctionId:
        rows, _ = run(RunConfig(function_id, tuple(Method), n_values=(40,)))
        observed = {r.method: r.observed_max_error for r in rows}
        assert observed[Method.T23] < observed[Method.T22]
        assert observed[Method.T22] < observed[Method.T21] * 10.0


def test_default_de_sweep_is_nonincreasing_up_to_noise():
    rows, status = run(RunConfig(FunctionId.F1, (Method.T23,), check_bounds=True))
    assert status == 0
    assert [r.n for r in rows] == list(range(2, 58, 5))
    for prev, cur in zip(rows, rows[1:]):
        if cur.observed_max_error <= prev.observed_max_error:
            continue
        # noise plateau: small upticks allowed only below 1e-14
        assert prev.observed_max_error < 1e-14
        assert cur.observed_max_error <= 2.0 * prev.observed_max_error


def test_csv_round_trip_is_lossless():
    rows, _ = run(RunConfig(FunctionId.F2, (Method.T21, Method.T23), n_values=(3, 8)))
    text = format_rows(rows)
    assert text.splitlines()[0] == cli.CSV_HEADER
    assert parse_rows(text) == rows


def test_parse_rows_rejects_foreign_header():
    with pytest.raises(ValueError, match="header"):
        parse_rows("a,b,c\n1,2,3\n")


def test_cli_writes_deterministic_csv(tmp_path):
    args = ["--function", "f1", "--method", "t23", "--n-list", "2,7,12", "--check-bounds"]
    first = tmp_path / "first.csv"
    second = tmp_path / "second.csv"
    assert main(args + ["--out", str(first)]) == 0
    assert main(args + ["--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    rows = parse_rows(first.read_text())
    assert [r.n for r in rows] == [2, 7, 12]


def test_cli_stdout_and_range_flags(capsys):
    code = main(["--function", "f2", "--method", "t22", "--n-from", "4", "--n-to", "14", "--n-step", "5"])
    captured = capsys.readouterr()
    assert code == 0
    rows = parse_rows(captured.out)
    assert [r.n for r in rows] == [4, 9, 14]
    assert "rows" in captured.err  # progress goes to stderr only


def test_cli_usage_errors_exit_1(capsys):
    assert main(["--function", "f3"]) == 1
    assert main(["--function", "f1", "--n-list", "5,apple"]) == 1
    assert main(["--function", "f1", "--n-from", "5"]) == 1
    assert main(["--function", "f1", "--method", "t22", "--n-list", "10,5"]) == 1
    capsys.readouterr()


def test_cli_regime_errors_exit_1(capsys):
    assert main(["--function", "f1", "--method", "t23", "--n-list", "1"]) == 1
    err = capsys.readouterr().err
    assert "n >=" in err


def test_cli_bound_violation_exits_2(monkeypatch, capsys):
    # force an impossible bound so the dominance check must trip
    monkeypatch.setattr(cli, "_bound_for", lambda method, p, n: 1e-300)
    code = main(["--function", "f2", "--method", "t22", "--n-list", "5", "--check-bounds"])
    assert code == 2
    assert "bound violated" in capsys.readouterr().err


def test_cli_renders_figure(tmp_path):
    out = tmp_path / "rows.csv"
    code = main(
        [
            "--function",
            "f1",
            "--method",
            "t21",
            "--method",
            "t23",
            "--n-list",
            "2,7",
            "--out",
            str(out),
            "--plot-dir",
            str(tmp_path),
        ]
    )
    assert code == 0
    figure = tmp_path / "f1_convergence.png"
    assert figure.exists() and figure.stat().st_size > 0
