"""Flag parsing, CSV/plot output, and exit codes."""

import math

import pytest

from eprsim import MeasurementOrder, Mode, ProjectionRule, sweep_b
from eprsim.cli import CSV_HEADER, main, parse_args, write_csv, render_plot


def run_small_sweep():
    opts = parse_args(["--mode", "joint", "--a", "0", "--steps", "5", "--trials", "100"])
    return sweep_b(opts.config, opts.b_start, opts.b_end, opts.steps)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def test_parse_minimal_joint_run():
    opts = parse_args(["--mode", "joint", "--a", "0", "--trials", "10000"])
    assert opts.config.mode is Mode.JOINT
    assert opts.config.rule is None
    assert opts.config.a == 0.0
    assert opts.config.n_trials == 10_000
    assert opts.config.order is MeasurementOrder.A_FIRST
    assert opts.b_start == 0.0
    assert opts.b_end == pytest.approx(2.0 * math.pi)
    assert opts.steps == 65
    assert opts.csv_path == "sweep.csv"
    assert opts.plot_path is None


def test_parse_full_separated_run():
    opts = parse_args(
        [
            "--mode", "separated",
            "--rule", "vonneumann",
            "--a", "1.5",
            "--b-start", "1.0",
            "--b-end", "2.0",
            "--steps", "11",
            "--trials", "500",
            "--seed", "9",
            "--order", "random",
            "--csv", "out.csv",
            "--plot", "out.svg",
        ]
    )
    assert opts.config.mode is Mode.SEPARATED
    assert opts.config.rule is ProjectionRule.VON_NEUMANN
    assert opts.config.order is MeasurementOrder.RANDOM_PER_TRIAL
    assert opts.config.seed == 9
    assert (opts.b_start, opts.b_end, opts.steps) == (1.0, 2.0, 11)
    assert opts.csv_path == "out.csv"
    assert opts.plot_path == "out.svg"


def test_degrees_flag_converts_all_angle_flags():
    opts = parse_args(
        ["--mode", "joint", "--a", "60", "--b-start", "0", "--b-end", "360", "--degrees"]
    )
    assert opts.config.a == pytest.approx(math.pi / 3)
    assert opts.b_start == 0.0
    assert opts.b_end == pytest.approx(2.0 * math.pi)


def test_degrees_flag_leaves_radian_defaults_alone():
    opts = parse_args(["--mode", "joint", "--a", "90", "--degrees"])
    assert opts.config.a == pytest.approx(math.pi / 2)
    assert opts.b_end == pytest.approx(2.0 * math.pi)


@pytest.mark.parametrize(
    "argv",
    [
        ["--mode", "joint", "--rule", "luders"],          # rule without separated mode
        ["--mode", "separated"],                          # separated without a rule
        ["--mode", "joint", "--frobnicate"],              # unknown flag
        ["--mode", "telepathic"],                         # unknown mode
        ["--mode", "separated", "--rule", "collapse"],    # unknown rule
        ["--mode", "joint", "--steps", "1"],              # degenerate grid
        ["--mode", "joint", "--trials", "0"],             # no trials
        ["--mode", "joint", "--seed", "-3"],              # signed seed
        [],                                               # mode is required
    ],
)
def test_usage_errors_exit_with_2(argv, capsys):
    with pytest.raises(SystemExit) as excinfo:
        parse_args(argv)
    assert excinfo.value.code == 2
    assert "usage" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# CSV output
# ---------------------------------------------------------------------------


def test_csv_layout_and_roundtrip(tmp_path):
    result = run_small_sweep()
    path = tmp_path / "sweep.csv"
    write_csv(result, str(path))
    text = path.read_text()
    assert text.endswith("\n")
    lines = text.splitlines()
    assert lines[0] == CSV_HEADER == "b_radians,correlation_estimate,correlation_predicted"
    assert len(lines) == 1 + 5
    for i, line in enumerate(lines[1:]):
        b, estimate, predicted = line.split(",")
        # nine-decimal fixed-point cells parse back to the in-memory values
        assert all("." in cell and len(cell.split(".")[1]) == 9 for cell in (b, estimate, predicted))
        assert abs(float(b) - result.b_values[i]) < 1e-9
        assert abs(float(estimate) - result.estimates[i]) < 1e-9
        assert abs(float(predicted) - result.predictions[i]) < 1e-9


def test_csv_prediction_at_zero_is_minus_one(tmp_path):
    result = run_small_sweep()
    path = tmp_path / "sweep.csv"
    write_csv(result, str(path))
    first_row = path.read_text().splitlines()[1].split(",")
    assert float(first_row[0]) == 0.0
    assert float(first_row[2]) == -1.0


def test_csv_write_failure_names_the_path():
    result = run_small_sweep()
    with pytest.raises(OSError, match="no/such/dir"):
        write_csv(result, "no/such/dir/sweep.csv")


# ---------------------------------------------------------------------------
# plot output
# ---------------------------------------------------------------------------


def test_plot_is_self_contained_svg(tmp_path):
    path = tmp_path / "sweep.svg"
    render_plot(run_small_sweep(), str(path))
    text = path.read_text()
    assert "<svg" in text
    assert path.stat().st_size > 1000


# ---------------------------------------------------------------------------
# main
# ---------------------------------------------------------------------------


def test_main_writes_csv_and_reports(tmp_path, capsys):
    csv_path = tmp_path / "run.csv"
    code = main(
        ["--mode", "joint", "--a", "0", "--steps", "5", "--trials", "100", "--csv", str(csv_path)]
    )
    assert code == 0
    assert csv_path.exists()
    out = capsys.readouterr().out
    assert "mode=joint" in out
    assert "max |estimate - predicted|" in out
    assert "flags: --mode joint" in out


def test_main_plot_flag_writes_svg(tmp_path):
    svg_path = tmp_path / "run.svg"
    code = main(
        [
            "--mode", "separated", "--rule", "null", "--steps", "4", "--trials", "50",
            "--csv", str(tmp_path / "run.csv"), "--plot", str(svg_path),
        ]
    )
    assert code == 0
    assert svg_path.exists()


def test_main_io_failure_exits_1(tmp_path, capsys):
    bad = str(tmp_path / "missing" / "deep" / "run.csv")
    code = main(["--mode", "joint", "--steps", "3", "--trials", "10", "--csv", bad])
    assert code == 1
    assert "missing" in capsys.readouterr().err


def test_summary_flags_reproduce_the_csv_byte_for_byte(tmp_path, capsys):
    first = tmp_path / "first.csv"
    second = tmp_path / "second.csv"
    assert main(
        [
            "--mode", "separated", "--rule", "luders", "--a", "45", "--b-start", "0",
            "--b-end", "360", "--steps", "7", "--trials", "200", "--seed", "5",
            "--degrees", "--csv", str(first),
        ]
    ) == 0
    flags_line = next(
        line for line in capsys.readouterr().out.splitlines() if line.startswith("flags: ")
    )
    echoed = flags_line.removeprefix("flags: ").split()
    assert main(echoed + ["--csv", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
