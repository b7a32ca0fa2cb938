"""End-to-end tests of the command-line interface.

Everything runs in-process through cli.main(argv) so exit codes and stdout
can be asserted directly; one test goes through the installed entry point.
"""
import math
import subprocess
import sys

import pytest

import thermwit.entanglement
from thermwit.cli import main
from thermwit.config import RunConfig, serialize_config
from thermwit.errors import NoSignChange
from thermwit.systems import Graph, write_edge_list

T_ZERO_FIELD = 4.0 / math.log(3.0)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def summary_value(out, key):
    for line in out.splitlines():
        if line.startswith(f"## {key} = "):
            return line.split(" = ", 1)[1]
    raise KeyError(key)


class TestDimerCommand:
    def test_basic_run(self, capsys):
        code, out, err = run(capsys, "dimer", "--B", "0", "--J", "1")
        assert code == 0 and err == ""
        assert out.startswith("# thermwit-csv v1\n")
        assert "T,Z,p,threshold,satisfied,bound_kind" in out
        assert float(summary_value(out, "t_trans")) == pytest.approx(
            T_ZERO_FIELD, rel=1e-9
        )
        assert summary_value(out, "phase") == "singlet-ground"

    def test_oracle_columns(self, capsys):
        code, out, _ = run(
            capsys, "dimer", "--B", "1", "--J", "1", "--grid", "0.5:5:10:lin", "--oracles"
        )
        assert code == 0
        header = [l for l in out.splitlines() if l.startswith("T,")][0]
        assert header.endswith("concurrence,min_pt_eig")
        t_w = float(summary_value(out, "t_trans"))
        t_c = float(summary_value(out, "t_concurrence_zero"))
        assert t_w == pytest.approx(3.556193150034734, rel=1e-9)
        assert t_c > t_w

    def test_product_phase_reports_no_transition(self, capsys):
        code, out, _ = run(capsys, "dimer", "--B", "5", "--J", "1")
        assert code == 0
        assert summary_value(out, "t_trans") == "none"
        assert summary_value(out, "phase") == "product-ground"
        assert summary_value(out, "singlet_level_intervals") == "[]"

    def test_byte_determinism(self, capsys):
        args = ("dimer", "--B", "0.7", "--J", "1.1", "--oracles")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "dimer.csv"
        code, out, _ = run(capsys, "dimer", "--out", str(target))
        assert code == 0
        text = target.read_text()
        assert text.startswith("# thermwit-csv v1\n")
        # stdout carries only the summary lines when writing to a file
        assert "t_trans" in out and "# thermwit-csv" not in out

    def test_satisfied_flag_flips_at_transition(self, capsys):
        _, out, _ = run(capsys, "dimer", "--grid", "3.5:3.8:31:lin")
        rows = [l.split(",") for l in out.splitlines() if l[0].isdigit()]
        flags = [r[4] for r in rows]
        temps = [float(r[0]) for r in rows]
        flip = flags.index("false")
        assert flags[:flip] == ["true"] * flip
        assert set(flags[flip:]) == {"false"}
        assert temps[flip - 1] < T_ZERO_FIELD < temps[flip]


class TestToyCommand:
    def test_alpha_zero_summaries(self, capsys):
        code, out, _ = run(capsys, "toy", "--alpha", "0", "--D", "4", "--eR", "1")
        assert code == 0
        assert float(summary_value(out, "t_trans")) == pytest.approx(
            1.0 / math.log(3.0), rel=1e-9
        )
        assert float(summary_value(out, "t0_closed_form")) == pytest.approx(
            1.0 / math.log(3.0), rel=1e-12
        )
        assert float(summary_value(out, "t1_exact")) == pytest.approx(
            1.0 / math.log(2.0), rel=1e-12
        )

    def test_gamma_columns_present_only_for_positive_alpha(self, capsys):
        _, out0, _ = run(capsys, "toy", "--alpha", "0", "--D", "8", "--eR", "1")
        _, out1, _ = run(capsys, "toy", "--alpha", "0.5", "--D", "8", "--eR", "1")
        assert "z_gamma" not in out0
        header = [l for l in out1.splitlines() if l.startswith("T,")][0]
        assert "z_gamma" in header and "gamma_rel_err" in header

    def test_site_count_derives_entanglement(self, capsys):
        code, out, _ = run(capsys, "toy", "--alpha", "1", "--D", "64", "--n", "4")
        assert code == 0
        e_r = float(summary_value(out, "one_plus_r"))
        assert e_r == pytest.approx(8.0 / 3.0, rel=1e-12)
        assert float(summary_value(out, "t_alpha_formula")) == pytest.approx(
            2.0, rel=1e-12
        )

    def test_odd_site_count_rejected(self, capsys):
        code, _, err = run(capsys, "toy", "--n", "5")
        assert code == 2
        assert "even" in err

    def test_unreachable_threshold_reports_inf(self, capsys):
        code, out, _ = run(capsys, "toy", "--alpha", "0", "--D", "4", "--eR", "2.5")
        assert code == 0
        assert summary_value(out, "t_trans") == "inf"
        assert summary_value(out, "t0_closed_form") == "unreachable"

    def test_oracle_resum_agrees(self, capsys):
        code, out, _ = run(
            capsys, "toy", "--alpha", "0.5", "--D", "2000", "--eR", "1.5", "--oracles"
        )
        assert code == 0
        assert float(summary_value(out, "z_spectrum_max_rel_err")) < 1e-9

    def test_oracle_depth_cap(self, capsys):
        code, _, err = run(
            capsys, "toy", "--alpha", "0.5", "--D", "1000000", "--eR", "1", "--oracles"
        )
        assert code == 2
        assert "D <=" in err

    def test_exact_million_level_value(self, capsys):
        _, out, _ = run(
            capsys,
            "toy", "--alpha", "0.5", "--D", "1000000", "--eR", "1",
            "--grid", "0.5:1:2:lin",
        )
        last_row = [l for l in out.splitlines() if l[0].isdigit()][-1]
        z = float(last_row.split(",")[1])
        assert z == pytest.approx(2.67040681796634, rel=1e-12)


class TestDickeCommand:
    def test_summary_values(self, capsys):
        code, out, _ = run(capsys, "dicke", "--n", "100", "--k", "50")
        assert code == 0
        assert float(summary_value(out, "one_plus_r")) == pytest.approx(
            12.5645129018549, rel=1e-12
        )
        assert float(summary_value(out, "sqrt_n")) == 10.0

    def test_default_half_filling(self, capsys):
        _, out, _ = run(capsys, "dicke", "--n", "6")
        assert float(summary_value(out, "one_plus_r")) == pytest.approx(3.2, rel=1e-12)

    def test_oracle_search_matches(self, capsys):
        code, out, _ = run(capsys, "dicke", "--n", "6", "--oracles")
        assert code == 0
        assert float(summary_value(out, "als_vs_closed")) < 1e-9
        assert float(summary_value(out, "half_cut_one_plus_r")) == pytest.approx(
            3.2, rel=1e-9
        )

    def test_oracle_cap(self, capsys):
        code, _, err = run(capsys, "dicke", "--n", "14", "--oracles")
        assert code == 2
        assert "n <= 12" in err

    def test_separable_extremes_rejected(self, capsys):
        code, _, err = run(capsys, "dicke", "--n", "4", "--k", "0")
        assert code == 2


class TestGraphCommand:
    @pytest.fixture()
    def edges_file(self, tmp_path):
        path = tmp_path / "ring6.edges"
        write_edge_list(Graph.ring(6), path)
        return str(path)

    def test_basic_run(self, capsys, edges_file):
        code, out, _ = run(capsys, "graph", "--edges", edges_file)
        assert code == 0
        assert float(summary_value(out, "t_trans")) == pytest.approx(
            2.2691853142130225, rel=1e-12
        )
        assert float(summary_value(out, "p_flip_threshold")) == pytest.approx(
            1.0 - 1.0 / math.sqrt(2.0), rel=1e-12
        )

    def test_oracles_and_matrix_check(self, capsys, edges_file):
        code, out, _ = run(
            capsys, "graph", "--edges", edges_file, "--oracles", "--matrix-check"
        )
        assert code == 0
        assert summary_value(out, "matrix_levels_match") == "true"
        assert float(summary_value(out, "ground_state_residual")) < 1e-9
        assert float(summary_value(out, "flip_identity_max_err")) < 1e-12
        t_closed = float(summary_value(out, "t_trans"))
        t_bisect = float(summary_value(out, "t_trans_bisect"))
        assert t_bisect == pytest.approx(t_closed, rel=1e-8)

    def test_missing_edges_flag(self, capsys):
        code, _, err = run(capsys, "graph")
        assert code == 2
        assert "--edges" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "graph", "--edges", "/nonexistent/g.edges")
        assert code == 2

    def test_ratio_out_of_range(self, capsys, edges_file):
        code, _, err = run(capsys, "graph", "--edges", edges_file, "--eR", "1.5")
        assert code == 2
        assert "(0, 1)" in err

    def test_matrix_check_cap(self, capsys, tmp_path):
        path = tmp_path / "big.edges"
        write_edge_list(Graph.path(13), path)
        code, _, err = run(capsys, "graph", "--edges", str(path), "--matrix-check")
        assert code == 2

    def test_mismatch_exit_code(self, capsys, edges_file, monkeypatch):
        # corrupt the flip-probability map; the identity column must catch it
        monkeypatch.setattr(
            "thermwit.cli.flip_probability_from_temperature",
            lambda b, t: 0.123,
        )
        code, _, err = run(capsys, "graph", "--edges", edges_file, "--oracles")
        assert code == 4
        assert "mismatch" in err


class TestVerifyCommand:
    def test_all_checks_pass(self, capsys):
        code, out, _ = run(capsys, "verify")
        assert code == 0
        assert "passed 10/10" in out
        assert out.count("[PASS]") == 10

    def test_mutation_is_detected(self, capsys, monkeypatch):
        # a wrong robustness formula must fail at least one check
        real = thermwit.entanglement.dicke_robustness

        def corrupted(n, k):
            bound = real(n, k)
            object.__setattr__(bound, "one_plus_r", bound.one_plus_r * 1.01)
            return bound

        monkeypatch.setattr(thermwit.entanglement, "dicke_robustness", corrupted)
        code, out, _ = run(capsys, "verify")
        assert code == 1
        assert "[FAIL]" in out

    def test_report_file(self, capsys, tmp_path):
        target = tmp_path / "report.txt"
        code, out, _ = run(capsys, "verify", "--out", str(target))
        assert code == 0
        assert target.read_text() == out


class TestConfigPlumbing:
    def test_config_file_round_trip(self, capsys, tmp_path):
        cfg = RunConfig(system="toy", toy_alpha=0.5, toy_d=64, toy_e_r=2.0, seed=9)
        path = tmp_path / "run.cfg"
        path.write_text(serialize_config(cfg))
        code, out, _ = run(capsys, "toy", "--config", str(path))
        assert code == 0
        assert "# alpha = 0.5" in out
        assert "# D = 64" in out

    def test_flags_override_config(self, capsys, tmp_path):
        cfg = RunConfig(system="toy", toy_alpha=0.5, toy_d=64, toy_e_r=2.0)
        path = tmp_path / "run.cfg"
        path.write_text(serialize_config(cfg))
        code, out, _ = run(capsys, "toy", "--config", str(path), "--D", "128")
        assert code == 0
        assert "# D = 128" in out
        assert "# alpha = 0.5" in out

    def test_missing_config_file(self, capsys):
        code, _, err = run(capsys, "toy", "--config", "/nope.cfg")
        assert code == 2

    def test_bad_grid_spec(self, capsys):
        code, _, _ = run(capsys, "dimer", "--grid", "1:2:banana:lin")
        assert code == 2

    def test_unknown_subcommand(self, capsys):
        code, _, _ = run(capsys, "frobnicate")
        assert code == 2


class TestNumericExitCode:
    def test_no_sign_change_maps_to_three(self, capsys, monkeypatch):
        def boom(*args, **kwargs):
            raise NoSignChange("planted failure")

        monkeypatch.setattr("thermwit.cli.transition_temperature", boom)
        code, _, err = run(capsys, "dimer")
        assert code == 3
        assert "numerical failure" in err


class TestEntryPoint:
    def test_installed_script(self):
        proc = subprocess.run(
            [sys.executable, "-m", "thermwit.cli", "dicke", "--n", "4"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "# thermwit-csv v1" in proc.stdout
