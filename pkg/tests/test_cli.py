"""Command-line interface: exit codes, formats, file handling."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from godeaux.cli import main
from godeaux.rings import DEGREVLEX, PolyRing, parse_poly

GOLDEN = Path(__file__).parent / "data" / "verify_golden.json"

FIELD_FILE = """\
p = 5
vars = x0 x1 x2 x3
x0 -> x1
x1 -> x2
x2 -> x3
x3 -> 0
"""

MINORS_FILE = """\
# fixed-locus minors
vars = x0 x1 x2 x3
x1^2 - x0*x2
x1*x2 - x0*x3
x1*x3
x2^2 - x1*x3
x2*x3
x3^2
"""


@pytest.fixture()
def field_file(tmp_path):
    path = tmp_path / "field.txt"
    path.write_text(FIELD_FILE)
    return str(path)


@pytest.fixture()
def minors_file(tmp_path):
    path = tmp_path / "minors.txt"
    path.write_text(MINORS_FILE)
    return str(path)


class TestVerify:
    def test_default_run_exits_zero(self, capsys):
        assert main(["verify", "--seed", "1"]) == 0
        out = capsys.readouterr().out
        assert out.count("pass") >= 14

    def test_json_matches_golden(self, capsys):
        assert main(["verify", "--seed", "1", "--format", "json"]) == 0
        assert capsys.readouterr().out == GOLDEN.read_text()

    def test_single_check(self, capsys):
        assert main(["verify", "--only", "C3"]) == 0
        payload = capsys.readouterr().out
        assert "C3" in payload
        assert "C4" not in payload

    def test_unknown_check_id(self, capsys):
        assert main(["verify", "--only", "C99"]) == 2
        assert "unknown check id" in capsys.readouterr().err

    def test_wrong_characteristic(self, capsys):
        assert main(["verify", "--p", "7"]) == 2

    def test_nonprime_characteristic(self, capsys):
        assert main(["verify", "--p", "4"]) == 2

    def test_budget_exit_code(self, capsys):
        assert main(["verify", "--budget", "1", "--only", "C7"]) == 3
        assert "budget-exceeded" in capsys.readouterr().out


class TestKernel:
    def test_degree_five_dimension(self, field_file, capsys):
        assert main(["kernel", field_file, "--degree", "5"]) == 0
        out = capsys.readouterr().out
        assert out.strip().endswith("dimension = 12")
        assert len(out.strip().splitlines()) == 13

    def test_degree_one(self, field_file, capsys):
        assert main(["kernel", field_file, "--degree", "1"]) == 0
        out = capsys.readouterr().out.strip().splitlines()
        assert out == ["x3", "dimension = 1"]

    def test_zero_derivation_full_space(self, tmp_path, capsys):
        path = tmp_path / "zero.txt"
        path.write_text("vars = x0 x1 x2 x3\nx0 -> 0\n")
        assert main(["kernel", str(path), "--degree", "2"]) == 0
        assert "dimension = 10" in capsys.readouterr().out

    def test_json_output(self, field_file, capsys):
        assert main(["kernel", field_file, "--degree", "1",
                     "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"basis": ["x3"], "dimension": 1}

    def test_variables_inferred_from_lhs(self, tmp_path, capsys):
        # without a vars header the ring comes from the arrow lines
        path = tmp_path / "implicit.txt"
        path.write_text("a -> b\nb -> 0\n")
        assert main(["kernel", str(path), "--degree", "1"]) == 0
        assert "dimension = 1" in capsys.readouterr().out

    def test_negative_degree(self, field_file, capsys):
        assert main(["kernel", field_file, "--degree", "-1"]) == 2

    def test_missing_file(self, capsys):
        assert main(["kernel", "/nonexistent/f.txt", "--degree", "1"]) == 2

    def test_output_reparses(self, field_file, capsys):
        assert main(["kernel", field_file, "--degree", "5"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()[:-1]
        ring = PolyRing(("x0", "x1", "x2", "x3"), 5, DEGREVLEX)
        for line in lines:
            f = parse_poly(ring, line)
            assert str(f) == line


class TestGroebner:
    def test_reduced_basis(self, minors_file, capsys):
        assert main(["groebner", minors_file]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert "x2^2" in lines  # reduced basis replaces x2^2 - x1*x3
        assert len(lines) == 6

    def test_unit_ideal(self, tmp_path, capsys):
        path = tmp_path / "unit.txt"
        path.write_text("vars = x y\nx\nx + 1\n")
        assert main(["groebner", str(path)]) == 0
        assert capsys.readouterr().out.strip() == "1"

    def test_empty_input(self, tmp_path, capsys):
        path = tmp_path / "empty.txt"
        path.write_text("# nothing here\n")
        assert main(["groebner", str(path)]) == 0
        assert capsys.readouterr().out == ""

    def test_budget_exceeded(self, minors_file, capsys):
        assert main(["groebner", minors_file, "--budget", "1"]) == 3
        err = capsys.readouterr().err
        assert "budget exceeded" in err
        assert "pairs" in err

    def test_json_output(self, minors_file, capsys):
        assert main(["groebner", minors_file, "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert len(payload["basis"]) == 6
        assert payload["pairs_processed"] > 0

    def test_output_reparses_to_same_ideal(self, minors_file, capsys):
        assert main(["groebner", minors_file]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        ring = PolyRing(("x0", "x1", "x2", "x3"), 5, DEGREVLEX)
        for line in lines:
            assert str(parse_poly(ring, line)) == line


class TestInvariants:
    def test_hypersurface(self, capsys):
        assert main(["invariants", "hypersurface", "--d", "5"]) == 0
        out = capsys.readouterr().out
        assert "chi = 5" in out and "k2 = 5" in out

    def test_feasible(self, capsys):
        assert main(["invariants", "feasible", "--kind", "singular"]) == 0
        assert capsys.readouterr().out.strip() == "2 3 5"

    def test_feasible_supersingular_wide(self, capsys):
        assert main(["invariants", "feasible", "--kind", "supersingular",
                     "--threshold", "-6"]) == 0
        assert capsys.readouterr().out.strip() == "2 3 5 7"

    def test_torsor(self, capsys):
        assert main(["invariants", "torsor", "--chi", "1", "--k2", "1"]) == 0
        out = capsys.readouterr().out
        assert "chi = 5" in out
        assert "k2 = 5" in out
        assert "h0_omega_lower = 4" in out

    def test_betti(self, capsys):
        assert main(["invariants", "betti", "--chi", "1", "--k2", "1"]) == 0
        out = capsys.readouterr().out
        assert "c2 = 11" in out and "b2 = 9" in out and "b3 = 0" in out

    def test_betti_json(self, capsys):
        assert main(["invariants", "betti", "--chi", "1", "--k2", "1",
                     "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out) == {
            "c2": 11, "b2": 9, "b3": 0}

    def test_inconsistent_betti_is_usage_error(self, capsys):
        assert main(["invariants", "betti", "--chi", "0", "--k2", "5"]) == 2


class TestConsoleScript:
    def test_installed_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "godeaux.cli", "invariants",
             "hypersurface", "--d", "4"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert "chi = 2" in proc.stdout

    def test_console_script_verify_subset(self):
        proc = subprocess.run(
            ["godeaux", "verify", "--only", "C13", "--format", "json"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload[0]["id"] == "C13"
        assert payload[0]["status"] == "pass"
