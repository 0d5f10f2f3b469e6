"""Command-line behavior: exit codes, output shapes, determinism."""

import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from hypervec.cli import main

CORPUS = Path(__file__).parent / "corpus"

CLEAN_FILE = """\
model "ok" { field Q dim 2 product trivial inner dot }
check wvs_axioms samples=40
check hip samples=60
"""

FAILING_FILE = """\
model "za" { field Q dim 2 product zero_augmented inner dot }
check real_ip samples=60
"""

UNBOUNDED_FILE = """\
model "g2" { field Q dim 2 product geometric(2) inner dot }
check real_ip samples=40
"""


@pytest.fixture()
def hvs(tmp_path):
    def write(text, name="model.hvs"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


class TestCheckCommand:
    def test_clean_run_exits_zero(self, hvs, capsys):
        assert main(["check", hvs(CLEAN_FILE)]) == 0
        out = capsys.readouterr().out
        assert "[pass]" in out
        assert "wvs_axioms" in out and "hip" in out

    def test_failing_run_exits_one_with_witness(self, hvs, capsys):
        assert main(["check", hvs(FAILING_FILE)]) == 1
        out = capsys.readouterr().out
        assert "[fail] sup_scaling" in out
        assert "a = 1" in out and "x = (1, 0)" in out and "y = (-1, 0)" in out
        assert "->" in out

    def test_unbounded_exits_one(self, hvs, capsys):
        assert main(["check", hvs(UNBOUNDED_FILE)]) == 1
        assert "[unbounded]" in capsys.readouterr().out

    def test_json_determinism(self, hvs, tmp_path, capsys):
        path = hvs(FAILING_FILE)
        j1, j2 = tmp_path / "r1.json", tmp_path / "r2.json"
        main(["check", path, "--json", str(j1)])
        main(["check", path, "--json", str(j2)])
        capsys.readouterr()
        assert j1.read_bytes() == j2.read_bytes()
        doc = json.loads(j1.read_text())
        assert doc["model"] == "zero_augmented Q dim=2"
        assert doc["seed"] == 42
        assert doc["suites"][0]["name"] == "real_ip"

    def test_cli_seed_beats_file_directive(self, hvs, tmp_path, capsys):
        path = hvs('model "m" { field Q dim 2 product trivial }\n'
                   "check wvs_axioms samples=30 seed=5\n")
        j = tmp_path / "r.json"
        main(["check", path, "--json", str(j), "--seed", "9"])
        capsys.readouterr()
        assert json.loads(j.read_text())["seed"] == 9

    def test_flag_overrides_samples(self, hvs, capsys):
        path = hvs('model "m" { field Q dim 2 product trivial }\n'
                   "check wvs_axioms samples=400\n")
        assert main(["check", path, "--samples", "25"]) == 0
        assert "(25 samples)" in capsys.readouterr().out

    def test_no_directives(self, hvs, capsys):
        assert main(["check", hvs('model "m" { field Q dim 1 product trivial }')]) == 0
        assert "no check directives" in capsys.readouterr().out

    def test_parse_error_exits_two(self, hvs, capsys):
        bad = (CORPUS / "invalid" / "i01_missing_dim.hvs").read_text()
        assert main(["check", hvs(bad)]) == 2
        err = capsys.readouterr().err
        assert "line 3, column 3" in err

    def test_missing_file_exits_two(self, tmp_path, capsys):
        assert main(["check", str(tmp_path / "absent.hvs")]) == 2
        assert "error:" in capsys.readouterr().err

    def test_bad_flag_value_exits_two(self, hvs, capsys):
        assert main(["check", hvs(CLEAN_FILE), "--samples", "0"]) == 2
        assert "samples" in capsys.readouterr().err


class TestEssentialCommand:
    def test_documented_example(self, hvs, capsys):
        path = hvs('model "za" { field Q dim 2 product zero_augmented }')
        assert main(["essential", path, "--a", "3", "--x", "(1,2)"]) == 0
        assert capsys.readouterr().out == "E = {(3, 6)} (complete)\n"

    def test_sign_pair(self, hvs, capsys):
        path = hvs('model "s" { field Q dim 2 product sign }')
        assert main(["essential", path, "--a", "1", "--x", "(1,0)"]) == 0
        assert capsys.readouterr().out == "E = {(-1, 0), (1, 0)} (complete)\n"

    def test_bad_scalar_exits_two(self, hvs, capsys):
        path = hvs('model "s" { field Q dim 2 product sign }')
        assert main(["essential", path, "--a", "3/0", "--x", "(1,0)"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_wrong_dim_exits_two(self, hvs, capsys):
        path = hvs('model "s" { field Q dim 2 product sign }')
        assert main(["essential", path, "--a", "1", "--x", "(1,0,0)"]) == 2


class TestSupCommand:
    def test_attained(self, hvs, capsys):
        path = hvs('model "za" { field Q dim 2 product zero_augmented inner dot }')
        assert main(["sup", path, "--a", "1", "--x", "(1,0)", "--y", "(-1,0)"]) == 0
        assert capsys.readouterr().out == "sup = 0 (attained at (0, 0))\n"

    def test_not_attained(self, hvs, capsys):
        path = hvs('model "g" { field Q dim 2 product geometric(1/2) inner dot }')
        assert main(["sup", path, "--a", "1", "--x", "(1,0)", "--y", "(-1,0)"]) == 0
        assert capsys.readouterr().out == "sup = 0 (not attained)\n"

    def test_unbounded(self, hvs, capsys):
        path = hvs('model "g" { field Q dim 2 product geometric(2) inner dot }')
        assert main(["sup", path, "--a", "1", "--x", "(1,0)", "--y", "(1,0)"]) == 0
        assert capsys.readouterr().out == "sup is unbounded\n"

    def test_defaults_to_dot_without_inner(self, hvs, capsys):
        path = hvs('model "t" { field Q dim 2 product trivial }')
        assert main(["sup", path, "--a", "2", "--x", "(1,2)", "--y", "(1,0)"]) == 0
        assert capsys.readouterr().out == "sup = 2 (attained at (2, 4))\n"

    def test_complex_field_exits_two(self, hvs, capsys):
        path = hvs('model "t" { field Qi dim 1 product trivial inner dot }')
        assert main(["sup", path, "--a", "1", "--x", "(1)", "--y", "(1)"]) == 2
        assert "real field" in capsys.readouterr().err


class TestCatalogCommand:
    def test_table(self, capsys):
        assert main(["catalog"]) == 0
        out = capsys.readouterr().out
        for name in ("trivial", "zero_augmented", "geometric(1/2)",
                     "geometric(2)", "sign"):
            assert name in out
        for suite in ("wvs_axioms", "real_ip", "norm_props"):
            assert suite in out
        assert "unbounded" in out
        assert "readings disagree" in out


class TestEntryPoints:
    def test_console_script_installed(self):
        assert shutil.which("hypervec")

    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "hypervec", "catalog"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "trivial" in proc.stdout

    def test_usage_error_exits_two(self):
        proc = subprocess.run(
            [sys.executable, "-m", "hypervec", "bogus"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 2
