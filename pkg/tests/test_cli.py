import json
import subprocess
import sys

import numpy as np
import pytest

from nxinfo import cli
from nxinfo.entropy import entropy
from nxinfo.errors import ConvergenceError


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _csv_values(text):
    lines = text.strip().splitlines()
    return {line.split(",")[0]: line.split(",")[1] for line in lines[1:]}


class TestEntropy:
    def test_fair_coin_natural(self, capsys):
        code, out, _ = run(capsys, "entropy", "--convention", "natural", "0.5", "0.5")
        assert code == 0
        vals = _csv_values(out)
        assert vals == {
            "shannon": "0.69314718056",
            "plus": "0.585786437627",
            "minus": "0.828427124746",
            "zero": "0.707106781187",
        }

    def test_point_mass(self, capsys):
        code, out, _ = run(capsys, "entropy", "1.0")
        assert code == 0
        assert set(_csv_values(out).values()) == {"0"}

    def test_mass_exceeds(self, capsys):
        code, out, err = run(capsys, "entropy", "0.5", "0.6")
        assert code == 2 and out == ""
        assert "mass exceeds 1" in err

    @pytest.mark.parametrize(
        "argv, needle",
        [
            (["entropy", "0.5", "abc"], "not a number"),
            (["entropy"], "no distribution"),
            (["entropy", "-0.5", "1.5"], "negative entry"),
            (["entropy", "0.2", "0.2"], "mass below 1"),
        ],
    )
    def test_bad_input(self, capsys, argv, needle):
        code, _, err = run(capsys, *argv)
        assert code == 2 and needle in err

    def test_comma_input(self, capsys):
        _, a, _ = run(capsys, "entropy", "0.25,0.75")
        _, b, _ = run(capsys, "entropy", "0.25", "0.75")
        assert a == b

    def test_round_trip_twelve_digits(self, capsys, rng):
        for _ in range(20):
            p = rng.dirichlet(np.ones(6))
            args = ["entropy", "--format", "json", "--base", "3"] + [repr(float(v)) for v in p]
            code, out, _ = run(capsys, *args)
            assert code == 0
            doc = json.loads(out)
            for row in doc["rows"]:
                lib = entropy(row["measure"], p, 3, "rescale")
                assert row["value"] == pytest.approx(lib, rel=1e-11, abs=1e-15)

    def test_json_file(self, capsys, tmp_path):
        f = tmp_path / "p.json"
        f.write_text('{"probs": [0.5, 0.5]}')
        _, a, _ = run(capsys, "entropy", "--input", str(f))
        g = tmp_path / "c.json"
        g.write_text('{"counts": [3, 3]}')
        _, b, _ = run(capsys, "entropy", "--input", str(g))
        _, c, _ = run(capsys, "entropy", "0.5", "0.5")
        assert a == b == c

    def test_symbol_file(self, capsys, tmp_path):
        f = tmp_path / "sym.txt"
        f.write_text("a b a b\nb a\n")
        _, a, _ = run(capsys, "entropy", "--input", str(f))
        _, b, _ = run(capsys, "entropy", "0.5", "0.5")
        assert a == b

    def test_bad_files(self, capsys, tmp_path):
        f = tmp_path / "x.json"
        f.write_text('{"weights": [1]}')
        assert run(capsys, "entropy", "--input", str(f))[0] == 2
        assert run(capsys, "entropy", "--input", str(tmp_path / "missing"))[0] == 2
        e = tmp_path / "empty.txt"
        e.write_text("  \n")
        assert run(capsys, "entropy", "--input", str(e))[0] == 2
        assert run(capsys, "entropy", "--input", str(e), "0.5", "0.5")[0] == 2


class TestLengths:
    def test_uniform_four_plus(self, capsys):
        code, out, _ = run(capsys, "lengths", "--variant", "plus", "--format", "json", "0.25", "0.25", "0.25", "0.25")
        assert code == 0
        rep = json.loads(out)["reports"][0]
        assert rep["avg_int"] == 2
        assert rep["entropy_value"] == pytest.approx(1.69022237717, abs=1e-10)
        assert rep["sandwich_ok"] is True

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "lengths", "0.5", "0.5")
        lines = out.strip().splitlines()
        assert code == 0 and lines[0].startswith("kind,entropy,avg_real")
        assert len(lines) == 5

    def test_jmax_changes_kraft(self, capsys):
        _, a, _ = run(capsys, "lengths", "--variant", "plus", "--jmax", "0", "--format", "json", "0.5", "0.5")
        rep = json.loads(a)["reports"][0]
        assert rep["kraft_generalized"] == pytest.approx(2 * 2.0 ** -0.845111188584, rel=1e-10)


class TestKraft:
    def test_first_order(self, capsys):
        code, out, _ = run(capsys, "kraft", "--jmax", "0", "1", "1")
        assert code == 0
        assert set(_csv_values(out).values()) == {"1"}

    def test_full(self, capsys):
        _, out, _ = run(capsys, "kraft", "1", "1")
        vals = _csv_values(out)
        assert float(vals["plus"]) == pytest.approx(0.347666717868, abs=1e-12)

    def test_errors(self, capsys):
        assert run(capsys, "kraft", "0", "1")[0] == 2
        with pytest.raises(SystemExit) as exc:
            cli.main(["kraft", "--jmax", "9", "1"])
        assert exc.value.code == 2


class TestCapacity:
    def test_bsc(self, capsys):
        code, out, _ = run(capsys, "capacity", "bsc", "0.1", "--variant", "shannon", "--format", "json")
        row = json.loads(out)["rows"][0]
        assert code == 0
        assert row["closed_form"] == pytest.approx(0.531004406410, abs=1e-11)
        assert row["numeric"] == pytest.approx(row["closed_form"], abs=1e-6)
        assert row["maximizer"] == pytest.approx(0.5, abs=1e-4)

    def test_out_of_range(self, capsys):
        code, _, err = run(capsys, "capacity", "bec", "1.5")
        assert code == 2 and "erasure probability" in err


class TestSweep:
    def test_fig1_row(self, capsys):
        _, out, _ = run(capsys, "sweep", "fig1", "--stop", "100")
        lines = out.splitlines()
        assert lines[0] == "N,H_S,H_plus,H_minus"
        assert lines[1] == "2,0.69314718056,0.585786437627,0.828427124746"
        assert len(lines) == 100

    def test_bsc_midpoint(self, capsys):
        _, out, _ = run(capsys, "sweep", "bsc", "--step", "0.1")
        row = out.splitlines()[6].split(",")
        assert row[0] == "0.5"
        assert all(abs(float(v)) <= 1e-9 for v in row[1:])

    def test_bec_exact(self, capsys):
        _, out, _ = run(capsys, "sweep", "bec", "--step", "0.01", "--format", "json")
        for row in json.loads(out)["rows"]:
            assert row["C_S"] == pytest.approx(1 - row["alpha"], abs=1e-12)

    def test_empty_range(self, capsys):
        code, _, err = run(capsys, "sweep", "bsc", "--start", "0.8", "--stop", "0.2")
        assert code == 2 and "empty range" in err
        assert run(capsys, "sweep", "fig1", "--start", "50", "--stop", "10")[0] == 2

    def test_uniform(self, capsys):
        code, out, _ = run(capsys, "sweep", "uniform", "--start", "16", "--stop", "64")
        assert code == 0 and out.splitlines()[0] == "N,L_S,L_plus,L_minus,gap_plus"


class TestSimulate:
    def test_ordering_on_empirical(self, capsys):
        code, out, _ = run(capsys, "simulate", "--seed", "42", "--format", "json", "0.5", "0.5")
        assert code == 0
        doc = json.loads(out)
        avg = {r["kind"]: r["avg_real"] for r in doc["reports"]}
        assert avg["plus"] <= avg["shannon"] <= avg["minus"]
        assert sum(doc["counts"]) == 1000

    def test_samples_file(self, capsys, tmp_path):
        target = tmp_path / "draws.txt"
        code, _, _ = run(capsys, "simulate", "--draws", "50", "--samples", str(target), "0.2", "0.8")
        assert code == 0
        assert len(target.read_text().split()) == 50

    def test_zero_draws(self, capsys):
        assert run(capsys, "simulate", "--draws", "0", "0.5", "0.5")[0] == 2


class TestPlumbing:
    def test_out_with_env_dir(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv(cli.OUTPUT_DIR_ENV, str(tmp_path))
        code, out, _ = run(capsys, "entropy", "--out", "sub/h.csv", "0.5", "0.5")
        assert code == 0 and out == ""
        assert (tmp_path / "sub" / "h.csv").read_text().startswith("measure,value\n")

    def test_convergence_exit_code(self, capsys, monkeypatch):
        def boom(args):
            raise ConvergenceError("root not bracketed")

        monkeypatch.setitem(cli.COMMANDS, "entropy", boom)
        code, _, err = run(capsys, "entropy", "0.5", "0.5")
        assert code == 3 and "root not bracketed" in err

    @pytest.mark.parametrize(
        "argv",
        [
            ["entropy", "0.1", "0.2", "0.7"],
            ["lengths", "--base", "3", "0.1", "0.2", "0.7"],
            ["kraft", "1", "2", "3", "3"],
            ["capacity", "bec", "0.3", "--step", "0.01"],
            ["sweep", "bsc", "--step", "0.05"],
            ["simulate", "--seed", "9", "0.3", "0.7"],
        ],
    )
    def test_byte_identical(self, tmp_path, argv):
        outs = []
        for i in range(2):
            path = tmp_path / f"run{i}.out"
            assert cli.main(argv + ["--out", str(path)]) == 0
            outs.append(path.read_bytes())
        assert outs[0] == outs[1] and outs[0]

    def test_module_entry_point(self):
        res = subprocess.run(
            [sys.executable, "-m", "nxinfo", "entropy", "1.0"], capture_output=True, text=True
        )
        assert res.returncode == 0 and res.stdout.startswith("measure,value")
