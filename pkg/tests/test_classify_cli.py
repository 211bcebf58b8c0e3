import csv
import hashlib
import json

import numpy as np
import pytest

from whml.classify import classify
from whml.cli import EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAIL, cli_main
from whml.errors import DomainError
from whml.transcend import alpha_c


class TestClassifyTheorem:
    def test_low_regime_invertible(self):
        rep = classify(0.3, 2.0, 1.0)
        assert rep.regime == "LOW"
        assert rep.bounded and rep.fredholm and rep.invertible
        assert rep.winding == 0 and rep.index == 0
        assert rep.kernel_trivial

    def test_high_above_critical(self):
        rep = classify(0.75, 2.0, 2.3)
        assert rep.regime == "HIGH"
        assert rep.fredholm and rep.kernel_trivial
        assert rep.index == -1 and rep.winding == 0
        assert rep.invertible is False
        assert rep.alpha_c == pytest.approx(0.726, abs=2e-3)

    def test_high_below_critical(self):
        rep = classify(0.75, 2.0, 2.1)
        assert rep.invertible and rep.index == 0 and rep.winding == -1

    def test_near_critical_not_fredholm(self):
        rep = classify(0.75, 2.0, 2.226)
        assert rep.regime == "HIGH"
        assert rep.fredholm is False
        assert rep.winding is None and rep.index is None
        assert rep.critical_s == pytest.approx(2.226, abs=2e-3)

    def test_exact_critical_not_fredholm(self):
        crit = 1.0 + 0.5 + alpha_c(0.75)
        rep = classify(0.75, 2.0, crit)
        assert rep.fredholm is False

    def test_boundaries_inadmissible(self):
        for s in (0.5, 1.5, 2.5):
            assert classify(0.3, 2.0, s).regime == "INADMISSIBLE"
        assert classify(0.3, 2.0, 3.7).regime == "INADMISSIBLE"

    def test_low_window_large_alpha_inadmissible(self):
        rep = classify(0.75, 2.0, 1.2)
        assert rep.regime == "INADMISSIBLE"

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            classify(1.5, 2.0, 1.0)
        with pytest.raises(DomainError):
            classify(0.3, 0.5, 1.0)

    def test_deterministic_json(self):
        a = classify(0.3, 2.0, 1.0, mode="both").to_json()
        b = classify(0.3, 2.0, 1.0, mode="both").to_json()
        assert a == b


class TestClassifyNumeric:
    def test_numeric_leaves_kernel_unset(self):
        rep = classify(0.75, 2.0, 2.2, mode="numeric")
        assert rep.fredholm and rep.winding == -1 and rep.index == 0
        assert rep.kernel_trivial is None and rep.invertible is None

    def test_theorem_numeric_agreement_sample(self):
        rng = np.random.default_rng(42)
        agreements = 0
        for _ in range(200):
            if rng.uniform() < 0.5:
                a = float(rng.uniform(0.05, 0.45))
                p = float(rng.uniform(1.2, 5.0))
                tau = float(rng.uniform(0.05, 0.95))
            else:
                a = float(rng.uniform(0.05, 0.95))
                p = float(rng.uniform(1.2, 5.0))
                crit = alpha_c(a)
                while True:
                    tau = float(rng.uniform(1.05, 1.95))
                    if abs(tau - (1.0 + crit)) > 0.05:
                        break
            s = tau + 1.0 / p
            theorem = classify(a, p, s, mode="theorem")
            numeric = classify(a, p, s, mode="numeric", n_base=64)
            assert theorem.fredholm == numeric.fredholm
            assert theorem.index == numeric.index
            agreements += 1
        assert agreements == 200

    def test_both_mode_flags_consistency(self):
        rep = classify(0.3, 2.0, 1.0, mode="both")
        assert "consistency=agree" in rep.notes


class TestCli:
    def test_alphac_value(self, capsys):
        assert cli_main(["alphac", "--alpha", "0.5"]) == EXIT_OK
        out = capsys.readouterr().out.strip()
        assert float(out) == pytest.approx(0.4303, abs=1e-3)

    def test_alphac_grid_csv(self, tmp_path, capsys):
        path = tmp_path / "table.csv"
        assert cli_main(["alphac", "--grid", "5", "--csv", str(path)]) == EXIT_OK
        out = capsys.readouterr().out
        assert str(path) in out and "sha256=" in out
        digest = out.strip().split("sha256=")[1]
        assert digest == hashlib.sha256(path.read_bytes()).hexdigest()
        rows = list(csv.reader(path.open()))
        assert rows[0] == ["alpha", "alpha_c"]
        assert len(rows) == 6
        for alpha_text, ac_text in rows[1:]:
            assert 0.0 < float(ac_text) < float(alpha_text)

    def test_index_zero(self, capsys):
        assert cli_main(["index", "--alpha", "0.25", "--p", "4", "--s", "0.7"]) == EXIT_OK
        assert "winding 0 index 0" in capsys.readouterr().out

    def test_index_not_fredholm(self, capsys):
        crit = 1.0 + 0.5 + alpha_c(0.75)
        assert cli_main(["index", "--alpha", "0.75", "--p", "2",
                         "--s", f"{crit:.15f}"]) == EXIT_OK
        assert "NOT_FREDHOLM" in capsys.readouterr().out

    def test_classify_json_modes_agree(self, capsys):
        assert cli_main(["classify", "--alpha", "0.3", "--p", "2", "--s", "1.0",
                         "--mode", "both", "--json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["regime"] == "LOW"
        assert "consistency=agree" in payload["notes"]
        assert list(payload) == ["regime", "bounded", "fredholm", "winding",
                                 "index", "kernel_trivial", "invertible",
                                 "alpha_c", "critical_s", "notes"]

    def test_contour_export(self, tmp_path, capsys):
        path = tmp_path / "loop.csv"
        assert cli_main(["contour", "--alpha", "0.4", "--p", "2", "--s", "1.4",
                         "--out", str(path), "--points", "64"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "sha256=" in out
        rows = list(csv.reader(path.open()))
        assert rows[0] == ["segment", "t", "re", "im"]
        for row in rows[1:]:
            z = complex(float(row[2]), float(row[3]))
            assert abs(z - 1.0) < 0.4

    def test_contour_io_failure(self):
        assert cli_main(["contour", "--alpha", "0.4", "--p", "2", "--s", "1.4",
                         "--out", "/nonexistent-dir/loop.csv"]) == EXIT_IO

    def test_domain_error_exit(self, capsys):
        assert cli_main(["classify", "--alpha", "1.5", "--p", "2", "--s", "1.0"]) == EXIT_USAGE
        assert "error" in capsys.readouterr().err

    def test_unknown_flag_exit(self, capsys):
        assert cli_main(["classify", "--bogus", "1"]) == EXIT_USAGE

    def test_verify_single_suite(self, capsys):
        assert cli_main(["verify", "--suite", "transcend", "--density", "20",
                         "--json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert all(rep["pass"] for rep in payload["transcend"])

    def test_verify_threads_env(self, capsys, monkeypatch):
        monkeypatch.setenv("WHML_THREADS", "1")
        assert cli_main(["verify", "--suite", "symbols"]) == EXIT_OK
        assert "suite symbols" in capsys.readouterr().out

    def test_verify_failure_exit(self, capsys, monkeypatch):
        from whml.reports import VerificationReport
        import whml.verify as verify_mod

        def failing_suite(density=20):
            return [VerificationReport.from_margin("forced", "unit test", -1.0, 0.0)]

        monkeypatch.setitem(verify_mod.SUITES, "symbols", failing_suite)
        assert cli_main(["verify", "--suite", "symbols"]) == EXIT_VERIFY_FAIL
        capsys.readouterr()
