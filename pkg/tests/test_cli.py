"""Command-line interface: subcommands, exit codes, file formats."""

import json
import subprocess
import sys

import networkx as nx
import numpy as np
import pytest

from hidesign.cli import main
from hidesign.designs import PointSet, generate


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTable:
    def test_single_cell(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "5", "--t", "4")
        assert code == 0
        assert "7" in out.split()

    def test_reference_grid(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "3..10", "--t", "4..20", "--even",
                           "--truncate", "2")
        assert code == 0
        assert "3.33.." in out and "43.97.." in out and "27.004.." in out

    def test_odd_degree_note(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "3..4", "--t", "5")
        assert code == 0
        assert "note:" in out and "antipodal" in out

    def test_csv_format(self, capsys):
        code, out, _ = run(capsys, "table", "--n", "5", "--t", "4", "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "n,t,c,b,b_printed,integral"

    def test_bad_range_exits_2(self, capsys):
        code, _, err = run(capsys, "table", "--n", "10..3", "--t", "4")
        assert code == 2
        assert "error" in err

    def test_json_deterministic(self, capsys):
        code1, out1, _ = run(capsys, "table", "--n", "3..4", "--t", "4..8", "--format", "json")
        code2, out2, _ = run(capsys, "table", "--n", "3..4", "--t", "4..8", "--format", "json")
        assert code1 == code2 == 0 and out1 == out2


class TestConstructAndVerify:
    def test_icosahedron_roundtrip(self, tmp_path, capsys):
        out_file = tmp_path / "icosa.json"
        code, _, _ = run(capsys, "construct", "icosahedron-half", "--out", str(out_file))
        assert code == 0
        ps = PointSet.load(out_file)
        assert len(ps) == 6 and ps.dim == 3

    def test_cell600(self, tmp_path, capsys):
        out_file = tmp_path / "c600.json"
        assert run(capsys, "construct", "cell600-half", "--out", str(out_file))[0] == 0
        assert len(PointSet.load(out_file)) == 60

    def test_construct_deterministic(self, capsys):
        _, out1, _ = run(capsys, "construct", "e8-half")
        _, out2, _ = run(capsys, "construct", "e8-half")
        assert out1 == out2

    def test_lift_pentagon_matches_x0_plus(self, tmp_path, capsys):
        base = tmp_path / "pentagon.json"
        run(capsys, "construct", "regular-polygon", "--m", "5", "--out", str(base))
        lifted_file = tmp_path / "lifted.json"
        code, _, _ = run(capsys, "construct", "lift", "--base", str(base), "--n", "3",
                         "--t", "4", "--root-index", "1", "--out", str(lifted_file))
        assert code == 0
        lifted = PointSet.load(lifted_file)
        x0 = generate("x0_plus")

        def products(ps):
            g = ps.gram()
            return np.sort(g[np.triu_indices(len(ps), k=1)])

        np.testing.assert_allclose(products(lifted), products(x0), atol=1e-12)

    def test_lift_non_root_radius_exits_2(self, tmp_path, capsys):
        base = tmp_path / "pentagon.json"
        run(capsys, "construct", "regular-polygon", "--m", "5", "--out", str(base))
        code, _, err = run(capsys, "construct", "lift", "--base", str(base), "--n", "3",
                           "--t", "4", "--radius", "0.5")
        assert code == 2 and "not a root" in err

    def test_verify_pass_and_fail_exit_codes(self, tmp_path, capsys):
        x0_file = tmp_path / "x0.json"
        generate("x0_plus").save(x0_file)
        assert run(capsys, "verify", "--in", str(x0_file), "--t", "4")[0] == 0
        ico_file = tmp_path / "icosa.json"
        generate("icosahedron_half").save(ico_file)
        assert run(capsys, "verify", "--in", str(ico_file), "--t", "8")[0] == 0
        code, out, _ = run(capsys, "verify", "--in", str(ico_file), "--t", "6")
        assert code == 1 and "FAIL" in out

    def test_verify_invalid_file_exits_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"dim": 2, "points": [["0.5", "0.0"]]}))
        code, _, err = run(capsys, "verify", "--in", str(bad), "--t", "2")
        assert code == 2 and "norm" in err

    def test_verify_spherical(self, tmp_path, capsys):
        f = tmp_path / "pent.json"
        generate("regular_polygon", m=5).save(f)
        code, out, _ = run(capsys, "verify", "--in", str(f), "--t", "4", "--spherical")
        assert code == 0
        assert out.count("degree") == 4

    def test_verify_json_format(self, tmp_path, capsys):
        f = tmp_path / "x0.json"
        generate("x0_plus").save(f)
        code, out, _ = run(capsys, "verify", "--in", str(f), "--t", "4", "--format", "json")
        assert code == 0
        assert json.loads(out)["passed"] is True

    def test_outdir_env(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("HIDESIGN_OUTDIR", str(tmp_path))
        code, _, _ = run(capsys, "construct", "simplex", "--n", "3", "--out", "sub/simplex.json")
        assert code == 0
        assert (tmp_path / "sub" / "simplex.json").exists()


class TestAsymptote:
    def test_reference_lines(self, capsys):
        # the leading line is "<limit to 10 digits> (<n(n+1)/2>)"; the
        # reference values are themselves only accurate to ~1e-9, so the
        # comparison is numeric rather than textual
        for n, expect, cap in ((7, 35.11842602, 28), (3, 3.482871935, 6), (9, 204.5294426, 45)):
            code, out, _ = run(capsys, "asymptote", "--n", str(n))
            assert code == 0
            first = out.splitlines()[0]
            value, bracket = first.split(" ")
            assert float(value) == pytest.approx(expect, rel=1e-6)
            assert bracket == f"({cap})"

    def test_json(self, capsys):
        import math

        code, out, _ = run(capsys, "asymptote", "--n", "4", "--format", "json")
        body = json.loads(out)
        assert code == 0
        assert body["limit"] == pytest.approx(5.079602836, rel=1e-9)
        expect_corr = 1 - 1 / (math.gamma(1.5) * body["F"])
        assert body["limit_corrected"] == pytest.approx(expect_corr, rel=1e-12)
        assert body["limit_corrected"] == pytest.approx(5.6033388, rel=1e-6)

    def test_too_small_n(self, capsys):
        assert run(capsys, "asymptote", "--n", "2")[0] == 2


class TestTight:
    def test_n23(self, capsys):
        code, out, _ = run(capsys, "tight", "--n", "23")
        assert code == 0
        assert "p = 3" in out and "44" in out and "status: excluded" in out

    def test_n4(self, capsys):
        code, out, _ = run(capsys, "tight", "--n", "4")
        assert code == 0 and "status: excluded" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "tight", "--n", "71", "--format", "json")
        body = json.loads(out)
        assert code == 0 and body["status"] == "open" and body["p"] == 5


class TestEmbed:
    @pytest.fixture()
    def g6_file(self, tmp_path):
        lines = []
        for g in nx.graph_atlas_g():
            if g.number_of_nodes() == 4:
                lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
        path = tmp_path / "g4.g6"
        path.write_text("\n".join(lines) + "\n")
        return path

    def test_scan_plane(self, g6_file, capsys):
        code, out, err = run(capsys, "embed", "--graphs", str(g6_file), "--b2", "2", "--n", "2")
        assert code == 0
        records = [json.loads(line) for line in out.strip().splitlines()]
        assert len(records) == 11
        matching = [r for r in records if r["rank"] == 2 and r["feasible"]]
        assert matching  # the perfect matching realizes the unit square
        assert "scanned 11 graphs" in err

    def test_surd_ratio(self, g6_file, capsys):
        code, out, _ = run(capsys, "embed", "--graphs", str(g6_file), "--b2",
                           "(7+√33)/4", "--n", "7")
        assert code == 0
        assert all(json.loads(line)["feasible"] for line in out.strip().splitlines())

    def test_malformed_line_reports_number(self, tmp_path, capsys):
        path = tmp_path / "bad.g6"
        path.write_text("C?\n\x01\x02\n")
        code, _, err = run(capsys, "embed", "--graphs", str(path), "--b2", "2", "--n", "3")
        assert code == 2 and "line 2" in err

    def test_bad_b2_exits_2(self, capsys, tmp_path):
        path = tmp_path / "g.g6"
        path.write_text("C?\n")
        assert run(capsys, "embed", "--graphs", str(path), "--b2", "x", "--n", "3")[0] == 2

    def test_json_adjacency(self, tmp_path, capsys):
        path = tmp_path / "graphs.json"
        path.write_text(json.dumps([[[0, 1], [1, 0]]]))
        code, out, _ = run(capsys, "embed", "--graphs", str(path), "--json-adjacency",
                           "--b2", "2", "--n", "1")
        assert code == 0
        assert json.loads(out.strip())["rank"] == 1


class TestSubprocess:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "hidesign", "table", "--n", "3", "--t", "4"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert "3.333333333" in proc.stdout

    def test_usage_error_exit_code(self):
        proc = subprocess.run(
            [sys.executable, "-m", "hidesign", "table"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 2
