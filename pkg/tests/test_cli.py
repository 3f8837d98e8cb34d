"""Command-line surface: output schemas, determinism up to the timing
field, exit-status contract, and resource aborts."""

import json

import pytest

from confhom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestCompute:
    def test_theta4_genus_three_surface(self, capsys):
        code, out = run(capsys, "compute", "--graph", "theta:4", "-n", "3")
        assert code == 0
        data = json.loads(out)
        assert data["dims"] == {
            "0": {"betti": 1, "torsion": []},
            "1": {"betti": 6, "torsion": []},
            "2": {"betti": 1, "torsion": []},
        }
        assert data["euler"] == -4

    def test_wheel5(self, capsys):
        code, out = run(capsys, "compute", "--graph", "wheel:5", "-n", "5")
        data = json.loads(out)
        assert data["dims"]["2"]["betti"] == 34
        assert data["dims"]["3"]["betti"] == 4
        assert all(not v["torsion"] for v in data["dims"].values())

    def test_petersen_torsion_row(self, capsys):
        code, out = run(capsys, "compute", "--graph", "petersen:10", "-n", "4",
                        "--dims", "2")
        data = json.loads(out)
        assert data["dims"] == {"2": {"betti": 40, "torsion": [2]}}

    def test_deterministic_modulo_timing(self, capsys):
        _, a = run(capsys, "compute", "--graph", "k4", "-n", "3")
        _, b = run(capsys, "compute", "--graph", "k4", "-n", "3")
        da, db = json.loads(a), json.loads(b)
        da.pop("elapsed_ms"), db.pop("elapsed_ms")
        assert da == db

    def test_abrams_model(self, capsys):
        code, out = run(capsys, "compute", "--graph", "star:3", "-n", "2",
                        "--model", "abrams")
        data = json.loads(out)
        assert data["dims"]["1"]["betti"] == 1

    def test_max_cells_abort(self, capsys):
        code, out = run(capsys, "compute", "--graph", "k33", "-n", "4",
                        "--max-cells", "100")
        assert code == 2
        assert "aborted" in json.loads(out)

    def test_dims_range(self, capsys):
        code, out = run(capsys, "compute", "--graph", "k4", "-n", "4",
                        "--dims", "2-3")
        data = json.loads(out)
        assert set(data["dims"]) == {"2", "3"}
        assert data["dims"]["2"]["betti"] == 9

    def test_csv_format(self, capsys):
        code, out = run(capsys, "compute", "--graph", "k4", "-n", "3",
                        "--format", "csv")
        header, row = out.strip().splitlines()
        assert "dims.2.betti" in header

    def test_graph_json_input(self, capsys, tmp_path):
        path = tmp_path / "g.json"
        path.write_text('{"vertices":["a","b"],"edges":[["a","b"]]}')
        code, out = run(capsys, "compute", "--graph", str(path), "-n", "1")
        assert json.loads(out)["dims"]["0"]["betti"] == 1


class TestPredict:
    @pytest.mark.parametrize("family,n,d,value", [
        ("wheel:7", 7, 3, 527),
        ("k4", 3, 2, 3),
        ("net:4", 6, 2, 60),
    ])
    def test_values(self, capsys, family, n, d, value):
        code, out = run(capsys, "predict", family, "-n", str(n), "-d", str(d))
        assert code == 0
        assert json.loads(out)["dims"][str(d)]["betti"] == value

    def test_out_of_range_exit(self, capsys):
        code, out = run(capsys, "predict", "k4", "-n", "5", "-d", "1")
        assert code == 3

    def test_unknown_family(self, capsys):
        assert main(["predict", "mystery:3", "-n", "2", "-d", "1"]) == 64


class TestVerify:
    def test_relations_suite_passes(self, capsys):
        code, out = run(capsys, "verify", "relations")
        assert code == 0
        assert "[PASS]" in out
        assert "[FAIL]" not in out

    def test_cross_model_suite_passes(self, capsys):
        code, out = run(capsys, "verify", "cross-model", "--format", "json")
        assert code == 0
        rows = json.loads(out)
        assert rows and all(r["ok"] for r in rows)


class TestCycles:
    def test_single_relation(self, capsys):
        code, out = run(capsys, "cycles", "--relation", "y-ab")
        assert code == 0

    def test_spec_construction(self, capsys):
        spec = ('{"kind":"Y","hub":"u","branches":["e1","e2","e3"],'
                '"dressing":{"vertices":[],"edges":{"e1":1}}}')
        code, out = run(capsys, "cycles", "--graph", "theta:3", "-n", "3",
                        "--spec", spec, "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["boundary_zero"] is True


class TestDump:
    def test_schema(self, capsys, tmp_path):
        out_path = tmp_path / "cx.json"
        code, _ = run(capsys, "dump-complex", "--graph", "theta:3", "-n", "2",
                      "-o", str(out_path))
        assert code == 0
        data = json.loads(out_path.read_text())
        assert data["dims"] == [13, 24, 9]
        assert set(data["boundary"]) == {"1", "2"}
        assert all(len(t) == 3 for t in data["boundary"]["1"])

    def test_roundtrip_through_engine(self, capsys, tmp_path):
        from confhom.complexes import ChainComplex
        from confhom.homology import homology
        out_path = tmp_path / "cx.json"
        run(capsys, "dump-complex", "--graph", "theta:4", "-n", "3",
            "-o", str(out_path))
        cx = ChainComplex.from_json_dict(json.loads(out_path.read_text()))
        assert homology(cx).betti_vector() == (1, 6, 1)
