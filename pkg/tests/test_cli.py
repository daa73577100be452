import json
import subprocess
import sys
from importlib import resources

import pytest

from polydecomp.cli import main
from polydecomp.complex import read_cplx

jsonschema = pytest.importorskip("jsonschema")


def schema(name):
    return json.loads(resources.files("polydecomp").joinpath(f"schemas/{name}").read_text())


def validate_report(path, certificate=False):
    rep = json.loads(path.read_text())
    jsonschema.validate(rep, schema("report.schema.json"))
    if certificate:
        jsonschema.validate(rep["results"], schema("certificate.schema.json"))
    return rep


@pytest.fixture
def d6_path(tmp_path):
    path = tmp_path / "d6.cplx"
    assert main(["gen", "family", "--parity", "even", "--m", "3", "--out", str(path)]) == 0
    return path


@pytest.fixture
def fig1_path(tmp_path):
    path = tmp_path / "fig1.cplx"
    assert main(["gen", "transport", "--rows", "3,5", "--cols", "2,2,2,2", "--polar",
                 "--out", str(path)]) == 0
    return path


class TestGen:
    def test_family(self, d6_path):
        lines = [l for l in d6_path.read_text().splitlines() if not l.startswith("#")]
        assert len(lines) == 140

    def test_polytope_json(self, capsys):
        assert main(["gen", "transport", "--rows", "3,5", "--cols", "2,2,2,2"]) == 0
        assert json.loads(capsys.readouterr().out) == {"rows": [3, 5], "cols": [2, 2, 2, 2]}

    def test_vertices(self, capsys):
        assert main(["gen", "transport", "--rows", "3,5", "--cols", "2,2,2,2", "--vertices"]) == 0
        assert capsys.readouterr().out.count("\n\n") == 11

    def test_degenerate_polar(self, capsys):
        rc = main(["gen", "transport", "--rows", "6,6", "--cols", "2,2,2,2,2,2", "--polar"])
        assert rc == 2
        assert "polar not simplicial" in capsys.readouterr().err

    def test_bad_m(self):
        assert main(["gen", "family", "--parity", "odd", "--m", "2"]) == 2

    def test_gen_report(self, tmp_path):
        rep = tmp_path / "r.json"
        assert main(["gen", "family", "--parity", "odd", "--m", "3", "--out",
                     str(tmp_path / "x.cplx"), "--json", str(rep)]) == 0
        assert validate_report(rep)["results"]["n_facets"] == 60


class TestCheck:
    def test_delta6_weak(self, d6_path, tmp_path, capsys):
        rep = tmp_path / "r.json"
        assert main(["check", str(d6_path), "--k", "0", "--mode", "weak",
                     "--json", str(rep)]) == 0
        assert "FALSE" in capsys.readouterr().out
        data = validate_report(rep, certificate=True)
        assert data["results"]["result"] is False

    def test_roundtrip_without_warnings(self, d6_path, caplog):
        assert read_cplx(d6_path).n_dropped == 0
        assert not caplog.records

    def test_figure1_strong_then_verify(self, fig1_path, tmp_path, capsys):
        rep = tmp_path / "r.json"
        assert main(["check", str(fig1_path), "--mode", "strong", "--json", str(rep)]) == 0
        data = validate_report(rep, certificate=True)
        assert data["results"]["result"] is True
        assert main(["verify", str(fig1_path), str(rep)]) == 0
        assert "VALID" in capsys.readouterr().out

    def test_verify_against_wrong_complex(self, fig1_path, d6_path, tmp_path):
        rep = tmp_path / "r.json"
        main(["check", str(fig1_path), "--mode", "strong", "--json", str(rep)])
        assert main(["verify", str(d6_path), str(rep)]) == 2

    def test_simplex_boundary(self, tmp_path, capsys):
        path = tmp_path / "s.cplx"
        path.write_text("a b c\na b d\na c d\nb c d\n")
        assert main(["check", str(path)]) == 0
        assert "TRUE" in capsys.readouterr().out

    def test_impure_input(self, tmp_path, capsys):
        path = tmp_path / "i.cplx"
        path.write_text("a b\nc\n")
        assert main(["check", str(path)]) == 0
        assert "impure" in capsys.readouterr().out

    def test_trace_symmetry(self, d6_path, tmp_path, capsys):
        rep = tmp_path / "r.json"
        assert main(["check", str(d6_path), "--trace", "--symmetry", "--json", str(rep)]) == 0
        data = validate_report(rep, certificate=True)
        assert len(data["results"]["trace"]) == 2

    def test_limit_nodes(self, d6_path):
        assert main(["check", str(d6_path), "--limit-nodes", "3"]) == 4

    def test_missing_file(self, tmp_path):
        assert main(["check", str(tmp_path / "nope.cplx")]) == 2

    def test_deterministic_reports(self, fig1_path, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        args = ["check", str(fig1_path), "--mode", "strong", "--jobs", "1"]
        main(args + ["--json", str(a)])
        main(args + ["--json", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_timing_opt_in(self, fig1_path, tmp_path):
        rep = tmp_path / "t.json"
        main(["check", str(fig1_path), "--timing", "--json", str(rep)])
        assert "wall_time" in validate_report(rep)


class TestDiameter:
    def test_delta6_hirsch(self, d6_path, tmp_path, capsys):
        rep = tmp_path / "r.json"
        assert main(["diameter", str(d6_path), "--hirsch", "--json", str(rep)]) == 0
        data = validate_report(rep)
        (bound,) = data["results"]["bounds"]
        assert bound["bound_value"] == 8 and bound["satisfied"]

    def test_delta5_hirsch(self, tmp_path, capsys):
        path = tmp_path / "d5.cplx"
        main(["gen", "family", "--parity", "odd", "--m", "3", "--out", str(path)])
        assert main(["diameter", str(path), "--hirsch"]) == 0
        assert "7: satisfied" in capsys.readouterr().out

    def test_tetra(self, tmp_path, capsys):
        path = tmp_path / "t.cplx"
        path.write_text("a b c\na b d\na c d\nb c d\n")
        assert main(["diameter", str(path), "--bp-bound", "0", "strong"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("diameter 1 ") and "billera_provan_strong: 1 <= 1" in out

    def test_impure_and_disconnected(self, tmp_path):
        path = tmp_path / "x.cplx"
        path.write_text("a b\nc\n")
        assert main(["diameter", str(path)]) == 2
        path.write_text("a b\nc d\n")
        assert main(["diameter", str(path)]) == 2


def test_console_entry_point(tmp_path):
    out = subprocess.run([sys.executable, "-m", "polydecomp.cli", "gen", "family",
                          "--parity", "even", "--m", "3"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.count("\n") == 141
