import json
import subprocess
import sys

import pytest

from drghosoya import cli, intersection
from drghosoya.polynomial import IntPolynomial


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestArray:
    def test_hypercube(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "array", "--b", "3,2,1", "--c", "1,2,3")
        assert code == 0
        d = json.loads(out)
        assert d["n"] == "8"
        assert d["diameter"] == 3
        assert d["hosoya"] == ["0", "12", "12", "4"]
        assert d["wiener"] == "48"
        assert d["hyper_wiener"] == "72"
        assert d["verification"] == "closed_form_only"
        assert d["intersection_array"] == {"b": ["3", "2", "1"], "c": ["1", "2", "3"]}

    def test_text(self, capsys):
        code, out, _ = run(capsys, "array", "--b", "4", "--c", "1")
        assert code == 0
        assert "n = 5" in out
        assert "H(G,t) = 10*t" in out
        assert "W(G) = 10" in out

    def test_c1(self, capsys):
        code, out, err = run(capsys, "array", "--b", "3,2", "--c", "2,1")
        assert code == 2
        assert out == ""
        assert "c_1 must equal 1" in err

    def test_declared_n(self, capsys):
        assert run(capsys, "array", "--b", "3,2", "--c", "1,1", "--n", "10")[0] == 0
        code, _, err = run(capsys, "array", "--b", "3,2", "--c", "1,1", "--n", "11")
        assert code == 2
        assert "n = 10" in err

    def test_monotonicity_warning_goes_to_stderr(self, capsys):
        code, _, err = run(capsys, "array", "--b", "2,3", "--c", "1,1")
        assert code == 0
        assert "warning: b is not non-increasing" in err

    def test_flags_after_subcommand(self, capsys):
        code, out, _ = run(capsys, "array", "--b", "3,2", "--c", "1,1", "--format", "csv")
        assert code == 0
        assert out == "k,pairs\n1,15\n2,30\n"


class TestSrg:
    def test_petersen(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "srg", "10", "3", "0", "1")
        assert code == 0
        d = json.loads(out)
        assert d["hosoya"] == ["0", "15", "30"]
        assert d["wiener"] == "75"
        assert d["srg_forms"] == {"ratio": ["0", "15", "30"], "simplified": ["0", "15", "30"]}

    def test_relation_violated(self, capsys):
        code, _, err = run(capsys, "srg", "10", "3", "0", "2")
        assert code == 2
        assert "12 != 6" in err

    def test_k33(self, capsys):
        code, out, _ = run(capsys, "srg", "6", "3", "0", "3")
        assert code == 0
        assert "H(G,t) = 9*t + 6*t^2" in out
        assert "(n/2)(k t + (n-k-1) t^2)" in out


class TestVerify:
    def test_hypercube(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "verify", "--family", "hypercube:6")
        assert code == 0
        d = json.loads(out)
        assert d["verification"] == "verified_match"
        assert sum(int(x) for x in d["hosoya"]) == 2016

    def test_petersen(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "verify", "--family", "petersen")
        d = json.loads(out)
        assert code == 0
        assert (d["verification"], d["wiener"], d["hyper_wiener"]) == ("verified_match", "75", "105")
        assert d["witness"] is None

    def test_path_file(self, capsys, tmp_path):
        f = tmp_path / "p4.txt"
        f.write_text("# path\n0 1\n1 2\n2 3\n")
        code, out, _ = run(capsys, "--format", "json", "verify", "--file", str(f))
        assert code == 0
        d = json.loads(out)
        assert d["verification"] == "oracle_only"
        assert d["witness"]["reason"] == "NotRegular"
        assert d["hosoya"] == ["0", "3", "2", "1"]
        assert d["intersection_array"] is None

    def test_disconnected_file(self, capsys, tmp_path):
        f = tmp_path / "two.txt"
        f.write_text("0 1\n2 3\n")
        code, _, err = run(capsys, "verify", "--file", str(f))
        assert code == 2
        assert "disconnected" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "verify", "--file", str(tmp_path / "nope.txt"))
        assert code == 2
        assert "cannot read" in err

    def test_bad_family(self, capsys):
        assert run(capsys, "verify", "--family", "kneser2:4")[0] == 2

    def test_size_cap(self, capsys):
        code, _, err = run(capsys, "--max-vertices", "100", "verify", "--family", "hypercube:7")
        assert code == 2
        assert "cap" in err

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        real = intersection.hosoya_closed_form

        def corrupted(a):
            p = real(a)
            return IntPolynomial([*p.coeffs[:2], p.coeffs[2] + 1, *p.coeffs[3:]])

        monkeypatch.setattr(intersection, "hosoya_closed_form", corrupted)
        code, out, err = run(capsys, "--format", "json", "verify", "--family", "petersen")
        assert code == 3
        d = json.loads(out)
        assert d["verification"] == "mismatch"
        assert d["witness"]["first_differing_power"] == 2
        assert "disagree" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["array", "--b", "3,2,1", "--c", "1,2,3"],
        ["srg", "15", "6", "1", "3"],
        ["verify", "--family", "johnson:6,3"],
        ["verify", "--family", "hamming:2,3"],
    ],
)
def test_json_roundtrip(capsys, argv):
    code, out, _ = run(capsys, "--format", "json", *argv)
    assert code == 0
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_big_coefficients_are_strings(capsys):
    k = 40
    b = ",".join(str(x) for x in range(k, 0, -1))
    c = ",".join(str(x) for x in range(1, k + 1))
    code, out, _ = run(capsys, "--format", "json", "array", "--b", b, "--c", c)
    assert code == 0
    d = json.loads(out)
    assert d["n"] == str(2**40)
    assert d["wiener"] == str(k * 4 ** (k - 1))
    assert all(isinstance(x, str) for x in d["hosoya"])


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "drghosoya", "array", "--b", "3,2", "--c", "1,1"],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 0
    assert "15*t + 30*t^2" in r.stdout
