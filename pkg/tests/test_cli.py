import os
import subprocess
import sys

import pytest

SRC = os.path.join(os.path.dirname(__file__), "..", "src")


def run(*args, stdin=None):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "nilext.cli", *args],
        capture_output=True,
        text=True,
        input=stdin,
        env=env,
    )
    return proc.returncode, proc.stdout, proc.stderr


@pytest.fixture(scope="module")
def b506_file(tmp_path_factory):
    rc, out, _ = run("catalog", "export", "B5_06")
    assert rc == 0
    path = tmp_path_factory.mktemp("alg") / "b506.alg"
    path.write_text(out)
    return str(path)


def test_catalog_list_and_show():
    rc, out, _ = run("catalog", "list", "--dim", "5")
    assert rc == 0
    assert out.count("dim 5") == 12
    rc, out, _ = run("catalog", "show", "B5_09")
    assert rc == 0
    assert "e4 e1 = e5" in out and "B4_05" in out


def test_check_pass_and_fail(b506_file, tmp_path):
    rc, out, _ = run("check", b506_file)
    assert rc == 0
    assert "bicommutative: yes" in out
    bad = tmp_path / "bad.alg"
    bad.write_text("dim 3\nfield Q\ntable\ne1 e1 = e2\ne2 e2 = e3\nend\n")
    rc, out, _ = run("check", str(bad))
    assert rc == 1
    assert "violation" in out


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "syntax.alg"
    bad.write_text("dim 2\nfield GF(2)\ntable\ne1 e1 = 1/2 e2\nend\n")
    rc, _, err = run("check", str(bad))
    assert rc == 2
    assert "division by zero" in err


def test_cohomology_output(b506_file):
    rc, out, _ = run("cohomology", b506_file)
    assert rc == 0
    assert "dim Z^2 = 6" in out and "dim B^2 = 4" in out and "dim H^2 = 2" in out


def test_autos(b506_file):
    rc, out, _ = run("autos", b506_file, "--field", "GF(2)")
    assert rc == 0
    assert "order: 16" in out


def test_extend_reconstructs_b620(b506_file):
    rc, out, _ = run(
        "extend", b506_file, "--cocycle", "D(1,3) + D(2,2) + D(5,1)", "--name", "x"
    )
    assert rc == 0
    rc2, want, _ = run("catalog", "export", "B6_20")
    want_body = want.replace("algebra B6_20", "algebra x")
    assert out == want_body


def test_iso_exit_codes(b506_file, tmp_path):
    rc, out, _ = run("iso", b506_file, b506_file, "--field", "GF(5)")
    assert rc == 0 and "isomorphic: yes" in out
    rc2, other, _ = run("catalog", "export", "B5_07")
    p = tmp_path / "b507.alg"
    p.write_text(other)
    rc, out, _ = run("iso", b506_file, str(p), "--field", "GF(5)")
    assert rc == 1 and "isomorphic: no" in out


def test_iso_unknown_exit_code(tmp_path):
    # two presentations of the same algebra that the bounded rational probe
    # cannot connect: exit code 3 marks the honest unknown
    a = tmp_path / "a.alg"
    a.write_text("dim 2\nfield Q\ntable\ne1 e1 = e2\nend\n")
    b = tmp_path / "b.alg"
    b.write_text("dim 2\nfield Q\ntable\ne1 e1 = 7/3 e2\nend\n")
    rc, out, _ = run("iso", str(a), str(b))
    assert rc in (0, 3)
    if rc == 3:
        assert "unknown" in out


def test_decompose(b506_file):
    rc, out, _ = run("decompose", b506_file)
    assert rc == 0
    assert "cocycle 1: D(1,2) + D(4,1)" in out
    assert "e3 e1 = e4" in out


def test_orbits(b506_file):
    rc, out, _ = run("orbits", b506_file, "--field", "GF(3)", "--ext-dim", "1")
    assert rc == 0
    assert "orbits" in out


def test_oracle_cross_validate():
    rc, out, _ = run("oracle", "--dim", "2", "--cross-validate")
    assert rc == 0
    assert "PERFECT MATCH" in out


def test_oracle_listing():
    rc, out, _ = run("oracle", "--dim", "2", "--field", "GF(3)")
    assert rc == 0
    assert "isomorphism classes" in out


def test_stdin_input():
    rc, out, _ = run("check", "-", stdin="dim 2\nfield Q\ntable\ne1 e1 = e2\nend\n")
    assert rc == 0


def test_parametric_file_with_set(tmp_path):
    p = tmp_path / "fam.alg"
    p.write_text(
        "algebra fam\ndim 3\nfield Q\nparams lambda\ntable\n"
        "e1 e1 = e2\ne1 e2 = e3\ne2 e1 = lambda e3\nend\n"
    )
    rc, out, _ = run("check", str(p), "--set", "lambda=2")
    assert rc == 0
    rc, _, err = run("check", str(p))
    assert rc == 2


def test_verify_paper_scope_catalog():
    rc, out, _ = run("verify-paper", "--scope", "catalog")
    assert rc == 0
    assert "PASS catalog well-formedness" in out
    assert "summary: 1/1 checks passed" in out


def test_verify_paper_deterministic():
    rc1, out1, _ = run("verify-paper", "--scope", "cohomology")
    rc2, out2, _ = run("verify-paper", "--scope", "cohomology")
    assert rc1 == rc2 == 0
    assert out1 == out2
