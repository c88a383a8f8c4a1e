import pytest

from hopfbench import config
from hopfbench.cli import build_parser, main

SWEEDLER = """\
name: sweedler
field: 2 1
generators: g x
grouplike: g
skewprim: x over g
relation: g^2 - 1
relation: gx - xg
relation: x^2
"""

C4 = """\
field: 2 1
generators: g
grouplike: g
relation: g^4 - 1
"""


@pytest.fixture
def sweedler_file(tmp_path):
    path = tmp_path / "sweedler.txt"
    path.write_text(SWEEDLER)
    return str(path)


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text(C4)
    return str(path)


def run(capsys, *argv):
    code = main(["--quiet", *argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_parser_requires_a_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_field_info(capsys):
    code, out, _ = run(capsys, "field-info", "2", "2")
    assert code == 0
    assert out.startswith("GF(4): p=2 k=2 q=4")
    assert "mul:" in out


def test_unsupported_field_is_an_error(capsys):
    code, _, err = run(capsys, "field-info", "7")
    assert code == 2
    assert err.startswith("error:")


def test_dim_and_basis(capsys, sweedler_file):
    code, out, _ = run(capsys, "dim", sweedler_file, "--basis")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "dimension 4"
    assert sorted(lines[1].split()) == ["1", "g", "gx", "x"]


def test_normal_form(capsys, sweedler_file):
    code, out, _ = run(capsys, "nf", sweedler_file, "xgx + xg")
    assert code == 0
    assert out.strip() == "gx"


def test_hopf_check(capsys, sweedler_file):
    code, out, _ = run(capsys, "hopf-check", sweedler_file)
    assert code == 0
    assert "dimension 4" in out
    assert "antipode-right: pass" in out


def test_skew_primitives(capsys, sweedler_file):
    code, out, _ = run(capsys, "skewprim", sweedler_file, "1", "g")
    assert code == 0
    assert out.splitlines()[0] == "dim P_{1,g} = 2"


def test_grouplikes(capsys, c4_file):
    code, out, _ = run(capsys, "grouplikes", c4_file, "--enumerate")
    assert code == 0
    assert out.splitlines()[0] == "4 group-like elements"


def test_iso(capsys, c4_file, sweedler_file):
    code, out, _ = run(capsys, "iso", c4_file, c4_file)
    assert code == 0
    assert out.splitlines()[0] == "isomorphic"
    code, out, _ = run(capsys, "iso", c4_file, sweedler_file)
    assert code == 1
    assert out.strip() == "not isomorphic"


def test_nichols(capsys):
    code, out, _ = run(capsys, "nichols", "jordan:1,2", "--field", "2")
    assert code == 0
    assert out.strip().endswith("total=16")


def test_catalog_list_and_show(capsys):
    code, out, _ = run(capsys, "catalog", "list", "--scope", "T4.2")
    assert code == 0
    assert out.splitlines()[-1] == "T4.2=197"
    code, out, _ = run(capsys, "catalog", "show", "T3.7-1")
    assert code == 0
    assert out.startswith("family: T3.7-1")
    code, _, err = run(capsys, "catalog", "show")
    assert code == 2


def test_catalog_counts_per_source(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert out.splitlines()[-1] == "T3.7=35 T4.2=197 lemma=5"


def test_verify_one_family(capsys):
    code, out, _ = run(capsys, "verify", "T4.2-5", "--field", "2")
    assert code == 0
    assert "family=T4.2-5 field=GF(2) params=lam=0 outcome=ok dim=16 claimed=16 axioms=pass" in out


def test_verify_unknown_family(capsys):
    code, _, err = run(capsys, "verify", "T4.2-999")
    assert code == 2
    assert "unknown family" in err


def test_identities(capsys):
    code, out, _ = run(capsys, "identities", "lemma210", "--field", "3", "--trials", "4", "--seed", "2")
    assert code == 0
    assert out.startswith("suite=lemma210 field=GF(3) trials=4 checks=28 failures=0")


def test_controls(capsys):
    code, out, _ = run(capsys, "controls", "T4.2-1")
    assert code == 0
    assert "family=T4.2-1!fault" in out
    assert "outcome=collapse" in out


def test_quiet_disables_progress(capsys, monkeypatch):
    monkeypatch.setattr(config, "PROGRESS", True)
    run(capsys, "field-info", "3")
    assert config.PROGRESS is False
