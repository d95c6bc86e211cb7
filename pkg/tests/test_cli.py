import json

import pytest

from slocc4.cli import main


@pytest.fixture()
def state_file(tmp_path):
    def write(name, mapping):
        p = tmp_path / name
        p.write_text(json.dumps(mapping))
        return str(p)
    return write


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_u1(state_file, capsys):
    path = state_file("u1.json", {"0000": "1", "1111": "1"})
    code, out, err = run(capsys, ["classify", path])
    assert code == 0
    data = json.loads(out)
    assert data["family"] == 10
    assert data["class"]["kind"] == "semisimple"
    assert data["class"]["exactness"] == "exact"
    assert data["invariants"] == {"H": "1", "L": "0", "M": "0", "D": "0"}
    assert err == ""


def test_classify_parse_error(state_file, capsys):
    path = state_file("bad.json", {"0000": "1/0"})
    code, out, err = run(capsys, ["classify", path])
    assert code == 64
    assert "1/0" in err


def test_classify_zero_state(state_file, capsys):
    path = state_file("zero.json", {})
    code, out, _ = run(capsys, ["classify", path])
    assert code == 0
    data = json.loads(out)
    assert data["class"]["kind"] == "nilpotent"
    assert data["class"]["orbit"] == 31


def test_classify_partial_exit_code(state_file, capsys):
    path = state_file("irr.json", {"0000": "1", "1111": "i"})
    code, out, _ = run(capsys, ["classify", path])
    assert code == 3
    assert json.loads(out)["class"]["exactness"] == "partial"


def test_output_determinism(state_file, capsys):
    path = state_file("u1.json", {"1111": "1", "0000": "1"})
    _, out1, _ = run(capsys, ["classify", path])
    _, out2, _ = run(capsys, ["classify", path])
    assert out1 == out2


def test_invariants_command(state_file, capsys):
    path = state_file("x.json", {"0011": "2", "1100": "-3i"})
    code, out, _ = run(capsys, ["invariants", path])
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"H", "L", "M", "D"}


def test_conjugate_yes(state_file, capsys):
    a = state_file("u1.json", {"0000": "1", "1111": "1"})
    b = state_file("u3.json", {"0101": "1", "1010": "1"})
    code, out, _ = run(capsys, ["conjugate", a, b, "--group", "g0"])
    assert code == 0
    assert json.loads(out)["answer"] == "yes"


def test_conjugate_no(state_file, capsys):
    a = state_file("a.json", {"1100": "1"})
    b = state_file("b.json", {"1100": "1", "0000": "1"})
    code, out, _ = run(capsys, ["conjugate", a, b])
    assert code == 1
    assert json.loads(out)["answer"] == "no"


def test_conjugate_self_with_witness(state_file, capsys):
    a = state_file("a.json", {"0110": "1", "1001": "2-3i"})
    code, out, _ = run(capsys, ["conjugate", a, a, "--witness"])
    assert code == 0
    data = json.loads(out)
    assert data["answer"] == "yes"
    assert data["witness"]  # the identity quadruple


def test_conjugate_s_group(state_file, capsys):
    a = state_file("a.json", {"0011": "1"})
    b = state_file("b.json", {"1100": "1"})
    code, out, _ = run(capsys, ["conjugate", a, b, "--group", "s"])
    assert code == 0
    data = json.loads(out)
    assert data["answer"] == "yes" and "permutation" in data


def test_catalog_list_levels(capsys):
    code, out, _ = run(capsys, ["catalog", "list", "--level", "S"])
    assert code == 0
    assert json.loads(out)["count"] == 27
    code, out, _ = run(capsys, ["catalog", "list", "--level", "G0"])
    assert json.loads(out)["count"] == 87


def test_catalog_show(capsys):
    code, out, _ = run(capsys, ["catalog", "show", "N7"])
    assert code == 0
    data = json.loads(out)
    assert data["class"] == "N7"
    assert data["stabilizer"]["identity_component_dim"] == 0
    code, out, _ = run(capsys, ["catalog", "show", "nilpotent/31"])
    assert code == 0
    assert json.loads(out)["representative"] == {}
    code, out, err = run(capsys, ["catalog", "show", "bogus"])
    assert code == 65


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, ["verify", "--suite", "algebra"])
    assert code == 0
    data = json.loads(out)
    assert data["ok"] and data["failed"] == 0
