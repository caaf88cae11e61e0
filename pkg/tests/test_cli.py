import json

import pytest

from roughprax import caps
from roughprax.cli import main
from roughprax.example1 import fixed_relation, verbatim_relation
from roughprax.io import dumps, format_edge_list, relation_to_dict
from roughprax.relation import reflexive_closure


@pytest.fixture
def files(tmp_path):
    fixed = tmp_path / "fixed.json"
    fixed.write_text(json.dumps(relation_to_dict(reflexive_closure(fixed_relation()))))
    verbatim = tmp_path / "verbatim.txt"
    verbatim.write_text(format_edge_list(verbatim_relation()))
    u = fixed_relation().universe.elements
    discrete = tmp_path / "discrete.json"
    discrete.write_text(json.dumps({"universe": list(u), "pairs": [[e, e] for e in u]}))
    small = tmp_path / "small.txt"
    small.write_text("# universe: a b c\na a\nb b\nc c\na b\n")
    return {"fixed": str(fixed), "verbatim": str(verbatim), "discrete": str(discrete),
            "small": str(small), "dir": tmp_path}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check(capsys, files):
    code, out, _ = run(capsys, "check", files["verbatim"])
    d = json.loads(out)
    assert code == 0
    assert d["flags"]["proto_transitive"] is False
    assert d["proto_transitivity_witness"] == ["c", "g", "b"]
    assert d["kernel_weak_transitivity_witness"] == ["b", "g", "c"]


def test_approx_and_orientation(capsys, files):
    code, out, _ = run(capsys, "approx", files["fixed"], "--set", "l", "--expr", "u")
    assert code == 0 and json.loads(out)["result"] == ["g", "h", "l", "n"]
    # a R b: [b] = {a, b} under succ, [a] = {a, b} under pred
    code, out, _ = run(capsys, "--orientation", "pred", "approx", files["small"], "--set", "b", "--expr", "l")
    assert json.loads(out)["result"] == ["b"]
    code, out, _ = run(capsys, "approx", files["small"], "--set", "b", "--expr", "l")
    assert json.loads(out)["result"] == []


def test_nbhd(capsys, files):
    code, out, _ = run(capsys, "nbhd", files["fixed"])
    d = json.loads(out)
    assert d["plain"]["g"] == ["b", "c", "g", "h"]
    assert d["symmetrized"]["b"] == ["b", "c", "g"]


def test_definites(capsys, files):
    code, out, _ = run(capsys, "definites", files["fixed"], "--op", "lu")
    d = json.loads(out)
    assert code == 0 and d["count"] == 8 and d["boolean_algebra_failures"] == []


def test_quotient_dot(capsys, files):
    dot = files["dir"] / "h.dot"
    code, out, _ = run(capsys, "quotient", files["small"], "--dot", str(dot))
    d = json.loads(out)
    assert code == 0 and d["atomic"] is True
    assert dot.read_text().startswith("digraph quotient {")


def test_critical_brooms_bruinval(capsys, files):
    code, out, _ = run(capsys, "critical", files["small"])
    assert code == 0 and "UC" in json.loads(out)
    code, out, _ = run(capsys, "brooms", files["small"])
    assert code == 0 and json.loads(out)["lower"] == [[["b", "c"]]]
    spec = '{"kind": "open-to-set", "x": [], "alpha": [["a", "b"]]}'
    code, out, _ = run(capsys, "bruinval", files["small"], "--spec", spec)
    assert code == 0 and json.loads(out)["members"] == [["a"], ["b"]]


def test_compare(capsys, files):
    code, out, _ = run(capsys, "compare", files["fixed"], files["discrete"])
    d = json.loads(out)
    assert code == 0
    assert d["p_coarser_QR"] is True and d["p_coarser_RQ"] is False
    assert d["gpos"]["e"]["approx"] == ["e"] and d["gpos"]["l"]["approx"] == []


def test_gen_is_deterministic(capsys):
    _, first, _ = run(capsys, "gen", "--size", "6", "--seed", "3", "--asym", "4")
    _, second, _ = run(capsys, "gen", "--size", "6", "--seed", "3", "--asym", "4")
    assert first == second
    code, out, _ = run(capsys, "gen", "--size", "4", "--seed", "1", "--format", "edges", "--pras")
    assert code == 0 and out.startswith("# universe: e0 e1 e2 e3\n")


def test_example1_and_verify_outputs(capsys):
    code, out, _ = run(capsys, "example1")
    assert code == 0 and json.loads(out)["ok"] is True
    code, out, _ = run(capsys, "verify", "--trials", "0")
    assert code == 0 and json.loads(out)["checks"] == []


@pytest.mark.parametrize("argv, expected", [
    ([], 1),
    (["nosuch"], 1),
    (["approx", "x.json"], 1),
    (["check", "/nonexistent/file.json"], 2),
    (["gen", "--size", "3", "--seed", "0", "--asym", "99"], 2),
    (["gen", "--size", "3", "--seed", "0", "--blocks", "1,1"], 2),
])
def test_exit_codes(capsys, argv, expected):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == expected


def test_format_and_prax_errors(capsys, files):
    code, _, err = run(capsys, "approx", files["fixed"], "--set", "zz", "--expr", "u")
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "approx", files["fixed"], "--set", "a", "--expr", "q")
    assert code == 2
    code, _, _ = run(capsys, "compare", files["verbatim"], files["discrete"])
    assert code == 2  # not reflexive and proto-transitive
    code, _, _ = run(capsys, "bruinval", files["small"], "--spec", "{broken")
    assert code == 2


def test_cap_exit_and_override(capsys, files, monkeypatch):
    code, _, err = run(capsys, "--cap", "quotient=5", "quotient", files["fixed"])
    assert code == 3 and "cap" in err
    code, _, _ = run(capsys, "--cap", "bogus=1", "check", files["fixed"])
    assert code == 2
    monkeypatch.setenv(caps.ENV_VAR, "oracle=4")
    code, _, _ = run(capsys, "oracle", files["small"])
    assert code == 0
    code, _, _ = run(capsys, "oracle", files["fixed"])
    assert code == 3


def test_oracle_command(capsys, files):
    code, out, _ = run(capsys, "oracle", files["small"])
    assert code == 0 and json.loads(out)["ok"] is True


def test_canonical_json(capsys, files):
    _, out, _ = run(capsys, "nbhd", files["small"])
    assert out == dumps(json.loads(out))
