import json

import pytest

from quatlattice.cli import main
from quatlattice.relations import LONG_RELATION_5_17


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "5", "17", "--a", "1+2i", "--b", "1+4k")
    assert code == 0 and out.strip() == "ANTI_TORUS"


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "5", "17", "--a", "1+2i", "--b", "1+4i", "--scan", "3",
                       "--json")
    assert json.loads(out) == {"class": "Z_CROSS_Z", "commuting_powers": [1, 1]}


def test_index(capsys, tmp_path):
    path = tmp_path / "table.json"
    code, out, _ = run(capsys, "index", "3", "5", "--subgens", "1+j+k;1+2i", "--table", str(path))
    assert code == 0 and out.strip() == "index 4"
    assert len(json.loads(path.read_text())) == 4


def test_index_words(capsys):
    code, out, _ = run(capsys, "index", "3", "5", "--subgens", "a1;b1", "--json")
    assert code == 0 and json.loads(out)["index"] == 4


def test_index_overflow_exit_code(capsys):
    code, out, _ = run(capsys, "index", "3", "5", "--subgens", "a1^3;b1^3", "--max-cosets", "3000")
    assert code == 2 and "overflow" in out


@pytest.mark.parametrize("argv", [
    ["classify", "4", "6", "--a", "1", "--b", "1"],
    ["classify", "5", "5", "--a", "1+2i", "--b", "1+2i"],
    ["classify", "5", "17", "--a", "1.5+i", "--b", "1+4k"],
    ["classify", "5", "17", "--a", "1+4k", "--b", "1+2i"],
    ["factor", "5", "7", "--x", "1+i"],
    ["genset", "9"],
    ["so3", "--x", "0"],
    ["index", "3", "5", "--subgens", "c7"],
])
def test_domain_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err.startswith("error:")


def test_genset(capsys):
    code, out, _ = run(capsys, "genset", "3", "--json")
    data = json.loads(out)
    assert data["size"] == 8
    assert [e["rep"] for e in data["letters"]] == ["1+j+k", "1+j-k"]


def test_present(capsys):
    code, out, _ = run(capsys, "present", "3", "5")
    assert out.startswith("gamma 3 5\n") and out.count("square") == 6
    code, out, _ = run(capsys, "present", "5", "17", "--json")
    assert len(json.loads(out)["squares"]) == 27


def test_centralizer(capsys):
    code, out, _ = run(capsys, "centralizer", "5", "17", "--b", "3+2i+2j", "--json")
    data = json.loads(out)
    assert data["status"] == "CYCLIC_CERTIFIED" and data["n"] == 2
    assert (data["symbol_p"], data["symbol_l"]) == (-1, 1)


def test_verify_relation(capsys):
    code, out, _ = run(capsys, "verify-relation", "5", "17", "--x", "1+2i", "--y", "1+4k",
                       "--word", LONG_RELATION_5_17, "--json")
    assert json.loads(out) == {"length": 106, "holds": True, "holds_in_so3": True}


def test_normform(capsys):
    code, out, _ = run(capsys, "normform", "3", "5", "--word", "b1 a1 a1^-1 b1^-1 a2", "--json")
    assert json.loads(out)["normal_form"] == "a2"


def test_norm_search(capsys):
    code, out, _ = run(capsys, "norm-search", "5", "17", "--n", "2", "--t-max", "100",
                       "--u-max", "100", "--exp-max", "6")
    assert out.strip() == "no solutions in the searched range"
    code, out, _ = run(capsys, "norm-search", "5", "17", "--n", "1", "--t-max", "3",
                       "--u-max", "3", "--exp-max", "2", "--include-zero", "--json")
    assert {"t": 1, "u": 1, "r": 1, "s": 0} in json.loads(out)["solutions"]


def test_factor(capsys):
    code, out, _ = run(capsys, "factor", "5", "7", "--x", "1+4i+2j+2k")
    assert out.strip() == "a2 a3"


def test_so3(capsys):
    code, out, _ = run(capsys, "so3", "--x", "1+2i", "--axis-angle", "--json")
    data = json.loads(out)
    assert data["matrix"] == [["1", "0", "0"], ["0", "-3/5", "-4/5"], ["0", "4/5", "-3/5"]]
    assert data["cos_omega"] == "-3/5" and data["axis"] == [1, 0, 0]


def test_padic_embed(capsys):
    code, out, _ = run(capsys, "padic-embed", "3", "5", "--x", "1+2i", "--precision", "2", "--json")
    data = json.loads(out)
    assert data["5"]["c"] == 7 and data["5"]["modulus"] == 25


def test_reproduce_subset_is_deterministic(capsys):
    _, first, _ = run(capsys, "reproduce", "--only", "so3", "--seed", "3")
    code, second, _ = run(capsys, "reproduce", "--only", "so3", "--seed", "3")
    assert code == 0 and first == second
    assert first.splitlines()[-1] == "4/4 checks passed"
