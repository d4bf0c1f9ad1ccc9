import io
import json

import pytest

from cellstrat import cli, coeff, oracle


def run(*argv):
    buf = io.StringIO()
    code = cli.run(list(argv), buf)
    return code, buf.getvalue()


def test_basis():
    code, text = run("basis", "--family", "brauer", "--r", "3")
    assert code == 0
    assert text.splitlines()[0] == "brauer(3): 15 diagrams"
    assert sum(1 for line in text.splitlines() if line.startswith("[")) == 15
    code, out = run("basis", "--family", "brauer", "--r", "3", "--json")
    data = json.loads(out)
    assert data["count"] == 15 and len(data["diagrams"]) == 15


def test_global_flags_before_subcommand():
    assert run("--family", "brauer", "--r", "2", "basis") == run("basis", "--family", "brauer", "--r", "2")
    code, out = run("--json", "--family", "partition", "--r", "2", "basis")
    assert code == 0 and json.loads(out)["count"] == 15


def test_chartable():
    code, text = run("chartable", "--family", "brauer", "--r", "3", "--delta", "generic")
    assert code == 0
    rows = {line.split()[0]: line.split()[1:] for line in text.splitlines()[2:]}
    assert rows["Δ((3),0)"] == ["1", "1", "1", "0", "0"]
    assert rows["Δ((2,1),0)"] == ["2", "0", "-1", "0", "0"]
    assert rows["Δ((1,1,1),0)"] == ["1", "-1", "1", "0", "0"]
    assert rows["Δ((1),1)"] == ["3", "1", "0", "δ", "1"]
    code, out = run("chartable", "--family", "brauer", "--r", "3", "--json")
    data = json.loads(out)
    values = [[coeff.from_json(x) for x in row] for row in data["values"]]
    assert values[3][3] == coeff.DELTA
    assert [c["layer"] for c in data["columns"]] == [0, 0, 0, 1, 1]


def test_chartable_specialised():
    code, text = run("chartable", "--family", "brauer", "--r", "3", "--delta", "-2")
    assert code == 0
    assert text.splitlines()[-1].split()[1:] == ["3", "1", "0", "-2", "1"]


def test_gram_rank_drop():
    code, text = run("gram", "--family", "brauer", "--r", "3", "--delta", "-2")
    assert code == 0
    drops = [line for line in text.splitlines() if line.endswith("drop")]
    assert len(drops) == 1 and drops[0].split()[:4] == ["((1),1)", "7", "7", "4"]
    code, out = run("gram", "--family", "brauer", "--r", "3", "--delta", "1", "--json")
    ranks = [x["rank"] for x in json.loads(out)["labels"]]
    assert ranks == [3, 3, 1, 4]


def test_permmod():
    code, text = run("permmod", "--family", "brauer", "--r", "3", "--shape", "3", "--layer", "0")
    assert code == 0 and "dim 4" in text.splitlines()[0]
    code, out = run("permmod", "--family", "brauer", "--r", "3", "--shape", "1", "--layer", "1", "--json")
    data = json.loads(out)
    assert data["dim"] == 3 and len(data["murphy_basis"]) == 3
    assert data["specht_filtration"] == [{"shape": [[1]], "layer": 1, "multiplicity": 1}]
    code, out = run("permmod", "--family", "walled", "--rprime", "1", "--r", "1", "--shape", "1|1",
                    "--layer", "0", "--json")
    assert code == 0 and json.loads(out)["label"] == {"shape": [[1], [1]], "layer": 0}
    code, _ = run("permmod", "--family", "partition", "--r", "2", "--shape", "-", "--layer", "2")
    assert code == 0


def test_hom():
    code, out = run("hom", "--family", "brauer", "--r", "3", "--json")
    dims = json.loads(out)["dims"]
    assert sum(map(sum, dims)) == 68
    code, out = run("hom", "--family", "brauer", "--r", "3", "--source", "3:0", "--target", "1:1", "--json")
    data = json.loads(out)
    assert code == 0 and len(data["maps"]) == 1
    code, text = run("hom", "--family", "brauer", "--r", "3", "--source", "3:0", "--target", "1:1",
                     "--delta", "-2")
    assert "1 maps" in text.splitlines()[0]


def test_schur():
    code, out = run("schur", "--family", "brauer", "--r", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["size"] == len(data["phi"])
    assert max(c["ideal_dim"] for c in data["cells"]) == data["size"]


@pytest.mark.parametrize("suite", ["cellular", "doublecentralizer", "filtration", "homdims"])
def test_verify_suites(suite):
    code, out = run("verify", "--suite", suite, "--family", "brauer", "--r", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["status"] == "pass"
    assert all(r["status"] == "pass" for r in data["reports"])


def test_verify_failure_exit_code(monkeypatch):
    monkeypatch.setattr(oracle, "check_double_centralizer",
                        lambda family, q: oracle.report("doublecentralizer", str(family), False, {"forced": True}))
    code, text = run("verify", "--suite", "doublecentralizer", "--family", "brauer", "--r", "2")
    assert code == 1 and text.splitlines()[-1].startswith("FAIL")


@pytest.mark.parametrize("argv", [
    [],
    ["basis"],
    ["basis", "--family", "temperley", "--r", "2"],
    ["basis", "--family", "brauer", "--r", "-1"],
    ["basis", "--family", "walled", "--r", "2"],
    ["basis", "--family", "brauer", "--r", "2", "--rprime", "1"],
    ["permmod", "--family", "brauer", "--r", "3", "--shape", "2", "--layer", "0"],
    ["permmod", "--family", "brauer", "--r", "3", "--shape", "1,2", "--layer", "0"],
    ["permmod", "--family", "brauer", "--r", "3", "--shape", "x", "--layer", "0"],
    ["permmod", "--family", "brauer", "--r", "3"],
    ["hom", "--family", "brauer", "--r", "3", "--source", "3:0"],
    ["hom", "--family", "brauer", "--r", "3", "--source", "3", "--target", "1:1"],
    ["chartable", "--family", "brauer", "--r", "3", "--delta", "0"],
    ["chartable", "--family", "brauer", "--r", "3", "--delta", "abc"],
    ["verify", "--family", "brauer", "--r", "2"],
])
def test_usage_errors(argv, capsys):
    code, out = run(*argv)
    assert code == 2 and out == ""


@pytest.mark.parametrize("argv", [
    ["basis", "--family", "partition", "--r", "2"],
    ["chartable", "--family", "walled", "--rprime", "1", "--r", "2"],
    ["schur", "--family", "brauer", "--r", "2"],
    ["gram", "--family", "partition", "--r", "2", "--json"],
    ["permmod", "--family", "brauer", "--r", "3", "--shape", "2,1", "--layer", "0", "--json"],
    ["verify", "--suite", "filtration", "--family", "walled", "--rprime", "1", "--r", "1", "--seed", "3"],
])
def test_output_is_deterministic(argv):
    first = run(*argv)
    assert first[0] == 0
    assert run(*argv) == first


@pytest.mark.parametrize("cmd", ["basis", "permmod", "hom", "schur", "chartable", "gram", "verify"])
def test_json_round_trip(cmd):
    extra = {"permmod": ["--shape", "-", "--layer", "1"], "verify": ["--suite", "homdims"]}.get(cmd, [])
    code, out = run(cmd, "--family", "brauer", "--r", "2", "--json", *extra)
    assert code == 0
    data = json.loads(out)
    assert json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n" == out
