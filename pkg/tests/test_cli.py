import json

from click.testing import CliRunner

from sumsetrange.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_sumset():
    r = run("sumset", "--set", "0,1,3", "--h", "3")
    assert r.exit_code == 0
    assert json.loads(r.output)["size"] == 9


def test_sumset_singleton():
    r = run("sumset", "--set", "0", "--h", "4")
    assert json.loads(r.output) == {"set": [0], "size": 1}


def test_sumset_restricted():
    r = run("sumset", "--set", "0,1,2", "--h", "2", "--restricted")
    assert json.loads(r.output) == {"set": [1, 2, 3], "size": 3}


def test_sumset_malformed_is_usage_error():
    assert run("sumset", "--set", "0,,3", "--h", "2").exit_code == 2


def test_delta_and_bounds():
    r = run("delta", "--h", "6", "--k", "7")
    assert "[38, 41]" in r.output and "56" in r.output
    r = run("delta", "--h", "2", "--k", "9")
    assert json.loads(r.output.strip().splitlines()[-1]) == []
    r = run("bounds", "--h", "6", "--k", "7")
    assert r.output.strip() == "[37, 924]"


def test_range_confirmed():
    r = run("range", "--h", "3", "--k", "4", "--format", "json")
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data["confirmed"] and data["certified_gaps"] == [11]


def test_range_unresolved_exit_code():
    r = run("range", "--h", "5", "--k", "4", "--format", "json")
    assert r.exit_code == 3
    assert json.loads(r.output)["unresolved"]


def test_range_h1():
    r = run("range", "--h", "1", "--k", "5")
    assert r.exit_code == 0 and "[5, 5]" in r.output


def test_atlas_csv():
    r = run("atlas", "--k", "2", "--hmax", "3")
    assert r.exit_code == 0
    assert len(r.output.strip().splitlines()) == 2  # header + single row


def test_atlas_svg(tmp_path):
    out = tmp_path / "fig.svg"
    r = run("atlas", "--k", "4", "--hmax", "3", "--format", "svg", "-o", str(out))
    assert r.exit_code == 0
    text = out.read_text()
    assert text.startswith("<svg") and "polyline" in text


def test_construct_fill():
    r = run("construct", "fill", "--h", "2", "--d", "100", "--k", "30")
    assert r.exit_code == 0 and "PASS" in r.output


def test_construct_fill_infeasible():
    r = run("construct", "fill", "--h", "2", "--d", "1000", "--k", "5")
    assert r.exit_code == 4


def test_construct_family():
    r = run("construct", "family", "--h", "4", "--k", "14", "--b", "3", "--all-min")
    assert r.exit_code == 0
    assert json.loads(r.output.splitlines()[0])["size"] == 2380
    assert "PASS" in r.output


def test_construct_h3path():
    r = run("construct", "h3path", "--k", "6")
    assert r.exit_code == 0 and "adjacency PASS" in r.output


def test_construct_sparse_dense():
    assert json.loads(run("construct", "sparse-s", "--m", "3", "--ell", "4").output) == [0, 1, 3, 9]
    assert json.loads(run("construct", "sparse-t", "--m", "2", "--ell", "3").output) == [1, 2, 4]
    assert json.loads(run("construct", "dense", "--h", "4", "--j", "1", "--ell", "3").output) == [0, 1, 5]


def test_verify_lemmas():
    r = run("verify", "lemmas", "--h", "3", "--k", "5", "--d-max", "15")
    assert r.exit_code == 0 and "PASS" in r.output


def test_verify_conjecture():
    r = run("verify", "conjecture", "--h", "3", "--k", "5")
    assert r.exit_code == 0 and "CONFIRMED" in r.output


def test_verify_conj51():
    r = run("verify", "conj51", "--h", "4", "--k", "4", "--d-max", "15")
    assert r.exit_code == 0 and "no counterexample" in r.output


def test_witness_roundtrip():
    data = json.loads(run("range", "--h", "3", "--k", "4", "--format", "json").output)
    for size, wit in data["witnesses"].items():
        out = run("sumset", "--set", ",".join(str(x) for x in wit), "--h", "3")
        assert json.loads(out.output)["size"] == int(size)
