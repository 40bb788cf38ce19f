import json

import pytest

from shpf import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def cache_dir(tmp_path):
    return str(tmp_path / "cache")


def test_expand_v_odd(capsys, cache_dir):
    code, out, _ = run(capsys, "expand", "--n", "3", "--target", "sh", "--basis", "v-odd", "--cache-dir", cache_dir)
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == "v-odd"
    assert {tuple(t["partition"]): t["coeff"] for t in data["terms"]} == {(3,): "2/1", (1, 1, 1): "20/1"}


def test_expand_pf_p_basis(capsys, cache_dir):
    code, out, _ = run(capsys, "expand", "--n", "2", "--target", "pf", "--cache-dir", cache_dir)
    data = json.loads(out)
    # h_11 + h_2 = (3/2) p_11 + (1/2) p_2
    assert {tuple(t["partition"]): t["coeff"] for t in data["terms"]} == {(2,): "1/2", (1, 1): "3/2"}


def test_expand_sh_t(capsys, cache_dir):
    code, out, _ = run(capsys, "expand", "--n", "1", "--target", "sh_t", "--cache-dir", cache_dir)
    data = json.loads(out)
    assert data["terms"] == [{"partition": [1], "poly": ["2/1"]}]


def test_expand_uses_cache(capsys, cache_dir, monkeypatch):
    args = ("expand", "--n", "6", "--basis", "v-odd", "--cache-dir", cache_dir)
    _, first, _ = run(capsys, *args)

    def boom(*a, **k):
        raise AssertionError("recomputed despite cache")

    monkeypatch.setattr(cli, "compute_expansion", boom)
    _, second, _ = run(capsys, *args)
    assert first == second
    monkeypatch.undo()
    _, third, _ = run(capsys, *args, "--no-cache")
    assert third == first


def test_expand_text_and_csv(capsys, cache_dir):
    _, out, _ = run(capsys, "expand", "--n", "3", "--basis", "v-odd", "--format", "csv", "--cache-dir", cache_dir)
    assert out.splitlines()[0] == "partition,value"
    _, out, _ = run(capsys, "expand", "--n", "3", "--basis", "v-odd", "--format", "text", "--cache-dir", cache_dir)
    assert "degree 3" in out


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--n", "3", "--what", "sorted-odd", "--what", "pf", "--what", "garages")
    rows = json.loads(out)
    assert code == 0
    assert rows[0] == {"n": 3, "what": "sorted-odd", "count": 22, "expected": 22, "status": "PASS"}
    assert rows[1]["count"] == 16
    code, out, _ = run(capsys, "count", "--n", "2", "--what", "garages")
    assert json.loads(out)[0]["count"] == 6


def test_count_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli.core, "catalan", lambda n: -1)
    code, out, _ = run(capsys, "count", "--n", "3", "--what", "sorted-pf", "--format", "text")
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["expand", "--n", "0"],
        ["verify", "--max-n", "99"],
        ["verify", "--brute-bound", "9"],
        ["expand", "--jobs", "0", "--n", "2"],
        ["frobnicate"],
        ["enumerate", "--what", "sorted-odd"],
        ["expand", "--basis", "schur", "--n", "2"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_enumerate(capsys, tmp_path):
    out_file = tmp_path / "odd.json"
    code, _, _ = run(capsys, "enumerate", "--n", "2", "--what", "sorted-odd", "--out", str(out_file))
    rows = json.loads(out_file.read_text())
    assert code == 0 and len(rows) == 6
    _, out, _ = run(capsys, "enumerate", "--n", "3", "--what", "schroeder-paths", "--format", "csv")
    assert len(out.splitlines()) == 23
    _, out, _ = run(capsys, "enumerate", "--n", "2", "--what", "sorted-naive")
    assert all("path" in r for r in json.loads(out))


def test_character(capsys, cache_dir):
    code, out, _ = run(capsys, "character", "--n", "2", "--which", "naive", "--frobenius", "--cache-dir", cache_dir)
    data = json.loads(out)
    assert code == 0
    assert data["frobenius"]["terms"] == [{"partition": [1, 1], "coeff": "6/1"}]
    _, out, _ = run(capsys, "character", "--n", "3", "--which", "clifford", "--frobenius", "--no-cache")
    data = json.loads(out)
    assert data["character"]["kind"] == "spin"
    assert "spin_characteristic" in data


def test_verify_clifford_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "clifford", "--max-n", "5", "--format", "text")
    assert code == 0
    assert out.strip().splitlines()[-1].endswith("checks passed")
    assert all(line.startswith("PASS") for line in out.strip().splitlines()[:-1])


def test_verify_deterministic_across_jobs(capsys):
    _, one, _ = run(capsys, "verify", "--suite", "combinatorics", "--max-n", "4", "--brute-bound", "3")
    _, two, _ = run(capsys, "verify", "--suite", "combinatorics", "--max-n", "4", "--brute-bound", "3", "--jobs", "2")
    strip = lambda s: [{k: v for k, v in r.items() if k != "seconds"} for r in json.loads(s)]
    assert strip(one) == strip(two)
