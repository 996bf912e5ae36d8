import csv
import io
import json

import pytest

from boolean_schubert.boolean_core import element_from_json, element_to_text, parse_element
from boolean_schubert.cli import main
from boolean_schubert.polynomial import WeightPolynomial
from boolean_schubert.root_system import build_root_system

EX41 = [
    "--lie-type", "A", "--rank", "13",
    "--u", "word:4,3,8,11,12",
    "--v", "word:2,3,7,6,8,12",
    "--w", "word:7,6,5,4,2,3,9,8,11,13,12",
]
C4 = ["--lie-type", "C", "--rank", "4", "--u", "word:2,3,4", "--v", "word:4", "--w", "word:2,3,4"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_constant_example(capsys):
    code, out, _ = run(capsys, "constant", *EX41)
    assert code == 0 and json.loads(out) == {"value": 1}
    code, out, _ = run(capsys, "constant", *EX41, "--fast")
    assert code == 0 and json.loads(out) == {"value": 1}
    code, out, _ = run(capsys, "constant", *EX41, "--ordering", "2,6,7,8,3,12", "--check-ordering")
    assert code == 0 and json.loads(out) == {"value": 1}


def test_constant_equivariant_golden(capsys):
    code, out, _ = run(capsys, "constant", *C4, "--equivariant")
    assert code == 0
    data = json.loads(out)
    assert data == {
        "value": [
            {"exponents": [0, 0, 0, 1], "coeff": 1},
            {"exponents": [0, 0, 1, 0], "coeff": 2},
            {"exponents": [0, 1, 0, 0], "coeff": 2},
        ],
        "variables": ["t1", "t2", "t3", "t4"],
    }
    assert WeightPolynomial.from_json(4, data["value"]) == WeightPolynomial.linear([0, 2, 2, 1])


def test_constant_identity(capsys):
    code, out, _ = run(capsys, "constant", "--lie-type", "D", "--rank", "4",
                       "--u", "id", "--v", "word:1,2,4", "--w", "diagram:{1,2,4;2>1,4>2}")
    assert code == 0 and json.loads(out) == {"value": 1}


@pytest.mark.parametrize("extra", [
    ["--fast", "--equivariant"],
    ["--ordering", "1,2"],
])
def test_constant_usage_errors(capsys, extra):
    code, out, err = run(capsys, "constant", *EX41, *extra)
    assert code == 1 and out == "" and "error" in err


def test_fast_outside_type_a(capsys):
    code, _, err = run(capsys, "constant", *C4, "--fast")
    assert code == 1 and "type A" in err


@pytest.mark.parametrize("argv", [
    ["constant", "--lie-type", "A", "--rank", "2", "--u", "word:1,2,1", "--v", "id", "--w", "id"],
    ["constant", "--lie-type", "A", "--rank", "2", "--u", "word:3", "--v", "id", "--w", "id"],
    ["constant", "--lie-type", "F", "--rank", "5", "--u", "id", "--v", "id", "--w", "id"],
    ["constant", "--lie-type", "X", "--rank", "2", "--u", "id", "--v", "id", "--w", "id"],
    ["constant", "--lie-type", "A", "--rank", "2"],
    ["table", "--lie-type", "A", "--rank", "2", "--w", "word:1,1"],
    ["verify", "--suite", "zero-one", "--lie-type", "B", "--rank", "2"],
    ["bench", "--n-list", "1,2"],
    ["bench", "--n-list", "a,b"],
    [],
])
def test_exit_code_usage(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == 1


def test_table_a1_csv(capsys):
    code, out, _ = run(capsys, "table", "--lie-type", "A", "--rank", "1", "--w", "word:1")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["u", "v", "value"]
    assert sorted(rows[1:]) == [
        ["diagram:{1;}", "diagram:{;}", "1"],
        ["diagram:{;}", "diagram:{1;}", "1"],
    ]


def test_table_a1_equivariant(capsys):
    code, out, _ = run(capsys, "table", "--lie-type", "A", "--rank", "1", "--w", "word:1",
                       "--equivariant", "--format", "json")
    assert code == 0
    data = json.loads(out)
    rs = build_root_system("A", 1)
    got = {
        (element_to_text(element_from_json(rs, r["u"])), element_to_text(element_from_json(rs, r["v"]))):
        WeightPolynomial.from_json(1, r["value"])
        for r in data["rows"]
    }
    assert got == {
        ("diagram:{;}", "diagram:{1;}"): 1,
        ("diagram:{1;}", "diagram:{;}"): 1,
        ("diagram:{1;}", "diagram:{1;}"): WeightPolynomial.variable(1, 1),
    }
    assert data["variables"] == ["t1"]


def test_table_identity(capsys):
    code, out, _ = run(capsys, "table", "--lie-type", "E", "--rank", "6", "--w", "id")
    assert code == 0
    assert out.splitlines() == ["u,v,value", "diagram:{;},diagram:{;},1"]


def test_table_rows_sorted_and_round_trip(capsys):
    w = "word:7,6,5,4,2,3,9,8,11,13,12"
    code, out, _ = run(capsys, "table", "--lie-type", "A", "--rank", "13", "--w", w)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))[1:]
    keys = [(r[0], r[1]) for r in rows]
    assert keys == sorted(keys)
    rs = build_root_system("A", 13)
    for r in rows:
        assert element_to_text(parse_element(rs, r[0])) == r[0]
    u = element_to_text(parse_element(rs, "word:4,3,8,11,12"))
    v = element_to_text(parse_element(rs, "word:2,3,7,6,8,12"))
    assert [u, v, "1"] in rows


def test_table_is_deterministic(capsys):
    argv = ["table", "--lie-type", "B", "--rank", "3", "--w", "word:1,2,3", "--equivariant"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


@pytest.mark.parametrize("suite,t,n", [("zero-one", "A", 5), ("kk", "C", 3), ("symmetry", "G", 2)])
def test_verify_examples(capsys, suite, t, n):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--lie-type", t, "--rank", str(n))
    data = json.loads(out)
    assert code == 0 and data["mismatches"] == [] and data["checked"] > 0


def test_verify_zero_one_counts_all_triples(capsys):
    from boolean_schubert.verify import boolean_triples

    _, out, _ = run(capsys, "verify", "--suite", "zero-one", "--lie-type", "A", "--rank", "4")
    total = sum(1 for _ in boolean_triples(build_root_system("A", 4)))
    assert json.loads(out)["checked"] == total


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    import boolean_schubert.verify as verify

    def broken(rs, budget):
        budget.spend()
        return [{"u": {}, "v": {}, "w": {}, "expected": 0, "got": 1}]

    monkeypatch.setitem(verify.SUITES, "kk", broken)
    code, out, _ = run(capsys, "verify", "--suite", "kk", "--lie-type", "A", "--rank", "2")
    assert code == 2 and len(json.loads(out)["mismatches"]) == 1


def test_verify_resource_guard(capsys, monkeypatch):
    monkeypatch.setenv("BOOLEAN_SCHUBERT_MAX_WEYL_ORDER", "5")
    code, _, err = run(capsys, "verify", "--suite", "chevalley", "--lie-type", "A", "--rank", "3")
    assert code == 3 and "bound" in err
    code, _, _ = run(capsys, "verify", "--suite", "kk", "--lie-type", "E", "--rank", "8")
    assert code == 3


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--n-list", "16,32", "--samples", "5", "--seed", "7", "--repeat", "1")
    data = json.loads(out)
    assert code == 0 and data["seed"] == 7
    assert [r["n"] for r in data["results"]] == [16, 32]
    assert set(data["results"][0]) == {"n", "samples", "median_s", "mean_s", "paths_found"}


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "boolean_schubert", "constant", *C4],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"value": 0}
