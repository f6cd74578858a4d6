import json

import pytest

from arithlab.axioms import Mode
from arithlab.cli import RunConfig, UsageError, main
from arithlab.kernel import corpus_files


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_encode_neg_layout(capsys):
    code, out, _ = run(capsys, "encode", "(~ (0 = 0))")
    assert code == 0
    assert out.startswith("2^3 · 3^9 · ")
    assert "= " in out


def test_encode_over_bit_limit(capsys):
    code, out, _ = run(capsys, "encode", "((x1 + 0) = x1)", "--bits", "64")
    assert code == 0 and "integer not shown" in out


def test_eval_pred_ref(capsys):
    code, out, _ = run(capsys, "eval-pred", "ref", "8")
    assert code == 0
    assert "= false" in out and "C_Ref = 1" in out


def test_eval_pred_toy(capsys):
    code, out, _ = run(capsys, "eval-pred", "prf", "4", "--mode", "toy")
    assert code == 0 and "C_Prf = 0" in out
    code, out, _ = run(capsys, "eval-pred", "Pf", "4", "2", "--mode", "toy")
    assert code == 0 and "C_Pf = 0" in out


def test_decode_roundtrip(capsys):
    _, out, _ = run(capsys, "encode", "(~ (0 = 0))")
    factored = out.splitlines()[0]
    code, out, _ = run(capsys, "decode", factored)
    assert code == 0 and out.strip() == "(~ (0 = 0))"
    code, out, _ = run(capsys, "decode", "4", "--mode", "toy")
    assert code == 0 and out.strip() == "A A"


def test_decode_failure(capsys):
    code, _, err = run(capsys, "decode", "4")
    assert code == 1 and "not decodable" in err


def test_check_proof(capsys, tmp_path):
    path = str(next(f for f in corpus_files() if f.name.startswith("023")))
    code, out, _ = run(capsys, "check-proof", path, "--strict")
    assert code == 0
    assert "structural: accept" in out and "Prf(x)              : true" in out
    bad = tmp_path / "bad.paproof"
    bad.write_text("A (0 = 0)\n")
    code, out, _ = run(capsys, "check-proof", str(bad))
    assert code == 1 and "reject at line 1" in out and ": false" in out


def test_search_proof(capsys):
    code, out, _ = run(capsys, "search-proof", "((all x1) ((x1 + 0) = x1))", "--lines", "2")
    assert code == 0 and "found a 2-line proof" in out and "GEN 1 x1" in out
    code, out, _ = run(capsys, "search-proof", "(0 = 0')", "--budget", "3")
    assert code == 1 and out.strip() == "exhausted(3)"


def test_diagonalize(capsys):
    code, out, _ = run(capsys, "diagonalize", "--phi", "(x1 = x1)")
    assert code == 0 and "sb(m, m) = code of delta: true" in out
    code, _, err = run(capsys, "diagonalize", "--phi", "(x1 = x2)")
    assert code == 2 and "free variable" in err


def test_lemma_lab_report(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, out, _ = run(capsys, "lemma-lab", "--budget", "10000", "--seed", "7", "--out", str(out_path))
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert len(doc["verdicts"]) == 11 and doc["seed"] == 7
    assert "LEMMA_REFAUT" in out and "COUNTEREXAMPLE_FOUND" in out
    again = tmp_path / "again.json"
    run(capsys, "lemma-lab", "--budget", "10000", "--seed", "7", "--out", str(again))
    assert again.read_bytes() == out_path.read_bytes()


@pytest.mark.parametrize("argv", [
    ["encode", "A"],
    ["encode", "(0 = "],
    ["eval-pred", "Thm", "8"],
    ["eval-pred", "Pf", "8"],
    ["decode", "2^3 · 5^5"],
    ["check-proof", "missing.paproof"],
    ["encode", "(0 = 0)", "--bits", "0"],
    ["encode", "(0 = 0)", "--budget", "-1"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("arithlab")


def test_run_config():
    assert RunConfig().table().variables
    assert not RunConfig(Mode.TOY).table().variables
    with pytest.raises(UsageError):
        RunConfig(bits=-1)


def test_toy_mode_rejects_full_table(tmp_path):
    t = tmp_path / "full.table"
    t.write_text("( 3\n) 5\n~ 9\n-> 11\nall 13\n0 15\n= 17\n")
    with pytest.raises(UsageError):
        RunConfig(Mode.TOY, str(t)).table()
