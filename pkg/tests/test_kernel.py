import pytest
from hypothesis import given
from hypothesis import strategies as st

from arithlab.axioms import Mode, axiom_kind
from arithlab.codec import encode
from arithlab.kernel import MUTATIONS, check_proof, load_corpus, mutate_proof, rejustify
from arithlab.predicates import pf, prf, rf
from arithlab.proof import Axiom, Gen, Line, Proof, ScriptError, dump_proof_script, last_formula, load_proof_script
from arithlab.syntax import Not, parse_formula

GEN_PROOF = "A (x1 + 0 = x1)\nGEN 1 x1\n"


def test_single_axiom_accepted():
    p = load_proof_script("A (x1 + 0 = x1)")
    assert len(p) == 1
    assert check_proof(p, Mode.PA)
    assert not check_proof(p, Mode.PF)


def test_gen_proof_and_swap():
    p = load_proof_script(GEN_PROOF)
    assert len(p) == 2
    assert last_formula(p) == parse_formula("((all x1) ((x1 + 0) = x1))")
    assert check_proof(p, strict=True)
    swapped = mutate_proof(p, 0, "swap")
    v = check_proof(swapped)
    assert not v and v.bad_line == 1
    assert not prf(encode(swapped))


def test_script_errors():
    with pytest.raises(ScriptError):
        load_proof_script("A (0 = 0)\nA (0 = 0)\nA (0 = 0)\nA (0 = 0)\nMP 1 5")
    with pytest.raises(ScriptError):
        load_proof_script("A (0 = ")
    with pytest.raises(ScriptError):
        load_proof_script("# only a comment\n")
    with pytest.raises(ScriptError):
        load_proof_script("XX (0 = 0)")
    with pytest.raises(ScriptError):
        load_proof_script("A (0 = 0)\nGEN 1 y")


def test_dump_roundtrip(corpus):
    for p in corpus:
        again = load_proof_script(dump_proof_script(p))
        assert again == p


def test_identity_and_symbol_mutations():
    p = load_proof_script(GEN_PROOF)
    assert mutate_proof(p, 3, "identity") == p
    flipped = mutate_proof(load_proof_script("A (x1 + 0 = x1)"), 1, "symbol")
    assert not axiom_kind(last_formula(flipped))
    assert not check_proof(flipped)
    with pytest.raises(ValueError):
        mutate_proof(p, 0, "shuffle")


def test_corpus_shape(corpus):
    assert len(corpus) >= 50
    assert all(check_proof(p, strict=True) for p in corpus)
    refutations = [p for p in corpus if isinstance(last_formula(p), Not)]
    assert len(refutations) >= 5
    for p in refutations:
        assert rf(encode(p), encode(last_formula(p).body))
    kinds = {axiom_kind(f) for p in corpus for f in p.formulas}
    for k in ("A1", "A2", "A3", "A4", "A5", "S1", "S5", "S9"):
        assert k in kinds, k
    assert any(isinstance(ln.why, Gen) for p in corpus for ln in p.lines)


@given(st.integers(0, 10 ** 6), st.sampled_from(MUTATIONS))
def test_bridge_on_mutants(seed, kind):
    corpus = load_corpus()
    p = mutate_proof(corpus[seed % len(corpus)], seed, kind)
    ok = check_proof(p).accepted
    x = encode(p)
    assert prf(x) == ok
    if ok:
        assert pf(x, encode(last_formula(p)))


def test_non_strict_mirrors_prf():
    # a wrongly stated justification is repaired when the line still follows
    a = parse_formula("((x1 + 0) = x1)")
    p = Proof((Line(a, Axiom()), Line(parse_formula("((all x1) ((x1 + 0) = x1))"), Axiom())))
    assert not check_proof(p, strict=True)
    v = check_proof(p)
    assert v and v.notes
    assert rejustify(p).lines[1].why == Gen(0, 1)
