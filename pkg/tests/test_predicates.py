import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from arithlab.axioms import PROPER_AXIOMS, Mode
from arithlab.codec import TOY_TABLE, encode, encode_proof
from arithlab.codes import Seq, Sym, concat, from_int, length, materialize, seq
from arithlab.kernel import load_corpus, mutate_proof
from arithlab.predicates import (
    ax, char_fn, co_char_fn, evbl, fml, gd, gen, mp, neg_code, pf, prf, ref, rf, rf_expanded,
)
from arithlab.proof import last_formula
from arithlab.syntax import Atom, ForAll, Implies, Not, parse_formula, parse_term
from conftest import formulas, toy_formulas

ZERO_EQ = parse_formula("(0 = 0)")


def test_gd_evbl_fml():
    assert evbl(seq(13 + 8))
    assert not evbl(seq(15))
    assert fml(encode(ZERO_EQ))
    assert not fml(seq(3))
    assert gd(seq(3)) and not gd(seq(99)) and not gd(Sym(3))
    assert not fml(encode(parse_term("x1''")))


def test_ax_examples():
    assert ax(encode(parse_formula("((x1 + 0) = x1)")), Mode.PA)
    assert not ax(encode(ZERO_EQ), Mode.PF)
    assert not ax(Sym(3))
    assert not ax(encode(PROPER_AXIOMS["S5"]), Mode.PF)
    assert ax(encode(Atom("A"), TOY_TABLE), Mode.TOY)


def test_neg_examples():
    assert neg_code(encode(ZERO_EQ)) == encode(Not(ZERO_EQ))
    assert neg_code(seq(17)) == seq(3, 9, 17, 5)
    # 13232487240 from the integer oracle
    assert oracles.neg_int(2) == 13232487240
    assert neg_code(encode(Atom("A"), TOY_TABLE)) == from_int(13232487240)


def test_mp_examples():
    a, g = parse_formula("(x1 = 0)"), parse_formula("(0 = x1)")
    assert mp(encode(a), encode(Implies(a, g)), encode(g))
    assert not mp(encode(a), encode(Implies(g, a)), encode(g))
    assert not mp(seq(99), encode(Implies(a, g)), encode(g))


def test_gen_examples():
    body = parse_formula("(x1 = x1)")
    y = encode(ForAll(1, body))
    assert gen(encode(body), y)
    bare = Seq(y.items[1:-1])  # outer parentheses dropped
    assert not gen(encode(body), bare)
    not_var = Seq(y.items[:3] + (Sym(15),) + y.items[4:])
    assert not gen(encode(body), not_var)


@given(formulas(), formulas(), st.integers(1, 4))
def test_layout_laws(a, g, k):
    assert mp(encode(a), encode(Implies(a, g)), encode(g))
    assert gen(encode(a), encode(ForAll(k, a)))
    assert neg_code(encode(a)) == encode(Not(a))
    assert length(neg_code(encode(a))) == length(encode(a)) + 3


def test_prf_examples():
    assert prf(from_int(4), Mode.TOY)
    assert not prf(seq(3))
    gen_axiom = next(p for p in load_corpus() if p.name.startswith("023"))
    assert prf(encode(gen_axiom))


def test_pf_rf_ref_examples():
    s5 = PROPER_AXIOMS["S5"]
    x = encode_proof([s5])
    assert pf(x, encode(s5))
    assert not pf(x, encode(ZERO_EQ))
    assert not pf(seq(3), encode(s5))
    refutation = next(p for p in load_corpus() if isinstance(last_formula(p), Not))
    alpha = last_formula(refutation).body
    assert rf(encode(refutation), encode(alpha))
    assert not rf(encode(refutation), encode(last_formula(refutation)))
    assert not rf(x, encode(s5))
    assert not rf(seq(3), encode(s5))
    assert not ref(seq(3))
    assert char_fn("Ref", (seq(3),)) == 1
    for p in load_corpus()[:10]:
        assert not ref(encode(p))
        assert not ref(encode(last_formula(p)))


def test_char_fn_convention():
    args = (encode_proof([Atom("A")], TOY_TABLE), encode(Atom("A"), TOY_TABLE))
    assert char_fn("Pf", args, Mode.TOY) == 0
    assert co_char_fn("Pf", args, Mode.TOY) == 1
    with pytest.raises(KeyError):
        char_fn("Thm", args)


def test_predicates_total_on_junk():
    for junk in (None, Sym(1), seq(3, 3), 7, -5):
        assert not prf(junk)
        assert not pf(junk, junk)
        assert not rf(junk, junk)
        assert not ref(junk)


def test_rf_expansion_agrees():
    corpus = load_corpus()
    rng = random.Random(5)
    codes = [encode(p) for p in corpus] + [encode(mutate_proof(p, k)) for k, p in enumerate(corpus)]
    vs = [encode(last_formula(p)) for p in corpus] + [encode(last_formula(p).body)
                                                      for p in corpus if isinstance(last_formula(p), Not)]
    for _ in range(400):
        x, v = rng.choice(codes), rng.choice(vs)
        assert rf(x, v) == rf_expanded(x, v)
    for p in corpus:
        last = last_formula(p)
        if isinstance(last, Not):
            assert rf_expanded(encode(p), encode(last.body))


@given(st.sampled_from(["Pf", "Rf"]), st.integers(0, 50), st.integers(0, 50))
def test_complement(name, i, j):
    corpus = load_corpus()
    x = encode(corpus[i % len(corpus)])
    v = encode(last_formula(corpus[j % len(corpus)]))
    assert char_fn(name, (x, v)) + co_char_fn(name, (x, v)) == 1


@given(toy_formulas())
def test_toy_fml_agrees_with_oracle(f):
    x = encode(f, TOY_TABLE)
    n = materialize(x)
    assert oracles.toy_fml(n)
    assert fml(x, TOY_TABLE)


def test_toy_predicates_against_oracle_small_ints():
    for n in range(2, 5000, 2):
        c = from_int(n)
        assert (c is not None and fml(c, TOY_TABLE)) == oracles.toy_fml(n), n


def test_two_formulas_juxtaposed_are_not_a_formula():
    a = encode(ZERO_EQ)
    assert not fml(concat(a, a))
