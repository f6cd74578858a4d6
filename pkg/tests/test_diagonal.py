import logging

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from arithlab.codec import encode
from arithlab.codes import Seq, SymNat, materialize, seq
from arithlab.diagonal import (
    PERTURBATIONS, SAMPLE_PHI, DiagonalError, diagonalize, perturb, sb, verify_fixed_point,
)
from arithlab.syntax import Equals, SbTerm, Var, is_sentence, numeral, parse_formula


def test_sb_examples():
    e = encode(parse_formula("(x1 = x1)"))
    assert sb(e, 2) == encode(parse_formula("(0'' = 0'')"))
    assert sb(e, 0) == encode(parse_formula("(0 = 0)"))


def test_sb_without_free_variable_is_identity(caplog):
    e = encode(parse_formula("((all x1) (x1 = x1))"))
    with caplog.at_level(logging.INFO, logger="arithlab.diagonal"):
        assert sb(e, 5) == e
    assert "not free" in caplog.text


def test_sb_rejects_non_formulas():
    with pytest.raises(DiagonalError):
        sb(seq(3), 1)
    with pytest.raises(DiagonalError):
        sb(encode(Var(1)), 1)


@given(st.integers(0, 12))
def test_sb_matches_integer_oracle(n):
    for text in ("(x1 = x1)", "((x1 + 0) = x1)", "(~ (x1 = 0'))"):
        e = encode(parse_formula(text))
        got = materialize(sb(e, n))
        assert got == oracles.sb_int(materialize(e), 21, n)


@given(st.integers(0, 8))
def test_sb_changes_only_variable_positions(n):
    e = encode(parse_formula("((x1 + x2) = x1)"))
    out = sb(e, n).items
    before = [it.code for it in e.items]
    after = [it.code for it in out]
    i = j = 0
    while i < len(before):
        if before[i] == 21:
            assert after[j:j + n + 1] == [15] + [19] * n
            j += n + 1
        else:
            assert after[j] == before[i]
            j += 1
        i += 1
    assert j == len(after)


def test_identity_construction():
    d = diagonalize("(x1 = x1)")
    m = SymNat.of_code(d.m)
    t = SbTerm(numeral(m), numeral(m))
    assert d.beta == Equals(SbTerm(Var(1), Var(1)), SbTerm(Var(1), Var(1)))
    assert d.delta == Equals(t, t)
    assert d.m == encode(d.beta)
    assert is_sentence(d.delta)
    assert d.fixed_point_ok
    s = d.summary()
    assert s["fixed_point_ok"] and s["delta_is_sentence"] and s["language_extension"]


def test_suite_and_perturbations():
    assert len(SAMPLE_PHI) >= 3
    for phi in SAMPLE_PHI.values():
        d = diagonalize(phi)
        assert verify_fixed_point(d)
        for k in PERTURBATIONS:
            assert not verify_fixed_point(perturb(d, k))
    with pytest.raises(ValueError):
        perturb(diagonalize("(x1 = x1)"), "nothing")


def test_precondition():
    with pytest.raises(DiagonalError):
        diagonalize("(x1 = x2)")
    with pytest.raises(DiagonalError):
        diagonalize("(0 = 0)")


def test_m_is_never_materialized():
    d = diagonalize("(~ (x1 = x1))")
    assert isinstance(d.m, Seq)
    assert not materialize(encode(d.delta), 10_000)
