"""Code-level substitution and the diagonal construction.

``sb(e, n)`` is computed by decoding, substituting the numeral and
re-encoding.  Numerals for code-valued ``n`` stay symbolic runs, so the
fixed-point identity ``sb(m, m) == code(delta)`` is checked exactly even
though ``m`` is far too large to write down.

The object-level term ``sb(t, u)`` (code 27) is an extension of the PA
language used only to form beta; formulas containing it are never axioms.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Union

from .codec import DEFAULT_TABLE, DecodeError, SymbolTable, decode_expression, encode_expression
from .codes import CodeExpr, SymNat, as_symnat, bit_length_estimate, code_equal, length
from .syntax import (
    FORMULA_TYPES, ForAll, Formula, Not, SbTerm, Var, free_vars, is_sentence, numeral, parse_formula,
    print_formula, substitute,
)

log = logging.getLogger(__name__)


class DiagonalError(ValueError):
    pass


def sb(e: CodeExpr, n: Union[int, SymNat], var: int = 1, table: SymbolTable = DEFAULT_TABLE) -> CodeExpr:
    """Code of the formula coded by e with the numeral n put for x_var."""
    try:
        f = decode_expression(e, table)
    except DecodeError as exc:
        raise DiagonalError(f"not a formula code: {exc}") from exc
    if not isinstance(f, FORMULA_TYPES):
        raise DiagonalError("not a formula code: decodes to a term")
    if var not in free_vars(f):
        log.info("sb: x%d is not free in %s; code returned unchanged", var, print_formula(f))
        return e
    return encode_expression(substitute(f, var, numeral(as_symnat(n))), table)


@dataclass(frozen=True)
class DiagResult:
    phi: Formula
    beta: Formula
    m: CodeExpr
    delta: Formula
    fixed_point_ok: bool
    var: int = 1

    def summary(self) -> dict:
        return {
            "phi": print_formula(self.phi),
            "beta": print_formula(self.beta),
            "m_length": length(self.m),
            "m_bits_estimate": round(bit_length_estimate(self.m)),
            "delta": print_formula(self.delta),
            "delta_is_sentence": is_sentence(self.delta),
            "fixed_point_ok": self.fixed_point_ok,
            "language_extension": "sb term (code 27) occurs in beta and delta",
        }


def verify_fixed_point(d: DiagResult, table: SymbolTable = DEFAULT_TABLE) -> bool:
    """sb(m, m) and the code of delta coincide."""
    try:
        left = sb(d.m, SymNat.of_code(d.m), d.var, table)
    except DiagonalError:
        return False
    return code_equal(left, encode_expression(d.delta, table))


def diagonalize(phi: Union[Formula, str], table: SymbolTable = DEFAULT_TABLE) -> DiagResult:
    if isinstance(phi, str):
        phi = parse_formula(phi)
    fv = sorted(free_vars(phi))
    if len(fv) != 1:
        raise DiagonalError(f"phi needs exactly one free variable, has {len(fv)}")
    v = fv[0]
    beta = substitute(phi, v, SbTerm(Var(v), Var(v)))
    m = encode_expression(beta, table)
    delta = substitute(beta, v, numeral(SymNat.of_code(m)))
    d = DiagResult(phi, beta, m, delta, False, v)
    return replace(d, fixed_point_ok=verify_fixed_point(d, table))


# -- perturbations used to show the check is not vacuous -----------------------

PERTURBATIONS = ("other_delta", "m_is_code_of_phi", "numeral_off_by_one")


def perturb(d: DiagResult, kind: str, table: SymbolTable = DEFAULT_TABLE) -> DiagResult:
    if kind == "other_delta":
        delta = Not(d.delta)
        return replace(d, delta=delta)
    if kind == "m_is_code_of_phi":
        return replace(d, m=encode_expression(d.phi, table))
    if kind == "numeral_off_by_one":
        return replace(d, delta=substitute(d.beta, d.var, numeral(SymNat.of_code(d.m) + 1)))
    raise ValueError(f"unknown perturbation {kind!r}")


# Stand-ins for the formulas about proofs, which are not built in the object
# language here: the fixed-point identity does not care what phi says.
SCHEMATIC_PHI = {
    "forall_x_not_pf": ForAll(2, Not(parse_formula("(x2 = x1)"))),
    "forall_x_rf": ForAll(2, parse_formula("(x2 = x1)")),
}
SAMPLE_PHI = {
    "identity": parse_formula("(x1 = x1)"),
    "not_identity": parse_formula("(~ (x1 = x1))"),
    "plus_zero": parse_formula("((x1 + 0) = x1)"),
    **SCHEMATIC_PHI,
}
