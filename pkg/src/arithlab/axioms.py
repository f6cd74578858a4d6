"""Axiom recognizers for Mendelson's system S and its logical fragment.

Logical schemas A1-A5, the proper axioms S1-S8 (single formulas, as in S)
and the induction schema S9.  The toy calculus has the single axiom ``A``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .syntax import (
    Atom, Equals, ForAll, Formula, Implies, Not, Plus, SbTerm, Succ, Term, Times, Var, Zero,
    free_vars, is_free_for, parse_formula, substitute, subformulas, subterms,
)


class Mode(str, Enum):
    PA = "PA"
    PF = "PF"
    TOY = "TOY"


PROPER_AXIOMS: dict[str, Formula] = {
    name: parse_formula(text) for name, text in [
        ("S1", "((x1 = x2) -> ((x1 = x3) -> (x2 = x3)))"),
        ("S2", "((x1 = x2) -> (x1' = x2'))"),
        ("S3", "(~ (0 = x1'))"),
        ("S4", "((x1' = x2') -> (x1 = x2))"),
        ("S5", "((x1 + 0) = x1)"),
        ("S6", "((x1 + x2') = (x1 + x2)')"),
        ("S7", "((x1 . 0) = 0)"),
        ("S8", "((x1 . x2') = ((x1 . x2) + x1))"),
    ]
}
TOY_AXIOM = Atom("A")


@dataclass(frozen=True)
class Meta:
    name: str


def _match(pat, f, env: dict) -> bool:
    if isinstance(pat, Meta):
        if pat.name in env:
            return env[pat.name] == f
        env[pat.name] = f
        return True
    if type(pat) is not type(f):
        return False
    if isinstance(pat, Not):
        return _match(pat.body, f.body, env)
    if isinstance(pat, Implies):
        return _match(pat.left, f.left, env) and _match(pat.right, f.right, env)
    return pat == f


B, C, D = Meta("B"), Meta("C"), Meta("D")
SCHEMAS = {
    "A1": Implies(B, Implies(C, B)),
    "A2": Implies(Implies(B, Implies(C, D)), Implies(Implies(B, C), Implies(B, D))),
    "A3": Implies(Implies(Not(C), Not(B)), Implies(Implies(Not(C), B), C)),
}


def match_schema(name: str, f: Formula) -> dict | None:
    env: dict = {}
    return env if _match(SCHEMAS[name], f, env) else None


def _first_image(b, b2, x: int, bound: frozenset) -> Term | None:
    """The subterm of b2 sitting where b has its first free x."""
    if isinstance(b, Var):
        return b2 if b.index == x and x not in bound else None
    if type(b) is not type(b2):
        return None
    if isinstance(b, Succ):
        return _first_image(b.arg, b2.arg, x, bound)
    if isinstance(b, (Plus, Times, SbTerm, Equals, Implies)):
        return _first_image(b.left, b2.left, x, bound) or _first_image(b.right, b2.right, x, bound)
    if isinstance(b, Not):
        return _first_image(b.body, b2.body, x, bound)
    if isinstance(b, ForAll):
        if b.var != b2.var:
            return None
        return _first_image(b.body, b2.body, x, bound | {b.var})
    return None


def is_a4(f: Formula) -> bool:
    """((all x) B(x) -> B(t)) with t free for x in B."""
    if not (isinstance(f, Implies) and isinstance(f.left, ForAll)):
        return False
    x, body, inst = f.left.var, f.left.body, f.right
    if x not in free_vars(body):
        return body == inst
    t = _first_image(body, inst, x, frozenset())
    if t is None or not is_free_for(t, x, body):
        return False
    return substitute(body, x, t) == inst


def is_a5(f: Formula) -> bool:
    """((all x)(B -> C) -> (B -> (all x) C)) with x not free in B."""
    if not (isinstance(f, Implies) and isinstance(f.left, ForAll) and isinstance(f.left.body, Implies)
            and isinstance(f.right, Implies) and isinstance(f.right.right, ForAll)):
        return False
    x, inner = f.left.var, f.left.body
    return (f.right.right.var == x and inner.left == f.right.left
            and inner.right == f.right.right.body and x not in free_vars(inner.left))


def is_induction(f: Formula) -> bool:
    """(B(0) -> ((all x)(B(x) -> B(x')) -> (all x) B(x)))"""
    if not (isinstance(f, Implies) and isinstance(f.right, Implies)):
        return False
    step, concl = f.right.left, f.right.right
    if not (isinstance(step, ForAll) and isinstance(concl, ForAll) and step.var == concl.var
            and isinstance(step.body, Implies)):
        return False
    x, body = concl.var, concl.body
    return (step.body.left == body
            and step.body.right == substitute(body, x, Succ(Var(x)))
            and f.left == substitute(body, x, Zero()))


def in_pa_language(f: Formula) -> bool:
    if any(isinstance(g, Atom) for g in subformulas(f)):
        return False
    return not any(isinstance(t, SbTerm) for t in subterms(f))


def axiom_kind(f: Formula, mode: Mode = Mode.PA) -> str | None:
    """Name of the schema or axiom f instantiates under mode, else None."""
    mode = Mode(mode)
    if mode is Mode.TOY:
        return "A" if f == TOY_AXIOM else None
    if not in_pa_language(f):
        return None
    for name in SCHEMAS:
        if match_schema(name, f) is not None:
            return name
    if is_a4(f):
        return "A4"
    if is_a5(f):
        return "A5"
    if mode is Mode.PF:
        return None
    for name, ax in PROPER_AXIOMS.items():
        if f == ax:
            return name
    if is_induction(f):
        return "S9"
    return None


def is_axiom(f: Formula, mode: Mode = Mode.PA) -> bool:
    return axiom_kind(f, mode) is not None
