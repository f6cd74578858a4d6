"""Abstract syntax, parsing and printing for the language of PA.

Concrete syntax is fully parenthesized::

    term    ::= 0 | xk | term' | (term + term) | (term . term) | sb(term, term)
    formula ::= (term = term) | (~ formula) | (formula -> formula)
              | ((all xk) formula) | A

``A`` is the propositional atom of the toy calculus.  ``sb`` is the
object-level substitution function used by the diagonal construction; it
is not part of PA proper.  As input sugar, either side of an equation may
be a single unparenthesized ``t + s`` or ``t . s``, so ``(x1 + 0 = x1)``
reads as ``((x1 + 0) = x1)``.  Printing always emits the canonical form.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterator, Union

from .codes import SymNat, as_symnat


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class CaptureError(ValueError):
    """Substitution would capture a variable of the substituted term."""


# -- terms ---------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("variable indices start at 1")


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Succ:
    arg: "Term"


@dataclass(frozen=True)
class Plus:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Times:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class SbTerm:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class BigNumeral:
    """The numeral of a code-valued number, never expanded."""

    value: SymNat


Term = Union[Var, Zero, Succ, Plus, Times, SbTerm, BigNumeral]


# -- formulas ------------------------------------------------------------------

@dataclass(frozen=True)
class Equals:
    left: Term
    right: Term


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class ForAll:
    var: int
    body: "Formula"


@dataclass(frozen=True)
class Atom:
    name: str = "A"


Formula = Union[Equals, Not, Implies, ForAll, Atom]
TERM_TYPES = (Var, Zero, Succ, Plus, Times, SbTerm, BigNumeral)
FORMULA_TYPES = (Equals, Not, Implies, ForAll, Atom)


def succ(t: Term) -> Term:
    if isinstance(t, BigNumeral):
        return BigNumeral(t.value + 1)
    return Succ(t)


def numeral(n: Union[int, SymNat]) -> Term:
    n = as_symnat(n)
    if not n.is_concrete:
        return BigNumeral(n)
    t: Term = Zero()
    for _ in range(n.const):
        t = Succ(t)
    return t


# -- symbols -------------------------------------------------------------------

@dataclass(frozen=True)
class RunToken:
    """Stands for the symbols of a code-valued numeral."""

    count: SymNat


Token = Union[str, RunToken]


def _term_symbols(t: Term, out: list) -> None:
    strokes = 0
    while isinstance(t, Succ):
        strokes += 1
        t = t.arg
    if isinstance(t, Var):
        out.append(f"x{t.index}")
    elif isinstance(t, Zero):
        out.append("0")
    elif isinstance(t, BigNumeral):
        out.append(RunToken(t.value))
    elif isinstance(t, (Plus, Times)):
        out.append("(")
        _term_symbols(t.left, out)
        out.append("+" if isinstance(t, Plus) else ".")
        _term_symbols(t.right, out)
        out.append(")")
    elif isinstance(t, SbTerm):
        out.extend(["sb", "("])
        _term_symbols(t.left, out)
        out.append(",")
        _term_symbols(t.right, out)
        out.append(")")
    else:
        raise TypeError(f"not a term: {t!r}")
    out.extend(["'"] * strokes)


def _formula_symbols(f: Formula, out: list) -> None:
    if isinstance(f, Equals):
        out.append("(")
        _term_symbols(f.left, out)
        out.append("=")
        _term_symbols(f.right, out)
        out.append(")")
    elif isinstance(f, Not):
        out.extend(["(", "~"])
        _formula_symbols(f.body, out)
        out.append(")")
    elif isinstance(f, Implies):
        out.append("(")
        _formula_symbols(f.left, out)
        out.append("->")
        _formula_symbols(f.right, out)
        out.append(")")
    elif isinstance(f, ForAll):
        out.extend(["(", "(", "all", f"x{f.var}", ")"])
        _formula_symbols(f.body, out)
        out.append(")")
    elif isinstance(f, Atom):
        out.append(f.name)
    else:
        raise TypeError(f"not a formula: {f!r}")


def symbols(e: Union[Formula, Term]) -> list[Token]:
    """The primitive symbol sequence of an expression, in print order."""
    out: list = []
    if isinstance(e, FORMULA_TYPES):
        _formula_symbols(e, out)
    else:
        _term_symbols(e, out)
    return out


# -- printing ------------------------------------------------------------------

def print_term(t: Term) -> str:
    strokes = 0
    while isinstance(t, Succ):
        strokes += 1
        t = t.arg
    if isinstance(t, Var):
        s = f"x{t.index}"
    elif isinstance(t, Zero):
        s = "0"
    elif isinstance(t, BigNumeral):
        s = f"0'^{{{t.value}}}"
    elif isinstance(t, Plus):
        s = f"({print_term(t.left)} + {print_term(t.right)})"
    elif isinstance(t, Times):
        s = f"({print_term(t.left)} . {print_term(t.right)})"
    elif isinstance(t, SbTerm):
        s = f"sb({print_term(t.left)}, {print_term(t.right)})"
    else:
        raise TypeError(f"not a term: {t!r}")
    return s + "'" * strokes


def print_formula(f: Formula) -> str:
    if isinstance(f, Equals):
        return f"({print_term(f.left)} = {print_term(f.right)})"
    if isinstance(f, Not):
        return f"(~ {print_formula(f.body)})"
    if isinstance(f, Implies):
        return f"({print_formula(f.left)} -> {print_formula(f.right)})"
    if isinstance(f, ForAll):
        return f"((all x{f.var}) {print_formula(f.body)})"
    if isinstance(f, Atom):
        return f.name
    raise TypeError(f"not a formula: {f!r}")


def print_expr(e: Union[Formula, Term]) -> str:
    return print_formula(e) if isinstance(e, FORMULA_TYPES) else print_term(e)


# -- parsing -------------------------------------------------------------------

_ALIASES = {"¬": "~", "⇒": "->", "→": "->", "∀": "all", "′": "'", "·": "."}
_TOKEN_RE = re.compile(r"\s*(->|⇒|→|x[1-9][0-9]*|all|∀|sb|[()~¬=+.·,'′0A])")


def tokenize(text: str) -> list[tuple[Token, int]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            raise ParseError(f"unknown symbol {text[pos:pos + 8]!r}", pos)
        tok = m.group(1)
        out.append((_ALIASES.get(tok, tok), m.start(1)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens: list[tuple[Token, int]], end: int):
        self.toks = tokens
        self.i = 0
        self.end = end

    def peek(self, k: int = 0) -> Token | None:
        j = self.i + k
        return self.toks[j][0] if j < len(self.toks) else None

    def pos(self) -> int:
        return self.toks[self.i][1] if self.i < len(self.toks) else self.end

    def fail(self, msg: str):
        raise ParseError(msg, self.pos())

    def expect(self, tok: str) -> None:
        if self.peek() != tok:
            self.fail(f"expected {tok!r}, found {self.peek()!r}")
        self.i += 1

    def var(self) -> int:
        tok = self.peek()
        if not (isinstance(tok, str) and tok.startswith("x")):
            self.fail(f"expected a variable, found {tok!r}")
        self.i += 1
        return int(tok[1:])

    def postfix(self, t: Term) -> Term:
        while self.peek() == "'":
            self.i += 1
            t = succ(t)
        return t

    def item(self) -> Union[Term, Formula]:
        tok = self.peek()
        if tok is None:
            self.fail("unexpected end of input")
        if isinstance(tok, RunToken):
            self.i += 1
            return self.postfix(BigNumeral(tok.count))
        if tok == "0":
            self.i += 1
            return self.postfix(Zero())
        if tok.startswith("x"):
            return self.postfix(Var(self.var()))
        if tok == "A":
            self.i += 1
            return Atom("A")
        if tok == "sb":
            self.i += 1
            self.expect("(")
            a = self.term()
            self.expect(",")
            b = self.term()
            self.expect(")")
            return self.postfix(SbTerm(a, b))
        if tok != "(":
            self.fail(f"unexpected {tok!r}")
        self.i += 1
        if self.peek() == "~":
            self.i += 1
            body = self.formula()
            self.expect(")")
            return Not(body)
        if self.peek() == "(" and self.peek(1) == "all":
            self.i += 2
            v = self.var()
            self.expect(")")
            body = self.formula()
            self.expect(")")
            return ForAll(v, body)
        first = self.item()
        op = self.peek()
        if isinstance(first, FORMULA_TYPES):
            if op != "->":
                self.fail(f"expected '->' after a formula, found {op!r}")
            self.i += 1
            right = self.formula()
            self.expect(")")
            return Implies(first, right)
        if op in ("+", "."):
            self.i += 1
            t = (Plus if op == "+" else Times)(first, self.term())
            if self.peek() == "=":
                self.i += 1
                return self.close_equation(t)
            self.expect(")")
            return self.postfix(t)
        if op == "=":
            self.i += 1
            return self.close_equation(first)
        if op == ")":
            # grouping parentheses around a term, e.g. (x1)'
            self.i += 1
            return self.postfix(first)
        self.fail(f"unexpected {op!r}")

    def close_equation(self, left: Term) -> Formula:
        right = self.term()
        if self.peek() in ("+", "."):
            op = self.peek()
            self.i += 1
            right = (Plus if op == "+" else Times)(right, self.term())
        self.expect(")")
        return Equals(left, right)

    def term(self) -> Term:
        start = self.pos()
        t = self.item()
        if not isinstance(t, TERM_TYPES):
            raise ParseError("expected a term, found a formula", start)
        return t

    def formula(self) -> Formula:
        start = self.pos()
        f = self.item()
        if not isinstance(f, FORMULA_TYPES):
            raise ParseError("expected a formula, found a term", start)
        return f

    def done(self) -> None:
        if self.i != len(self.toks):
            self.fail(f"trailing input {self.peek()!r}")


def parse_tokens(tokens: list[Token], kind: str = "any") -> Union[Formula, Term]:
    """Parse a bare symbol sequence (positions are token indices)."""
    p = _Parser([(t, i) for i, t in enumerate(tokens)], len(tokens))
    e = {"formula": p.formula, "term": p.term}.get(kind, p.item)()
    p.done()
    return e


def parse_formula(text: str) -> Formula:
    p = _Parser(tokenize(text), len(text))
    f = p.formula()
    p.done()
    return f


def parse_term(text: str) -> Term:
    p = _Parser(tokenize(text), len(text))
    t = p.term()
    p.done()
    return t


def parse_expr(text: str) -> Union[Formula, Term]:
    p = _Parser(tokenize(text), len(text))
    e = p.item()
    p.done()
    return e


# -- variables and substitution ---------------------------------------------

def term_vars(t: Term) -> set[int]:
    while isinstance(t, Succ):
        t = t.arg
    if isinstance(t, Var):
        return {t.index}
    if isinstance(t, (Plus, Times, SbTerm)):
        return term_vars(t.left) | term_vars(t.right)
    return set()


def free_vars(f: Union[Formula, Term]) -> set[int]:
    if isinstance(f, TERM_TYPES):
        return term_vars(f)
    if isinstance(f, Equals):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, Implies):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, ForAll):
        return free_vars(f.body) - {f.var}
    return set()


def is_sentence(f: Formula) -> bool:
    return not free_vars(f)


def is_free_for(t: Term, v: int, f: Formula) -> bool:
    """No free occurrence of xv in f lies in the scope of a quantifier on a variable of t."""
    tv = term_vars(t)

    def ok(g: Formula, bound: frozenset) -> bool:
        if isinstance(g, Equals):
            occurs = v in term_vars(g.left) | term_vars(g.right)
            return not (occurs and bound & tv)
        if isinstance(g, Not):
            return ok(g.body, bound)
        if isinstance(g, Implies):
            return ok(g.left, bound) and ok(g.right, bound)
        if isinstance(g, ForAll):
            if g.var == v:
                return True
            return ok(g.body, bound | {g.var})
        return True

    return ok(f, frozenset())


def substitute_term(s: Term, v: int, t: Term) -> Term:
    strokes = 0
    while isinstance(s, Succ):
        strokes += 1
        s = s.arg
    if isinstance(s, Var):
        out = t if s.index == v else s
    elif isinstance(s, (Plus, Times, SbTerm)):
        out = type(s)(substitute_term(s.left, v, t), substitute_term(s.right, v, t))
    else:
        out = s
    for _ in range(strokes):
        out = succ(out)
    return out


def _subst(f: Formula, v: int, t: Term) -> Formula:
    if isinstance(f, Equals):
        return Equals(substitute_term(f.left, v, t), substitute_term(f.right, v, t))
    if isinstance(f, Not):
        return Not(_subst(f.body, v, t))
    if isinstance(f, Implies):
        return Implies(_subst(f.left, v, t), _subst(f.right, v, t))
    if isinstance(f, ForAll):
        return f if f.var == v else ForAll(f.var, _subst(f.body, v, t))
    return f


def substitute(f: Formula, v: int, t: Term) -> Formula:
    """Replace the free occurrences of xv in f by t."""
    if not is_free_for(t, v, f):
        raise CaptureError(f"{print_term(t)} is not free for x{v} in {print_formula(f)}")
    return _subst(f, v, t)


# -- structure helpers ---------------------------------------------------------

def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Not):
        yield from subformulas(f.body)
    elif isinstance(f, Implies):
        yield from subformulas(f.left)
        yield from subformulas(f.right)
    elif isinstance(f, ForAll):
        yield from subformulas(f.body)


def subterms(e: Union[Formula, Term]) -> Iterator[Term]:
    if isinstance(e, Equals):
        yield from subterms(e.left)
        yield from subterms(e.right)
    elif isinstance(e, Not):
        yield from subterms(e.body)
    elif isinstance(e, Implies):
        yield from subterms(e.left)
        yield from subterms(e.right)
    elif isinstance(e, ForAll):
        yield from subterms(e.body)
    elif isinstance(e, TERM_TYPES):
        yield e
        if isinstance(e, Succ):
            yield from subterms(e.arg)
        elif isinstance(e, (Plus, Times, SbTerm)):
            yield from subterms(e.left)
            yield from subterms(e.right)


def all_vars(e: Union[Formula, Term]) -> set[int]:
    """Free and bound variable indices."""
    out = set()
    for t in subterms(e):
        if isinstance(t, Var):
            out.add(t.index)
    if isinstance(e, FORMULA_TYPES):
        out |= {g.var for g in subformulas(e) if isinstance(g, ForAll)}
    return out


def uses_extension(e: Union[Formula, Term]) -> bool:
    """True when sb occurs; such expressions lie outside the language of PA."""
    return any(isinstance(t, SbTerm) for t in subterms(e))


def size(e: Union[Formula, Term]) -> int:
    return len(symbols(e))


# -- random generation ---------------------------------------------------------

def random_term(rng: random.Random, depth: int = 2, max_var: int = 3) -> Term:
    if depth <= 0 or rng.random() < 0.3:
        return Var(rng.randint(1, max_var)) if rng.random() < 0.6 else Zero()
    kind = rng.randrange(3)
    if kind == 0:
        return Succ(random_term(rng, depth - 1, max_var))
    cls = Plus if kind == 1 else Times
    return cls(random_term(rng, depth - 1, max_var), random_term(rng, depth - 1, max_var))


def random_formula(rng: random.Random, depth: int = 3, max_var: int = 3) -> Formula:
    if depth <= 0 or rng.random() < 0.25:
        return Equals(random_term(rng, 2, max_var), random_term(rng, 2, max_var))
    kind = rng.randrange(3)
    if kind == 0:
        return Not(random_formula(rng, depth - 1, max_var))
    if kind == 1:
        return Implies(random_formula(rng, depth - 1, max_var),
                       random_formula(rng, depth - 1, max_var))
    return ForAll(rng.randint(1, max_var), random_formula(rng, depth - 1, max_var))


def random_toy_formula(rng: random.Random, depth: int = 3) -> Formula:
    if depth <= 0 or rng.random() < 0.3:
        return Atom("A")
    if rng.random() < 0.5:
        return Not(random_toy_formula(rng, depth - 1))
    return Implies(random_toy_formula(rng, depth - 1), random_toy_formula(rng, depth - 1))
