"""Gödel numbering of expressions and proofs.

Symbols get odd codes from a :class:`SymbolTable`; an expression is coded
as the sequence of its symbol codes and a proof as the sequence of its
formula codes.  Parity tells the two apart on decoding: odd exponents are
symbols, even ones nested sequences.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from pathlib import Path
from typing import Iterable, Union

from .codes import CodeExpr, NumeralRun, Seq, Sym, elements
from .proof import Axiom, Line, Proof, infer_justification
from .syntax import FORMULA_TYPES, Formula, ParseError, RunToken, Term, parse_tokens, symbols

LOCKED = {"(": 3, ")": 5, "~": 9, "->": 11, "all": 13}
KNOWN_SYMBOLS = {"(", ")", ",", "~", "->", "all", "0", "=", "'", "+", ".", "sb", "A"}
_ALIASES = {"¬": "~", "⇒": "->", "→": "->", "∀": "all", "′": "'", "·": "."}


class TableError(ValueError):
    pass


class DecodeError(ValueError):
    pass


def var_code(k: int) -> int:
    return 13 + 8 * k


@dataclass(frozen=True)
class SymbolTable:
    entries: tuple[tuple[str, int], ...]
    variables: bool = True
    name: str = "custom"

    def __post_init__(self):
        seen: dict[int, str] = {}
        for sym, code in self.entries:
            if sym not in KNOWN_SYMBOLS:
                raise TableError(f"unknown symbol {sym!r}")
            if code <= 0 or code % 2 == 0:
                raise TableError(f"code for {sym!r} must be odd and positive, got {code}")
            if code in seen:
                raise TableError(f"code {code} assigned to both {seen[code]!r} and {sym!r}")
            if sym in LOCKED and code != LOCKED[sym]:
                raise TableError(f"{sym!r} is locked to {LOCKED[sym]}, got {code}")
            if self.variables and code >= 21 and code % 8 == 5:
                raise TableError(f"code {code} for {sym!r} collides with variable x{(code - 13) // 8}")
            seen[code] = sym
        if self.variables:
            missing = [s for s in LOCKED if s not in dict(self.entries)]
            if missing:
                raise TableError(f"table with variables must define {missing}")

    @classmethod
    def from_mapping(cls, mapping: dict[str, int], variables: bool = True, name: str = "custom"):
        entries = tuple(sorted((_ALIASES.get(s, s), c) for s, c in mapping.items()))
        return cls(entries, variables, name)

    @cached_property
    def mapping(self) -> dict[str, int]:
        return dict(self.entries)

    @cached_property
    def _reverse(self) -> dict[int, str]:
        return {c: s for s, c in self.entries}

    def code(self, symbol: str) -> int:
        if self.variables and symbol.startswith("x") and symbol[1:].isdigit():
            return var_code(int(symbol[1:]))
        try:
            return self.mapping[symbol]
        except KeyError:
            raise KeyError(f"symbol {symbol!r} not in table {self.name}") from None

    def symbol(self, code: int) -> str | None:
        if code in self._reverse:
            return self._reverse[code]
        if self.variables and code >= 21 and code % 8 == 5:
            return f"x{(code - 13) // 8}"
        return None

    def is_variable_code(self, code: int) -> bool:
        return self.variables and code >= 21 and code % 8 == 5

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.mapping


def parse_table(text: str, name: str = "custom") -> SymbolTable:
    mapping: dict[str, int] = {}
    variables = True
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2:
            raise TableError(f"line {lineno}: expected '<symbol> <odd-code>'")
        sym, val = parts
        if sym == "xk":
            if val not in ("13+8k", "none"):
                raise TableError(f"line {lineno}: variable codes are 13+8k or none")
            variables = val != "none"
            continue
        if not val.lstrip("-").isdigit():
            raise TableError(f"line {lineno}: code must be an integer")
        sym = _ALIASES.get(sym, sym)
        if sym in mapping:
            raise TableError(f"line {lineno}: {sym!r} defined twice")
        mapping[sym] = int(val)
    return SymbolTable.from_mapping(mapping, variables, name)


def load_table(path: Union[str, Path]) -> SymbolTable:
    path = Path(path)
    return parse_table(path.read_text(encoding="utf-8"), path.stem)


def _builtin(name: str) -> SymbolTable:
    text = resources.files("arithlab.tables").joinpath(f"{name}.table").read_text(encoding="utf-8")
    return parse_table(text, name)


DEFAULT_TABLE = _builtin("default")
TOY_TABLE = _builtin("toy")


# -- encoding ------------------------------------------------------------------

def encode_expression(e: Union[Formula, Term], table: SymbolTable = DEFAULT_TABLE) -> Seq:
    items = []
    for tok in symbols(e):
        if isinstance(tok, RunToken):
            items.append(NumeralRun(tok.count, table.code("0"), table.code("'")))
        else:
            items.append(Sym(table.code(tok)))
    return Seq(items)


def encode_proof(p: Union[Proof, Iterable[Formula]], table: SymbolTable = DEFAULT_TABLE) -> Seq:
    formulas = p.formulas if isinstance(p, Proof) else list(p)
    return Seq([encode_expression(f, table) for f in formulas])


def encode(e, table: SymbolTable = DEFAULT_TABLE) -> Seq:
    return encode_proof(e, table) if isinstance(e, Proof) else encode_expression(e, table)


# -- decoding ------------------------------------------------------------------

def code_tokens(x: CodeExpr, table: SymbolTable = DEFAULT_TABLE) -> list:
    """Symbol sequence of an expression code; raises DecodeError otherwise."""
    if not isinstance(x, Seq):
        raise DecodeError(f"{x} is a symbol code, not an expression code")
    out: list = []
    zero, stroke = table.mapping.get("0"), table.mapping.get("'")
    for item in x.items:
        if isinstance(item, NumeralRun):
            if (item.zero, item.succ) != (zero, stroke):
                raise DecodeError("numeral run does not match the table")
            out.append(RunToken(item.count))
        elif isinstance(item, Seq):
            raise DecodeError("even exponent inside an expression code (that is a sequence of expressions)")
        else:
            sym = table.symbol(item.code)
            if sym is None:
                raise DecodeError(f"exponent {item.code} is not in table {table.name}")
            out.append(sym)
    return out


def decode_expression(x: CodeExpr, table: SymbolTable = DEFAULT_TABLE) -> Union[Formula, Term]:
    toks = code_tokens(x, table)
    try:
        return parse_tokens(toks)
    except ParseError as exc:
        raise DecodeError(f"symbol sequence does not parse: {exc}") from exc


def decode_proof(x: CodeExpr, table: SymbolTable = DEFAULT_TABLE) -> Proof:
    if not isinstance(x, Seq) or not x.is_flat:
        raise DecodeError("not a sequence of expressions")
    formulas = []
    for el in elements(x):
        if isinstance(el, Sym):
            raise DecodeError(f"odd exponent {el.code} where a formula code was expected")
        f = decode_expression(el, table)
        if not isinstance(f, FORMULA_TYPES):
            raise DecodeError("proof line is a term, not a formula")
        formulas.append(f)
    lines = []
    for k, f in enumerate(formulas):
        lines.append(Line(f, infer_justification(formulas, k) or Axiom()))
    return Proof(tuple(lines))


def decode(x: CodeExpr, expected: str = "expression", table: SymbolTable = DEFAULT_TABLE):
    if x is None:
        raise DecodeError("not a code")
    if expected == "proof":
        return decode_proof(x, table)
    if expected == "expression":
        return decode_expression(x, table)
    raise ValueError(f"unknown category {expected!r}")
