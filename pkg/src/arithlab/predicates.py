"""Decidable predicates on Gödel numbers.

Every predicate takes codes (or plain integers, which are read back with
:func:`~arithlab.codes.from_int`) and is total: anything malformed is
simply not in the relation.  Bounded quantifiers are evaluated by taking
the sequence apart rather than by counting up to the bound.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Union

from .axioms import Mode, axiom_kind
from .codec import DEFAULT_TABLE, TOY_TABLE, DecodeError, SymbolTable, decode_expression, encode_expression
from .codes import CodeExpr, NumeralRun, Seq, Sym, code_equal, component, concat, elements, from_int, init, last, length, monus, seq
from .syntax import FORMULA_TYPES, Formula

CodeLike = Union[CodeExpr, int, None]

LPAREN, RPAREN, NEG, IMP, ALL = seq(3), seq(5), seq(9), seq(11), seq(13)


def table_for(mode: Mode, table: SymbolTable | None = None) -> SymbolTable:
    if table is not None:
        return table
    return TOY_TABLE if Mode(mode) is Mode.TOY else DEFAULT_TABLE


def as_code(x: CodeLike) -> CodeExpr | None:
    if isinstance(x, bool):
        raise TypeError("booleans are not codes")
    if isinstance(x, int):
        return from_int(x)
    return x


# -- expressions ---------------------------------------------------------------

def gd(x: CodeLike, table: SymbolTable = DEFAULT_TABLE) -> bool:
    """x is the code of an expression (a nonempty string of symbols)."""
    x = as_code(x)
    if not isinstance(x, Seq):
        return False
    zero, stroke = table.mapping.get("0"), table.mapping.get("'")
    for it in x.items:
        if isinstance(it, NumeralRun):
            if (it.zero, it.succ) != (zero, stroke):
                return False
        elif not isinstance(it, Sym) or table.symbol(it.code) is None:
            return False
    return True


def evbl(x: CodeLike, table: SymbolTable = DEFAULT_TABLE) -> bool:
    x = as_code(x)
    return (isinstance(x, Seq) and len(x.items) == 1 and isinstance(x.items[0], Sym)
            and table.is_variable_code(x.items[0].code))


@lru_cache(maxsize=1 << 16)
def formula_of(x: CodeExpr, table: SymbolTable) -> Formula | None:
    """The formula x codes, or None.  Non-canonical spellings do not count."""
    if not isinstance(x, Seq):
        return None
    try:
        f = decode_expression(x, table)
    except DecodeError:
        return None
    if not isinstance(f, FORMULA_TYPES) or encode_expression(f, table) != x:
        return None
    return f


def fml(x: CodeLike, table: SymbolTable = DEFAULT_TABLE) -> bool:
    x = as_code(x)
    return x is not None and formula_of(x, table) is not None


def ax(y: CodeLike, mode: Mode = Mode.PA, table: SymbolTable | None = None) -> bool:
    y = as_code(y)
    if y is None:
        return False
    f = formula_of(y, table_for(mode, table))
    return f is not None and axiom_kind(f, mode) is not None


# -- rules ---------------------------------------------------------------------

def neg_code(v: CodeExpr) -> Seq:
    """2^3 * 2^9 * v * 2^5"""
    return concat(LPAREN, NEG, v, RPAREN)


def mp(x: CodeLike, y: CodeLike, z: CodeLike, table: SymbolTable = DEFAULT_TABLE) -> bool:
    """y = 2^3 * x * 2^11 * z * 2^5 and Gd(x) and Gd(z)"""
    x, y, z = as_code(x), as_code(y), as_code(z)
    if not (gd(x, table) and gd(z, table) and isinstance(y, Seq)):
        return False
    return code_equal(y, concat(LPAREN, x, IMP, z, RPAREN))


def gen(x: CodeLike, y: CodeLike, table: SymbolTable = DEFAULT_TABLE) -> bool:
    """Some variable v with y = 2^3 * 2^3 * 2^13 * v * 2^5 * x * 2^5 and Gd(x)."""
    x, y = as_code(x), as_code(y)
    if not (isinstance(y, Seq) and gd(x, table)):
        return False
    try:
        v = Seq([component(y, 3)])
    except IndexError:
        return False
    return evbl(v, table) and code_equal(y, concat(LPAREN, LPAREN, ALL, v, RPAREN, x, RPAREN))


# -- proofs --------------------------------------------------------------------

def _is_proof_shape(x: CodeExpr | None) -> bool:
    return isinstance(x, Seq) and x.is_flat and all(isinstance(e, Seq) for e in x.items)


@lru_cache(maxsize=1 << 16)
def _prf(x: Seq, mode: Mode, table: SymbolTable) -> bool:
    u, v = init(x), last(x)
    if u is None:
        # x = 2^w and Ax(w)
        return ax(v, mode, table)
    if not _prf(u, mode, table):
        return False
    if ax(v, mode, table):
        return True
    earlier = [w for w in elements(u) if fml(w, table)]
    if any(gen(w, v, table) for w in earlier):
        return True
    return any(mp(z, w, v, table) for z in earlier for w in earlier)


def prf(x: CodeLike, mode: Mode = Mode.PA, table: SymbolTable | None = None) -> bool:
    """x codes a proof: each element an axiom or got by Gen or MP from earlier ones."""
    x = as_code(x)
    return _is_proof_shape(x) and _prf(x, Mode(mode), table_for(mode, table))


def pf(x: CodeLike, v: CodeLike, mode: Mode = Mode.PA, table: SymbolTable | None = None) -> bool:
    """Prf(x) and v = (x)_{lh(x) -. 1}"""
    x, v = as_code(x), as_code(v)
    if v is None or not prf(x, mode, table):
        return False
    return code_equal(v, component(x, monus(length(x), 1)))


def rf(x: CodeLike, v: CodeLike, mode: Mode = Mode.PA, table: SymbolTable | None = None) -> bool:
    """Pf(x, z) and z = Neg(v)"""
    v = as_code(v)
    if not isinstance(v, Seq):
        # Neg of a symbol code is never a formula code, so no proof ends in it
        return False
    return pf(x, neg_code(v), mode, table)


def rf_expanded(x: CodeLike, v: CodeLike, mode: Mode = Mode.PA, table: SymbolTable | None = None) -> bool:
    """Rf written out disjunct by disjunct, with y the last element of x."""
    x, v = as_code(x), as_code(v)
    table = table_for(mode, table)
    if not (_is_proof_shape(x) and isinstance(v, Seq)):
        return False
    u, y = init(x), last(x)
    if not code_equal(y, neg_code(v)):
        return False
    if u is None:
        return ax(y, mode, table)
    if not prf(u, mode, table):
        return False
    earlier = list(elements(u))
    return (any(fml(w, table) and gen(w, y, table) for w in earlier)
            or any(fml(z, table) and fml(w, table) and mp(z, w, y, table)
                   for z in earlier for w in earlier)
            or ax(y, mode, table))


def ref(x: CodeLike, mode: Mode = Mode.PA, table: SymbolTable | None = None) -> bool:
    """Prf(Neg(x)): the negation of x is provable."""
    x = as_code(x)
    if not isinstance(x, Seq):
        # Neg(x) starts with the symbol "(", never a formula, for any x
        return False
    return prf(neg_code(x), mode, table)


# -- characteristic functions ----------------------------------------------------

PREDICATES = {"Pf": pf, "Prf": prf, "Rf": rf, "Ref": ref}
_CANON = {k.lower(): k for k in PREDICATES}


def _lookup(pred_id: str):
    try:
        return PREDICATES[_CANON[pred_id.lower()]]
    except KeyError:
        raise KeyError(f"unknown predicate {pred_id!r}; expected one of {sorted(PREDICATES)}") from None


def char_fn(pred_id: str, args: tuple, mode: Mode = Mode.PA, table: SymbolTable | None = None) -> int:
    """0 when the relation holds, 1 when it does not."""
    return 0 if _lookup(pred_id)(*args, mode=mode, table=table) else 1


def co_char_fn(pred_id: str, args: tuple, mode: Mode = Mode.PA, table: SymbolTable | None = None) -> int:
    """Characteristic function of the complement."""
    return 1 - char_fn(pred_id, args, mode, table)
