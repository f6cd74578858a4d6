"""Symbolic Gödel codes.

A code is either a symbol code (an odd integer) or a sequence code
``p0^e0 * p1^e1 * ...`` whose exponents are themselves codes.  Sequence
codes are kept as trees and only turned into integers on request, since
anything past a one-line proof is far too large to hold in memory.

Numerals whose length is itself a Gödel number are spliced into a
sequence as a :class:`NumeralRun`, the symbol ``0`` followed by ``count``
successor strokes, with ``count`` a :class:`SymNat`.
"""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from typing import Iterator, Union

from sympy import multiplicity, sieve


def nth_prime(i: int) -> int:
    """p_i with p_0 = 2."""
    return int(sieve[i + 1])


class CodeExpr:
    __slots__ = ()

    def __str__(self) -> str:
        return factored(self)


class Sym(CodeExpr):
    __slots__ = ("code",)

    def __init__(self, code: int):
        if code <= 0 or code % 2 == 0:
            raise ValueError(f"symbol codes are odd positive integers, got {code}")
        object.__setattr__(self, "code", int(code))

    def __setattr__(self, *_):
        raise AttributeError("codes are immutable")

    def __eq__(self, other):
        return isinstance(other, Sym) and other.code == self.code

    def __hash__(self):
        return hash(("sym", self.code))

    def __repr__(self):
        return f"Sym({self.code})"


@dataclass(frozen=True)
class SymNat:
    """A natural number: a concrete part plus a sum of code values.

    ``SymNat(5)`` is the number 5, ``SymNat.of_code(m)`` the value of the
    code ``m``.  Equality is structural, which is exact for concrete values
    and for the single-code forms the diagonal construction produces.
    """

    const: int = 0
    terms: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        # a negative offset only makes sense next to an astronomical code value
        if self.const < 0 and not self.terms:
            raise ValueError("SymNat must be non-negative")

    @classmethod
    def of_code(cls, code: CodeExpr) -> "SymNat":
        return cls(0, frozenset({(code, 1)}))

    @property
    def is_concrete(self) -> bool:
        return not self.terms

    def __int__(self) -> int:
        if self.terms:
            raise TypeError(f"{self} is code-valued and has no concrete value")
        return self.const

    def __add__(self, other) -> "SymNat":
        if isinstance(other, int):
            return SymNat(self.const + other, self.terms)
        coeffs = dict(self.terms)
        for code, k in other.terms:
            coeffs[code] = coeffs.get(code, 0) + k
        return SymNat(self.const + other.const, frozenset(coeffs.items()))

    __radd__ = __add__

    def __str__(self) -> str:
        parts = []
        for code, k in sorted(self.terms, key=lambda t: digest(t[0])):
            label = f"⌜{digest(code)}⌝"
            parts.append(label if k == 1 else f"{k}*{label}")
        if self.const or not parts:
            parts.append(str(self.const))
        return " + ".join(parts)


def as_symnat(n: Union[int, SymNat]) -> SymNat:
    return n if isinstance(n, SymNat) else SymNat(int(n))


@dataclass(frozen=True)
class NumeralRun:
    """Splice of the numeral symbols ``0 ' ' ... '`` (``count`` strokes)."""

    count: SymNat
    zero: int
    succ: int

    @property
    def length(self) -> SymNat:
        return self.count + 1


Item = Union[Sym, "Seq", NumeralRun]


class Seq(CodeExpr):
    """Sequence code.  Items are elements (Sym or nested Seq) or numeral runs.

    The constructor normalizes: concrete runs are expanded into symbols and
    successor symbols trailing a symbolic run are absorbed into it, so equal
    symbol sequences always have equal representations.
    """

    __slots__ = ("items", "_hash")

    def __init__(self, items):
        norm: list = []
        for it in items:
            if isinstance(it, NumeralRun):
                if it.count.is_concrete:
                    norm.append(Sym(it.zero))
                    norm.extend([Sym(it.succ)] * it.count.const)
                    continue
                norm.append(it)
            elif isinstance(it, (Sym, Seq)):
                if (isinstance(it, Sym) and norm and isinstance(norm[-1], NumeralRun)
                        and norm[-1].succ == it.code):
                    run = norm[-1]
                    norm[-1] = NumeralRun(run.count + 1, run.zero, run.succ)
                    continue
                norm.append(it)
            else:
                raise TypeError(f"not a code item: {it!r}")
        if not norm:
            raise ValueError("empty sequence has no code here")
        object.__setattr__(self, "items", tuple(norm))
        object.__setattr__(self, "_hash", hash(("seq", self.items)))

    def __setattr__(self, *_):
        raise AttributeError("codes are immutable")

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Seq) and self._hash == other._hash and self.items == other.items

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Seq({list(self.items)!r})"

    @property
    def is_flat(self) -> bool:
        """No symbolic numeral runs: every element is explicit."""
        return not any(isinstance(it, NumeralRun) for it in self.items)


def seq(*codes: int) -> Seq:
    """Sequence of symbol codes, e.g. ``seq(3, 9, 17, 5)``."""
    return Seq(Sym(c) for c in codes)


def numeral_code(n: Union[int, SymNat], zero: int, succ: int) -> Seq:
    return Seq([NumeralRun(as_symnat(n), zero, succ)])


# -- sequence primitives -------------------------------------------------------

def _require_seq(x: CodeExpr, op: str) -> Seq:
    if not isinstance(x, Seq):
        raise TypeError(f"{op} needs a sequence code, got {x!r}")
    return x


def concat(*xs: CodeExpr) -> Seq:
    """Mendelson's ``*``: the exponent list of the result is the juxtaposition."""
    items: list = []
    for x in xs:
        items.extend(_require_seq(x, "concat").items)
    return Seq(items)


def lh(x: CodeExpr) -> SymNat:
    total = SymNat(0)
    for it in _require_seq(x, "lh").items:
        total = total + (it.length if isinstance(it, NumeralRun) else 1)
    return total


def length(x: CodeExpr) -> int:
    return int(lh(x))


def component(x: CodeExpr, i: int) -> CodeExpr:
    """``(x)_i``, the i-th element of a sequence code."""
    if i < 0:
        raise IndexError(i)
    pos = 0
    for it in _require_seq(x, "component").items:
        if isinstance(it, NumeralRun):
            # a symbolic run is astronomically long, so any concrete index that
            # reaches it lands inside it
            return Sym(it.zero) if i == pos else Sym(it.succ)
        if i == pos:
            return it
        pos += 1
    raise IndexError(f"component {i} out of range for length {pos}")


def elements(x: Seq) -> Iterator[CodeExpr]:
    """Iterate the elements of a flat sequence code."""
    for it in x.items:
        if isinstance(it, NumeralRun):
            raise ValueError("sequence contains a code-valued numeral run")
        yield it


def last(x: CodeExpr) -> CodeExpr:
    it = _require_seq(x, "last").items[-1]
    if isinstance(it, NumeralRun):
        return Sym(it.succ)
    return it


def init(x: CodeExpr) -> Seq | None:
    """All but the last element, or None for a one-element sequence."""
    items = list(_require_seq(x, "init").items)
    tail = items.pop()
    if isinstance(tail, NumeralRun):
        items.append(NumeralRun(tail.count + (-1), tail.zero, tail.succ))
    return Seq(items) if items else None


def monus(a: Union[int, SymNat], b: Union[int, SymNat]) -> int:
    """Truncated subtraction; only defined for concrete values."""
    return max(int(a) - int(b), 0)


def code_equal(x: CodeExpr, y: CodeExpr) -> bool:
    # normalized trees are equal iff the integers are (unique factorization
    # plus injectivity of the symbol table)
    return x == y


# -- integers --------------------------------------------------------------------

@dataclass(frozen=True)
class Overflow:
    """Materialization refused: the integer has more than ``bit_limit`` bits."""

    bit_limit: int
    bits_estimate: float

    def __bool__(self):
        return False


def bit_length_estimate(x: CodeExpr) -> float:
    """log2 of the materialized value (inf for towers and symbolic runs)."""
    if isinstance(x, Sym):
        return math.log2(x.code)
    total = 0.0
    for i, it in enumerate(x.items):
        if isinstance(it, NumeralRun):
            return math.inf
        e_bits = bit_length_estimate(it)
        if e_bits > 1000:
            return math.inf
        total += 2.0 ** e_bits * math.log2(nth_prime(i))
    return total


def _materialize(x: CodeExpr, limit: int) -> int | None:
    if isinstance(x, Sym):
        return x.code if x.code.bit_length() <= limit else None
    exps = []
    bits = 0.0
    # an exponent e of p_i costs at least e bits, so it must itself fit in
    # limit.bit_length() bits
    sub_limit = max(limit, 1).bit_length()
    for i, it in enumerate(x.items):
        if isinstance(it, NumeralRun):
            return None
        e = _materialize(it, sub_limit)
        if e is None:
            return None
        bits += e * math.log2(nth_prime(i))
        if bits > limit + 1:
            return None
        exps.append(e)
    value = math.prod(pow(nth_prime(i), e) for i, e in enumerate(exps))
    return value if value.bit_length() <= limit else None


def materialize(x: CodeExpr, bit_limit: int = 1_000_000) -> int | Overflow:
    value = _materialize(x, bit_limit)
    if value is None:
        return Overflow(bit_limit, bit_length_estimate(x))
    return value


def from_int(n: int) -> CodeExpr | None:
    """Read an integer back as a code; None when it is not one.

    Odd numbers are symbol codes.  Even numbers must factor as a gapless
    prime power product whose exponents are again codes.
    """
    if n <= 0:
        return None
    if n % 2:
        return Sym(n)
    exps = []
    i = 0
    while n > 1:
        p = nth_prime(i)
        e = multiplicity(p, n)
        if e == 0:
            return None
        n //= p ** e
        exps.append(e)
        i += 1
    items = []
    for e in exps:
        c = from_int(e)
        if c is None:
            return None
        items.append(c)
    return Seq(items)


# -- display and serialization ------------------------------------------------

def digest(x: CodeExpr) -> str:
    return hashlib.sha256(repr(to_json(x)).encode()).hexdigest()[:8]


def factored(x: CodeExpr) -> str:
    """Prime-power form, e.g. ``2^3 · 3^9 · 5^17 · 7^5``."""
    if isinstance(x, Sym):
        return str(x.code)
    parts = []
    offset: SymNat = SymNat(0)
    for it in x.items:
        if isinstance(it, NumeralRun):
            parts.append(f"[numeral 0'^({it.count}) from p_{offset}]")
            offset = offset + it.length
            continue
        if offset.is_concrete:
            base = str(nth_prime(offset.const))
        else:
            base = f"p_({offset})"
        exp = str(it.code) if isinstance(it, Sym) else f"({factored(it)})"
        parts.append(f"{base}^{exp}")
        offset = offset + 1
    return " · ".join(parts)


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "·*":
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def parse_factored(text: str) -> CodeExpr:
    """Inverse of :func:`factored` for codes without numeral runs."""
    text = text.strip()
    if text.isdigit():
        n = int(text)
        if n % 2 == 0 or n == 0:
            raise ValueError(f"{n} is not a symbol code")
        return Sym(n)
    items = []
    for k, part in enumerate(_split_top(text)):
        base, sep, exp = part.partition("^")
        if not sep or not base.strip().isdigit():
            raise ValueError(f"expected p^e, got {part!r}")
        if int(base) != nth_prime(k):
            raise ValueError(f"factor {k + 1} has base {base.strip()}, expected {nth_prime(k)}")
        exp = exp.strip()
        if exp.startswith("(") and exp.endswith(")"):
            items.append(parse_factored(exp[1:-1]))
        else:
            items.append(parse_factored(exp))
    return Seq(items)


def to_json(x: CodeExpr):
    """Nested lists of ints; runs become ``{"run": ...}`` objects."""
    if isinstance(x, Sym):
        return x.code
    out = []
    for it in x.items:
        if isinstance(it, NumeralRun):
            out.append({
                "run": {"const": it.count.const,
                        "terms": sorted(([to_json(c), k] for c, k in it.count.terms), key=repr)},
                "zero": it.zero, "succ": it.succ,
            })
        else:
            out.append(to_json(it))
    return out


def from_json(data) -> CodeExpr:
    if isinstance(data, int):
        return Sym(data)
    items = []
    for d in data:
        if isinstance(d, dict):
            run = d["run"]
            count = SymNat(run["const"], frozenset((from_json(c), k) for c, k in run["terms"]))
            items.append(NumeralRun(count, d["zero"], d["succ"]))
        else:
            items.append(from_json(d))
    return Seq(items)
