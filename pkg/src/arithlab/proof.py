"""Proof objects and the ``.paproof`` line format.

One line per proof step, 1-based references, ``#`` comments::

    A (x1 + 0 = x1)
    GEN 1 x1
    MP 2 3

``MP i j`` concludes ``g`` from line i (``f``) and line j (``(f -> g)``);
``GEN i xk`` concludes ``((all xk) f)``.  A formula may follow MP/GEN lines
to state the conclusion explicitly; otherwise it is derived.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

from .syntax import ForAll, Formula, Implies, ParseError, parse_formula, print_formula


class ScriptError(ValueError):
    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Axiom:
    pass


@dataclass(frozen=True)
class MP:
    minor: int  # index of f
    major: int  # index of (f -> g)


@dataclass(frozen=True)
class Gen:
    line: int
    var: int


Justification = Union[Axiom, MP, Gen]


@dataclass(frozen=True)
class Line:
    formula: Formula
    why: Justification


@dataclass(frozen=True)
class Proof:
    lines: tuple[Line, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.lines:
            raise ValueError("a proof has at least one line")
        object.__setattr__(self, "lines", tuple(self.lines))

    @property
    def formulas(self) -> list[Formula]:
        return [ln.formula for ln in self.lines]

    def __len__(self):
        return len(self.lines)


def last_formula(p: Proof) -> Formula:
    return p.lines[-1].formula


def infer_justification(formulas: Sequence[Formula], k: int) -> Justification | None:
    """A rule that yields line k from earlier lines, ignoring axiomhood."""
    f = formulas[k]
    if isinstance(f, ForAll):
        for i in range(k):
            if formulas[i] == f.body:
                return Gen(i, f.var)
    for j in range(k):
        g = formulas[j]
        if isinstance(g, Implies) and g.right == f:
            for i in range(k):
                if formulas[i] == g.left:
                    return MP(i, j)
    return None


def load_proof_script(text: str, name: str = "") -> Proof:
    lines: list[Line] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        head, _, rest = body.partition(" ")
        head = head.upper()
        rest = rest.strip()
        n = len(lines)

        def ref(tok: str) -> int:
            if not tok.isdigit() or not 1 <= int(tok) <= n:
                raise ScriptError(f"bad reference {tok!r} (only lines 1..{n} precede)", lineno)
            return int(tok) - 1

        def formula(src: str):
            try:
                return parse_formula(src)
            except ParseError as exc:
                raise ScriptError(str(exc), lineno) from exc

        if head == "A":
            if not rest:
                raise ScriptError("axiom line needs a formula", lineno)
            lines.append(Line(formula(rest), Axiom()))
        elif head == "MP":
            parts = rest.split(None, 2)
            if len(parts) < 2:
                raise ScriptError("MP needs two line references", lineno)
            i, j = ref(parts[0]), ref(parts[1])
            if len(parts) == 3:
                f = formula(parts[2])
            else:
                major = lines[j].formula
                if not (isinstance(major, Implies) and major.left == lines[i].formula):
                    raise ScriptError(f"line {j + 1} is not an implication from line {i + 1}", lineno)
                f = major.right
            lines.append(Line(f, MP(i, j)))
        elif head == "GEN":
            parts = rest.split(None, 2)
            if len(parts) < 2 or not parts[1].startswith("x") or not parts[1][1:].isdigit():
                raise ScriptError("GEN needs a line reference and a variable", lineno)
            i, v = ref(parts[0]), int(parts[1][1:])
            f = formula(parts[2]) if len(parts) == 3 else ForAll(v, lines[i].formula)
            lines.append(Line(f, Gen(i, v)))
        else:
            raise ScriptError(f"unknown step {head!r}", lineno)
    if not lines:
        raise ScriptError("empty proof script", 0)
    return Proof(tuple(lines), name)


def dump_proof_script(p: Proof) -> str:
    out = []
    for ln in p.lines:
        f = print_formula(ln.formula)
        if isinstance(ln.why, Axiom):
            out.append(f"A {f}")
        elif isinstance(ln.why, MP):
            out.append(f"MP {ln.why.minor + 1} {ln.why.major + 1} {f}")
        else:
            out.append(f"GEN {ln.why.line + 1} x{ln.why.var} {f}")
    return "\n".join(out) + "\n"
