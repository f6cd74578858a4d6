"""Structural Hilbert-style proof checking over syntax trees.

This is the tree-level twin of :func:`arithlab.predicates.prf`: a line is
fine when it is an axiom of the mode or follows from earlier lines by MP
or Gen.  The stated justification is tried first; unless ``strict`` is
set, a line with a wrong justification is still accepted when some other
rule yields it, since the arithmetic predicate only sees formulas.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path

from .axioms import Mode, axiom_kind
from .proof import MP, Axiom, Gen, Justification, Line, Proof, infer_justification, load_proof_script
from .syntax import ForAll, Implies, Not, parse_tokens, symbols


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    bad_line: int | None = None  # 1-based
    reason: str = ""
    notes: tuple[str, ...] = field(default=())

    def __bool__(self):
        return self.accepted

    def __str__(self):
        if self.accepted:
            return "accept" + "".join(f"\n  note: {n}" for n in self.notes)
        return f"reject at line {self.bad_line}: {self.reason}"


def _claimed_ok(formulas, k: int, why: Justification, mode: Mode) -> str | None:
    """None when the stated justification is valid, else the complaint."""
    f = formulas[k]
    if isinstance(why, Axiom):
        return None if axiom_kind(f, mode) else f"not an axiom of {Mode(mode).value}"
    if isinstance(why, MP):
        if not (0 <= why.minor < k and 0 <= why.major < k):
            return "MP references a line that is not earlier"
        if formulas[why.major] != Implies(formulas[why.minor], f):
            return f"line {why.major + 1} is not (line {why.minor + 1} -> this line)"
        return None
    if isinstance(why, Gen):
        if not 0 <= why.line < k:
            return "Gen references a line that is not earlier"
        if f != ForAll(why.var, formulas[why.line]):
            return f"not the generalization of line {why.line + 1} over x{why.var}"
        return None
    return f"unknown justification {why!r}"


def _describe(why: Justification) -> str:
    if isinstance(why, MP):
        return f"MP {why.minor + 1} {why.major + 1}"
    if isinstance(why, Gen):
        return f"GEN {why.line + 1} x{why.var}"
    return "axiom"


def check_proof(p: Proof, mode: Mode = Mode.PA, strict: bool = False) -> Verdict:
    formulas = p.formulas
    notes = []
    for k, ln in enumerate(p.lines):
        complaint = _claimed_ok(formulas, k, ln.why, mode)
        if complaint is None:
            continue
        if not strict:
            if axiom_kind(ln.formula, mode):
                alt: Justification | None = Axiom()
            else:
                alt = infer_justification(formulas, k)
            if alt is not None:
                notes.append(f"line {k + 1}: stated {_describe(ln.why)} fails ({complaint}); "
                             f"holds as {_describe(alt)}")
                continue
        return Verdict(False, k + 1, complaint)
    return Verdict(True, notes=tuple(notes))


def rejustify(p: Proof, mode: Mode = Mode.PA) -> Proof:
    """Replace each line's justification by one that actually works, if any."""
    formulas = p.formulas
    lines = []
    for k, ln in enumerate(p.lines):
        why = ln.why
        if _claimed_ok(formulas, k, why, mode) is not None:
            if axiom_kind(ln.formula, mode):
                why = Axiom()
            else:
                why = infer_justification(formulas, k) or why
        lines.append(Line(ln.formula, why))
    return Proof(tuple(lines), p.name)


# -- mutation ------------------------------------------------------------------

MUTATIONS = ("swap", "symbol", "retarget")


def _alter_symbol(f, rng: random.Random):
    toks = symbols(f)
    sites = [i for i, t in enumerate(toks) if isinstance(t, str) and (t == "0" or t == "'" or t.startswith("x"))]
    if not sites:
        return f
    i = rng.choice(sites)
    t = toks[i]
    if t == "0":
        new = ["x1"]
    elif t == "'":
        new = []
    else:
        new = [f"x{int(t[1:]) + 1}"]
    return parse_tokens(toks[:i] + new + toks[i + 1:], "formula")


def mutate_proof(p: Proof, seed: int, kind: str | None = None) -> Proof:
    """Deterministic corruption; the result may or may not still be a proof."""
    rng = random.Random(seed)
    kind = kind or rng.choice(MUTATIONS)
    lines = list(p.lines)
    if kind == "identity":
        return p
    if kind == "swap" and len(lines) < 2:
        kind = "symbol"
    refs = [k for k, ln in enumerate(lines) if not isinstance(ln.why, Axiom)]
    if kind == "retarget" and not refs:
        kind = "symbol"
    if kind == "swap":
        i, j = sorted(rng.sample(range(len(lines)), 2))
        lines[i], lines[j] = lines[j], lines[i]
    elif kind == "symbol":
        k = rng.randrange(len(lines))
        lines[k] = replace(lines[k], formula=_alter_symbol(lines[k].formula, rng))
    elif kind == "retarget":
        k = rng.choice(refs)
        why = lines[k].why
        target = rng.randrange(len(lines))
        if isinstance(why, MP):
            why = MP(target, why.major) if rng.random() < 0.5 else MP(why.minor, target)
        else:
            why = Gen(target, why.var)
        lines[k] = replace(lines[k], why=why)
    else:
        raise ValueError(f"unknown mutation {kind!r}")
    return Proof(tuple(lines), f"{p.name}~{kind}{seed}")


# -- corpus --------------------------------------------------------------------

def load_proof_file(path) -> Proof:
    path = Path(path)
    return load_proof_script(path.read_text(encoding="utf-8"), path.stem)


def corpus_files() -> list:
    root = resources.files("arithlab.corpus")
    return sorted((f for f in root.iterdir() if f.name.endswith(".paproof")), key=lambda f: f.name)


def load_corpus() -> list[Proof]:
    return [load_proof_script(f.read_text(encoding="utf-8"), f.name.removesuffix(".paproof"))
            for f in corpus_files()]


def is_refutation_shaped(p: Proof) -> bool:
    return isinstance(p.lines[-1].formula, Not)
