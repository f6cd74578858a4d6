"""Bounded proof search.

Iterative deepening on the number of lines.  Backward from the goal: an
axiom closes it in one line; a universal goal may come by Gen from its
body; anything else by MP, where the antecedent is drawn from a finite
candidate set.  That set holds every antecedent that makes ``(A -> goal)``
an axiom instance (for A4 the anti-substitutions by subterms of the goal),
``(B -> C)`` for pieces C of a goal ``(B -> D)`` (the A2 route), and the
proper subformulas of the goal.  So "exhausted" means this
candidate space has no proof within the bound, not that no proof exists.

Finding a proof is only ever semi-decidable; the decidable objects are
the proof relations in :mod:`arithlab.predicates`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Union

from .axioms import PROPER_AXIOMS, Mode, axiom_kind, in_pa_language, is_a4
from .proof import Axiom, Line, Proof, infer_justification
from .syntax import (
    Equals, ForAll, Formula, Implies, Not, Succ, Term, Var, Zero, all_vars, free_vars, parse_formula,
    size, subformulas, substitute, subterms,
)


@dataclass(frozen=True)
class Exhausted:
    bound: int

    def __bool__(self):
        return False

    def __str__(self):
        return f"exhausted({self.bound})"


def _replace_term(e, old: Term, new: Term, which: frozenset | None, counter: list):
    """Replace occurrences of old by new: all of them, or those numbered in which."""
    if isinstance(e, Equals):
        return Equals(_replace_term(e.left, old, new, which, counter),
                      _replace_term(e.right, old, new, which, counter))
    if isinstance(e, Not):
        return Not(_replace_term(e.body, old, new, which, counter))
    if isinstance(e, Implies):
        return Implies(_replace_term(e.left, old, new, which, counter),
                       _replace_term(e.right, old, new, which, counter))
    if isinstance(e, ForAll):
        return ForAll(e.var, _replace_term(e.body, old, new, which, counter))
    if e == old:
        k = counter[0]
        counter[0] += 1
        return new if which is None or k in which else e
    if isinstance(e, Succ):
        return Succ(_replace_term(e.arg, old, new, which, counter))
    if hasattr(e, "left"):
        return type(e)(_replace_term(e.left, old, new, which, counter),
                       _replace_term(e.right, old, new, which, counter))
    return e


MAX_SUBSET_OCCURRENCES = 5


def _occurrence_choices(n: int):
    if n <= MAX_SUBSET_OCCURRENCES:
        for r in range(1, n + 1):
            yield from (frozenset(c) for c in combinations(range(n), r))
    else:
        yield None
        yield from (frozenset({k}) for k in range(n))


def _a4_antecedents(goal: Formula) -> list[Formula]:
    """All (all x) B with B[x := t] = goal, t a subterm of goal."""
    names = sorted(all_vars(goal))
    xs = names + [max(names, default=0) + 1]
    out = [ForAll(x, goal) for x in xs]
    for t in dict.fromkeys(subterms(goal)):
        for x in xs:
            if t == Var(x):
                continue
            n = [0]
            _replace_term(goal, t, Var(x), None, n)
            for which in _occurrence_choices(n[0]):
                out.append(ForAll(x, _replace_term(goal, t, Var(x), which, [0])))
    return [a for a in out if is_a4(Implies(a, goal))]


def _schema_antecedents(goal: Formula) -> list[Formula]:
    out: list[Formula] = []
    if isinstance(goal, Implies):
        c, b = goal.left, goal.right
        out.append(b)  # A1: B -> (C -> B)
        if isinstance(c, Implies) and isinstance(b, Implies) and c.left == b.left:
            out.append(Implies(c.left, Implies(c.right, b.right)))  # A2
        # goal = (B -> D) as the tail of an A2 instance needs (B -> C) first;
        # C is unconstrained, so try the pieces of the goal
        for mid in (goal, *subformulas(goal)):
            out.append(Implies(c, mid))
        if isinstance(c, Implies) and isinstance(c.left, Not) and c.left.body == b:
            out.append(Implies(c.left, Not(c.right)))  # A3
        if isinstance(b, ForAll) and b.var not in free_vars(c):
            out.append(ForAll(b.var, Implies(c, b.body)))  # A5
        if isinstance(b, Implies) and isinstance(b.left, ForAll) and isinstance(b.right, ForAll):
            body = b.right.body
            try:
                out.append(substitute(body, b.right.var, Zero()))  # S9
            except ValueError:
                pass
    for ax in PROPER_AXIOMS.values():
        if isinstance(ax, Implies) and ax.right == goal:
            out.append(ax.left)
    out.extend(_a4_antecedents(goal))
    return out


def antecedent_candidates(goal: Formula) -> list[Formula]:
    cands = _schema_antecedents(goal)
    cands.extend(g for g in subformulas(goal) if g != goal)
    seen = dict.fromkeys(c for c in cands if in_pa_language(c))
    return sorted(seen, key=size)


def _merge(*parts: tuple[Formula, ...]) -> tuple[Formula, ...]:
    return tuple(dict.fromkeys(f for p in parts for f in p))


class _Searcher:
    def __init__(self, mode: Mode):
        self.mode = mode
        self.prove = lru_cache(maxsize=None)(self._prove)

    def _prove(self, goal: Formula, budget: int) -> tuple[Formula, ...] | None:
        """Lines (as formulas) of a proof of goal with at most budget lines."""
        if budget < 1:
            return None
        if axiom_kind(goal, self.mode):
            return (goal,)
        if budget < 2:
            return None
        if isinstance(goal, ForAll):
            sub = self.prove(goal.body, budget - 1)
            if sub is not None:
                return _merge(sub, (goal,))
        if budget < 3:
            return None
        for a in antecedent_candidates(goal):
            imp = Implies(a, goal)
            for la in range(1, budget - 1):
                pa = self.prove(a, la)
                if pa is None:
                    continue
                pi = self.prove(imp, budget - 1 - len(pa))
                if pi is not None:
                    return _merge(pa, pi, (goal,))
                break
        return None


def _as_proof(formulas: tuple[Formula, ...], mode: Mode, name: str) -> Proof:
    lines = []
    for k, f in enumerate(formulas):
        why = Axiom() if axiom_kind(f, mode) else infer_justification(formulas, k)
        assert why is not None, "search produced an unjustified line"
        lines.append(Line(f, why))
    return Proof(tuple(lines), name)


def bounded_proof_search(target: Union[Formula, str], size_bound: int,
                         mode: Mode = Mode.PA) -> Union[Proof, Exhausted]:
    """First proof of target with at most size_bound lines, else Exhausted."""
    if size_bound < 1:
        raise ValueError("size_bound must be at least 1")
    if isinstance(target, str):
        target = parse_formula(target)
    s = _Searcher(Mode(mode))
    for n in range(1, size_bound + 1):
        found = s.prove(target, n)
        if found is not None:
            return _as_proof(found, Mode(mode), f"search{n}")
    return Exhausted(size_bound)
