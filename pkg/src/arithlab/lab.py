"""Adjudication of the lemmas and theorems about Pf, Rf, Prf and Ref.

Each claim gets its own sampling stream, seeded from ``(seed, claim_id)``.
Claims that assert provability in PA are only evaluated at the level of
truth in the standard model, and the verdict says so.  A witness is stored
as JSON codes so it can be re-checked later by :func:`revalidate`.
"""
from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Iterator

from .axioms import PROPER_AXIOMS, Mode
from .codec import DEFAULT_TABLE, encode_expression, encode_proof
from .codes import CodeExpr, factored, from_json, materialize, seq, to_json
from .diagonal import PERTURBATIONS, SAMPLE_PHI, diagonalize, perturb, verify_fixed_point
from .kernel import is_refutation_shaped, load_corpus, mutate_proof
from .predicates import char_fn, pf, prf, ref, rf
from .proof import Proof, last_formula
from .search import bounded_proof_search
from .syntax import Formula, Implies, Not, parse_formula, print_formula, random_formula


class ClaimId(str, Enum):
    LEMMA_NOTBOTH = "LEMMA_NOTBOTH"
    LEMMA_CHARVALUES = "LEMMA_CHARVALUES"
    LEMMA_ANTIDIAG = "LEMMA_ANTIDIAG"
    LEMMA_REFAUT = "LEMMA_REFAUT"
    LEMMA_AUTPFAUTRF = "LEMMA_AUTPFAUTRF"
    LEMMA_CONSCOMP = "LEMMA_CONSCOMP"
    THM_DECIDABLE = "THM_DECIDABLE"
    THM_CONSISTENCY = "THM_CONSISTENCY"
    THM_COMPLETENESS = "THM_COMPLETENESS"
    THM_TPF_DECIDABLE = "THM_TPF_DECIDABLE"
    THM_DIAG_FAILS = "THM_DIAG_FAILS"


class Status(str, Enum):
    HOLDS_ON_SAMPLES = "HOLDS_ON_SAMPLES"
    COUNTEREXAMPLE_FOUND = "COUNTEREXAMPLE_FOUND"
    NOT_NUMBER_CHECKABLE = "NOT_NUMBER_CHECKABLE"
    DEPENDS_ON_FALSIFIED = "DEPENDS_ON_FALSIFIED"


STATEMENTS = {
    ClaimId.LEMMA_NOTBOTH: "for every n and formula a, not both Rf(n, a) and Pf(n, a)",
    ClaimId.LEMMA_CHARVALUES: "n proves a: C_Pf(n, a) = 0 and C_Rf(n, a) = 1; n refutes a: C_Rf = 0 and C_Pf = 1",
    ClaimId.LEMMA_ANTIDIAG: "(i) not both Pf and Rf; (ii) n refutes a: Rf iff not Pf; (iii) n proves a: Pf iff not Rf",
    ClaimId.LEMMA_REFAUT: "for every x, Prf(x) iff not Ref(x)",
    ClaimId.LEMMA_AUTPFAUTRF: "for every x, v, Pf(x, v) iff not Rf(x, v)",
    ClaimId.LEMMA_CONSCOMP: "m in T_PA iff m not in R_PA, for formula codes and implication codes",
    ClaimId.THM_DECIDABLE: "T_PA and R_PA are decidable",
    ClaimId.THM_CONSISTENCY: "no a with both a and ~a theorems",
    ClaimId.THM_COMPLETENESS: "for every a, a or ~a is a theorem",
    ClaimId.THM_TPF_DECIDABLE: "T_PF is decidable",
    ClaimId.THM_DIAG_FAILS: "diagonalization does not hold as a lemma in PA",
}

DEPENDS = {
    ClaimId.LEMMA_CONSCOMP: (ClaimId.LEMMA_REFAUT, ClaimId.LEMMA_AUTPFAUTRF),
    ClaimId.THM_CONSISTENCY: (ClaimId.LEMMA_REFAUT, ClaimId.LEMMA_AUTPFAUTRF),
    ClaimId.THM_COMPLETENESS: (ClaimId.LEMMA_REFAUT, ClaimId.LEMMA_AUTPFAUTRF),
    ClaimId.THM_TPF_DECIDABLE: (ClaimId.LEMMA_REFAUT, ClaimId.LEMMA_AUTPFAUTRF),
    ClaimId.THM_DIAG_FAILS: (ClaimId.LEMMA_AUTPFAUTRF,),
}

WRAPPER_NOTE = "the provability wrapper (derivability in PA) is not evaluated; the truth-level core is"
REF_NOTE = "Ref(x) is read as Prf(Neg(x)); the written definition leaves its v unbound"


@dataclass(frozen=True)
class ClaimVerdict:
    claim_id: ClaimId
    status: Status
    samples_tried: int
    witness: dict | None = None
    notes: str = ""

    def to_dict(self) -> dict:
        d = asdict(self)
        d["claim_id"] = self.claim_id.value
        d["status"] = self.status.value
        return d


# -- witness serialization -------------------------------------------------------

def code_record(x: CodeExpr, bit_limit: int = 4096) -> dict:
    value = materialize(x, bit_limit)
    rec: dict[str, Any] = {"json": to_json(x), "factored": factored(x)}
    if isinstance(value, int):
        rec["int"] = value
    return rec


def _decode_record(rec: dict) -> CodeExpr:
    return from_json(rec["json"])


# -- sample pools ----------------------------------------------------------------

@dataclass
class _Pools:
    corpus: list[Proof]
    mutants: list[Proof] = field(default_factory=list)

    @classmethod
    def build(cls, n_mutants_each: int = 4) -> "_Pools":
        corpus = load_corpus()
        mutants = [mutate_proof(p, k * 1000 + i) for k, p in enumerate(corpus) for i in range(n_mutants_each)]
        return cls(corpus, mutants)


_POOLS: _Pools | None = None


def _pools() -> _Pools:
    global _POOLS
    if _POOLS is None:
        _POOLS = _Pools.build()
    return _POOLS


def refaut_candidates() -> Iterator[CodeExpr]:
    """Smallest first: 2^3, the other one-symbol codes, corpus codes, mutants."""
    yield seq(3)
    for code in sorted(DEFAULT_TABLE.mapping.values()):
        if code != 3:
            yield seq(code)
    for k in (1, 2, 3):
        yield seq(13 + 8 * k)
    pools = _pools()
    for p in pools.corpus:
        yield encode_expression(last_formula(p))
    for p in pools.corpus:
        yield encode_proof(p)
    for p in pools.mutants:
        yield encode_proof(p)


def formula_candidates() -> Iterator[Formula]:
    yield parse_formula("(0 = 0)")
    yield from PROPER_AXIOMS.values()
    for p in _pools().corpus:
        yield last_formula(p)


# -- individual claims -----------------------------------------------------------

def _check_notboth(budget: int, rng: random.Random) -> ClaimVerdict:
    pools = _pools()
    corpus = [(encode_proof(p), last_formula(p)) for p in pools.corpus]
    mutants = [(encode_proof(p), last_formula(p)) for p in pools.mutants]
    pf_hits = rf_hits = 0
    for trial in range(budget):
        pick = rng.random()
        if pick < 0.15:
            # tiny codes, mostly not proofs at all
            n = seq(*[rng.choice((3, 5, 9, 11, 15, 17)) for _ in range(rng.randint(1, 3))])
            alpha = random_formula(rng, 2)
        else:
            n, last = rng.choice(corpus if pick < 0.65 else mutants)
            r = rng.random()
            if r < 0.4:
                alpha = last
            elif r < 0.8:
                alpha = last.body if isinstance(last, Not) else Not(last)
            else:
                alpha = random_formula(rng, 2)
        a = encode_expression(alpha)
        p_, r_ = pf(n, a), rf(n, a)
        pf_hits += p_
        rf_hits += r_
        if p_ and r_:
            return ClaimVerdict(ClaimId.LEMMA_NOTBOTH, Status.COUNTEREXAMPLE_FOUND, trial + 1, {
                "inputs": {"n": code_record(n), "alpha": code_record(a)},
                "formula": print_formula(alpha),
                "values": {"pf": True, "rf": True},
            }, "Pf and Rf both hold: the numbering is broken")
    status = Status.HOLDS_ON_SAMPLES if budget else Status.NOT_NUMBER_CHECKABLE
    return ClaimVerdict(ClaimId.LEMMA_NOTBOTH, status, budget,
                        notes=f"no violation; Pf held on {pf_hits} samples, Rf on {rf_hits}")


def _proofs_and_refutations(limit: int):
    items = []
    for p in _pools().corpus:
        last = last_formula(p)
        items.append(("proof", p, last))
        if is_refutation_shaped(p):
            items.append(("refutation", p, last.body))
    return items[:limit]


def _check_charvalues(budget: int, rng: random.Random) -> ClaimVerdict:
    items = _proofs_and_refutations(budget)
    for k, (kind, p, alpha) in enumerate(items):
        n, a = encode_proof(p), encode_expression(alpha)
        c_pf, c_rf = char_fn("Pf", (n, a)), char_fn("Rf", (n, a))
        want = (0, 1) if kind == "proof" else (1, 0)
        if (c_pf, c_rf) != want:
            return ClaimVerdict(ClaimId.LEMMA_CHARVALUES, Status.COUNTEREXAMPLE_FOUND, k + 1, {
                "inputs": {"n": code_record(n), "alpha": code_record(a)}, "kind": kind,
                "values": {"pf": c_pf == 0, "rf": c_rf == 0},
            }, f"expected (C_Pf, C_Rf) = {want}")
    if not items:
        return ClaimVerdict(ClaimId.LEMMA_CHARVALUES, Status.NOT_NUMBER_CHECKABLE, 0, notes=WRAPPER_NOTE)
    n_ref = sum(kind == "refutation" for kind, _, _ in items)
    return ClaimVerdict(ClaimId.LEMMA_CHARVALUES, Status.HOLDS_ON_SAMPLES, len(items),
                        notes=f"{len(items) - n_ref} proofs, {n_ref} refutations; {WRAPPER_NOTE}")


def _check_antidiag(budget: int, rng: random.Random) -> ClaimVerdict:
    items = _proofs_and_refutations(budget)
    for k, (kind, p, alpha) in enumerate(items):
        n, a = encode_proof(p), encode_expression(alpha)
        p_, r_ = pf(n, a), rf(n, a)
        ok = not (p_ and r_) and (p_ == (not r_))
        if not ok:
            return ClaimVerdict(ClaimId.LEMMA_ANTIDIAG, Status.COUNTEREXAMPLE_FOUND, k + 1, {
                "inputs": {"n": code_record(n), "alpha": code_record(a)}, "kind": kind,
                "values": {"pf": p_, "rf": r_},
            })
    if not items:
        return ClaimVerdict(ClaimId.LEMMA_ANTIDIAG, Status.NOT_NUMBER_CHECKABLE, 0, notes=WRAPPER_NOTE)
    return ClaimVerdict(ClaimId.LEMMA_ANTIDIAG, Status.HOLDS_ON_SAMPLES, len(items),
                        notes=f"(ii), (iii) only for n that proves or refutes a; {WRAPPER_NOTE}")


def _check_refaut(budget: int, rng: random.Random) -> ClaimVerdict:
    tried = 0
    for x in refaut_candidates():
        if tried >= budget:
            break
        tried += 1
        p_, r_ = prf(x), ref(x)
        if p_ == r_:
            return ClaimVerdict(ClaimId.LEMMA_REFAUT, Status.COUNTEREXAMPLE_FOUND, tried, {
                "inputs": {"x": code_record(x)},
                "values": {"prf": p_, "ref": r_},
            }, "Prf(x) and Ref(x) have the same truth value, so Prf(x) iff not Ref(x) fails; " + REF_NOTE)
    status = Status.HOLDS_ON_SAMPLES if tried else Status.NOT_NUMBER_CHECKABLE
    return ClaimVerdict(ClaimId.LEMMA_REFAUT, status, tried, notes=REF_NOTE)


def _check_autpfautrf(budget: int, rng: random.Random) -> ClaimVerdict:
    tried = 0
    vs = [encode_expression(f) for f in formula_candidates()]
    for x in refaut_candidates():
        for v in vs:
            if tried >= budget:
                return ClaimVerdict(ClaimId.LEMMA_AUTPFAUTRF,
                                    Status.HOLDS_ON_SAMPLES if tried else Status.NOT_NUMBER_CHECKABLE, tried)
            tried += 1
            p_, r_ = pf(x, v), rf(x, v)
            if p_ == r_:
                return ClaimVerdict(ClaimId.LEMMA_AUTPFAUTRF, Status.COUNTEREXAMPLE_FOUND, tried, {
                    "inputs": {"x": code_record(x), "v": code_record(v)},
                    "values": {"pf": p_, "rf": r_},
                }, "Pf(x, v) and Rf(x, v) have the same truth value, so Pf iff not Rf fails")
    return ClaimVerdict(ClaimId.LEMMA_AUTPFAUTRF, Status.HOLDS_ON_SAMPLES, tried)


def _herbrand(thetas: list[Formula], concl: Formula) -> Formula:
    out = concl
    for t in reversed(thetas):
        out = Implies(t, out)
    return out


def _conscomp_readings(budget: int, rng: random.Random) -> dict:
    """Evaluate the per-code content of conscomp under each reading of n."""
    pools = _pools()
    half = max(1, budget // 3)
    readings: dict[str, dict] = {}

    # (i) m a formula code, each x tested as in autPfautRf
    viol = tried = 0
    for _ in range(half):
        p = rng.choice(pools.corpus + pools.mutants)
        alpha = last_formula(rng.choice(pools.corpus))
        x, m = encode_proof(p), encode_expression(alpha)
        tried += 1
        viol += pf(x, m) == rf(x, m)
    readings["i_formula_codes"] = {"samples": tried, "violations": viol}

    # (ii) n the code of an implication chain, read as a formula code
    viol = tried = 0
    for _ in range(half):
        thetas = [random_formula(rng, 1) for _ in range(rng.randint(1, 3))]
        n = encode_expression(_herbrand(thetas, random_formula(rng, 1)))
        tried += 1
        viol += prf(n) == ref(n)
    readings["ii_formula_codes"] = {"samples": tried, "violations": viol}

    # (ii) n read as the code of a proof
    viol = tried = 0
    for _ in range(half):
        n = encode_proof(rng.choice(pools.corpus + pools.mutants))
        tried += 1
        viol += prf(n) == ref(n)
    readings["ii_proof_codes"] = {"samples": tried, "violations": viol}
    return readings


def _check_conscomp(budget: int, rng: random.Random) -> ClaimVerdict:
    if budget <= 0:
        return ClaimVerdict(ClaimId.LEMMA_CONSCOMP, Status.NOT_NUMBER_CHECKABLE, 0)
    readings = _conscomp_readings(budget, rng)
    tried = sum(r["samples"] for r in readings.values())
    parts = ", ".join(f"{k}: {r['violations']}/{r['samples']} violate the per-code equivalence"
                      for k, r in readings.items())
    return ClaimVerdict(ClaimId.LEMMA_CONSCOMP, Status.NOT_NUMBER_CHECKABLE, tried, {"readings": readings},
                        "membership in T_PA / R_PA is theoremhood and is not evaluated; " + parts + "; " + REF_NOTE)


SEARCH_PROBES = (("((x1 + 0) = x1)", 1), ("((all x1) ((x1 + 0) = x1))", 2), ("(0 = 0')", 3), ("(~ (0 = 0'))", 3))


def _check_decidable(budget: int, rng: random.Random) -> ClaimVerdict:
    if budget <= 0:
        return ClaimVerdict(ClaimId.THM_DECIDABLE, Status.NOT_NUMBER_CHECKABLE, 0)
    results = []
    for text, bound in SEARCH_PROBES[:budget]:
        r = bounded_proof_search(text, bound)
        results.append(f"{text} within {bound}: {'found, ' + str(len(r)) + ' line(s)' if r else str(r)}")
    return ClaimVerdict(ClaimId.THM_DECIDABLE, Status.NOT_NUMBER_CHECKABLE, len(results), None,
                        "Pf and Rf are decidable relations between a proof code and a formula code; "
                        "theoremhood asks whether some proof exists, which bounded search only "
                        "semi-decides. " + "; ".join(results))


def _check_consistency(budget: int, rng: random.Random) -> ClaimVerdict:
    if budget <= 0:
        return ClaimVerdict(ClaimId.THM_CONSISTENCY, Status.NOT_NUMBER_CHECKABLE, 0)
    lasts = {last_formula(p) for p in _pools().corpus}
    both = sorted(print_formula(f) for f in lasts if Not(f) in lasts)
    return ClaimVerdict(ClaimId.THM_CONSISTENCY, Status.NOT_NUMBER_CHECKABLE, len(lasts), None,
                        f"corpus proves both a and ~a for {len(both)} formulas; consistency is a claim "
                        "about all proofs and is not decided here")


def _check_completeness(budget: int, rng: random.Random) -> ClaimVerdict:
    if budget <= 0:
        return ClaimVerdict(ClaimId.THM_COMPLETENESS, Status.NOT_NUMBER_CHECKABLE, 0)
    alpha = parse_formula("(x1 = 0)")
    a, na = bounded_proof_search(alpha, 3), bounded_proof_search(Not(alpha), 3)
    return ClaimVerdict(ClaimId.THM_COMPLETENESS, Status.NOT_NUMBER_CHECKABLE, 2, None,
                        f"bounded search within 3 lines: (x1 = 0) {a or 'exhausted'}, "
                        f"(~ (x1 = 0)) {na or 'exhausted'}; absence of a proof of either is not decidable")


def _check_tpf(budget: int, rng: random.Random) -> ClaimVerdict:
    if budget <= 0:
        return ClaimVerdict(ClaimId.THM_TPF_DECIDABLE, Status.NOT_NUMBER_CHECKABLE, 0)
    s5 = PROPER_AXIOMS["S5"]
    n, a = encode_proof([s5]), encode_expression(s5)
    in_pa, in_pf = pf(n, a, Mode.PA), pf(n, a, Mode.PF)
    found = bounded_proof_search(s5, 3, Mode.PF)
    witness = {"inputs": {"n": code_record(n), "alpha": code_record(a)},
               "values": {"pf_PA": in_pa, "pf_PF": in_pf}}
    return ClaimVerdict(ClaimId.THM_TPF_DECIDABLE, Status.NOT_NUMBER_CHECKABLE, 2, witness,
                        f"one-line proof of {print_formula(s5)} is a proof in PA ({in_pa}) but not in "
                        f"PF ({in_pf}); PF search within 3 lines: {found or 'exhausted'}; "
                        "so proof codes of PA and PF differ, and the step from T_PA to T_PF does not go through")


def _check_diag(budget: int, rng: random.Random) -> ClaimVerdict:
    if budget <= 0:
        return ClaimVerdict(ClaimId.THM_DIAG_FAILS, Status.NOT_NUMBER_CHECKABLE, 0)
    rows = []
    for name, phi in SAMPLE_PHI.items():
        d = diagonalize(phi)
        broken = [k for k in PERTURBATIONS if not verify_fixed_point(perturb(d, k))]
        rows.append(f"{name}: fixed point {d.fixed_point_ok}, perturbations rejected {len(broken)}/3")
    return ClaimVerdict(ClaimId.THM_DIAG_FAILS, Status.NOT_NUMBER_CHECKABLE, len(rows), None,
                        "the formulas Pf and Rf are represented by schematic stand-ins; the sb identity "
                        "holds for every phi tried; the closing contradiction is a provability argument "
                        "built on LEMMA_NOTBOTH, LEMMA_ANTIDIAG (iii) and LEMMA_AUTPFAUTRF. " + "; ".join(rows))


CHECKS = {
    ClaimId.LEMMA_NOTBOTH: _check_notboth,
    ClaimId.LEMMA_CHARVALUES: _check_charvalues,
    ClaimId.LEMMA_ANTIDIAG: _check_antidiag,
    ClaimId.LEMMA_REFAUT: _check_refaut,
    ClaimId.LEMMA_AUTPFAUTRF: _check_autpfautrf,
    ClaimId.LEMMA_CONSCOMP: _check_conscomp,
    ClaimId.THM_DECIDABLE: _check_decidable,
    ClaimId.THM_CONSISTENCY: _check_consistency,
    ClaimId.THM_COMPLETENESS: _check_completeness,
    ClaimId.THM_TPF_DECIDABLE: _check_tpf,
    ClaimId.THM_DIAG_FAILS: _check_diag,
}


def _raw(claim_id: ClaimId, budget: int, seed: int) -> ClaimVerdict:
    rng = random.Random(f"{seed}:{claim_id.value}")
    return CHECKS[claim_id](max(0, budget), rng)


def _with_dependencies(v: ClaimVerdict, falsified: set[ClaimId]) -> ClaimVerdict:
    bad = [d for d in DEPENDS.get(v.claim_id, ()) if d in falsified]
    if not bad or v.status is Status.COUNTEREXAMPLE_FOUND:
        return v
    note = "rests on falsified " + ", ".join(d.value for d in bad)
    return ClaimVerdict(v.claim_id, Status.DEPENDS_ON_FALSIFIED, v.samples_tried, v.witness,
                        note + ("; " + v.notes if v.notes else ""))


def check_claim(claim_id, budget: int = 1000, seed: int = 0) -> ClaimVerdict:
    try:
        cid = ClaimId(claim_id.upper() if isinstance(claim_id, str) else claim_id)
    except ValueError:
        raise KeyError(f"unknown claim {claim_id!r}") from None
    v = _raw(cid, budget, seed)
    deps = DEPENDS.get(cid, ())
    falsified = {d for d in deps if _raw(d, budget, seed).status is Status.COUNTEREXAMPLE_FOUND}
    return _with_dependencies(v, falsified)


def run_lab(budget: int = 1000, seed: int = 0) -> list[ClaimVerdict]:
    raw = [_raw(cid, budget, seed) for cid in ClaimId]
    falsified = {v.claim_id for v in raw if v.status is Status.COUNTEREXAMPLE_FOUND}
    return [_with_dependencies(v, falsified) for v in raw]


def report(budget: int = 1000, seed: int = 0) -> str:
    """The JSON report: one record per claim, in claim order."""
    verdicts = run_lab(budget, seed)
    doc = {"budget": budget, "seed": seed,
           "statements": {k.value: s for k, s in STATEMENTS.items()},
           "verdicts": [v.to_dict() for v in verdicts]}
    return json.dumps(doc, sort_keys=True, indent=2)


# -- re-checking witnesses -------------------------------------------------------

def revalidate(v: ClaimVerdict) -> bool:
    """Re-run the predicates on the stored inputs and compare the values."""
    if v.status is not Status.COUNTEREXAMPLE_FOUND or not v.witness:
        return False
    ins = {k: _decode_record(r) for k, r in v.witness["inputs"].items()}
    want = v.witness["values"]
    cid = v.claim_id
    if cid is ClaimId.LEMMA_REFAUT:
        got = {"prf": prf(ins["x"]), "ref": ref(ins["x"])}
        return got == want and got["prf"] == got["ref"]
    if cid is ClaimId.LEMMA_AUTPFAUTRF:
        got = {"pf": pf(ins["x"], ins["v"]), "rf": rf(ins["x"], ins["v"])}
        return got == want and got["pf"] == got["rf"]
    if cid is ClaimId.LEMMA_NOTBOTH:
        got = {"pf": pf(ins["n"], ins["alpha"]), "rf": rf(ins["n"], ins["alpha"])}
        return got == want and got["pf"] and got["rf"]
    if cid in (ClaimId.LEMMA_CHARVALUES, ClaimId.LEMMA_ANTIDIAG):
        got = {"pf": pf(ins["n"], ins["alpha"]), "rf": rf(ins["n"], ins["alpha"])}
        return got == want
    return False


# -- replay of the incompleteness steps ------------------------------------------

EVAL_TRUE, EVAL_FALSE, NOT_EVALUATED = "evaluated-true", "evaluated-false", "provability-claim-not-evaluated"


class ReplayError(ValueError):
    pass


def _mark(b: bool) -> str:
    return EVAL_TRUE if b else EVAL_FALSE


def replay_incompleteness(delta_like, p: Proof, mode: Mode = Mode.PA) -> dict:
    """Walk the argument for a sentence and a proof of it or of its negation."""
    if isinstance(delta_like, str):
        delta_like = parse_formula(delta_like)
    last = last_formula(p)
    if last == delta_like:
        case = "proves"
    elif last == Not(delta_like):
        case = "refutes"
    else:
        raise ReplayError(f"the proof ends in {print_formula(last)}, which is neither the sentence nor its negation")
    r, q = encode_proof(p), encode_expression(delta_like)
    is_proof = prf(r, mode)
    pf_, rf_ = pf(r, q, mode), rf(r, q, mode)
    c_pf, c_rf = char_fn("Pf", (r, q), mode), char_fn("Rf", (r, q), mode)
    if case == "proves":
        steps = [
            ("assume the sentence is a theorem; r codes the given proof", _mark(is_proof)),
            ("Pf(r, q)", _mark(pf_)),
            ("Rf(r, q)", _mark(rf_)),
            ("C_Pf(r, q) = 0", _mark(c_pf == 0)),
            ("C_Rf(r, q) = 1", _mark(c_rf == 1)),
            ("PA derives Pf(r, q) by representability", NOT_EVALUATED),
            ("PA derives the sentence, so by the fixed point PA derives (all x) ~Pf(x, q)", NOT_EVALUATED),
            ("hence PA derives ~Pf(r, q) and is inconsistent", NOT_EVALUATED),
        ]
    else:
        steps = [
            ("assume the negation is a theorem; r codes the given refutation", _mark(is_proof)),
            ("Pf(r, q)", _mark(pf_)),
            ("Rf(r, q)", _mark(rf_)),
            ("C_Rf(r, q) = 0", _mark(c_rf == 0)),
            ("C_Pf(r, q) = 1", _mark(c_pf == 1)),
            ("PA derives Rf(r, q) by representability", NOT_EVALUATED),
            ("by the fixed point PA derives ~(all x) ~Pf(x, q), i.e. some x proves q", NOT_EVALUATED),
            ("with consistency this needs omega-consistency to close", NOT_EVALUATED),
        ]
    return {
        "case": case,
        "sentence": print_formula(delta_like),
        "r": code_record(r),
        "q": code_record(q),
        "prf_r": is_proof,
        "pf": pf_,
        "rf": rf_,
        "C_Pf": c_pf,
        "C_Rf": c_rf,
        "steps": [{"step": s, "status": st} for s, st in steps],
    }
