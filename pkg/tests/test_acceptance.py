"""The nine acceptance criteria, each with its time limit.

conftest prints one PASS/FAIL line per test at the end of the run.
"""
import random
import time

import oracles
from arithlab.axioms import Mode
from arithlab.codec import TOY_TABLE, decode, decode_proof, encode, var_code
from arithlab.codes import Sym, code_equal, from_int, materialize
from arithlab.diagonal import PERTURBATIONS, SAMPLE_PHI, diagonalize, perturb, verify_fixed_point
from arithlab.kernel import check_proof, load_corpus, mutate_proof
from arithlab.lab import ClaimId, Status, check_claim, report, revalidate, run_lab
from arithlab.predicates import char_fn, gen, mp, neg_code, pf, prf
from arithlab.proof import last_formula
from arithlab.search import Exhausted, bounded_proof_search
from arithlab.syntax import ForAll, Implies, Not, parse_formula, random_formula, random_toy_formula


def _toy_int(f):
    return materialize(encode(f, TOY_TABLE))


def test_criterion_1_numbering_layout():
    t0 = time.perf_counter()
    rng = random.Random(1)
    for _ in range(20):
        a = random_toy_formula(rng, 3)
        n = _toy_int(Not(a))
        assert n == oracles.neg_int(_toy_int(a))
        assert code_equal(neg_code(encode(a, TOY_TABLE)), encode(Not(a), TOY_TABLE))

    for _ in range(100):
        # MP over toy integers
        a, b = random_toy_formula(rng, 2), random_toy_formula(rng, 2)
        x, z = _toy_int(a), _toy_int(b)
        y = _toy_int(Implies(a, b))
        assert y == oracles.star(oracles.star(oracles.star(oracles.star(8, x), 2 ** 11), z), 32)
        assert mp(encode(a, TOY_TABLE), encode(Implies(a, b), TOY_TABLE), encode(b, TOY_TABLE), TOY_TABLE)
        # Gen over the full table (the toy calculus has no variables)
        f = random_formula(rng, 2, 3)
        k = rng.randint(1, 3)
        x = materialize(encode(f))
        v = 2 ** var_code(k)
        y = materialize(encode(ForAll(k, f)))
        want = oracles.star(oracles.star(oracles.star(oracles.star(oracles.star(
            oracles.star(8, 8), 2 ** 13), v), 32), x), 32)
        assert y == want
        assert gen(encode(f), encode(ForAll(k, f)))
    assert time.perf_counter() - t0 < 10


def _toy_codes_upto(limit):
    """Every code with value <= limit whose symbols are all toy symbols."""
    toy = set(TOY_TABLE.mapping.values())
    out = [(c, Sym(c)) for c in sorted(toy)]

    def leaves_ok(x):
        if isinstance(x, Sym):
            return x.code in toy
        return all(leaves_ok(i) for i in x.items)

    for n in range(2, limit + 1, 2):
        c = from_int(n)
        if c is not None and leaves_ok(c):
            out.append((n, c))
    return out


def test_criterion_2_codec_roundtrip():
    t0 = time.perf_counter()
    rng = random.Random(2)
    for _ in range(200):
        f = random_formula(rng, 3, 4)
        assert decode(encode(f)) == f
    corpus = load_corpus()[:50]
    assert len(corpus) == 50
    for p in corpus:
        assert decode_proof(encode(p)).formulas == p.formulas

    pairs = _toy_codes_upto(10 ** 6)
    assert len(pairs) > 600
    for n, c in pairs:
        assert materialize(c) == n
    for i, (n, c) in enumerate(pairs):
        for m, d in pairs[i:]:
            assert code_equal(c, d) == (n == m)
    assert time.perf_counter() - t0 < 30


def test_criterion_3_bridge():
    t0 = time.perf_counter()
    corpus = load_corpus()
    assert len(corpus) >= 50
    mutants = [mutate_proof(p, 9000 + 7 * k + i) for k, p in enumerate(corpus) for i in range(4)]
    assert len(mutants) >= 200
    rejected = 0
    for p in corpus + mutants:
        structural = check_proof(p).accepted
        x = encode(p)
        assert prf(x) == structural
        assert pf(x, encode(last_formula(p))) == structural
        rejected += not structural
    assert all(check_proof(p) for p in corpus)
    assert rejected > 50  # the mutants are not all harmless
    assert time.perf_counter() - t0 < 60


def test_criterion_4_not_both():
    t0 = time.perf_counter()
    v = check_claim(ClaimId.LEMMA_NOTBOTH, budget=10_000, seed=4)
    assert v.samples_tried == 10_000
    assert v.status is Status.HOLDS_ON_SAMPLES
    assert time.perf_counter() - t0 < 60


def test_criterion_5_char_values():
    corpus = load_corpus()
    proofs = refutations = 0
    for p in corpus:
        n, last = encode(p), last_formula(p)
        a = encode(last)
        assert (char_fn("Pf", (n, a)), char_fn("Rf", (n, a))) == (0, 1)
        proofs += 1
        if isinstance(last, Not):
            b = encode(last.body)
            assert (char_fn("Pf", (n, b)), char_fn("Rf", (n, b))) == (1, 0)
            refutations += 1
    assert proofs >= 50 and refutations >= 10
    for cid in (ClaimId.LEMMA_CHARVALUES, ClaimId.LEMMA_ANTIDIAG):
        assert check_claim(cid, budget=1000).status is Status.HOLDS_ON_SAMPLES


def test_criterion_6_falsification():
    t0 = time.perf_counter()
    verdicts = {v.claim_id: v for v in run_lab(budget=100, seed=0)}
    refaut = verdicts[ClaimId.LEMMA_REFAUT]
    assert refaut.status is Status.COUNTEREXAMPLE_FOUND and refaut.samples_tried <= 100
    assert refaut.witness["inputs"]["x"]["int"] == 2 ** 3
    aut = verdicts[ClaimId.LEMMA_AUTPFAUTRF]
    assert aut.status is Status.COUNTEREXAMPLE_FOUND and aut.samples_tried <= 100
    assert aut.witness["inputs"]["x"]["int"] == 2 ** 3
    assert aut.witness["inputs"]["v"]["int"] == materialize(encode(parse_formula("(0 = 0)")))
    assert revalidate(refaut) and revalidate(aut)
    for cid in (ClaimId.LEMMA_CONSCOMP, ClaimId.THM_CONSISTENCY, ClaimId.THM_COMPLETENESS,
                ClaimId.THM_TPF_DECIDABLE):
        assert verdicts[cid].status is Status.DEPENDS_ON_FALSIFIED, cid
    assert report(100, 3) == report(100, 3)
    assert time.perf_counter() - t0 < 10


def test_criterion_7_diagonal_fixed_point():
    assert len(SAMPLE_PHI) >= 3
    for phi in SAMPLE_PHI.values():
        t0 = time.perf_counter()
        d = diagonalize(phi)
        assert d.fixed_point_ok and verify_fixed_point(d)
        for kind in PERTURBATIONS:
            assert not verify_fixed_point(perturb(d, kind)), kind
        assert time.perf_counter() - t0 < 5


def test_criterion_8_toy_oracle():
    t0 = time.perf_counter()
    positives = []
    for x in range(1, 10 ** 4 + 1):
        code = from_int(x)
        structural = False
        if code is not None and prf(code, Mode.TOY):
            structural = True
        # the same question answered by decoding and checking the proof object
        try:
            checked = bool(check_proof(decode_proof(code, TOY_TABLE), Mode.TOY)) if code is not None else False
        except ValueError:
            checked = False
        literal = oracles.toy_prf(x)
        assert structural == literal == checked, x
        if literal:
            positives.append(x)
    assert 4 in positives
    assert positives == [4, 36, 900]
    assert time.perf_counter() - t0 < 120


def test_criterion_9_bounded_search():
    t0 = time.perf_counter()
    one = bounded_proof_search("((x1 + 0) = x1)", 1)
    assert one and len(one) == 1 and check_proof(one, strict=True)
    two = bounded_proof_search("((all x1) ((x1 + 0) = x1))", 2)
    assert two and len(two) == 2 and check_proof(two, strict=True)
    none = bounded_proof_search("(0 = 0')", 3)
    assert isinstance(none, Exhausted) and str(none) == "exhausted(3)"
    # deterministic
    assert bounded_proof_search("((all x1) ((x1 + 0) = x1))", 2) == two
    assert time.perf_counter() - t0 < 60
