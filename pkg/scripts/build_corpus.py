#!/usr/bin/env python3
"""Regenerate the .paproof corpus under src/arithlab/corpus/.

Every proof is checked before it is written; the script refuses to write
anything the kernel rejects.
"""
import argparse
from pathlib import Path

from arithlab.axioms import PROPER_AXIOMS, Mode, axiom_kind
from arithlab.kernel import check_proof
from arithlab.proof import MP, Axiom, Gen, Line, Proof, dump_proof_script
from arithlab.syntax import ForAll, Implies, Not, Succ, Var, Zero, numeral, parse_formula, substitute

OUT = Path(__file__).resolve().parents[1] / "src" / "arithlab" / "corpus"


class Builder:
    def __init__(self):
        self.lines: list[Line] = []

    def _add(self, f, why) -> int:
        self.lines.append(Line(f, why))
        return len(self.lines) - 1

    def ax(self, f) -> int:
        if isinstance(f, str):
            f = parse_formula(f)
        return self._add(f, Axiom())

    def mp(self, i: int, j: int) -> int:
        major = self.lines[j].formula
        assert isinstance(major, Implies) and major.left == self.lines[i].formula
        return self._add(major.right, MP(i, j))

    def gen(self, i: int, v: int) -> int:
        return self._add(ForAll(v, self.lines[i].formula), Gen(i, v))

    def instantiate(self, i: int, v: int, t) -> int:
        """From line i derive its instance at x_v := t (Gen, A4, MP)."""
        body = self.lines[i].formula
        g = self.gen(i, v)
        a4 = self.ax(Implies(ForAll(v, body), substitute(body, v, t)))
        return self.mp(g, a4)

    def weaken(self, i: int, c) -> int:
        """From B derive (C -> B) by A1."""
        if isinstance(c, str):
            c = parse_formula(c)
        b = self.lines[i].formula
        a1 = self.ax(Implies(b, Implies(c, b)))
        return self.mp(i, a1)

    def proof(self, name: str) -> Proof:
        return Proof(tuple(self.lines), name)


def single(name, text):
    b = Builder()
    b.ax(text)
    return b.proof(name)


def identity_proof(name, text):
    """The five-line proof of (B -> B) from A1, A2."""
    bf = parse_formula(text)
    bb = Implies(bf, bf)
    b = Builder()
    l1 = b.ax(Implies(bf, Implies(bb, bf)))
    l2 = b.ax(Implies(Implies(bf, Implies(bb, bf)), Implies(Implies(bf, bb), bb)))
    l3 = b.mp(l1, l2)
    l4 = b.ax(Implies(bf, bb))
    b.mp(l4, l3)
    return b.proof(name)


def build() -> list[Proof]:
    proofs = []
    # proper axioms on their own
    for name, f in PROPER_AXIOMS.items():
        b = Builder()
        b.ax(f)
        proofs.append(b.proof(f"ax_{name.lower()}"))
    # induction instances
    for k, body in enumerate(["(x1 = x1)", "((0 + x1) = x1)", "((x1 . 0) = 0)"], 1):
        f = parse_formula(body)
        s9 = Implies(substitute(f, 1, Zero()),
                     Implies(ForAll(1, Implies(f, substitute(f, 1, Succ(Var(1))))), ForAll(1, f)))
        b = Builder()
        b.ax(s9)
        proofs.append(b.proof(f"ax_s9_{k}"))
    # logical schema instances
    for name, text in [
        ("a1_1", "((0 = 0) -> ((x1 = x2) -> (0 = 0)))"),
        ("a1_2", "((x1 = x1) -> ((~ (x2 = 0)) -> (x1 = x1)))"),
        ("a1_3", "(((all x1) (x1 = x1)) -> ((0 = 0) -> ((all x1) (x1 = x1))))"),
        ("a2_1", "(((0 = 0) -> ((x1 = x1) -> (0 = 0'))) -> (((0 = 0) -> (x1 = x1)) -> ((0 = 0) -> (0 = 0'))))"),
        ("a2_2", "((x1 = x2) -> ((x2 = x1) -> (x1 = x2))) -> (((x1 = x2) -> (x2 = x1)) -> ((x1 = x2) -> (x1 = x2)))"),
        ("a3_1", "(((~ (0 = 0)) -> (~ (x1 = x1))) -> (((~ (0 = 0)) -> (x1 = x1)) -> (0 = 0)))"),
        ("a3_2", "(((~ (x1 = 0')) -> (~ (0 = 0))) -> (((~ (x1 = 0')) -> (0 = 0)) -> (x1 = 0')))"),
        ("a4_1", "(((all x1) ((x1 + 0) = x1)) -> ((0 + 0) = 0))"),
        ("a4_2", "(((all x1) (~ (0 = x1'))) -> (~ (0 = x2'')))"),
        ("a4_3", "(((all x2) (x1 = x1)) -> (x1 = x1))"),
        ("a5_1", "(((all x1) ((0 = 0) -> (x1 = x1))) -> ((0 = 0) -> ((all x1) (x1 = x1))))"),
        ("a5_2", "(((all x3) ((x1 = x2) -> (x3 = x3))) -> ((x1 = x2) -> ((all x3) (x3 = x3))))"),
    ]:
        if name == "a2_2":
            text = f"({text})"
        proofs.append(single(f"ax_{name}", text))
    # generalization chains
    for name, ax_name, vars_ in [
        ("gen_s5_x1", "S5", [1]),
        ("gen_s7_x1", "S7", [1]),
        ("gen_s6_x2_x1", "S6", [2, 1]),
        ("gen_s1_x3_x2_x1", "S1", [3, 2, 1]),
        ("gen_s3_x1", "S3", [1]),
        ("gen_s5_x2", "S5", [2]),
    ]:
        b = Builder()
        i = b.ax(PROPER_AXIOMS[ax_name])
        for v in vars_:
            i = b.gen(i, v)
        proofs.append(b.proof(name))
    # (B -> B) from A1 and A2
    for k, text in enumerate(["(0 = 0)", "(x1 = x2)", "(~ (x1 = 0))", "((all x1) (x1 = x1))"], 1):
        proofs.append(identity_proof(f"mp_identity_{k}", text))
    # weakening of axioms by A1
    for k, (ax_name, c) in enumerate([("S5", "(0 = 0)"), ("S7", "(x2 = x3)"),
                                      ("S3", "(x1 = x1)"), ("S6", "(~ (0 = 0))")], 1):
        b = Builder()
        b.weaken(b.ax(PROPER_AXIOMS[ax_name]), c)
        proofs.append(b.proof(f"mp_weaken_{k}"))
    # instances of proper axioms at numerals
    for name, ax_name, v, n in [
        ("inst_s5_0", "S5", 1, 0), ("inst_s5_2", "S5", 1, 2), ("inst_s7_1", "S7", 1, 1),
        ("inst_s6_x2_0", "S6", 2, 0),
    ]:
        b = Builder()
        b.instantiate(b.ax(PROPER_AXIOMS[ax_name]), v, numeral(n))
        proofs.append(b.proof(name))
    # (0 = 0) -> (0' = 0') from S2 by two instantiations
    b = Builder()
    i = b.ax(PROPER_AXIOMS["S2"])
    i = b.gen(i, 2)
    i = b.instantiate(i, 1, Zero())
    body = b.lines[i].formula.body
    a4 = b.ax(Implies(b.lines[i].formula, substitute(body, 2, Zero())))
    b.mp(i, a4)
    proofs.append(b.proof("inst_s2_00"))
    # refutations: proofs whose last line is a negation
    proofs.append(single("ref_s3", "(~ (0 = x1'))"))
    for n in range(4):
        b = Builder()
        b.instantiate(b.ax(PROPER_AXIOMS["S3"]), 1, numeral(n))
        proofs.append(b.proof(f"ref_0_eq_{n + 1}"))
    for k, t in enumerate(["(0 + 0)", "x2", "(x2 . 0)"], 1):
        b = Builder()
        b.instantiate(b.ax(PROPER_AXIOMS["S3"]), 1, parse_formula(f"({t} = 0)").left)
        proofs.append(b.proof(f"ref_s3_term_{k}"))
    b = Builder()
    i = b.instantiate(b.ax(PROPER_AXIOMS["S3"]), 1, numeral(1))
    i = b.gen(i, 2)
    b.instantiate(b.ax(PROPER_AXIOMS["S3"]), 1, Zero())
    proofs.append(b.proof("ref_two_steps"))
    return proofs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args()
    proofs = build()
    for p in proofs:
        verdict = check_proof(p, Mode.PA, strict=True)
        if not verdict:
            raise SystemExit(f"{p.name}: {verdict}")
        for ln in p.lines:
            if isinstance(ln.why, Axiom):
                assert axiom_kind(ln.formula, Mode.PA), (p.name, ln)
    for old in args.out.glob("*.paproof"):
        old.unlink()
    for k, p in enumerate(proofs):
        last = p.lines[-1].formula
        tag = "refutation" if isinstance(last, Not) else "proof"
        header = f"# {p.name}: {tag}, {len(p)} line(s)\n"
        (args.out / f"{k:03d}_{p.name}.paproof").write_text(header + dump_proof_script(p), encoding="utf-8")
    print(f"wrote {len(proofs)} proofs to {args.out}")


if __name__ == "__main__":
    main()
