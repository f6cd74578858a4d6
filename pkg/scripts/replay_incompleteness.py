#!/usr/bin/env python3
"""Replay the incompleteness steps on corpus proofs and refutations.

Shows which steps are evaluated on numbers and which are provability
claims left unevaluated.
"""
import argparse

from arithlab.kernel import is_refutation_shaped, load_corpus
from arithlab.lab import replay_incompleteness
from arithlab.proof import last_formula


def show(trace):
    print(f"{trace['case']}: {trace['sentence']}")
    print(f"  r = {trace['r']['factored'][:70]}...")
    print(f"  q = {trace['q']['factored']}")
    for s in trace["steps"]:
        print(f"  {s['status']:<34} {s['step']}")
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=2, help="proofs and refutations to replay, each")
    args = ap.parse_args()
    corpus = load_corpus()
    proofs = [p for p in corpus if not is_refutation_shaped(p)][:args.count]
    refutations = [p for p in corpus if is_refutation_shaped(p)][:args.count]
    for p in proofs:
        show(replay_incompleteness(last_formula(p), p))
    for p in refutations:
        show(replay_incompleteness(last_formula(p).body, p))


if __name__ == "__main__":
    main()
