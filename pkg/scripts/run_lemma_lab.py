#!/usr/bin/env python3
"""Run every claim check and write the JSON report.

    python scripts/run_lemma_lab.py --budget 10000 --seed 7 --out lab_report.json
"""
import argparse
import json
import time
from pathlib import Path

from arithlab.lab import report, revalidate, run_lab


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--budget", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=Path, default=Path("lab_report.json"))
    args = ap.parse_args()

    t0 = time.perf_counter()
    text = report(args.budget, args.seed)
    args.out.write_text(text + "\n", encoding="utf-8")
    for v in run_lab(args.budget, args.seed):
        extra = ""
        if v.witness and "inputs" in v.witness and v.status.value == "COUNTEREXAMPLE_FOUND":
            ins = ", ".join(f"{k} = {r['factored']}" for k, r in v.witness["inputs"].items())
            extra = f"  [{ins}; re-checks: {revalidate(v)}]"
        print(f"{v.claim_id.value:<20} {v.status.value:<22} {v.samples_tried:>6}{extra}")
    print(f"\n{len(json.loads(text)['verdicts'])} verdicts in {time.perf_counter() - t0:.1f}s -> {args.out}")


if __name__ == "__main__":
    main()
