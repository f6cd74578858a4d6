#!/usr/bin/env python3
"""Diagonalize each sample formula and show that perturbing the result breaks sb(m, m) = code of delta."""
import time

from arithlab.diagonal import PERTURBATIONS, SAMPLE_PHI, diagonalize, perturb, verify_fixed_point


def main():
    for name, phi in SAMPLE_PHI.items():
        t0 = time.perf_counter()
        d = diagonalize(phi)
        s = d.summary()
        print(f"{name}")
        print(f"  phi    {s['phi']}")
        print(f"  beta   {s['beta']}")
        print(f"  m      {s['m_length']} symbols, about {s['m_bits_estimate']} bits")
        print(f"  delta  {s['delta']}")
        print(f"  fixed point holds: {d.fixed_point_ok}")
        for kind in PERTURBATIONS:
            print(f"    perturbed ({kind}): {verify_fixed_point(perturb(d, kind))}")
        print(f"  {time.perf_counter() - t0:.3f}s")


if __name__ == "__main__":
    main()
