#!/usr/bin/env python3
"""Sweep singularities (m1, m2, n) and confirm that the three trace
routes agree: node-sum polynomial, stabilized closed form, and the exact
cyclotomic fixed-point evaluation.

Usage: python scripts/trace_equivalence_sweep.py [--max-m M] [--max-n N]
       [--oracle-max-n N]
"""

import argparse
import math
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fibertrace.resolution import Singularity, is_stable, resolve
from fibertrace.singtrace import trace_closed_form, trace_oracle, trace_polynomial


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=6)
    ap.add_argument("--max-n", type=int, default=400)
    ap.add_argument("--oracle-max-n", type=int, default=40)
    args = ap.parse_args()

    start = time.perf_counter()
    stable_cases = unstable_cases = oracle_cases = mismatches = 0
    for m1 in range(1, args.max_m + 1):
        for m2 in range(1, args.max_m + 1):
            for n in range(2, args.max_n + 1):
                if math.gcd(n, m1) != 1 or math.gcd(n, m2) != 1:
                    continue
                res = resolve(Singularity(m1, m2, n))
                poly = trace_polynomial(res)
                if is_stable(res):
                    stable_cases += 1
                    if trace_closed_form(res) != poly:
                        mismatches += 1
                        print(f"MISMATCH closed form at ({m1},{m2},{n})")
                else:
                    unstable_cases += 1
                if n <= args.oracle_max_n:
                    power = next(u for u in range(1, n) if math.gcd(u, n) == 1)
                    oracle_cases += 1
                    if trace_oracle(res, power) != poly.evaluate(power):
                        mismatches += 1
                        print(f"MISMATCH oracle at ({m1},{m2},{n}) power {power}")

    print(f"stable cases checked:   {stable_cases}")
    print(f"unstable cases skipped: {unstable_cases}")
    print(f"oracle evaluations:     {oracle_cases}")
    print(f"mismatches:             {mismatches}")
    print(f"time: {time.perf_counter() - start:.2f}s")
    sys.exit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
