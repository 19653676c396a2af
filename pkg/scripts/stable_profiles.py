#!/usr/bin/env python3
"""Print the stabilized chain profile (mu_1, mu_L) of a singularity
family (m1, m2) for every invertible residue class mod lcm(m1, m2),
together with the full multiplicity chain at the first stable degree.

Usage: python scripts/stable_profiles.py m1 m2
"""

import argparse
import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fibertrace.resolution import Singularity, is_stable, resolve, stabilized_profile


def first_stable_chain(m1, m2, cls, M):
    n = cls % M
    while n < 2:
        n += M
    while True:
        res = resolve(Singularity(m1, m2, n))
        if is_stable(res):
            return n, res.mu
        n += M


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("m1", type=int)
    ap.add_argument("m2", type=int)
    args = ap.parse_args()

    M = math.lcm(args.m1, args.m2)
    print(f"(m1, m2) = ({args.m1}, {args.m2}), lcm = {M}, gcd = {math.gcd(args.m1, args.m2)}")
    for cls in range(1, M + 1):
        if math.gcd(cls, M) != 1:
            continue
        mu1, muL = stabilized_profile(args.m1, args.m2, cls)
        n, chain = first_stable_chain(args.m1, args.m2, cls % M, M)
        print(f"class {cls:3d} mod {M}: (mu_1, mu_L) = ({mu1}, {muL}) "
              f"first stable at n={n}: {list(chain)}")


if __name__ == "__main__":
    main()
