"""Scan members of the pencil through the sextic and tabulate their ranks.

Every member with small integer parameters is classified by rank; the only
degenerate members found should be the three roots of the discriminant.
"""

import argparse
from math import gcd

from fano12.linalg import rank
from fano12.mukai_umemura import gamma_pencil, identify_mu_quadric
from fano12.pencils import pencil_discriminant, singular_members


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=8, help="scan |u0|, |u1| <= bound")
    args = ap.parse_args()
    pencil = gamma_pencil()
    print("discriminant:", pencil_discriminant(pencil))
    for m in singular_members(pencil):
        print(f"  root {m.point}  corank {m.corank}  multiplicity {m.multiplicity}")

    counts = {}
    degenerate = []
    for u0 in range(-args.bound, args.bound + 1):
        for u1 in range(0, args.bound + 1):
            if gcd(u0, u1) != 1 or (u1 == 0 and u0 != 1):
                continue
            r = rank(pencil.gram_at(u0, u1))
            counts[r] = counts.get(r, 0) + 1
            if r < 5:
                degenerate.append(((u0, u1), r))
    print("rank histogram:", dict(sorted(counts.items())))
    print("degenerate members:", degenerate)
    mu = identify_mu_quadric()
    print(f"invariant quadric sits at {mu.point}, u = {mu.u}")


if __name__ == "__main__":
    main()
