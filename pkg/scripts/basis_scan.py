"""Compare the rank test with brute-force sampling over every n-cell subset of a small torus."""

import argparse
import itertools
import math
import time

from dbtorus.gf import make_field
from dbtorus.patterns import Pattern, is_basis, verify_sampling
from dbtorus.torus import build_torus


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-p", type=int, default=2)
    ap.add_argument("-n", type=int, default=4)
    ap.add_argument("-s", type=int, default=3)
    ap.add_argument("-t", type=int, default=5)
    ap.add_argument("--all-forms", action="store_true", help="repeat for every nonzero lambda")
    args = ap.parse_args()

    ctx = make_field(args.p, args.n)
    cells = [(i, j) for i in range(args.s) for j in range(args.t)]
    total = math.comb(len(cells), ctx.n)
    lams = range(1, ctx.order) if args.all_forms else [1]
    for lam in lams:
        torus = build_torus(ctx, args.s, args.t, lam)
        start = time.perf_counter()
        bases = disagree = 0
        for subset in itertools.combinations(cells, ctx.n):
            pat = Pattern.of(subset)
            b = is_basis(torus, pat)
            bases += b
            disagree += b != verify_sampling(torus, pat)
        print(f"lambda={lam}: {total} subsets, {bases} bases, {disagree} disagreements, "
              f"{time.perf_counter() - start:.2f} s")


if __name__ == "__main__":
    main()
