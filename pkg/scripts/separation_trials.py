"""Random trials: for subspaces V, W of GF(p^n) with dim V + dim W <= n, find z with V and zW independent."""

import argparse
import random
from collections import Counter

from dbtorus.gf import make_field
from dbtorus.patterns import element_rank, random_subspace, separating_multiplier


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-p", type=int, default=2)
    ap.add_argument("-n", type=int, default=8)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    ctx = make_field(args.p, args.n)
    rng = random.Random(args.seed)
    first = Counter()
    for _ in range(args.trials):
        dv = rng.randint(1, ctx.n - 1)
        dw = rng.randint(1, ctx.n - dv)
        V, W = random_subspace(ctx, dv, rng), random_subspace(ctx, dw, rng)
        k = separating_multiplier(ctx, V, W)
        z = ctx.exp(k)
        assert element_rank(ctx, V + [ctx.mul(z, w) for w in W]) == dv + dw
        first[k] += 1
    print(f"{args.trials} trials over GF({args.p}^{args.n}), all separated")
    print("smallest separating exponent k: count")
    for k, c in sorted(first.items()):
        print(f"  {k}: {c}")


if __name__ == "__main__":
    main()
