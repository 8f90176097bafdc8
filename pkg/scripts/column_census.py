"""Tabulate column-shift multiplicities for subfield tori and check them two ways."""

import argparse
import math

from dbtorus.gf import make_field
from dbtorus.torus import build_torus, classify_columns, occurrence_counts, trace_tally


def regimes(max_order):
    for p in (2, 3, 5, 7):
        for n in range(2, 17):
            if p**n > max_order:
                break
            for m in range(1, n):
                s = p**m - 1
                if n % m == 0 and math.gcd(s, (p**n - 1) // s) == 1:
                    yield p, n, m


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=1 << 12)
    args = ap.parse_args()
    print(f"{'p':>2} {'n':>3} {'m':>3} {'s':>5} {'t':>5}  zero  multiplicities  agree")
    for p, n, m in regimes(args.max_order):
        ctx = make_field(p, n)
        s = p**m - 1
        report = classify_columns(build_torus(ctx, s, ctx.q1 // s), m)
        counts = occurrence_counts(ctx, m)
        agree = counts == trace_tally(ctx, m) and counts.shifts == report.counts
        mult = sorted(set(report.counts.values()))
        print(f"{p:>2} {n:>3} {m:>3} {s:>5} {ctx.q1 // s:>5}  {report.zero_columns:>4}  "
              f"{str(mult):<14}  {agree}")


if __name__ == "__main__":
    main()
