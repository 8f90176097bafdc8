"""Print the GF(16) worked examples: tower sequence, strip, 3x5 torus, column labels, update rule."""

from dbtorus import formats
from dbtorus.gf import make_field
from dbtorus.patterns import certificate, decode, kronecker_pattern, update_matrix
from dbtorus.sequence import db_sequence, lift_to_full, to_strip
from dbtorus.torus import build_torus, classify_columns, extend_array


def main():
    ctx = make_field(2, 4)
    print("modulus", formats.poly_str(ctx.modulus))

    full = lift_to_full(db_sequence(ctx, m=2))
    print("\nGF(4) sequence, lifted:")
    print(" ".join(formats.format_element(ctx, x) for x in full.symbols))
    print("strip:")
    for row in to_strip(ctx, full).rows:
        print(" ".join(map(str, row)))

    torus = build_torus(ctx, 3, 5)
    print("\n3 x 5 torus:")
    print(formats.grid_rows(torus.values), end="")
    report = classify_columns(torus, 2)
    print("columns:", ["zero" if r is None else f"shift {r}" for r in report.labels])

    kron = kronecker_pattern(ctx, 2)
    print("\nextended grid for the 2 x 2 pattern:")
    print(formats.grid_rows(extend_array(torus, kron).values), end="")
    upd = update_matrix(torus, kron, (0, 1), only_new=True)
    print("right-shift rule for the new column:")
    print(formats.grid_rows(upd.coeffs), end="")
    print("decode (1,1,0,1) ->", tuple(decode(torus, certificate(torus, kron), (1, 1, 0, 1))))


if __name__ == "__main__":
    main()
