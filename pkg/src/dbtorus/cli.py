"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 mathematical precondition failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .errors import TorusError
from .gf import find_primitive_poly, make_field
from .ntorus import build_ntorus, greedy_basis_pattern_nd, is_basis_nd, verify_sampling_nd
from .patterns import (
    Pattern,
    certificate,
    decode,
    find_extension_shift,
    greedy_basis_pattern,
    is_basis,
    kronecker_pattern,
    recursive_build,
    update_matrix,
    verify_sampling,
)
from .sequence import db_sequence, lift_to_full, to_strip
from .torus import build_torus, classify_columns, extend_array


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _field_args(sp):
    sp.add_argument("-p", type=int, required=True, help="characteristic")
    sp.add_argument("-n", type=int, required=True, help="extension degree")
    sp.add_argument("--modulus", type=_ints, default=None, help="monic modulus, coefficients low first")


def _torus_args(sp, pattern=False):
    _field_args(sp)
    sp.add_argument("-s", type=int, help="rows (default p^m - 1 for -m, else required)")
    sp.add_argument("-t", type=int, help="columns")
    sp.add_argument("-m", type=int, default=None, help="subfield degree; sets s = p^m - 1")
    sp.add_argument("--lambda", dest="lam", default="1", help="form multiplier (element syntax)")
    if pattern:
        sp.add_argument("--pattern", required=True,
                        help="kronecker:M | greedy | FILE | inline cells 'i,j;i,j;...'")


def _out(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _ctx(args):
    return make_field(args.p, args.n, args.modulus)


def _torus(args):
    ctx = _ctx(args)
    s, t = args.s, args.t
    if s is None and args.m is not None:
        s = ctx.p**args.m - 1
    if s is None:
        raise UsageError("give -s/-t or -m")
    if t is None:
        t = ctx.q1 // s if s and ctx.q1 % s == 0 else 0
    return build_torus(ctx, s, t, formats.parse_element(ctx, args.lam))


def _pattern(text: str, torus=None, ctx=None) -> Pattern:
    if text.startswith("kronecker:"):
        return kronecker_pattern(ctx or torus.ctx, int(text.split(":", 1)[1]))
    if text == "greedy":
        return greedy_basis_pattern(torus)
    path = Path(text)
    if path.exists():
        return formats.read_pattern(path.read_text())
    if ";" in text or "," in text:
        return Pattern(tuple(_ints(c) for c in text.split(";") if c.strip()))
    raise UsageError(f"cannot read pattern {text!r}")


# ---------------------------------------------------------------------------


def cmd_field_find(args):
    f = find_primitive_poly(args.p, args.n)
    _out(args, f"{','.join(map(str, f))}\n{formats.poly_str(f)}\n")


def cmd_field_describe(args):
    ctx = _ctx(args)
    lines = [
        f"p {ctx.p}",
        f"n {ctx.n}",
        f"modulus {formats.format_modulus(ctx)}",
        f"polynomial {formats.poly_str(ctx.modulus)}",
        f"order {ctx.order}",
    ]
    if args.table:
        lines += [f"{k} {formats.format_element(ctx, ctx.exp(k), 'poly')}" for k in range(ctx.q1)]
    _out(args, "\n".join(lines) + "\n")


def _seq(args):
    ctx = _ctx(args)
    return ctx, db_sequence(ctx, args.m, formats.parse_element(ctx, args.lam))


def cmd_seq_generate(args):
    ctx, seq = _seq(args)
    _out(args, formats.write_sequence(ctx, seq))


def cmd_seq_lift(args):
    ctx, seq = _seq(args)
    _out(args, formats.write_sequence(ctx, lift_to_full(seq), seq.lam, seq.feedback))


def cmd_seq_strip(args):
    ctx, seq = _seq(args)
    strip = to_strip(ctx, lift_to_full(seq) if args.full else seq)
    _out(args, "".join(" ".join(map(str, row)) + "\n" for row in strip.rows))


def cmd_torus_generate(args):
    torus = _torus(args)
    if args.format == "text":
        text = formats.write_grid_text(torus)
    elif args.format == "json":
        text = formats.torus_to_json(torus)
    elif args.format == "csv":
        text = formats.write_csv(torus.values)
    else:
        if torus.ctx.p != 2:
            raise UsageError("pbm output needs p = 2")
        text = formats.write_pbm(torus.values)
    _out(args, text)


def cmd_torus_classify(args):
    torus = _torus(args)
    m = args.m
    if m is None:
        m = next((k for k in range(1, torus.ctx.n + 1) if torus.ctx.p**k - 1 == torus.s), None)
        if m is None:
            raise UsageError("s is not of the form p^m - 1; pass -m")
    report = classify_columns(torus, m)
    if args.format == "json":
        _out(args, formats.torus_to_json(torus, report))
        return
    lines = [f"{j} zero" if r is None else f"{j} shift {r}" for j, r in enumerate(report.labels)]
    lines.append("counts " + " ".join(f"{r}:{c}" for r, c in report.counts.items()))
    lines.append(f"zero_columns {report.zero_columns}")
    for f in report.factors:
        lines.append(f"factor {' '.join(map(str, f.orbit))} | {formats.format_poly(torus.ctx, f.coeffs)}")
    _out(args, "\n".join(lines) + "\n")


def cmd_torus_extend(args):
    torus = _torus(args)
    grid = extend_array(torus, _pattern(args.pattern, torus))
    _out(args, formats.grid_rows(grid.values))


def cmd_pattern_check(args):
    torus = _torus(args)
    pat = _pattern(args.pattern, torus)
    lines = [f"cells {len(pat)}", f"basis {str(is_basis(torus, pat)).lower()}"]
    if len(pat) == torus.ctx.n:
        lines.append(f"sampling {str(verify_sampling(torus, pat)).lower()}")
    if args.certificate:
        Path(args.certificate).write_text(formats.certificate_to_json(torus.ctx, certificate(torus, pat)))
    _out(args, "\n".join(lines) + "\n")


def cmd_pattern_kronecker(args):
    ctx = _ctx(args)
    _out(args, formats.write_pattern(kronecker_pattern(ctx, args.m)))


def cmd_pattern_extend(args):
    torus = _torus(args)
    off = find_extension_shift(torus, _pattern(args.pattern, torus), _pattern(args.with_, torus))
    _out(args, f"{off.a} {off.b}\n")


def cmd_pattern_build(args):
    torus = _torus(args)
    _out(args, formats.write_pattern(recursive_build(torus, _pattern(args.pattern, torus))))


def cmd_update_matrix(args):
    torus = _torus(args)
    pat = _pattern(args.pattern, torus)
    shift = args.shift
    if len(shift) != 2:
        raise UsageError("--shift takes two integers di,dj")
    um = update_matrix(torus, pat, shift, only_new=args.new_cells)
    _out(args, formats.grid_rows(um.coeffs))


def cmd_decode(args):
    torus = _torus(args)
    pat = _pattern(args.pattern, torus)
    off = decode(torus, certificate(torus, pat), args.values)
    _out(args, f"{off.a} {off.b}\n")


def _ntorus(args):
    ctx = _ctx(args)
    return build_ntorus(ctx, args.dims, formats.parse_element(ctx, args.lam))


def cmd_ntorus_generate(args):
    nt = _ntorus(args)
    _out(args, formats.ntorus_to_json(nt) if args.format == "json" else formats.write_ntorus_text(nt))


def cmd_ntorus_check(args):
    nt = _ntorus(args)
    if args.pattern == "greedy":
        pat = greedy_basis_pattern_nd(nt)
    else:
        pat = formats.read_pattern(Path(args.pattern).read_text())
    lines = [
        f"cells {len(pat)}",
        f"basis {str(is_basis_nd(nt, pat)).lower()}",
        f"sampling {str(verify_sampling_nd(nt, pat)).lower()}",
    ]
    _out(args, "\n".join(lines) + "\n")


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dbtorus", description="Trace-based De Bruijn sequences and tori over finite fields.")
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def leaf(sub, name, func, help=None):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")
        return sp

    g = groups.add_parser("field").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sp = leaf(g, "find", cmd_field_find, "smallest primitive polynomial")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-n", type=int, required=True)
    sp = leaf(g, "describe", cmd_field_describe)
    _field_args(sp)
    sp.add_argument("--table", action="store_true", help="list alpha^k in the power basis")

    g = groups.add_parser("seq").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for name, func in [("generate", cmd_seq_generate), ("lift", cmd_seq_lift), ("strip", cmd_seq_strip)]:
        sp = leaf(g, name, func)
        _field_args(sp)
        sp.add_argument("-m", type=int, default=1, help="symbol subfield degree")
        sp.add_argument("--lambda", dest="lam", default="1")
        if name == "strip":
            sp.add_argument("--full", action="store_true", help="strip of the lifted (full) sequence")

    g = groups.add_parser("torus").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sp = leaf(g, "generate", cmd_torus_generate)
    _torus_args(sp)
    sp.add_argument("--format", choices=["text", "json", "pbm", "csv"], default="text")
    sp = leaf(g, "classify", cmd_torus_classify)
    _torus_args(sp)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp = leaf(g, "extend", cmd_torus_extend)
    _torus_args(sp, pattern=True)

    g = groups.add_parser("pattern").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sp = leaf(g, "check", cmd_pattern_check)
    _torus_args(sp, pattern=True)
    sp.add_argument("--certificate", help="write the sampling certificate JSON here")
    sp = leaf(g, "kronecker", cmd_pattern_kronecker)
    _field_args(sp)
    sp.add_argument("-m", type=int, required=True)
    sp = leaf(g, "extend", cmd_pattern_extend)
    _torus_args(sp, pattern=True)
    sp.add_argument("--with", dest="with_", required=True, help="pattern to translate")
    sp = leaf(g, "build", cmd_pattern_build)
    _torus_args(sp, pattern=True)

    g = groups.add_parser("update").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sp = leaf(g, "matrix", cmd_update_matrix)
    _torus_args(sp, pattern=True)
    sp.add_argument("--shift", type=_ints, required=True, help="di,dj")
    sp.add_argument("--new-cells", action="store_true", help="rows only for newly exposed cells")

    sp = groups.add_parser("decode")
    sp.set_defaults(func=cmd_decode)
    sp.add_argument("-o", "--output")
    _torus_args(sp, pattern=True)
    sp.add_argument("--values", type=_ints, required=True)

    g = groups.add_parser("ntorus").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sp = leaf(g, "generate", cmd_ntorus_generate)
    _field_args(sp)
    sp.add_argument("--dims", type=_ints, required=True)
    sp.add_argument("--lambda", dest="lam", default="1")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp = leaf(g, "check", cmd_ntorus_check)
    _field_args(sp)
    sp.add_argument("--dims", type=_ints, required=True)
    sp.add_argument("--lambda", dest="lam", default="1")
    sp.add_argument("--pattern", default="greedy", help="greedy | FILE of index tuples")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:  # usage errors and --help
        return e.code if isinstance(e.code, int) else 1
    try:
        args.func(args)
    except TorusError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except (UsageError, ValueError, OSError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
