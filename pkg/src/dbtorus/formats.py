"""Text, JSON and PBM serialization.

Element syntax is ``pow:k`` (alpha^k) or ``poly:[c0,c1,...]`` (power-basis
coefficients, low first).  A bare integer is read as the packed encoding,
so ``1`` is the unit and, for GF(p) scalars, ``c`` is ``c``.
"""

from __future__ import annotations

import json
import re
from typing import Sequence

import numpy as np

from .gf import FieldCtx, make_field
from .patterns import Pattern, SamplingCertificate
from .sequence import DBSequence, FullSequence
from .torus import ColumnReport, Torus, build_torus
from .ntorus import NTorus, build_ntorus

_POW = re.compile(r"^pow:(-?\d+)$")
_POLY = re.compile(r"^poly:\[([\d,\s]*)\]$")


def format_element(ctx: FieldCtx, a: int, style: str = "pow") -> str:
    if style == "poly" or a == 0:
        return "poly:[" + ",".join(str(c) for c in ctx.coeffs(a)) + "]"
    return f"pow:{ctx.log(a)}"


def parse_element(ctx: FieldCtx, text: str) -> int:
    text = text.strip()
    if m := _POW.match(text):
        return ctx.exp(int(m.group(1)))
    if m := _POLY.match(text):
        body = m.group(1).strip()
        coeffs = [int(c) for c in body.split(",")] if body else []
        if len(coeffs) > ctx.n:
            raise ValueError(f"element {text!r} has more than {ctx.n} coefficients")
        return ctx.from_coeffs(coeffs)
    value = int(text)
    if not 0 <= value < ctx.order:
        raise ValueError(f"element {text!r} out of range for GF({ctx.p}^{ctx.n})")
    return value


def format_modulus(ctx: FieldCtx) -> str:
    return ",".join(str(c) for c in ctx.modulus)


def parse_modulus(text: str) -> tuple[int, ...]:
    return tuple(int(c) for c in text.split(","))


def format_poly(ctx: FieldCtx, coeffs: Sequence[int]) -> str:
    """Polynomial over a subfield: coefficients low first, space separated."""
    return " ".join(format_element(ctx, c) for c in coeffs)


def poly_str(coeffs: Sequence[int]) -> str:
    """Human form of a GF(p) polynomial, e.g. ``x^4 + x + 1``."""
    terms = []
    for k in reversed(range(len(coeffs))):
        c = coeffs[k]
        if not c:
            continue
        mono = "1" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if c != 1:
            mono = f"{c}" if k == 0 else f"{c}*{mono}"
        terms.append(mono)
    return " + ".join(terms) or "0"


# ---------------------------------------------------------------------------
# Sequences: header "p n m lambda feedback...", then one line of symbols.


def _symbol(ctx: FieldCtx, x: int, m: int) -> str:
    return str(x) if m == 1 else format_element(ctx, x)


def write_sequence(ctx: FieldCtx, seq: DBSequence | FullSequence, lam: int | None = None,
                   feedback: Sequence[int] | None = None) -> str:
    lam = getattr(seq, "lam", 1) if lam is None else lam
    feedback = getattr(seq, "feedback", ()) if feedback is None else feedback
    header = [str(ctx.p), str(ctx.n), str(seq.m), format_element(ctx, lam)]
    header += [_symbol(ctx, f, seq.m) for f in feedback]
    body = " ".join(_symbol(ctx, x, seq.m) for x in seq.symbols)
    return " ".join(header) + "\n" + body + "\n"


def read_sequence(ctx: FieldCtx, text: str) -> DBSequence | FullSequence:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = lines[0].split()
    p, n, m = int(head[0]), int(head[1]), int(head[2])
    if (p, n) != (ctx.p, ctx.n):
        raise ValueError(f"sequence is over GF({p}^{n}), context is GF({ctx.p}^{ctx.n})")
    lam = parse_element(ctx, head[3])
    feedback = tuple(parse_element(ctx, tok) for tok in head[4:])
    symbols = tuple(parse_element(ctx, tok) for tok in (lines[1].split() if len(lines) > 1 else []))
    if len(symbols) == ctx.q1:
        return DBSequence(symbols, feedback, p, n, m, lam)
    return FullSequence(symbols, p, n, m)


# ---------------------------------------------------------------------------
# Grids.


def grid_rows(values: np.ndarray, sep: str = " ") -> str:
    return "".join(sep.join(str(int(v)) for v in row) + "\n" for row in values)


def write_grid_text(torus: Torus) -> str:
    ctx = torus.ctx
    header = f"{ctx.p} {ctx.n} {torus.s} {torus.t} {format_element(ctx, torus.lam)} {format_modulus(ctx)}\n"
    return header + grid_rows(torus.values)


def read_grid_text(text: str) -> Torus:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    p, n, s, t, lam_tok, mod_tok = lines[0].split()
    ctx = make_field(int(p), int(n), parse_modulus(mod_tok))
    torus = build_torus(ctx, int(s), int(t), parse_element(ctx, lam_tok))
    values = np.array([[int(v) for v in ln.split()] for ln in lines[1:]], dtype=np.int64)
    if not np.array_equal(values, torus.values):
        raise ValueError("grid values do not match the header's construction")
    return torus


def write_pbm(values: np.ndarray) -> str:
    """Plain PBM (P1); 1 is black."""
    rows, cols = values.shape
    return f"P1\n{cols} {rows}\n" + grid_rows(values)


def write_csv(values: np.ndarray) -> str:
    return grid_rows(values, sep=",")


def _field_json(ctx: FieldCtx) -> dict:
    return {"p": ctx.p, "n": ctx.n, "modulus": list(ctx.modulus)}


def report_json(ctx: FieldCtx, report: ColumnReport) -> dict:
    return {
        "m": report.m,
        "columns": [
            {"j": j, "kind": "zero"} if r is None else {"j": j, "kind": "shift", "r": r}
            for j, r in enumerate(report.labels)
        ],
        "counts": {str(r): c for r, c in report.counts.items()},
        "zero_columns": report.zero_columns,
        "factors": [
            {"orbit": list(f.orbit), "degree": f.degree,
             "coeffs": [format_element(ctx, c) for c in f.coeffs],
             "second_leading": format_element(ctx, f.second_leading)}
            for f in report.factors
        ],
    }


def torus_to_json(torus: Torus, report: ColumnReport | None = None) -> str:
    ctx = torus.ctx
    doc = {
        "field": _field_json(ctx),
        "s": torus.s,
        "t": torus.t,
        "lambda": format_element(ctx, torus.lam),
        "values": torus.values.tolist(),
    }
    if report is not None:
        doc["column_report"] = report_json(ctx, report)
    return json.dumps(doc) + "\n"


def torus_from_json(text: str) -> Torus:
    doc = json.loads(text)
    f = doc["field"]
    ctx = make_field(f["p"], f["n"], f["modulus"])
    torus = build_torus(ctx, doc["s"], doc["t"], parse_element(ctx, doc["lambda"]))
    if not np.array_equal(np.array(doc["values"]), torus.values):
        raise ValueError("JSON values do not match the construction")
    return torus


# ---------------------------------------------------------------------------
# Patterns and certificates.


def read_pattern(text: str) -> Pattern:
    cells = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            cells.append(tuple(int(x) for x in line.split()))
    return Pattern(tuple(cells))


def write_pattern(pattern: Pattern) -> str:
    return "".join(" ".join(str(x) for x in c) + "\n" for c in pattern.cells)


def certificate_to_json(ctx: FieldCtx, cert: SamplingCertificate) -> str:
    doc = {
        "cells": [list(c) for c in cert.cells],
        "basis_elements": [format_element(ctx, x) for x in cert.basis_elements],
        "phi_matrix": cert.phi_matrix.tolist(),
        "phi_inverse": cert.phi_inverse.tolist(),
    }
    return json.dumps(doc) + "\n"


# ---------------------------------------------------------------------------
# N-tori: header "p n lambda dims...", then values row-major on one line.


def write_ntorus_text(nt: NTorus) -> str:
    ctx = nt.ctx
    header = " ".join([str(ctx.p), str(ctx.n), format_element(ctx, nt.lam)] + [str(d) for d in nt.dims])
    return header + "\n" + " ".join(str(int(v)) for v in nt.values.ravel()) + "\n"


def read_ntorus_text(text: str, modulus: Sequence[int] | None = None) -> NTorus:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = lines[0].split()
    ctx = make_field(int(head[0]), int(head[1]), modulus)
    nt = build_ntorus(ctx, [int(d) for d in head[3:]], parse_element(ctx, head[2]))
    values = np.array([int(v) for v in lines[1].split()], dtype=np.int64)
    if not np.array_equal(values, nt.values.ravel()):
        raise ValueError("values do not match the construction")
    return nt


def ntorus_to_json(nt: NTorus) -> str:
    doc = {
        "field": _field_json(nt.ctx),
        "dims": list(nt.dims),
        "lambda": format_element(nt.ctx, nt.lam),
        "values": nt.values.ravel().tolist(),
    }
    return json.dumps(doc) + "\n"
