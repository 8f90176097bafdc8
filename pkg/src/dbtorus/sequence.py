"""Nonzero De Bruijn sequences from trace forms, their recurrences, and strips.

A sequence over GF(p^m) built inside GF(p^n) has symbols
``s_i = tr_{GF(p^n)/GF(p^m)}(lam * alpha^i)`` for ``0 <= i < p^n - 1``; its
cyclic windows of length ``n/m`` hit every nonzero vector once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import AllZeroSeed, NoZeroRun, NotProperTower, ZeroForm
from .gf import FieldCtx


@dataclass(frozen=True)
class DBSequence:
    symbols: tuple[int, ...]
    feedback: tuple[int, ...]
    p: int
    n: int
    m: int = 1
    lam: int = 1

    @property
    def window(self) -> int:
        return self.n // self.m

    def __len__(self) -> int:
        return len(self.symbols)

    def windows(self) -> list[tuple[int, ...]]:
        return cyclic_windows(self.symbols, self.window)


@dataclass(frozen=True)
class FullSequence:
    """Classical De Bruijn sequence of length p^n (contains the zero window)."""

    symbols: tuple[int, ...]
    p: int
    n: int
    m: int = 1

    @property
    def window(self) -> int:
        return self.n // self.m

    def __len__(self) -> int:
        return len(self.symbols)


@dataclass(frozen=True)
class Strip:
    rows: tuple[tuple[int, ...], ...]
    full: bool

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def windows(self, width: int) -> list[tuple[tuple[int, ...], ...]]:
        """All cyclic ``rows x width`` blocks, left to right."""
        cols = list(zip(*self.rows))
        L = len(cols)
        return [tuple(cols[(j + k) % L] for k in range(width)) for j in range(L)]


def cyclic_windows(symbols: Sequence[int], width: int) -> list[tuple[int, ...]]:
    L = len(symbols)
    return [tuple(symbols[(i + k) % L] for k in range(width)) for i in range(L)]


def feedback_vector(ctx: FieldCtx, m: int = 1) -> tuple[int, ...]:
    """Negated low coefficients of the minimal polynomial of alpha over GF(p^m)."""
    if m == ctx.n:
        raise NotProperTower(f"GF({ctx.p}^{m}) is the whole field; no recurrence to derive")
    poly = ctx.minimal_poly(m, ctx.alpha)
    return tuple(ctx.neg(c) for c in poly.coeffs[:-1])


def db_sequence(ctx: FieldCtx, m: int = 1, lam: int = 1) -> DBSequence:
    if lam == 0:
        raise ZeroForm("the linear form must be nonzero")
    fb = feedback_vector(ctx, m) if m < ctx.n else ()
    if m == 1:
        symbols = tuple(ctx.trace(x) for x in _powers(ctx, lam))
    else:
        symbols = tuple(ctx.trace_to_subfield(m, x) for x in _powers(ctx, lam))
    return DBSequence(symbols, fb, ctx.p, ctx.n, m, lam)


def _powers(ctx: FieldCtx, start: int):
    x = start
    for _ in range(ctx.q1):
        yield x
        x = ctx.mul(x, ctx.alpha)


def lfsr_extend(ctx: FieldCtx, seed: Sequence[int], feedback: Sequence[int], count: int) -> list[int]:
    """Run ``s_{i+w} = sum_k feedback[k] * s_{i+k}`` for ``count`` more symbols."""
    w = len(feedback)
    if len(seed) != w:
        raise ValueError(f"seed has length {len(seed)}, feedback has length {w}")
    if not any(seed):
        raise AllZeroSeed("an all-zero seed generates the constant zero sequence")
    state = list(seed)
    out = []
    for _ in range(count):
        nxt = 0
        for f, s in zip(feedback, state[-w:]):
            nxt = ctx.add(nxt, ctx.mul(f, s))
        state.append(nxt)
        out.append(nxt)
    return out


def shift_of(a: Sequence[int], b: Sequence[int]) -> int | None:
    """Smallest r with b[i] == a[(r + i) % len(a)] for all i, or None."""
    if len(a) != len(b):
        raise ValueError("sequences must have equal length")
    L = len(a)
    a, b = tuple(a), tuple(b)
    for r in range(L):
        if a[r:] + a[:r] == b:
            return r
    return None


def lift_to_full(seq: DBSequence) -> FullSequence:
    """Insert a zero into the first maximal run of ``window - 1`` zeros.

    Runs are scanned by start index from 0 (a run wrapping across the end
    starts at its first zero).  Any such run yields a valid full sequence;
    over GF(2) there is exactly one.
    """
    w = seq.window
    s = seq.symbols
    L = len(s)
    if L == 0:
        raise NoZeroRun("empty sequence")
    if not any(s):
        raise NoZeroRun("sequence is identically zero")
    if _longest_zero_run(s) >= w:
        raise NoZeroRun(f"a run of {w} zeros already exists; sequence is not punctured")
    if w == 1:
        pos = next((i for i, x in enumerate(s) if x), 0)
    else:
        pos = None
        for i in range(L):
            if s[i - 1] != 0 and all(s[(i + k) % L] == 0 for k in range(w - 1)):
                pos = i
                break
        if pos is None:
            raise NoZeroRun(f"no run of {w - 1} zeros")
    return FullSequence(s[:pos] + (0,) + s[pos:], seq.p, seq.n, seq.m)


def _longest_zero_run(s: Sequence[int]) -> int:
    if not any(s):
        return len(s)
    best = run = 0
    for x in itertools.chain(s, s):
        run = run + 1 if x == 0 else 0
        best = max(best, run)
    return best


def subfield_coordinates(ctx: FieldCtx, m: int) -> dict[int, tuple[int, ...]]:
    """Map each element of GF(p^m) to its coordinates in the basis 1, beta, ..., beta^(m-1)."""
    beta = ctx.subfield_generator(m)
    basis = [ctx.pow(beta, k) for k in range(m)]
    table = {}
    for digits in itertools.product(range(ctx.p), repeat=m):
        x = 0
        for c, b in zip(digits, basis):
            x = ctx.add(x, ctx.scale(c, b))
        table[x] = digits
    return table


def to_strip(ctx: FieldCtx, seq: DBSequence | FullSequence) -> Strip:
    """Expand each GF(p^m) symbol into a column; row k holds the beta^k coefficient."""
    coords = subfield_coordinates(ctx, seq.m)
    cols = [coords[x] for x in seq.symbols]
    rows = tuple(tuple(c[k] for c in cols) for k in range(seq.m))
    return Strip(rows, isinstance(seq, FullSequence))
