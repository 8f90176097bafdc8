"""The s x t trace torus and its column structure.

Cell ``(i, j)`` holds ``beta^i gamma^j`` with ``beta = alpha^t`` and
``gamma = alpha^s``, i.e. exponent ``(t*i + s*j) mod (s*t)``; its value is
``tr(lam * beta^i gamma^j)``.  Rows follow beta, columns follow gamma.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BadFactorization,
    NotSubfieldRegime,
    OddCharacteristic,
    TheoremViolation,
    ZeroForm,
)
from .gf import FieldCtx, SubfieldPoly, make_field


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class Torus:
    ctx: FieldCtx
    s: int
    t: int
    lam: int
    exponents: np.ndarray
    values: np.ndarray

    @property
    def beta_exp(self) -> int:
        return self.t

    @property
    def gamma_exp(self) -> int:
        return self.s

    @property
    def beta(self) -> int:
        return self.ctx.exp(self.t)

    @property
    def gamma(self) -> int:
        return self.ctx.exp(self.s)

    @property
    def shape(self) -> tuple[int, int]:
        return self.s, self.t

    def exponent_at(self, i: int, j: int) -> int:
        return (self.t * i + self.s * j) % self.ctx.q1

    def element_at(self, i: int, j: int) -> int:
        return self.ctx.exp(self.exponent_at(i, j))

    def position_of(self, exponent: int) -> tuple[int, int]:
        """Invert ``exponent_at`` via the CRT split of Z_(st)."""
        e = exponent % self.ctx.q1
        a = e * pow(self.t, -1, self.s) % self.s if self.s > 1 else 0
        b = e * pow(self.s, -1, self.t) % self.t if self.t > 1 else 0
        return a, b


def form_values(ctx: FieldCtx, lam: int) -> np.ndarray:
    """``tr(lam * alpha^k)`` for every exponent k, as one lookup vector."""
    if lam == 0:
        raise ZeroForm("the linear form must be nonzero")
    out = np.empty(ctx.q1, dtype=np.int64)
    x = lam
    for k in range(ctx.q1):
        out[k] = ctx.trace(x)
        x = ctx.mul(x, ctx.alpha)
    return out


def build_torus(ctx: FieldCtx, s: int, t: int, lam: int = 1) -> Torus:
    if s < 1 or t < 1 or s * t != ctx.q1:
        raise BadFactorization(f"{s} x {t} != {ctx.q1}")
    if math.gcd(s, t) != 1:
        raise BadFactorization(f"gcd({s}, {t}) = {math.gcd(s, t)} != 1")
    table = form_values(ctx, lam)
    i = np.arange(s)[:, None]
    j = np.arange(t)[None, :]
    exps = (t * i + s * j) % ctx.q1
    if not np.array_equal(np.sort(exps, axis=None), np.arange(ctx.q1)):
        raise TheoremViolation("exponent grid is not a bijection")
    return Torus(ctx, s, t, lam, _frozen(exps), _frozen(table[exps]))


# ---------------------------------------------------------------------------
# Column structure in the subfield regime s = p^m - 1.


@dataclass(frozen=True)
class ColumnReport:
    """Per-column labels: ``None`` for an all-zero column, else the shift r."""

    m: int
    labels: tuple[int | None, ...]
    factors: tuple[SubfieldPoly, ...]
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def zero_columns(self) -> int:
        return sum(1 for x in self.labels if x is None)


@dataclass(frozen=True)
class OccurrenceCounts:
    shifts: dict[int, int]
    zero: int


def _check_regime(ctx: FieldCtx, m: int) -> tuple[int, int]:
    if m < 1 or ctx.n % m:
        raise NotSubfieldRegime(f"{m} does not divide {ctx.n}")
    s = ctx.p**m - 1
    t = ctx.q1 // s
    if math.gcd(s, t) != 1:
        raise NotSubfieldRegime(f"gcd({s}, {t}) != 1")
    return s, t


def db_beta(ctx: FieldCtx, m: int) -> tuple[int, ...]:
    """``tr_{GF(p^m)/GF(p)}(beta^i)`` for ``0 <= i < p^m - 1``."""
    beta = ctx.subfield_generator(m)
    return tuple(ctx.relative_trace(ctx.pow(beta, i), m, 1) for i in range(ctx.p**m - 1))


def subfield_log(ctx: FieldCtx, m: int, y: int) -> int:
    """r with y = beta^r, beta the standard generator of GF(p^m)^x."""
    step = ctx.q1 // (ctx.p**m - 1)
    e = ctx.log(y)
    if e % step:
        raise ValueError("element is not in the subfield")
    return e // step


def classify_columns(torus: Torus, m: int) -> ColumnReport:
    """Label each column Zero or Shift(r) from the relative trace of lam*gamma^j.

    Every label is checked entrywise against the column values; a mismatch
    raises :class:`TheoremViolation`.
    """
    ctx = torus.ctx
    s, t = _check_regime(ctx, m)
    if (s, t) != (torus.s, torus.t):
        raise NotSubfieldRegime(f"torus is {torus.s} x {torus.t}, regime m={m} needs {s} x {t}")
    base = db_beta(ctx, m)
    labels = []
    for j in range(t):
        y = ctx.trace_to_subfield(m, ctx.mul(torus.lam, ctx.exp(s * j)))
        col = tuple(int(v) for v in torus.values[:, j])
        if y == 0:
            expected = (0,) * s
            labels.append(None)
        else:
            r = subfield_log(ctx, m, y) % s
            expected = base[r:] + base[:r]
            labels.append(r)
        if col != expected:
            raise TheoremViolation(f"column {j} is {col}, algebra predicts {expected}")
    counts = Counter(r for r in labels if r is not None)
    return ColumnReport(m, tuple(labels), tuple(ctx.factor_unity(m, t)), dict(sorted(counts.items())))


def occurrence_counts(ctx: FieldCtx, m: int) -> OccurrenceCounts:
    """Column multiplicities of each shift from the factorization of x^t - 1.

    A factor of degree d contributes d columns whose relative trace is
    ``-(n/(m d)) * c_{d-1}``; when ``d = n/m`` this is minus the
    second-leading coefficient.
    """
    s, t = _check_regime(ctx, m)
    shifts: Counter[int] = Counter()
    zero = 0
    for f in ctx.factor_unity(m, t):
        d = f.degree
        value = ctx.neg(ctx.scale((ctx.n // m) // d, f.second_leading))
        if value == 0:
            zero += d
        else:
            shifts[subfield_log(ctx, m, value) % s] += d
    return OccurrenceCounts(dict(sorted(shifts.items())), zero)


def trace_tally(ctx: FieldCtx, m: int) -> OccurrenceCounts:
    """Direct count of ``tr_{GF(p^n)/GF(p^m)}(gamma^j)`` over all columns."""
    s, t = _check_regime(ctx, m)
    shifts: Counter[int] = Counter()
    zero = 0
    for j in range(t):
        y = ctx.trace_to_subfield(m, ctx.exp(s * j))
        if y == 0:
            zero += 1
        else:
            shifts[subfield_log(ctx, m, y) % s] += 1
    return OccurrenceCounts(dict(sorted(shifts.items())), zero)


def quadratic_criterion(m: int, i: int, ctx: FieldCtx | None = None) -> bool:
    """Whether x^2 + beta^i x + 1 is irreducible over GF(2^m).

    beta is the standard generator of GF(2^m) inside ``ctx`` when given,
    else the primitive element of the default GF(2^m).  Uses the
    characteristic-2 test: for a != 0, x^2 + a x + 1 is irreducible iff
    tr(1/a^2) = 1.
    """
    if ctx is None:
        ctx = make_field(2, m)
    if ctx.p != 2:
        raise OddCharacteristic(f"quadratic criterion needs characteristic 2, got {ctx.p}")
    a = ctx.pow(ctx.subfield_generator(m), i)
    return ctx.relative_trace(ctx.inv(ctx.mul(a, a)), m, 1) == 1


# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ExtendedGrid:
    values: np.ndarray
    I: int
    J: int

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    def read(self, cells, a: int, b: int) -> tuple[int, ...]:
        """Values of ``cells`` (normalized offsets) with top-left at (a, b), no wraparound."""
        return tuple(int(self.values[a + i, b + j]) for i, j in cells)


def extend_array(torus: Torus, pattern) -> ExtendedGrid:
    """Replicate the torus to ``(s + I) x (t + J)`` so every translate of
    ``pattern`` can be read without wraparound."""
    cells = pattern.cells if hasattr(pattern, "cells") else tuple(pattern)
    I = max(c[0] for c in cells) - min(c[0] for c in cells)
    J = max(c[1] for c in cells) - min(c[1] for c in cells)
    rows = np.arange(torus.s + I) % torus.s
    cols = np.arange(torus.t + J) % torus.t
    return ExtendedGrid(_frozen(torus.values[np.ix_(rows, cols)].copy()), I, J)
