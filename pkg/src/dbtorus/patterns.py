"""Sampling patterns on the trace torus.

A pattern is a set of cells; its translate by ``(a, b)`` reads the torus at
``((i + a) mod s, (j + b) mod t)``.  All vectors of cell values use the
row-major order of the cells.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import gflinalg
from .errors import (
    AllZeroPattern,
    DimensionExceeded,
    NoValidShift,
    NotABasis,
    NotSubfieldRegime,
    OutOfBounds,
    WrongSize,
)
from .gf import FieldCtx
from .torus import Torus


class Offset(NamedTuple):
    a: int
    b: int


@dataclass(frozen=True)
class Pattern:
    """Distinct cells, stored sorted row-major.  Works for any number of axes."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cells = tuple(sorted(tuple(int(x) for x in c) for c in self.cells))
        if not cells:
            raise ValueError("a pattern needs at least one cell")
        if len(set(cells)) != len(cells):
            raise ValueError("pattern cells must be distinct")
        if len({len(c) for c in cells}) != 1:
            raise ValueError("all cells must have the same number of axes")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def of(cls, cells: Iterable[Sequence[int]]) -> "Pattern":
        return cls(tuple(tuple(c) for c in cells))

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    @property
    def extents(self) -> tuple[int, ...]:
        return tuple(max(ax) - min(ax) for ax in zip(*self.cells))

    @property
    def I(self) -> int:
        return self.extents[0]

    @property
    def J(self) -> int:
        return self.extents[1]

    def translate(self, shift: Sequence[int], shape: Sequence[int]) -> "Pattern":
        return Pattern(tuple(tuple((x + d) % n for x, d, n in zip(c, shift, shape)) for c in self.cells))

    def normalized(self) -> "Pattern":
        lows = [min(ax) for ax in zip(*self.cells)]
        return Pattern(tuple(tuple(x - lo for x, lo in zip(c, lows)) for c in self.cells))

    def union(self, other: "Pattern") -> "Pattern":
        return Pattern(self.cells + other.cells)


def element_rank(ctx: FieldCtx, elements: Sequence[int]) -> int:
    if not elements:
        return 0
    return gflinalg.rank([ctx.coeffs(x) for x in elements], ctx.p)


def elements_of(torus: Torus, pattern: Pattern) -> list[int]:
    for i, j in pattern.cells:
        if not (0 <= i < torus.s and 0 <= j < torus.t):
            raise OutOfBounds(f"cell ({i}, {j}) outside {torus.s} x {torus.t}")
    return [torus.element_at(i, j) for i, j in pattern.cells]


def is_independent(torus: Torus, pattern: Pattern) -> bool:
    return element_rank(torus.ctx, elements_of(torus, pattern)) == len(pattern)


def is_basis(torus: Torus, pattern: Pattern) -> bool:
    return len(pattern) == torus.ctx.n and is_independent(torus, pattern)


def value_pattern(torus: Torus, pattern: Pattern, a: int, b: int) -> tuple[int, ...]:
    return tuple(int(torus.values[(i + a) % torus.s, (j + b) % torus.t]) for i, j in pattern.cells)


def all_value_patterns(torus: Torus, pattern: Pattern) -> np.ndarray:
    """Row ``a*t + b`` holds the value pattern of translate ``(a, b)``."""
    ci = np.array([c[0] for c in pattern.cells])
    cj = np.array([c[1] for c in pattern.cells])
    a = np.repeat(np.arange(torus.s), torus.t)[:, None]
    b = np.tile(np.arange(torus.t), torus.s)[:, None]
    return torus.values[(ci[None, :] + a) % torus.s, (cj[None, :] + b) % torus.t]


def verify_sampling(torus: Torus, pattern: Pattern) -> bool:
    """Brute force: all s*t translate readings are distinct and nonzero."""
    if len(pattern) != torus.ctx.n:
        raise WrongSize(f"pattern has {len(pattern)} cells, need {torus.ctx.n}")
    reads = all_value_patterns(torus, pattern)
    if not reads.any(axis=1).all():
        return False
    return len({r.tobytes() for r in reads}) == len(reads)


@dataclass(frozen=True, eq=False)
class SamplingCertificate:
    """The map z -> (psi(x z)) for x in the pattern, as a matrix on coefficients of z."""

    cells: tuple[tuple[int, int], ...]
    basis_elements: tuple[int, ...]
    phi_matrix: np.ndarray
    phi_inverse: np.ndarray


def certificate(torus: Torus, pattern: Pattern) -> SamplingCertificate:
    ctx = torus.ctx
    if len(pattern) != ctx.n:
        raise NotABasis(f"pattern has {len(pattern)} cells, need {ctx.n}")
    elems = elements_of(torus, pattern)
    phi = np.array(
        [[ctx.form(torus.lam, ctx.mul(x, ctx.exp(k))) for k in range(ctx.n)] for x in elems],
        dtype=np.int64,
    )
    return SamplingCertificate(pattern.cells, tuple(elems), phi, gflinalg.inverse(phi, ctx.p))


def decode(torus: Torus, cert: SamplingCertificate, values: Sequence[int]) -> Offset:
    """Translate whose value pattern equals ``values``."""
    ctx = torus.ctx
    if len(values) != ctx.n:
        raise WrongSize(f"expected {ctx.n} values, got {len(values)}")
    if not any(int(v) % ctx.p for v in values):
        raise AllZeroPattern("the all-zero pattern never occurs on the torus")
    z = ctx.from_coeffs([int(c) for c in gflinalg.matvec(cert.phi_inverse, values, ctx.p)])
    return Offset(*torus.position_of(ctx.log(z)))


def decode_table(torus: Torus, pattern: Pattern) -> dict[tuple[int, ...], Offset]:
    """Exhaustive reading -> translate table, for cross-validation."""
    reads = all_value_patterns(torus, pattern)
    return {tuple(int(v) for v in r): Offset(*divmod(k, torus.t)) for k, r in enumerate(reads)}


# ---------------------------------------------------------------------------
# Constructions.


def kronecker_pattern(ctx: FieldCtx, m: int) -> Pattern:
    """The m x (n/m) rectangle whose elements beta^i gamma^j form a basis."""
    if m < 1 or ctx.n % m:
        raise NotSubfieldRegime(f"{m} does not divide {ctx.n}")
    s = ctx.p**m - 1
    t = ctx.q1 // s
    if np.gcd(s, t) != 1:
        raise NotSubfieldRegime(f"gcd({s}, {t}) != 1")
    return Pattern(tuple((i, j) for i in range(m) for j in range(ctx.n // m)))


def greedy_basis_pattern(torus: Torus) -> Pattern:
    """First n cells in row-major order that keep the element set independent."""
    ctx = torus.ctx
    chosen, elems = [], []
    for i in range(torus.s):
        for j in range(torus.t):
            x = torus.element_at(i, j)
            if element_rank(ctx, elems + [x]) == len(elems) + 1:
                chosen.append((i, j))
                elems.append(x)
                if len(chosen) == ctx.n:
                    return Pattern(tuple(chosen))
    raise AssertionError("the torus elements span the field")  # unreachable


def find_extension_shift(torus: Torus, s1: Pattern, s2: Pattern) -> Offset:
    """First (a, b) in row-major order with T_ab(s2) disjoint from s1 and the union independent."""
    ctx = torus.ctx
    e1, e2 = elements_of(torus, s1), elements_of(torus, s2)
    d1, d2 = element_rank(ctx, e1), element_rank(ctx, e2)
    if d1 + d2 > ctx.n:
        raise DimensionExceeded(f"dim {d1} + dim {d2} > {ctx.n}")
    if d1 != len(s1) or d2 != len(s2):
        raise NotABasis("both patterns must be linearly independent")
    occupied = set(s1.cells)
    for a in range(torus.s):
        for b in range(torus.t):
            moved = s2.translate((a, b), torus.shape)
            if occupied.intersection(moved.cells):
                continue
            if element_rank(ctx, e1 + elements_of(torus, moved)) == d1 + d2:
                return Offset(a, b)
    raise NoValidShift("no translate of the second pattern extends the first")


def recursive_build(torus: Torus, s0: Pattern) -> Pattern:
    """Union of n/|s0| translates of ``s0`` (the first is s0 itself) forming a basis pattern."""
    n = torus.ctx.n
    if n % len(s0):
        raise DimensionExceeded(f"|S0| = {len(s0)} does not divide {n}")
    if not is_independent(torus, s0):
        raise NotABasis("seed pattern is not linearly independent")
    pattern = s0
    for _ in range(n // len(s0) - 1):
        off = find_extension_shift(torus, pattern, s0)
        pattern = pattern.union(s0.translate(off, torus.shape))
    return pattern


def separating_multiplier(ctx: FieldCtx, V: Sequence[int], W: Sequence[int]) -> int:
    """Smallest k with V and alpha^k W intersecting only in 0 (spans of the given elements)."""
    dv, dw = element_rank(ctx, V), element_rank(ctx, W)
    if dv + dw > ctx.n:
        raise DimensionExceeded(f"dim {dv} + dim {dw} > {ctx.n}")
    for k in range(ctx.q1):
        z = ctx.exp(k)
        if element_rank(ctx, list(V) + [ctx.mul(z, w) for w in W]) == dv + dw:
            return k
    raise NoValidShift("no multiplier separates the subspaces")


def random_subspace(ctx: FieldCtx, dim: int, rng: random.Random) -> list[int]:
    """A basis of a uniformly drawn spanning set of dimension ``dim``."""
    basis: list[int] = []
    while len(basis) < dim:
        x = rng.randrange(1, ctx.order)
        if element_rank(ctx, basis + [x]) == len(basis) + 1:
            basis.append(x)
    return basis


# ---------------------------------------------------------------------------
# Update rules.


@dataclass(frozen=True, eq=False)
class UpdateMatrix:
    """C with ``reading(x*y)[out] = C @ reading(x)[in]``.

    ``carried`` maps an input cell index k to the input index whose current
    value becomes cell k's value after the shift (cells that slide within
    the pattern need no arithmetic).
    """

    shift: tuple[int, int]
    in_cells: tuple[tuple[int, int], ...]
    out_cells: tuple[tuple[int, int], ...]
    coeffs: np.ndarray
    p: int
    carried: dict[int, int] = field(default_factory=dict)

    def apply(self, values: Sequence[int]) -> tuple[int, ...]:
        return tuple(int(v) for v in gflinalg.matvec(self.coeffs, values, self.p))


def new_cells(torus: Torus, pattern: Pattern, shift: Sequence[int]) -> Pattern:
    """Cells whose value after the shift is not already present in the pattern."""
    present = set(pattern.cells)
    out = [c for c in pattern.cells if ((c[0] + shift[0]) % torus.s, (c[1] + shift[1]) % torus.t) not in present]
    if not out:
        return pattern
    return Pattern(tuple(out))


def update_matrix(
    torus: Torus,
    s_in: Pattern,
    shift: Sequence[int],
    s_out: Pattern | None = None,
    *,
    only_new: bool = False,
) -> UpdateMatrix:
    ctx = torus.ctx
    if not is_basis(torus, s_in):
        raise NotABasis("input pattern must be a basis pattern")
    di, dj = int(shift[0]), int(shift[1])
    if s_out is None:
        s_out = new_cells(torus, s_in, (di, dj)) if only_new else s_in
    basis = elements_of(torus, s_in)
    # column k of basis_inv maps coefficient vectors to coordinates in the pattern basis
    basis_inv = gflinalg.inverse(np.array([ctx.coeffs(x) for x in basis]).T, ctx.p)
    y = ctx.exp(torus.t * di + torus.s * dj)
    rows = []
    for x in elements_of(torus, s_out):
        rows.append(gflinalg.matvec(basis_inv, ctx.coeffs(ctx.mul(y, x)), ctx.p))
    index = {c: k for k, c in enumerate(s_in.cells)}
    carried = {}
    for k, (i, j) in enumerate(s_in.cells):
        src = ((i + di) % torus.s, (j + dj) % torus.t)
        if src in index:
            carried[k] = index[src]
    return UpdateMatrix((di, dj), s_in.cells, s_out.cells, np.array(rows, dtype=np.int64), ctx.p, carried)
