"""De Bruijn N-tori from pairwise-coprime factorizations of p^n - 1.

Axis k uses the generator ``alpha^(P / P_k)`` of the order-P_k subgroup, so
index ``(i_1, ..., i_N)`` carries exponent ``sum_k i_k * P / P_k``.  The
tensor is stored row-major (last axis fastest), axes in caller order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import BadProduct, NotCoprime, OutOfBounds, TheoremViolation, WrongSize
from .gf import FieldCtx
from .patterns import Pattern, element_rank
from .torus import Torus, build_torus, form_values


@dataclass(frozen=True, eq=False)
class NTorus:
    ctx: FieldCtx
    dims: tuple[int, ...]
    lam: int
    exponents: np.ndarray
    values: np.ndarray

    @property
    def cofactors(self) -> tuple[int, ...]:
        """P / P_k for each axis: the exponent of that axis' generator."""
        total = math.prod(self.dims)
        return tuple(total // d for d in self.dims)

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(self.ctx.exp(c) for c in self.cofactors)

    def exponent_at(self, index: Sequence[int]) -> int:
        return sum(i * c for i, c in zip(index, self.cofactors)) % self.ctx.q1

    def element_at(self, index: Sequence[int]) -> int:
        return self.ctx.exp(self.exponent_at(index))


def build_ntorus(ctx: FieldCtx, dims: Sequence[int], lam: int = 1) -> NTorus:
    dims = tuple(int(d) for d in dims)
    if not dims or any(d < 1 for d in dims):
        raise BadProduct("dimensions must be positive")
    for a, b in combinations(dims, 2):
        if math.gcd(a, b) != 1:
            raise NotCoprime(f"gcd({a}, {b}) != 1")
    if math.prod(dims) != ctx.q1:
        raise BadProduct(f"product of {dims} != {ctx.q1}")
    table = form_values(ctx, lam)
    total = ctx.q1
    exps = np.zeros(dims, dtype=np.int64)
    for axis, d in enumerate(dims):
        shape = [1] * len(dims)
        shape[axis] = d
        exps = exps + np.arange(d).reshape(shape) * (total // d)
    exps %= total
    if not np.array_equal(np.sort(exps, axis=None), np.arange(total)):
        raise TheoremViolation("index map is not a bijection")
    exps.flags.writeable = False
    vals = table[exps]
    vals.flags.writeable = False
    return NTorus(ctx, dims, lam, exps, vals)


def elements_of_nd(nt: NTorus, pattern: Pattern) -> list[int]:
    for c in pattern.cells:
        if len(c) != len(nt.dims) or not all(0 <= x < d for x, d in zip(c, nt.dims)):
            raise OutOfBounds(f"cell {c} outside {nt.dims}")
    return [nt.element_at(c) for c in pattern.cells]


def is_basis_nd(nt: NTorus, pattern: Pattern) -> bool:
    return len(pattern) == nt.ctx.n and element_rank(nt.ctx, elements_of_nd(nt, pattern)) == nt.ctx.n


def all_value_patterns_nd(nt: NTorus, pattern: Pattern) -> np.ndarray:
    """Row r holds the reading of the translate by the r-th index in row-major order."""
    grids = np.indices(nt.dims).reshape(len(nt.dims), -1)
    cols = []
    for c in pattern.cells:
        idx = tuple((grids[k] + c[k]) % d for k, d in enumerate(nt.dims))
        cols.append(nt.values[idx])
    return np.stack(cols, axis=1)


def verify_sampling_nd(nt: NTorus, pattern: Pattern) -> bool:
    """Brute force over all translates: readings distinct and nonzero."""
    if len(pattern) != nt.ctx.n:
        raise WrongSize(f"pattern has {len(pattern)} cells, need {nt.ctx.n}")
    elements_of_nd(nt, pattern)
    reads = all_value_patterns_nd(nt, pattern)
    if not reads.any(axis=1).all():
        return False
    return len({r.tobytes() for r in reads}) == len(reads)


def greedy_basis_pattern_nd(nt: NTorus) -> Pattern:
    """First n indices in row-major order keeping the element set independent."""
    chosen, elems = [], []
    for index in np.ndindex(*nt.dims):
        x = nt.element_at(index)
        if element_rank(nt.ctx, elems + [x]) == len(elems) + 1:
            chosen.append(index)
            elems.append(x)
            if len(chosen) == nt.ctx.n:
                return Pattern(tuple(chosen))
    raise AssertionError("the torus elements span the field")  # unreachable


def to_torus2d(nt: NTorus) -> Torus:
    """View a 2-axis N-torus as the 2-D torus with s, t = dims."""
    if len(nt.dims) != 2:
        raise WrongSize("only 2-axis tori convert to the 2-D type")
    return build_torus(nt.ctx, nt.dims[0], nt.dims[1], nt.lam)
