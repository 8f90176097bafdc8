"""Exact arithmetic in GF(p) and GF(p^n).

Elements are packed integers: the coefficient vector ``(c_0, ..., c_{n-1})``
in the power basis ``1, a, ..., a^(n-1)`` of the primitive element ``a`` is
stored as ``c_0 + c_1 p + ... + c_{n-1} p^(n-1)``.  A GF(p) scalar ``c`` is
therefore the integer ``c`` itself, and subfield elements live in the big
field (membership is the Frobenius fixed-point test).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import (
    DivisionByZero,
    LogOfZero,
    NonPrimeP,
    NotADivisor,
    NotIrreducible,
    NotPrimitive,
    ZeroForm,
)

DEFAULT_TABLE_CAP = 1 << 24


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    if k % 2 == 0:
        return k == 2
    d = 3
    while d * d <= k:
        if k % d == 0:
            return False
        d += 2
    return True


def prime_factors(k: int) -> list[int]:
    """Distinct prime factors of ``k`` by trial division."""
    out = []
    d = 2
    while d * d <= k:
        if k % d == 0:
            out.append(d)
            while k % d == 0:
                k //= d
        d += 1 if d == 2 else 2
    if k > 1:
        out.append(k)
    return out


def divisors(k: int) -> list[int]:
    return [d for d in range(1, k + 1) if k % d == 0]


# ---------------------------------------------------------------------------
# Polynomials over GF(p), as coefficient lists low -> high.


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for k, fk in enumerate(f):
            a[shift + k] = (a[shift + k] - c * fk) % p
        _trim(a)
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _ppowmod(a: list[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(list(a), f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % p
    return _trim(out)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p**n, f, p), x, p):
        return False
    for r in prime_factors(n):
        h = _psub(_ppowmod(x, p ** (n // r), f, p), x, p)
        if len(_pgcd(list(f), h, p)) != 1:
            return False
    return True


def is_primitive(f: Sequence[int], p: int) -> bool:
    """True when the class of x has multiplicative order p^n - 1 mod ``f``."""
    n = len(f) - 1
    q1 = p**n - 1
    x = [0, 1]
    if _ppowmod(x, q1, f, p) != [1]:
        return False
    return all(_ppowmod(x, q1 // r, f, p) != [1] for r in prime_factors(q1))


def find_primitive_poly(p: int, n: int) -> tuple[int, ...]:
    """Smallest primitive monic polynomial of degree ``n``.

    Candidates are ordered by the integer whose base-p digits are the low
    coefficients ``c_0, ..., c_{n-1}`` (``c_0`` least significant).
    """
    for k in range(p**n):
        low = [(k // p**i) % p for i in range(n)]
        if low[0] == 0:
            continue
        f = tuple(low) + (1,)
        if is_irreducible(f, p) and is_primitive(f, p):
            return f
    raise NotPrimitive(f"no primitive polynomial of degree {n} over GF({p})")


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubfieldPoly:
    """Monic polynomial with coefficients in GF(p^m), low -> high.

    ``orbit`` lists the exponents of the roots when the polynomial was built
    from a cyclotomic coset.
    """

    m: int
    coeffs: tuple[int, ...]
    orbit: tuple[int, ...] = ()

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def second_leading(self) -> int:
        return self.coeffs[-2]


class FieldCtx:
    """The field GF(p^n) = GF(p)[x]/(modulus) with alpha = x primitive.

    Use :func:`make_field` to construct one.  Instances are never mutated
    after ``__init__``; discrete-log tables are built eagerly when
    ``p**n <= table_cap``.
    """

    def __init__(self, p: int, n: int, modulus: Sequence[int], table_cap: int | None = None):
        self.p = p
        self.n = n
        self.modulus = tuple(int(c) % p for c in modulus)
        self.order = p**n
        self.q1 = self.order - 1
        if table_cap is None:
            table_cap = int(os.environ.get("TORUS_TABLE_CAP", DEFAULT_TABLE_CAP))
        self.table_cap = table_cap
        self._modint = sum(c * p**i for i, c in enumerate(self.modulus))
        self.alpha = self.from_coeffs(_pmod([0, 1], self.modulus, p) + [0] * n)
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if self.order <= table_cap:
            self._build_tables()
        self._trace_basis = tuple(self._slow_trace(self.exp(k)) for k in range(n))

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, n={self.n}, modulus={list(self.modulus)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def _build_tables(self) -> None:
        exp = [0] * self.q1
        log = [-1] * self.order
        x = 1
        for k in range(self.q1):
            exp[k] = x
            log[x] = k
            x = self._mul_raw(x, self.alpha)
        self._exp, self._log = exp, log

    @property
    def has_tables(self) -> bool:
        return self._exp is not None

    # -- encoding ----------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.n):
            a, c = divmod(a, p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, c: Sequence[int]) -> int:
        if len(c) > self.n and any(c[self.n:]):
            raise ValueError("coefficient vector longer than the extension degree")
        out = 0
        for k in reversed(range(min(len(c), self.n))):
            out = out * self.p + int(c[k]) % self.p
        return out

    # -- arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out, scale = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.from_coeffs([-c for c in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def scale(self, c: int, a: int) -> int:
        """Multiply by the GF(p) scalar ``c``."""
        c %= self.p
        if c == 0:
            return 0
        if c == 1:
            return a
        return self.from_coeffs([c * x for x in self.coeffs(a)])

    def _mul_raw(self, a: int, b: int) -> int:
        if self.p == 2:
            r, n, m = 0, self.n, self._modint
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if (a >> n) & 1:
                    a ^= m
            return r
        prod = _pmul(self.coeffs(a), self.coeffs(b), self.p)
        return self.from_coeffs(_pmod(prod, self.modulus, self.p))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % self.q1]
        return self._mul_raw(a, b)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("0 has no inverse")
            return 1 if e == 0 else 0
        if self._log is not None:
            return self._exp[(self._log[a] * e) % self.q1]
        e %= self.q1
        result = 1
        while e:
            if e & 1:
                result = self._mul_raw(result, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return self.pow(a, -1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def exp(self, k: int) -> int:
        """alpha ** k."""
        if self._exp is not None:
            return self._exp[k % self.q1]
        return self.pow(self.alpha, k)

    def arith(self, op: str, a: int, b: int | None = None) -> int:
        if op == "add":
            return self.add(a, b)
        if op == "mul":
            return self.mul(a, b)
        if op == "inv":
            return self.inv(a)
        if op == "pow":
            return self.pow(a, b)
        raise ValueError(f"unknown operation {op!r}")

    def log(self, a: int) -> int:
        """Discrete log to base alpha, in ``[0, p^n - 1)``."""
        if a == 0:
            raise LogOfZero("log of 0 is undefined")
        if self._log is not None:
            return self._log[a]
        return self._bsgs(a)

    def _bsgs(self, a: int) -> int:
        m = math.isqrt(self.q1) + 1
        baby = {}
        x = 1
        for j in range(m):
            baby.setdefault(x, j)
            x = self._mul_raw(x, self.alpha)
        giant = self.pow(self.alpha, -m)
        y = a
        for i in range(m + 1):
            if y in baby:
                return (i * m + baby[y]) % self.q1
            y = self._mul_raw(y, giant)
        raise AssertionError("alpha is not primitive")  # unreachable for valid contexts

    # -- Frobenius and traces ---------------------------------------------

    def frobenius(self, a: int, k: int = 1) -> int:
        """a ** (p ** k)."""
        return self.pow(a, pow(self.p, k, self.q1)) if a else 0

    def _check_divisor(self, m: int, n: int | None = None) -> None:
        n = self.n if n is None else n
        if m < 1 or n % m:
            raise NotADivisor(f"{m} does not divide {n}")

    def relative_trace(self, a: int, top: int, bottom: int) -> int:
        """Trace from GF(p^top) down to GF(p^bottom) of ``a`` in GF(p^top)."""
        self._check_divisor(top)
        self._check_divisor(bottom, top)
        out, x = 0, a
        for _ in range(top // bottom):
            out = self.add(out, x)
            x = self.frobenius(x, bottom)
        return out

    def _slow_trace(self, a: int) -> int:
        return self.relative_trace(a, self.n, 1)

    def trace(self, a: int) -> int:
        """Absolute trace to GF(p), as an integer in ``[0, p)``."""
        if self.p == 2:
            mask = sum(1 << k for k, t in enumerate(self._trace_basis) if t)
            return (a & mask).bit_count() & 1
        return sum(c * t for c, t in zip(self.coeffs(a), self._trace_basis)) % self.p

    def trace_to_subfield(self, m: int, a: int) -> int:
        return self.relative_trace(a, self.n, m)

    def in_subfield(self, a: int, m: int) -> bool:
        return self.frobenius(a, m) == a

    def subfield_generator(self, m: int) -> int:
        """alpha ** ((p^n - 1)/(p^m - 1)), a generator of GF(p^m)^x."""
        self._check_divisor(m)
        return self.exp(self.q1 // (self.p**m - 1))

    def form(self, lam: int, x: int) -> int:
        """The GF(p)-linear form x -> tr(lam * x)."""
        return self.trace(self.mul(lam, x))

    def coord_map(self, lam: int, x: int) -> tuple[int, ...]:
        """(psi(x), psi(alpha x), ..., psi(alpha^(n-1) x)) for psi = tr(lam .)."""
        if lam == 0:
            raise ZeroForm("the linear form must be nonzero")
        out = []
        for _ in range(self.n):
            out.append(self.form(lam, x))
            x = self.mul(x, self.alpha)
        return tuple(out)

    # -- polynomials over subfields -----------------------------------------

    def _poly_mul(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = self.add(out[i + j], self.mul(x, y))
        return out

    def poly_from_roots(self, roots: Sequence[int]) -> list[int]:
        poly = [1]
        for r in roots:
            poly = self._poly_mul(poly, [self.neg(r), 1])
        return poly

    def poly_eval(self, coeffs: Sequence[int], x: int) -> int:
        out = 0
        for c in reversed(coeffs):
            out = self.add(self.mul(out, x), c)
        return out

    def frobenius_orbit(self, a: int, m: int) -> list[int]:
        orbit = [a]
        x = self.frobenius(a, m)
        while x != a:
            orbit.append(x)
            x = self.frobenius(x, m)
        return orbit

    def minimal_poly(self, m: int, a: int) -> SubfieldPoly:
        """Minimal polynomial of ``a`` over GF(p^m)."""
        self._check_divisor(m)
        return SubfieldPoly(m, tuple(self.poly_from_roots(self.frobenius_orbit(a, m))))

    def factor_unity(self, m: int, t: int) -> list[SubfieldPoly]:
        """Irreducible factors of x^t - 1 over GF(p^m), one per cyclotomic coset.

        The roots are powers of gamma = alpha^((p^n-1)/t); the coset of ``e``
        is ``{e * q^i mod t}`` with ``q = p^m``.
        """
        self._check_divisor(m)
        if t < 1 or self.q1 % t:
            raise NotADivisor(f"{t} does not divide {self.q1}")
        step = self.q1 // t
        q = self.p**m
        seen = set()
        out = []
        for e in range(t):
            if e in seen:
                continue
            coset = [e]
            x = e * q % t
            while x != e:
                coset.append(x)
                x = x * q % t
            seen.update(coset)
            roots = [self.exp(step * c) for c in coset]
            out.append(SubfieldPoly(m, tuple(self.poly_from_roots(roots)), tuple(coset)))
        return out

    @cached_property
    def nonzero(self) -> tuple[int, ...]:
        """All nonzero elements in the order alpha^0, alpha^1, ..."""
        return tuple(self.exp(k) for k in range(self.q1))


def make_field(p: int, n: int, modulus: Sequence[int] | None = None, table_cap: int | None = None) -> FieldCtx:
    """Build GF(p^n).

    ``modulus`` is a monic degree-``n`` polynomial, coefficients low -> high.
    When omitted the smallest primitive polynomial is used.
    """
    if not is_prime(p):
        raise NonPrimeP(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be at least 1")
    if modulus is None:
        modulus = find_primitive_poly(p, n)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {n}")
        if not is_irreducible(modulus, p):
            raise NotIrreducible(f"{list(modulus)} is reducible over GF({p})")
        if not is_primitive(modulus, p):
            raise NotPrimitive(f"the root of {list(modulus)} does not generate GF({p}^{n})^x")
    return FieldCtx(p, n, modulus, table_cap)
