import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dbtorus import errors
from dbtorus.gf import (
    find_primitive_poly,
    is_irreducible,
    is_primitive,
    make_field,
)
from oracles import absolute_trace, nonzero_vectors, powers_of_x, poly_mulmod


def _elem(ctx, coeffs):
    return ctx.from_coeffs(coeffs)


# -- make_field ---------------------------------------------------------------


def test_default_modulus_gf16(f16):
    assert f16.modulus == (1, 1, 0, 0, 1)


def test_default_modulus_is_smallest_by_exhaustive_scan():
    # brute force: period of x is 15 only for primitive polys
    candidates = []
    for low in itertools.product(range(2), repeat=4):
        f = low + (1,)
        if low[0] and len(powers_of_x(list(f), 2)) == 15:
            candidates.append(sum(c << i for i, c in enumerate(low)))
    assert min(candidates) == 0b0011
    assert find_primitive_poly(2, 4) == (1, 1, 0, 0, 1)


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (2, 5), (3, 2), (3, 3), (5, 2), (7, 1)])
def test_default_modulus_generates_full_group(p, n):
    ctx = make_field(p, n)
    assert len(powers_of_x(list(ctx.modulus), p)) == p**n - 1


def test_prime_field_gf2():
    ctx = make_field(2, 1)
    assert ctx.modulus == (1, 1)
    assert ctx.alpha == 1
    assert ctx.order == 2


def test_prime_field_gf7_alpha_is_primitive_root():
    ctx = make_field(7, 1)
    assert sorted(ctx.exp(k) for k in range(6)) == [1, 2, 3, 4, 5, 6]


def test_not_primitive_modulus():
    # x^2+1 over GF(3): root has order 4, not 8
    with pytest.raises(errors.NotPrimitive):
        make_field(3, 2, (1, 0, 1))


def test_not_irreducible_modulus():
    with pytest.raises(errors.NotIrreducible):
        make_field(2, 4, (1, 0, 0, 0, 1))


def test_non_prime_characteristic():
    with pytest.raises(errors.NonPrimeP):
        make_field(4, 2)


def test_rabin_against_root_and_factor_scan():
    # degree 4 over GF(2): irreducible iff no factor of degree 1 or 2
    def has_small_factor(f):
        small = [(0, 1), (1, 1), (1, 1, 1)]
        for g in small:
            # remainder of f by g
            r = list(f)
            for k in range(len(r) - 1, len(g) - 2, -1):
                if r[k]:
                    for i, c in enumerate(g):
                        r[k - len(g) + 1 + i] ^= c
            if not any(r[: len(g) - 1]):
                return True
        return False

    for low in itertools.product(range(2), repeat=4):
        f = low + (1,)
        assert is_irreducible(f, 2) == (not has_small_factor(f))


def test_irreducible_but_not_primitive_gf16():
    f = (1, 1, 1, 1, 1)  # x^4+x^3+x^2+x+1, roots of order 5
    assert is_irreducible(f, 2)
    assert not is_primitive(f, 2)


# -- arithmetic ---------------------------------------------------------------


def test_pow_zero_exponent(f16):
    assert f16.pow(f16.alpha, 0) == 1


def test_alpha_to_the_fifth(f16):
    x = (0, 1, 0, 0)
    cur = (1, 0, 0, 0)
    for _ in range(5):
        cur = poly_mulmod(cur, x, [1, 1, 0, 0, 1], 2)
    assert cur == (0, 1, 1, 0)
    assert f16.coeffs(f16.pow(f16.alpha, 5)) == (0, 1, 1, 0)


def test_alpha3_times_alpha12(f16):
    a3 = f16.pow(f16.alpha, 3)
    a12 = f16.pow(f16.alpha, 12)
    assert poly_mulmod(f16.coeffs(a3), f16.coeffs(a12), [1, 1, 0, 0, 1], 2) == (1, 0, 0, 0)
    assert f16.mul(a3, a12) == 1


def test_inverse_of_zero(f16):
    with pytest.raises(errors.DivisionByZero):
        f16.inv(0)
    with pytest.raises(ZeroDivisionError):
        f16.arith("inv", 0)


@pytest.mark.parametrize("p,n", [(2, 4), (3, 3), (5, 2)])
def test_mul_matches_schoolbook(p, n):
    ctx = make_field(p, n)
    for a in range(ctx.order):
        for b in range(0, ctx.order, 3):
            assert ctx.coeffs(ctx.mul(a, b)) == poly_mulmod(ctx.coeffs(a), ctx.coeffs(b), list(ctx.modulus), p)


def test_tableless_matches_tables():
    with_tables = make_field(3, 4)
    without = make_field(3, 4, table_cap=0)
    assert not without.has_tables
    for a in range(0, 81, 7):
        for b in range(0, 81, 5):
            assert with_tables.mul(a, b) == without.mul(a, b)
        if a:
            assert with_tables.log(a) == without.log(a)
            assert with_tables.inv(a) == without.inv(a)


def test_table_cap_env(monkeypatch):
    monkeypatch.setenv("TORUS_TABLE_CAP", "8")
    assert not make_field(2, 4).has_tables
    assert make_field(2, 3).has_tables


@given(st.integers(0, 255), st.integers(0, 255), st.integers(0, 255))
def test_field_axioms_gf256(a, b, c):
    ctx = make_field(2, 8)
    assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
    assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
    if a:
        assert ctx.mul(a, ctx.inv(a)) == 1


@given(st.integers(0, 242), st.integers(0, 242))
def test_odd_characteristic_add_sub(a, b):
    ctx = make_field(3, 5)
    assert ctx.sub(ctx.add(a, b), b) == a
    assert ctx.add(a, ctx.neg(a)) == 0


# -- discrete log --------------------------------------------------------------


def test_log_examples(f16):
    assert f16.log(1) == 0
    assert f16.log(_elem(f16, (0, 1, 1, 0))) == 5
    assert f16.log(_elem(f16, (1, 1, 1, 0))) == 10


def test_log_of_zero(f16):
    with pytest.raises(errors.LogOfZero):
        f16.log(0)


@pytest.mark.parametrize("p,n", [(2, 4), (2, 10), (3, 5), (5, 3)])
def test_log_exp_roundtrip_exhaustive(p, n):
    ctx = make_field(p, n)
    for a in range(1, ctx.order):
        assert ctx.exp(ctx.log(a)) == a


def test_log_exp_roundtrip_gf2_16():
    ctx = make_field(2, 16)
    assert sorted(ctx.nonzero) == list(range(1, 1 << 16))
    assert all(ctx.exp(ctx.log(a)) == a for a in range(1, 1 << 16))


def test_bsgs_without_tables():
    ctx = make_field(2, 12, table_cap=0)
    ref = make_field(2, 12)
    for a in range(1, 4096, 37):
        assert ctx.log(a) == ref.log(a)


# -- traces --------------------------------------------------------------------


def test_trace_examples(f16):
    assert f16.trace(1) == 0
    assert f16.trace(f16.exp(3)) == 1
    assert f16.trace(f16.exp(5)) == 0


@pytest.mark.parametrize("p,n", [(2, 4), (3, 3), (5, 2), (2, 6)])
def test_trace_against_frobenius_sum(p, n):
    ctx = make_field(p, n)
    for a in range(ctx.order):
        assert ctx.trace(a) == absolute_trace(ctx.coeffs(a), list(ctx.modulus), p)


def test_relative_trace_examples(f16):
    beta = f16.exp(5)
    assert f16.trace_to_subfield(2, 1) == 0
    gamma = f16.exp(3)
    assert f16.add(gamma, f16.exp(12)) == f16.pow(beta, 2)
    assert f16.trace_to_subfield(2, gamma) == f16.pow(beta, 2)


def test_relative_trace_needs_divisor(f16):
    with pytest.raises(errors.NotADivisor):
        f16.trace_to_subfield(3, 1)


@pytest.mark.parametrize("p,n", [(2, 4), (2, 6), (3, 4), (2, 8)])
def test_trace_transitivity(p, n):
    ctx = make_field(p, n)
    for m in [d for d in range(1, n + 1) if n % d == 0]:
        for a in range(0, ctx.order, max(1, ctx.order // 200)):
            y = ctx.trace_to_subfield(m, a)
            assert ctx.in_subfield(y, m)
            assert ctx.trace(a) == ctx.relative_trace(y, m, 1)


@given(st.integers(0, 255), st.integers(0, 255), st.integers(0, 1))
def test_trace_is_linear(a, b, c):
    ctx = make_field(2, 8)
    assert ctx.trace(ctx.add(ctx.scale(c, a), b)) == (c * ctx.trace(a) + ctx.trace(b)) % 2


# -- coordinate map ---------------------------------------------------------------


def test_coord_map_zero_and_one(f16):
    assert f16.coord_map(1, 0) == (0, 0, 0, 0)
    assert f16.coord_map(1, 1) == (0, 0, 0, 1)


def test_coord_map_zero_form(f16):
    with pytest.raises(errors.ZeroForm):
        f16.coord_map(0, 1)


@pytest.mark.parametrize("p,n", [(2, 4), (3, 3), (2, 5)])
def test_coord_map_bijective_for_every_form(p, n):
    ctx = make_field(p, n)
    target = nonzero_vectors(p, n)
    for lam in range(1, ctx.order):
        images = [ctx.coord_map(lam, x) for x in range(1, ctx.order)]
        assert set(images) == target and len(images) == len(target)


# -- minimal polynomials and x^t - 1 -----------------------------------------------


def test_minimal_poly_of_alpha_over_gf4(f16):
    beta = f16.exp(5)
    assert f16.minimal_poly(2, f16.alpha).coeffs == (beta, 1, 1)


def test_minimal_poly_of_alpha_over_gf2(f16):
    assert f16.minimal_poly(1, f16.alpha).coeffs == (1, 1, 0, 0, 1)


def test_minimal_poly_of_one(f16):
    assert f16.minimal_poly(2, 1).coeffs == (f16.neg(1), 1)


@pytest.mark.parametrize("p,n", [(2, 4), (2, 6), (3, 4)])
def test_minimal_poly_properties(p, n):
    ctx = make_field(p, n)
    for m in [d for d in range(1, n) if n % d == 0]:
        for a in range(1, ctx.order):
            poly = ctx.minimal_poly(m, a)
            assert poly.coeffs[-1] == 1
            assert (n // m) % poly.degree == 0
            assert ctx.poly_eval(poly.coeffs, a) == 0
            assert all(ctx.in_subfield(c, m) for c in poly.coeffs)


def test_factor_unity_gf16(f16):
    beta = f16.exp(5)
    factors = f16.factor_unity(2, 5)
    assert [f.orbit for f in factors] == [(0,), (1, 4), (2, 3)]
    assert [f.degree for f in factors] == [1, 2, 2]
    assert factors[1].second_leading == f16.pow(beta, 2)
    assert factors[2].second_leading == beta


def test_factor_unity_trivial(f16):
    (f,) = f16.factor_unity(2, 1)
    assert f.coeffs == (f16.neg(1), 1)


def test_factor_unity_rejects_non_divisor(f16):
    with pytest.raises(errors.NotADivisor):
        f16.factor_unity(2, 7)


@pytest.mark.parametrize("p,n,m,t", [(2, 4, 2, 5), (2, 6, 3, 9), (2, 6, 2, 21), (2, 8, 4, 17), (3, 4, 2, 10), (3, 2, 1, 8)])
def test_factor_unity_reproduces_x_t_minus_one(p, n, m, t):
    ctx = make_field(p, n)
    factors = ctx.factor_unity(m, t)
    assert sum(f.degree for f in factors) == t
    prod = [1]
    for f in factors:
        prod = ctx._poly_mul(prod, f.coeffs)
        assert all(ctx.in_subfield(c, m) for c in f.coeffs)
    expected = [ctx.neg(1)] + [0] * (t - 1) + [1]
    assert prod == expected
