import cmath
import math

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from dwcount.cyclotomic import (
    CycloValue,
    approx_complex,
    conjugate,
    cyclo_add,
    cyclo_mul,
    cyclo_root_power,
    cyclotomic_polynomial,
    extract_integer,
    reduce_canonical,
    render,
)
from dwcount.errors import InvalidModulus, ModulusMismatch, NotAnInteger


def z(N, *exps, denom=1):
    coeffs = [0] * N
    for e in exps:
        coeffs[e % N] += 1
    return CycloValue(N, coeffs, denom)


@st.composite
def cyclo_values(draw, N=None):
    if N is None:
        N = draw(st.integers(1, 16))
    coeffs = draw(st.lists(st.integers(-20, 20), min_size=N, max_size=N))
    denom = draw(st.integers(1, 12))
    return CycloValue(N, coeffs, denom)


@st.composite
def triples(draw):
    N = draw(st.integers(1, 16))
    return tuple(draw(cyclo_values(N)) for _ in range(3))


# --- roots, addition, multiplication ---------------------------------------

def test_root_power_examples():
    assert cyclo_root_power(4, 0).coeffs == (1, 0, 0, 0)
    assert cyclo_root_power(4, -3).coeffs == (0, 1, 0, 0)
    assert cyclo_root_power(1, 7).coeffs == (1,)
    with pytest.raises(InvalidModulus):
        cyclo_root_power(0, 1)


def test_add_examples():
    s = cyclo_add(z(4, 1), z(4, 1))
    assert s.coeffs == (0, 2, 0, 0) and s.denom == 1
    q = cyclo_add(CycloValue.integer(4, 1, 2), CycloValue.integer(4, 1, 3))
    assert (q.coeffs[0], q.denom) == (5, 6)
    x = z(4, 1, 3, denom=5)
    assert cyclo_add(x, CycloValue.zero(4)) == x
    with pytest.raises(ModulusMismatch):
        cyclo_add(z(4, 1), z(3, 1))


def test_mul_examples():
    assert cyclo_mul(z(4, 1), z(4, 3)).coeffs == (1, 0, 0, 0)
    sq = cyclo_mul(z(4, 0, 1), z(4, 0, 1))
    assert sq.coeffs == (1, 2, 1, 0)
    x = z(5, 2, 3, 3, denom=7)
    assert cyclo_mul(x, CycloValue.one(5)) == x
    with pytest.raises(ModulusMismatch):
        cyclo_mul(z(4, 1), z(8, 1))


# --- cyclotomic polynomials ------------------------------------------------

@pytest.mark.parametrize(
    "N, coeffs",
    [(1, (-1, 1)), (2, (1, 1)), (4, (1, 0, 1)), (9, (1, 0, 0, 1, 0, 0, 1)), (6, (1, -1, 1))],
)
def test_cyclotomic_polynomial_examples(N, coeffs):
    assert cyclotomic_polynomial(N) == coeffs


def test_cyclotomic_polynomial_against_sympy():
    x = sympy.Symbol("x")
    for N in range(1, 101):
        ref = sympy.Poly(sympy.cyclotomic_poly(N, x), x).all_coeffs()[::-1]
        assert list(cyclotomic_polynomial(N)) == [int(c) for c in ref], N


def test_cyclotomic_polynomial_divides_and_has_totient_degree():
    x = sympy.Symbol("x")
    for N in range(1, 101):
        phi = cyclotomic_polynomial(N)
        assert len(phi) - 1 == sympy.totient(N)
        _, rem = sympy.div(sympy.Poly(x**N - 1, x), sympy.Poly(list(phi[::-1]), x))
        assert rem.is_zero


# --- reduction and extraction ----------------------------------------------

def test_reduce_examples():
    assert reduce_canonical(z(4, 2)).basis_coeffs == (-1, 0)
    zero = reduce_canonical(z(4, 0, 1, 2, 3))
    assert zero.basis_coeffs == (0, 0) and zero.denom == 1
    seven = reduce_canonical(CycloValue.integer(9, 7))
    assert seven.basis_coeffs == (7, 0, 0, 0, 0, 0)


def test_reduce_normalizes_content():
    red = reduce_canonical(CycloValue(4, [2, 4, 0, 0], 6))
    assert red.basis_coeffs == (1, 2) and red.denom == 3


def test_root_power_N_is_one():
    for N in range(1, 101):
        assert reduce_canonical(cyclo_root_power(N, N)) == reduce_canonical(CycloValue.one(N))


def test_extract_examples():
    assert extract_integer(CycloValue.integer(4, 5)) == 5
    assert extract_integer(z(4, 0, 1, 2, 3)) == 0
    with pytest.raises(NotAnInteger):
        extract_integer(z(4, 0, 1))
    with pytest.raises(NotAnInteger):
        extract_integer(CycloValue.integer(4, 1, 3))
    assert extract_integer(CycloValue.integer(9, 6, 3)) == 2


def test_geometric_sum_law():
    for N in range(1, 26):
        for c in range(N):
            s = z(N, *(c * e for e in range(N)))
            assert extract_integer(s) == (N if c % N == 0 else 0), (N, c)


@settings(max_examples=200, deadline=None)
@given(triples())
def test_ring_axioms(t):
    x, y, w = t
    assert x * y == y * x
    assert (x * y) * w == x * (y * w)
    assert x * (y + w) == x * y + x * w
    assert x + y == y + x


@settings(max_examples=150, deadline=None)
@given(cyclo_values())
def test_reduce_idempotent_and_faithful(x):
    red = reduce_canonical(x)
    again = reduce_canonical(red.to_cyclo())
    assert again == red
    scale = 1 + sum(abs(c) for c in x.coeffs) / x.denom
    assert abs(approx_complex(x) - approx_complex(red)) <= 1e-8 * scale
    # adding a multiple of Phi_N does not change the class
    phi = cyclotomic_polynomial(x.N)
    shifted = list(x.coeffs)
    for i, c in enumerate(phi):
        if i < x.N:
            shifted[i] += 3 * c * x.denom
        else:
            shifted[i - x.N] += 3 * c * x.denom  # x^N = 1
    assert reduce_canonical(CycloValue(x.N, shifted, x.denom)) == red


@settings(max_examples=100, deadline=None)
@given(cyclo_values())
def test_reduce_agrees_with_sympy_remainder(x):
    X = sympy.Symbol("X")
    poly = sympy.Poly(list(x.coeffs[::-1]), X, domain="QQ") * sympy.Rational(1, x.denom)
    phi = sympy.Poly(list(cyclotomic_polynomial(x.N)[::-1]), X, domain="QQ")
    rem = poly.rem(phi)
    red = reduce_canonical(x)
    deg = len(red.basis_coeffs)
    ref = rem.all_coeffs()[::-1] if not rem.is_zero else []
    ref = list(ref) + [0] * (deg - len(ref))
    assert [sympy.Rational(c, red.denom) for c in red.basis_coeffs] == ref


# --- numerics, conjugation, rendering --------------------------------------

def test_approx_examples():
    assert abs(approx_complex(z(4, 1)) - 1j) < 1e-12
    assert abs(approx_complex(z(3, 0, 1, 2, denom=3))) < 1e-12
    assert approx_complex(CycloValue.integer(7, 5)) == 5 + 0j


@settings(max_examples=100, deadline=None)
@given(cyclo_values())
def test_approx_matches_direct_sum(x):
    ref = sum(c * cmath.exp(2j * math.pi * e / x.N) for e, c in enumerate(x.coeffs)) / x.denom
    scale = sum(abs(c) for c in x.coeffs) / x.denom
    assert abs(approx_complex(x) - ref) <= 1e-9 * max(scale, 1)


def test_conjugate_examples():
    assert conjugate(z(4, 1)).coeffs == (0, 0, 0, 1)
    assert conjugate(z(3, 0, 1)) == z(3, 0, 2)
    assert conjugate(CycloValue.integer(5, 5)) == CycloValue.integer(5, 5)


@settings(max_examples=100, deadline=None)
@given(cyclo_values())
def test_conjugate_is_complex_conjugate(x):
    assert abs(approx_complex(conjugate(x)) - approx_complex(x).conjugate()) < 1e-9 * (
        1 + sum(map(abs, x.coeffs))
    )
    assert conjugate(conjugate(x)).coeffs == x.coeffs


def test_semantic_equality_differs_from_vectors():
    a, b = z(4, 2), CycloValue.integer(4, -1)
    assert a.coeffs != b.coeffs
    assert a == b and hash(a) == hash(b)


@pytest.mark.parametrize(
    "x, text",
    [
        (CycloValue.integer(4, 1), "1"),
        (CycloValue.zero(9), "0"),
        (CycloValue.integer(9, 1, 3), "1/3"),
        (z(4, 0, 1), "1 + z"),
        (CycloValue(9, [0, 2, -1, 0, 0, 0, 0, 0, 0], 5), "(2*z - z^2)/5"),
        (CycloValue(4, [-3, 0, 0, 0]), "-3"),
    ],
)
def test_render(x, text):
    assert render(x) == text
