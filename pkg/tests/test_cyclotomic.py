import cmath
from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from qweyl.cyclotomic import (CycloNum, OrderMismatchError, cyclotomic_polynomial, embed,
                              find_root, from_json, make_root, multiplicative_order, to_json,
                              totient)

ORDERS = [2, 3, 4, 6, 12]


def z(L, k=1):
    return make_root(L, k)


def numeric(a: CycloNum) -> complex:
    w = cmath.exp(2j * cmath.pi / a.order)
    return sum(float(c) * w ** k for k, c in enumerate(a.coeffs))


def test_root_examples():
    assert make_root(4, 2) == -1
    assert make_root(7, 0) == 1
    assert make_root(3, 1) + make_root(3, 2) == -1
    assert make_root(5, 5) == 1
    assert make_root(6, -1) == make_root(6, 5)


def test_arithmetic_examples():
    i = z(4)
    assert i * i == -1
    x = z(3) + 2
    assert x + CycloNum.zero(3) == x
    assert (1 - z(3)) * (1 - z(3, 2)) == 3


def test_inverse_examples():
    assert CycloNum.rational(5, 2).inverse() == Fraction(1, 2)
    assert z(4).inverse() == z(4, 3) == -z(4)
    assert (1 - z(3)).inverse() == (1 - z(3, 2)) / 3
    assert (1 - z(3)).inverse() == Fraction(2, 3) + z(3) / 3


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        CycloNum.zero(6).inverse()


def test_embed_examples():
    assert embed(CycloNum.rational(2, -1), 4) == z(4, 2)
    x = z(5, 2) - 3
    assert embed(x, 5) == x
    assert embed(z(3), 6) == z(6, 2)
    with pytest.raises(ValueError):
        embed(z(4), 6)


def test_order_mismatch_rejected():
    with pytest.raises(OrderMismatchError):
        z(3) + z(6)
    with pytest.raises(OrderMismatchError):
        z(4) * z(2)


def test_coefficient_length_is_totient():
    for L in range(1, 25):
        assert len(z(L).coeffs) == totient(L)


@pytest.mark.parametrize("L", range(1, 25))
def test_cyclotomic_polynomials_multiply_to_x_pow_L_minus_1(L):
    x = sympy.Symbol("x")
    prod_poly = sympy.Integer(1)
    for d in sympy.divisors(L):
        prod_poly *= sum(c * x ** k for k, c in enumerate(cyclotomic_polynomial(d)))
    assert sympy.expand(prod_poly - (x ** L - 1)) == 0
    ours = list(cyclotomic_polynomial(L))
    theirs = sympy.Poly(sympy.cyclotomic_poly(L, x), x).all_coeffs()[::-1]
    assert ours == theirs


@pytest.mark.parametrize("L", range(1, 13))
def test_root_orders(L):
    for k in range(L):
        a = z(L, k)
        x, steps = a, 1
        while x != 1:
            x, steps = x * a, steps + 1
        assert steps == L // gcd(k, L)
        assert multiplicative_order(a) == steps


def test_multiplicative_order_non_root():
    assert multiplicative_order(CycloNum.rational(4, 2)) is None
    assert multiplicative_order(CycloNum.rational(2, -1)) == 2


def test_find_root():
    a = (z(12, 5) * 3) ** 4
    r = find_root(a, 4)
    assert r is not None and r ** 4 == a
    assert find_root(CycloNum.rational(3, 2), 2) is None


def test_json_roundtrip_and_shorthand():
    a = z(12, 7) * Fraction(-3, 4) + 2
    assert from_json(to_json(a)) == a
    assert to_json(a)["order"] == 12 and len(to_json(a)["coeffs"]) == 4
    assert from_json({"order": 4, "zeta_pow": 1, "scale": "2/3"}) == z(4) * Fraction(2, 3)
    assert from_json("-1/2", 6) == Fraction(-1, 2)
    assert from_json({"order": 3, "zeta_pow": 1}, order=6) == z(6, 2)
    with pytest.raises(ValueError):
        from_json({"order": 5, "coeffs": ["1/1"]})


def test_str_and_hash():
    assert str(CycloNum.zero(3)) == "0"
    assert hash(z(4, 2)) == hash(CycloNum.rational(4, -1))
    assert len({z(6, 3), CycloNum.rational(6, -1)}) == 1


def elements(L):
    coeff = st.fractions(min_value=-20, max_value=20, max_denominator=7)
    return st.lists(coeff, min_size=totient(L), max_size=totient(L)).map(lambda c: CycloNum(L, c))


@st.composite
def triples(draw):
    L = draw(st.sampled_from(ORDERS))
    e = elements(L)
    return draw(e), draw(e), draw(e)


@settings(max_examples=200, deadline=None)
@given(triples())
def test_field_axioms(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == 0 and a + CycloNum.zero(a.order) == a
    if not a.is_zero():
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@settings(max_examples=100, deadline=None)
@given(triples())
def test_numeric_oracle(t):
    a, b, _ = t
    assert abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-6 * (1 + abs(numeric(a) * numeric(b)))
    if not a.is_zero():
        assert abs(numeric(a.inverse()) * numeric(a) - 1) < 1e-6


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([(2, 4), (3, 6), (4, 12), (6, 12), (3, 12)]), st.data())
def test_embedding_is_a_homomorphism(orders, data):
    L, M = orders
    a, b = data.draw(elements(L)), data.draw(elements(L))
    assert embed(a + b, M) == embed(a, M) + embed(b, M)
    assert embed(a * b, M) == embed(a, M) * embed(b, M)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(ORDERS), st.data())
def test_canonical_form_is_idempotent(L, data):
    a = data.draw(elements(L))
    assert CycloNum(L, a.coeffs) == a
    assert CycloNum(L, a.coeffs).coeffs == a.coeffs
