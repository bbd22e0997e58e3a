from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bellpoly.exactnum import (
    ALPHA,
    BETA,
    MultiPoly,
    U,
    binomial,
    factorial,
    falling,
    from_json,
    poly_add,
    poly_mul,
    poly_partial,
    poly_pow,
    poly_subst,
    to_json,
    to_text,
)

VARS = ["u1", "u2", "u3", "x", "alpha", "beta", "E"]

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)
monomials = st.lists(st.tuples(st.sampled_from(VARS), st.integers(1, 3)), max_size=3)
polys = st.dictionaries(monomials.map(tuple), fractions, max_size=5).map(
    lambda d: sum((MultiPoly({m: c}) for m, c in d.items()), MultiPoly())
)


def test_add_examples():
    assert poly_add(U(1), MultiPoly()) == U(1)
    s = poly_add(U(1) + U(2), -U(2))
    assert s == U(1)
    assert len(s.terms) == 1
    assert poly_add(Fraction(1, 2) * U(1) ** 2, Fraction(1, 3) * U(1) ** 2) == Fraction(5, 6) * U(1) ** 2


def test_mul_examples():
    assert poly_mul(U(1), MultiPoly.const(1)) == U(1)
    assert poly_mul(U(1) + U(2), U(1) - U(2)) == U(1) ** 2 - U(2) ** 2
    assert poly_mul(ALPHA * U(1), BETA * U(1)) == MultiPoly({(("alpha", 1), ("beta", 1), ("u1", 2)): 1})


def test_pow_examples():
    assert poly_pow(U(1), 0) == 1
    assert poly_pow(U(1) / 2, 2) == Fraction(1, 4) * U(1) ** 2
    assert poly_pow(U(1) + U(2), 2) == U(1) ** 2 + 2 * U(1) * U(2) + U(2) ** 2
    with pytest.raises(ValueError):
        U(1) ** -1


def test_partial_examples():
    assert poly_partial(U(1) ** 2 * U(2), "u1") == 2 * U(1) * U(2)
    assert poly_partial(U(1) ** 3, "u2").is_zero()
    assert poly_partial(3 * U(2) ** 2 + 4 * U(1) * U(3), "u1") == 4 * U(3)


def test_subst_examples():
    assert poly_subst(U(1) ** 2, {"u1": U(2)}) == U(2) ** 2
    assert poly_subst(U(1) * U(2), {"u1": 1, "u2": 1}) == 1
    n = 3
    p = factorial(n) * (-ALPHA * BETA) ** n
    assert poly_subst(p, {"alpha": -1, "beta": 1}) == 6


def test_subst_is_simultaneous():
    # swap: u1 -> u2, u2 -> u1 must not chain
    assert poly_subst(U(1) ** 2 * U(2), {"u1": U(2), "u2": U(1)}) == U(2) ** 2 * U(1)


def test_unknown_variable_rejected():
    with pytest.raises(ValueError):
        MultiPoly.var("y")


def test_text_rendering():
    assert to_text(U(2) + Fraction(1, 2) * U(1) ** 2) == "u2 + 1/2*u1^2"
    assert to_text(-U(2) - 3 * U(1) ** 2) == "-u2 - 3*u1^2"
    assert to_text(MultiPoly()) == "0"
    assert to_text(MultiPoly.const(Fraction(-2, 3))) == "-2/3"


def test_json_schema():
    p = Fraction(1, 2) * U(1) ** 2 + U(2)
    assert to_json(p) == '[{"coeff":"1/1","monomial":{"u2":1}},{"coeff":"1/2","monomial":{"u1":2}}]'


def test_integer_helpers():
    assert [factorial(i) for i in range(6)] == [1, 1, 2, 6, 24, 120]
    assert falling(5, 3) == 60
    assert falling(5, 0) == 1
    assert falling(ALPHA, 2) == ALPHA ** 2 - ALPHA
    assert binomial(6, 2) == 15
    assert binomial(3, 5) == 0


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


@settings(max_examples=60, deadline=None)
@given(polys, polys, fractions, st.sampled_from(VARS))
def test_partial_linear_and_leibniz(a, b, q, v):
    assert (a * q + b).partial(v) == a.partial(v) * q + b.partial(v)
    assert (a * b).partial(v) == a.partial(v) * b + a * b.partial(v)


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_canonical_form(a, b):
    assert (to_json(a) == to_json(b)) == (a - b).is_zero()
    assert from_json(to_json(a)) == a


@settings(max_examples=40, deadline=None)
@given(polys, st.integers(0, 4))
def test_pow_matches_repeated_product(a, e):
    expected = MultiPoly.const(1)
    for _ in range(e):
        expected = expected * a
    assert a ** e == expected
