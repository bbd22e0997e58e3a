from fractions import Fraction

import pytest

from bellpoly.adomian import (
    METHODS,
    AdomianPoly,
    Exp,
    Linear,
    PolyCoeffs,
    Power,
    TaylorAtU0,
    adomian_complete_exp,
    adomian_duan_rec1,
    adomian_duan_rec2,
    adomian_evaluate,
    adomian_evaluate_cleared,
    adomian_from_bell,
    adomian_from_ord_bell,
    adomian_param_oracle,
    adomian_rach,
    c_kn,
)
from bellpoly.bell import bell_complete_exp_scaled
from bellpoly.exactnum import ALPHA, BETA, E, EXPU0, ONE, MultiPoly, U, factorial

from oracles import adomian_sympy

half = Fraction(1, 2)


def test_c_kn_examples():
    for n in range(1, 8):
        assert c_kn(1, n) == U(n)
    assert c_kn(2, 2) == half * U(1) ** 2
    assert c_kn(2, 4) == half * U(2) ** 2 + U(1) * U(3)
    with pytest.raises(ValueError):
        c_kn(3, 2)


def test_rach_examples():
    assert adomian_rach(0).parts == {0: ONE}
    assert adomian_rach(1).parts == {1: U(1)}
    assert adomian_rach(2).parts == {1: U(2), 2: half * U(1) ** 2}
    assert adomian_rach(3).parts == {1: U(3), 2: U(1) * U(2), 3: Fraction(1, 6) * U(1) ** 3}


def test_ord_bell_examples():
    assert adomian_from_ord_bell(2).parts == {1: U(2), 2: half * U(1) ** 2}
    assert adomian_from_ord_bell(3) == adomian_rach(3)


def test_duan_examples():
    assert adomian_duan_rec1(1).parts == {1: U(1)}
    assert adomian_duan_rec1(2).parts == {1: U(2), 2: half * U(1) ** 2}
    assert adomian_duan_rec2(3) == adomian_rach(3)


def test_oracle_examples():
    assert adomian_param_oracle(0).parts == {0: ONE}
    assert adomian_param_oracle(2).parts == {1: U(2), 2: half * U(1) ** 2}
    assert adomian_param_oracle(5) == adomian_rach(5)


@pytest.mark.parametrize("n", range(0, 7))
def test_against_sympy_chain_rule(n):
    assert adomian_rach(n).parts == adomian_sympy(n)


@pytest.mark.parametrize("n", range(0, 11))
def test_all_routes_agree(n):
    ref = adomian_param_oracle(n)
    for name, route in METHODS.items():
        assert route(n) == ref, name


@pytest.mark.parametrize("n", range(1, 11))
def test_parts_homogeneous(n):
    for j, p in adomian_rach(n).parts.items():
        for mono, _ in p.items():
            assert sum(e for _, e in mono) == j
            assert sum(int(v[1:]) * e for v, e in mono) == n


def test_linear_collapse():
    assert adomian_evaluate(adomian_rach(0), Linear()) == U(0)
    for n in range(1, 11):
        assert adomian_evaluate(adomian_rach(n), Linear()) == U(n)


def test_exponential_collapse():
    for n in range(1, 11):
        value = adomian_evaluate(adomian_rach(n), Exp(1))
        expected = bell_complete_exp_scaled(n) * Fraction(1, factorial(n))
        assert value == expected * EXPU0
        assert adomian_complete_exp(n) == expected
    assert adomian_complete_exp(3) == U(3) + U(1) * U(2) + Fraction(1, 6) * U(1) ** 3
    assert adomian_complete_exp(1) == U(1)


def test_evaluate_examples():
    assert adomian_evaluate(adomian_rach(2), Linear()) == U(2)
    assert adomian_evaluate(adomian_rach(2), Exp(1)) == (U(2) + half * U(1) ** 2) * EXPU0
    # exp(-beta*u0) at u0 = 1 is exp(-beta) = E to the first power
    a2 = adomian_evaluate(adomian_rach(2), Exp(-BETA), 1)
    assert a2 == half * (BETA ** 2 * U(1) ** 2 - 2 * BETA * U(2)) * E
    a3 = adomian_evaluate(adomian_rach(3), Exp(-BETA), 1)
    assert a3 == Fraction(1, 6) * (-BETA ** 3 * U(1) ** 3 + 6 * BETA ** 2 * U(1) * U(2) - 6 * BETA * U(3)) * E


def test_exp_rate_scaling():
    # exp(c u): N^(j) = c^j exp(c u0)
    value = adomian_evaluate(adomian_rach(2), Exp(3))
    assert value == (3 * U(2) + Fraction(9, 2) * U(1) ** 2) * EXPU0
    assert adomian_evaluate(adomian_rach(2), Exp(3), 0) == 3 * U(2) + Fraction(9, 2) * U(1) ** 2
    with pytest.raises(ValueError):
        adomian_evaluate(adomian_rach(2), Exp(1), 1)


def test_power_evaluation():
    # u^(1 - 1/alpha) at u0 = 1, known A_2 times 2 alpha^2
    num, d = adomian_evaluate_cleared(adomian_rach(2), Power(1, -1), 1)
    assert d == 2
    assert num == half * (ALPHA - 1) * (2 * ALPHA * U(2) - U(1) ** 2)
    with pytest.raises(ValueError):
        adomian_evaluate(adomian_rach(2), Power(1, -1), 1)
    with pytest.raises(ValueError):
        adomian_evaluate(adomian_rach(2), Power(Fraction(1, 2)))
    # u^2 at u0 = 3: N' = 6, N'' = 2
    assert adomian_evaluate(adomian_rach(2), Power(2), 3) == 6 * U(2) + U(1) ** 2
    assert adomian_evaluate(adomian_rach(2), Power(Fraction(1, 2)), 1) == half * U(2) - Fraction(1, 8) * U(1) ** 2


def test_poly_and_taylor_specs():
    a = adomian_rach(2)
    # u^2 symbolic: N' = 2u0, N'' = 2
    assert adomian_evaluate(a, PolyCoeffs([0, 0, 1])) == 2 * U(0) * U(2) + U(1) ** 2
    assert adomian_evaluate(a, PolyCoeffs([0, 0, 1]), 3) == adomian_evaluate(a, Power(2), 3)
    assert adomian_evaluate(a, TaylorAtU0([0, 5, 7])) == 5 * U(2) + Fraction(7, 2) * U(1) ** 2


def test_d_u0_shift():
    a = AdomianPoly(1, {1: U(1)})
    assert a.d_u0().parts == {2: U(1)}
    assert a.partial("u1").parts == {1: ONE}
