from fractions import Fraction

import pytest
from sympy.functions.combinatorial.numbers import stirling

from bellpoly.bell import (
    PartitionSum,
    bell_complete_exp,
    bell_complete_exp_scaled,
    bell_complete_ord,
    bell_complete_ord_rec1,
    bell_complete_ord_rec2,
    bell_complete_rec1,
    bell_complete_rec2,
    bell_exp_rec_conv,
    bell_exp_rec_diff,
    bell_exp_rec_duan,
    bell_ord_rec_conv,
    bell_ord_rec_diff,
    bell_ord_rec_duan,
    bell_partial_exp,
    bell_partial_exp_scaled,
    bell_partial_ord,
    stirling_first_unsigned,
)
from bellpoly.exactnum import U, factorial

from oracles import bell_by_set_partitions, bell_sympy

NK = [(n, k) for n in range(1, 13) for k in range(1, n + 1)]


def test_partial_exp_examples():
    assert bell_partial_exp(4, 2) == 3 * U(2) ** 2 + 4 * U(1) * U(3)
    assert bell_partial_exp(3, 2) == 3 * U(1) * U(2)
    for n in range(1, 9):
        assert bell_partial_exp(n, n) == U(1) ** n


@pytest.mark.parametrize("n", range(1, 9))
def test_partial_exp_against_set_partitions(n):
    for k in range(1, n + 1):
        assert bell_partial_exp(n, k) == bell_by_set_partitions(n, k)


def test_partial_exp_against_sympy():
    for n, k in NK:
        assert bell_partial_exp(n, k) == bell_sympy(n, k)


def test_scaled_examples():
    for n in range(1, 9):
        assert bell_partial_exp_scaled(n, 1) == factorial(n) * U(n)
    assert bell_partial_exp_scaled(2, 2) == U(1) ** 2
    assert bell_partial_exp_scaled(4, 2) == 12 * U(2) ** 2 + 24 * U(1) * U(3)


def test_ord_examples():
    for n in range(1, 9):
        assert bell_partial_ord(n, 1) == U(n)
        assert bell_partial_ord(n, n) == U(1) ** n
    assert bell_partial_ord(4, 2) == U(2) ** 2 + 2 * U(1) * U(3)


def test_complete_examples():
    assert bell_complete_exp(3) == U(3) + 3 * U(1) * U(2) + U(1) ** 3
    assert bell_complete_exp(1) == U(1)
    assert bell_complete_exp(0) == 1
    assert bell_complete_exp(3).evaluate({"u1": 1, "u2": 1, "u3": 2}) == 6
    assert bell_complete_ord(1) == U(1)
    assert bell_complete_ord(2) == U(2) + Fraction(1, 2) * U(1) ** 2
    assert bell_complete_ord(3) == U(3) + U(1) * U(2) + Fraction(1, 6) * U(1) ** 3
    with pytest.raises(ValueError):
        bell_complete_exp(-1)


def test_duan_examples():
    assert bell_exp_rec_duan(4, 2).to_poly() == 12 * U(2) ** 2 + 24 * U(1) * U(3)
    five_four = bell_exp_rec_duan(5, 4)
    assert list(five_four.coeffs) == [(3, 1)]
    # sympy: bell(5, 4, (u1, 2*u2)) = 20*u1**3*u2
    assert five_four.to_poly() == 20 * U(1) ** 3 * U(2)
    assert bell_exp_rec_duan(2, 2).to_poly() == U(1) ** 2
    assert bell_ord_rec_duan(4, 2).to_poly() == U(2) ** 2 + 2 * U(1) * U(3)
    assert bell_ord_rec_duan(3, 3).to_poly() == U(1) ** 3
    assert bell_ord_rec_duan(6, 3).to_poly() == bell_partial_ord(6, 3)


def test_conv_and_diff_examples():
    assert bell_exp_rec_conv(2, 2) == U(1) ** 2
    assert bell_exp_rec_conv(4, 2) == 12 * U(2) ** 2 + 24 * U(1) * U(3)
    assert bell_exp_rec_conv(3, 2) == 6 * U(1) * U(2)
    assert bell_exp_rec_diff(3, 2) == 6 * U(1) * U(2)
    assert bell_exp_rec_diff(4, 2) == 12 * U(2) ** 2 + 24 * U(1) * U(3)
    # sympy: bell(4, 3, (u1, 2*u2)) = 12*u1**2*u2
    assert bell_exp_rec_diff(4, 3) == 12 * U(1) ** 2 * U(2)
    assert bell_ord_rec_conv(4, 2) == U(2) ** 2 + 2 * U(1) * U(3)
    assert bell_ord_rec_conv(2, 2) == U(1) ** 2
    assert bell_ord_rec_diff(5, 2) == bell_partial_ord(5, 2) == 2 * U(2) * U(3) + 2 * U(1) * U(4)


@pytest.mark.parametrize("n, k", NK)
def test_all_routes_agree(n, k):
    s = bell_partial_exp_scaled(n, k)
    o = bell_partial_ord(n, k)
    assert bell_exp_rec_duan(n, k).to_poly() == s
    assert bell_exp_rec_conv(n, k) == s
    assert bell_exp_rec_diff(n, k) == s
    assert bell_ord_rec_duan(n, k).to_poly() == o
    assert bell_ord_rec_conv(n, k) == o
    assert bell_ord_rec_diff(n, k) == o
    assert s * Fraction(factorial(k), factorial(n)) == o


@pytest.mark.parametrize("n, k", NK)
def test_homogeneity(n, k):
    for mono, _ in bell_partial_exp(n, k).items():
        assert sum(e for _, e in mono) == k
        assert sum(int(v[1:]) * e for v, e in mono) == n


def test_complete_recursions():
    for n in range(0, 11):
        direct = bell_complete_exp_scaled(n)
        assert bell_complete_rec1(n) == direct
        assert bell_complete_rec2(n) == direct
        assert bell_complete_ord_rec1(n) == bell_complete_ord(n)
        assert bell_complete_ord_rec2(n) == bell_complete_ord(n)
    assert bell_complete_rec1(2) == U(1) ** 2 + 2 * U(2)
    assert bell_complete_rec1(1) == U(1)


def test_partition_sum_bump_first():
    # (n-1)! u1^k1 / k1! ... -> coefficient picks up 1/(k1+1)
    s = PartitionSum(3, 2, {(1, 1): 6})
    bumped = s.bump_first()
    assert (bumped.n, bumped.k) == (4, 3)
    assert dict(bumped.coeffs) == {(2, 1): 3}


def test_partition_sum_rejects_bad_vectors():
    with pytest.raises(ValueError):
        PartitionSum(4, 2, {(2, 0, 0): 1})


def test_stirling_examples():
    assert stirling_first_unsigned(4, 2) == 11
    assert stirling_first_unsigned(0, 0) == 1
    for n in range(1, 13):
        assert stirling_first_unsigned(n, n) == 1
        assert sum(stirling_first_unsigned(n, k) for k in range(n + 1)) == factorial(n)
        for k in range(n + 1):
            assert stirling_first_unsigned(n, k) == stirling(n, k, kind=1)
    with pytest.raises(ValueError):
        stirling_first_unsigned(3, 4)


def test_bell_at_factorials_is_stirling():
    for n in range(1, 13):
        for k in range(1, n + 1):
            value = bell_partial_exp(n, k).evaluate({f"u{j}": factorial(j - 1) for j in range(1, n - k + 2)})
            assert value == stirling_first_unsigned(n, k)
