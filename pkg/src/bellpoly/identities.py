"""Exact checks of the Bell-polynomial identities that come out of solving
u' = alpha*exp(-beta*u) and u' = alpha*u^(1-1/alpha) by decomposition.

Each check builds both sides as polynomials (alpha, beta kept formal where the
identity is stated for all real parameters) and compares them exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bell import (
    bell_complete_exp,
    bell_partial_exp,
    bell_partial_ord,
    stirling_first_unsigned,
)
from .exactnum import ALPHA, BETA, ONE, ZERO, MultiPoly, binomial, factorial, falling, u_name

# (alpha, beta) pairs of the four numeric specializations, in the order they are listed
SPECIALIZATIONS = ((-1, 1), (1, 1), (-1, -1), (1, -1))


@dataclass(frozen=True)
class IdentityReport:
    name: str
    n: int
    lhs: MultiPoly
    rhs: MultiPoly
    m: int | None = None

    @property
    def holds(self) -> bool:
        return (self.lhs - self.rhs).is_zero()


def _bindings(args: list) -> dict:
    return {u_name(j + 1): a for j, a in enumerate(args)}


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def exp_identity_args(n: int, alpha=ALPHA, beta=BETA) -> list:
    """Argument j (1-based) is (-1)^(j-1) (j-1)! alpha^j beta^(j-1)."""
    return [(-1) ** (j - 1) * factorial(j - 1) * MultiPoly.coerce(alpha) ** j * MultiPoly.coerce(beta) ** (j - 1)
            for j in range(1, n + 1)]


def exp_identity_lhs(n: int, alpha=ALPHA, beta=BETA) -> MultiPoly:
    args = exp_identity_args(n, alpha, beta)
    neg_beta = -MultiPoly.coerce(beta)
    total = ZERO
    for k in range(1, n + 1):
        total = total + neg_beta ** k * bell_partial_exp(n, k).subst(_bindings(args[: n - k + 1]))
    return total


def verify_exp_identity(n: int) -> IdentityReport:
    """sum_k (-beta)^k B_{n,k}(0!alpha, -1!alpha^2 beta, ...) = n! (-alpha beta)^n."""
    _check_n(n)
    return IdentityReport("exp", n, exp_identity_lhs(n), factorial(n) * (-ALPHA * BETA) ** n)


def verify_exp_specializations(n: int) -> list[IdentityReport]:
    """The four (alpha, beta) in {(-1,1), (1,1), (-1,-1), (1,-1)} instances.

    The left side is computed directly at numeric arguments; the right sides
    are n!, n!(-1)^n, n!(-1)^n, n!.
    """
    _check_n(n)
    nf = factorial(n)
    rhs = (nf, nf * (-1) ** n, nf * (-1) ** n, nf)
    return [
        IdentityReport(f"exp[alpha={a},beta={b}]", n, exp_identity_lhs(n, a, b), MultiPoly.const(r))
        for (a, b), r in zip(SPECIALIZATIONS, rhs)
    ]


def ord_identity_args(n: int, alpha=ALPHA, beta=BETA) -> list:
    """Argument j is (-1)^(j-1) alpha^j beta^(j-1) / j."""
    return [MultiPoly.coerce(alpha) ** j * MultiPoly.coerce(beta) ** (j - 1) * Fraction((-1) ** (j - 1), j)
            for j in range(1, n + 1)]


def ord_identity_lhs(n: int, alpha=ALPHA, beta=BETA) -> MultiPoly:
    args = ord_identity_args(n, alpha, beta)
    neg_beta = -MultiPoly.coerce(beta)
    total = ZERO
    for k in range(1, n + 1):
        term = bell_partial_ord(n, k).subst(_bindings(args[: n - k + 1]))
        total = total + neg_beta ** k * term * Fraction(1, factorial(k))
    return total


def verify_ord_identity(n: int) -> IdentityReport:
    """sum_k (-beta)^k / k! * ordinary B_{n,k}(alpha, -alpha^2 beta / 2, ...) = (-alpha beta)^n."""
    _check_n(n)
    return IdentityReport("ord", n, ord_identity_lhs(n), (-ALPHA * BETA) ** n)


def verify_ord_specializations(n: int) -> list[IdentityReport]:
    _check_n(n)
    s = (-1) ** n
    rhs = (1, s, s, 1)
    return [
        IdentityReport(f"ord[alpha={a},beta={b}]", n, ord_identity_lhs(n, a, b), MultiPoly.const(r))
        for (a, b), r in zip(SPECIALIZATIONS, rhs)
    ]


def cleared_falling_inverse(k: int, n: int) -> MultiPoly:
    """alpha^n * (1 - 1/alpha)_k as a polynomial (needs k <= n).

    (1 - 1/alpha)_k = alpha^-k prod_{i<k} ((1 - i) alpha - 1).
    """
    if k > n:
        raise ValueError("clearing power must be at least k")
    out = ALPHA ** (n - k)
    for i in range(k):
        out = out * ((1 - i) * ALPHA - 1)
    return out


def verify_falling_factorial_identity(n: int) -> IdentityReport:
    """sum_k (1 - 1/alpha)_k B_{n,k}((alpha)_1, ..., (alpha)_{n-k+1}) = (alpha - 1)_n.

    Both sides are multiplied by alpha^n, which clears every denominator.
    """
    _check_n(n)
    args = [falling(ALPHA, j) for j in range(1, n + 1)]
    lhs = ZERO
    for k in range(1, n + 1):
        lhs = lhs + cleared_falling_inverse(k, n) * bell_partial_exp(n, k).subst(_bindings(args[: n - k + 1]))
    rhs = ALPHA ** n * falling(ALPHA - 1, n)
    return IdentityReport("falling", n, lhs, rhs)


def verify_binomial_identity(m: int, n: int) -> IdentityReport:
    """sum_k (1/k!) (1 - 1/m)_k ordinary B_{n,k}(C(m,1), C(m,2), ...) = C(m-1, n), m > n."""
    _check_n(n)
    if not isinstance(m, int) or m <= n:
        raise ValueError(f"need m > n, got m={m}, n={n}")
    args = [binomial(m, j) for j in range(1, n + 1)]
    lhs = Fraction(0)
    for k in range(1, n + 1):
        value = bell_partial_ord(n, k).evaluate(_bindings(args[: n - k + 1]))
        lhs += falling(1 - Fraction(1, m), k) * value / factorial(k)
    return IdentityReport("binomial", n, MultiPoly.const(lhs), MultiPoly.const(binomial(m - 1, n)), m=m)


def verify_complete_bell_remark(n: int) -> list[IdentityReport]:
    """B_n(-0!, 1!, ..., (-1)^n (n-1)!) = (-1)^n n! and B_n(0!, 1!, ..., (n-1)!) = n!."""
    _check_n(n)
    b = bell_complete_exp(n)
    alternating = b.evaluate({u_name(j): (-1) ** j * factorial(j - 1) for j in range(1, n + 1)})
    plain = b.evaluate({u_name(j): factorial(j - 1) for j in range(1, n + 1)})
    nf = factorial(n)
    return [
        IdentityReport("complete-bell[alternating]", n, MultiPoly.const(alternating), MultiPoly.const((-1) ** n * nf)),
        IdentityReport("complete-bell[factorials]", n, MultiPoly.const(plain), MultiPoly.const(nf)),
    ]


def stirling_row_from_bell(n: int) -> list[Fraction]:
    """B_{n,k}(0!, 1!, ..., (n-k)!) for k = 1..n."""
    return [
        bell_partial_exp(n, k).evaluate({u_name(j): factorial(j - 1) for j in range(1, n - k + 2)})
        for k in range(1, n + 1)
    ]


def verify_stirling_connection(n: int) -> IdentityReport:
    """Row n of B_{n,k}(0!, 1!, ...) against unsigned Stirling numbers of the first kind.

    The report compares the two rows encoded as polynomials in u1 (k -> u1^k) and
    also folds in the row sum n!, so ``holds`` covers both facts.
    """
    _check_n(n)
    bell_row = stirling_row_from_bell(n)
    stir_row = [stirling_first_unsigned(n, k) for k in range(1, n + 1)]
    x = MultiPoly.var("u1")
    lhs = sum((x ** k * v for k, v in enumerate(bell_row, 1)), ZERO)
    rhs = sum((x ** k * v for k, v in enumerate(stir_row, 1)), ZERO)
    lhs = lhs + MultiPoly.const(sum(bell_row))
    rhs = rhs + MultiPoly.const(factorial(n))
    return IdentityReport("stirling", n, lhs, rhs)


IDENTITIES = ("exp", "ord", "falling", "binomial", "stirling", "complete-bell")


def run_identity(name: str, n: int, m: int | None = None) -> list[IdentityReport]:
    """All reports of one identity family at order n (binomial needs m > n)."""
    if name == "exp":
        return [verify_exp_identity(n), *verify_exp_specializations(n)]
    if name == "ord":
        return [verify_ord_identity(n), *verify_ord_specializations(n)]
    if name == "falling":
        return [verify_falling_factorial_identity(n)]
    if name == "binomial":
        if m is None:
            return [verify_binomial_identity(mm, n) for mm in range(n + 1, n + 4)]
        return [verify_binomial_identity(m, n)]
    if name == "stirling":
        return [verify_stirling_connection(n)]
    if name == "complete-bell":
        return verify_complete_bell_remark(n)
    raise ValueError(f"unknown identity {name!r}; choose from {', '.join(IDENTITIES)}")
