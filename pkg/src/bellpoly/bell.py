"""Partial and complete Bell polynomials, exponential and ordinary.

Every polynomial here is built twice or more: once straight from the
partition-vector sum and once from a recursion, so the routes can be
compared exactly.

"Scaled" means the arguments are u_j -> j! * u_j, i.e. B_{n,k}(1!u1, 2!u2, ...).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .exactnum import ONE, U, ZERO, MultiPoly, factorial, falling, u_name
from .partitions import PartitionVector, _lambda_parts

__all__ = [
    "PartitionSum",
    "bell_partial_exp",
    "bell_partial_exp_scaled",
    "bell_partial_ord",
    "bell_complete_exp",
    "bell_complete_exp_scaled",
    "bell_complete_ord",
    "bell_exp_rec_duan",
    "bell_ord_rec_duan",
    "bell_exp_rec_conv",
    "bell_exp_rec_diff",
    "bell_ord_rec_conv",
    "bell_ord_rec_diff",
    "bell_complete_rec1",
    "bell_complete_rec2",
    "bell_complete_ord_rec1",
    "bell_complete_ord_rec2",
    "stirling_first_unsigned",
]


def _check(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")


def _monomial(parts: tuple[int, ...]) -> tuple:
    return tuple((u_name(j + 1), c) for j, c in enumerate(parts) if c)


@dataclass(frozen=True)
class PartitionSum:
    """A Bell polynomial kept as ``{lambda vector: coefficient}``.

    The polynomial is sum(coeff * prod u_j^k_j). Keeping the vectors makes the
    k_1 -> k_1 + 1 substitution well defined, which a flattened polynomial
    cannot support.
    """

    n: int
    k: int
    coeffs: Mapping[tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        length = self.n - self.k + 1
        for parts, c in dict(self.coeffs).items():
            parts = tuple(parts)
            v = PartitionVector(parts, self.n, self.k)
            if len(parts) != length or not v.is_valid():
                raise ValueError(f"{parts} is not a lambda vector of n={self.n}, k={self.k}")
            c = Fraction(c)
            if c:
                clean[parts] = clean.get(parts, 0) + c
        object.__setattr__(self, "coeffs", MappingProxyType(clean))

    def vectors(self) -> list[PartitionVector]:
        return [PartitionVector(p, self.n, self.k) for p in sorted(self.coeffs)]

    def to_poly(self) -> MultiPoly:
        return MultiPoly({_monomial(p): c for p, c in self.coeffs.items()})

    def __add__(self, other: "PartitionSum") -> "PartitionSum":
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("cannot add partition sums of different (n, k)")
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) + c
        return PartitionSum(self.n, self.k, out)

    def scale(self, factor) -> "PartitionSum":
        return PartitionSum(self.n, self.k, {p: c * factor for p, c in self.coeffs.items()})

    def bump_first(self) -> "PartitionSum":
        """Apply k_1 -> k_1 + 1: (n, k) becomes (n + 1, k + 1).

        Each term's factor u1^k1 / k1! turns into u1^(k1+1) / (k1+1)!, so the
        coefficient picks up 1 / (k1 + 1).
        """
        out = {(p[0] + 1,) + p[1:]: c / (p[0] + 1) for p, c in self.coeffs.items()}
        return PartitionSum(self.n + 1, self.k + 1, out)

    def shift_variables(self, n: int) -> "PartitionSum":
        """Re-read the sum with u_j -> u_(j+1), as a summand of B_{n,k}.

        Vectors are prefixed with a zero and padded with k-1 zeros, which is
        the shape of the second piece of the lambda recurrence; ``n`` must be
        ``self.n + self.k``.
        """
        if n != self.n + self.k:
            raise ValueError(f"shifted target needs n = {self.n + self.k}, got {n}")
        pad = (0,) * (self.k - 1)
        return PartitionSum(n, self.k, {(0,) + p + pad: c for p, c in self.coeffs.items()})


# -- direct definitions ----------------------------------------------------

def _prod_factorials(parts: tuple[int, ...]) -> int:
    out = 1
    for c in parts:
        out *= factorial(c)
    return out


@lru_cache(maxsize=None)
def _exp_sum(n: int, k: int) -> PartitionSum:
    nf = factorial(n)
    coeffs = {}
    for p in _lambda_parts(n, k):
        den = _prod_factorials(p)
        for j, c in enumerate(p):
            den *= factorial(j + 1) ** c
        coeffs[p] = Fraction(nf, den)
    return PartitionSum(n, k, coeffs)


@lru_cache(maxsize=None)
def _exp_scaled_sum(n: int, k: int) -> PartitionSum:
    nf = factorial(n)
    return PartitionSum(n, k, {p: Fraction(nf, _prod_factorials(p)) for p in _lambda_parts(n, k)})


@lru_cache(maxsize=None)
def _ord_sum(n: int, k: int) -> PartitionSum:
    kf = factorial(k)
    return PartitionSum(n, k, {p: Fraction(kf, _prod_factorials(p)) for p in _lambda_parts(n, k)})


def bell_partial_exp(n: int, k: int) -> MultiPoly:
    """B_{n,k}(u1, ..., u_{n-k+1}) = n! sum prod (1/k_j!) (u_j / j!)^k_j."""
    _check(n, k)
    return _exp_sum(n, k).to_poly()


@lru_cache(maxsize=None)
def bell_partial_exp_scaled(n: int, k: int) -> MultiPoly:
    """B_{n,k}(1!u1, 2!u2, ...), obtained by substituting u_j -> j! u_j."""
    _check(n, k)
    b = bell_partial_exp(n, k)
    return b.subst({u_name(j): factorial(j) * U(j) for j in range(2, n - k + 2)})


def bell_partial_ord(n: int, k: int) -> MultiPoly:
    """Ordinary partial Bell polynomial k! sum prod u_j^k_j / k_j!."""
    _check(n, k)
    return _ord_sum(n, k).to_poly()


def bell_complete_exp(n: int) -> MultiPoly:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return ONE
    return sum((bell_partial_exp(n, k) for k in range(1, n + 1)), ZERO)


def bell_complete_exp_scaled(n: int) -> MultiPoly:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return ONE
    return sum((bell_partial_exp_scaled(n, k) for k in range(1, n + 1)), ZERO)


def bell_complete_ord(n: int) -> MultiPoly:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return ONE
    return sum((bell_partial_ord(n, k) * Fraction(1, factorial(k)) for k in range(1, n + 1)), ZERO)


# -- partition-level recursions --------------------------------------------

@lru_cache(maxsize=None)
def _duan_exp(n: int, k: int) -> PartitionSum:
    if k == 1:
        return PartitionSum(n, 1, {(0,) * (n - 1) + (1,): factorial(n)})
    if k == n:
        return PartitionSum(n, n, {(n,): 1})
    out = _duan_exp(n - 1, k - 1).bump_first().scale(n)
    if 2 <= k <= n // 2 and n >= 4:
        out = out + _duan_exp(n - k, k).shift_variables(n).scale(falling(n, k))
    return out


def bell_exp_rec_duan(n: int, k: int) -> PartitionSum:
    """Scaled B_{n,k} from n * B_{n-1,k-1}|_{k1->k1+1} [+ (n)_k * shifted B_{n-k,k}]."""
    _check(n, k)
    return _duan_exp(n, k)


@lru_cache(maxsize=None)
def _duan_ord(n: int, k: int) -> PartitionSum:
    if k == 1:
        return PartitionSum(n, 1, {(0,) * (n - 1) + (1,): 1})
    if k == n:
        return PartitionSum(n, n, {(n,): 1})
    out = _duan_ord(n - 1, k - 1).bump_first().scale(k)
    if 2 <= k <= n // 2 and n >= 4:
        out = out + _duan_ord(n - k, k).shift_variables(n)
    return out


def bell_ord_rec_duan(n: int, k: int) -> PartitionSum:
    """Ordinary B_{n,k} from k * B_{n-1,k-1}|_{k1->k1+1} [+ shifted B_{n-k,k}]."""
    _check(n, k)
    return _duan_ord(n, k)


# -- polynomial-level recursions -------------------------------------------

@lru_cache(maxsize=None)
def _conv_exp(n: int, k: int) -> MultiPoly:
    if k == 1:
        return factorial(n) * U(n)
    total = ZERO
    for j in range(n - k + 1):
        total = total + U(j + 1) * ((j + 1) * falling(n - 1, j)) * _conv_exp(n - j - 1, k - 1)
    return total


def bell_exp_rec_conv(n: int, k: int) -> MultiPoly:
    """Scaled B_{n,k} = sum_j (j+1) (n-1)_j u_{j+1} B_{n-j-1,k-1}(scaled)."""
    _check(n, k)
    return _conv_exp(n, k)


@lru_cache(maxsize=None)
def _diff_exp(n: int, k: int) -> MultiPoly:
    if k == 1:
        return factorial(n) * U(n)
    if k == n:
        return U(1) ** n
    prev = _diff_exp(n - 1, k)
    total = U(1) * _diff_exp(n - 1, k - 1)
    for j in range(1, n - k + 1):
        total = total + (j + 1) * U(j + 1) * prev.partial(u_name(j))
    return total


def bell_exp_rec_diff(n: int, k: int) -> MultiPoly:
    """Scaled B_{n,k} = u1 B_{n-1,k-1} + sum_j (j+1) u_{j+1} d/du_j B_{n-1,k}."""
    _check(n, k)
    return _diff_exp(n, k)


@lru_cache(maxsize=None)
def _conv_ord(n: int, k: int) -> MultiPoly:
    if k == 1:
        return U(n)
    total = ZERO
    for j in range(n - k + 1):
        total = total + (j + 1) * U(j + 1) * _conv_ord(n - j - 1, k - 1)
    return total * Fraction(k, n)


def bell_ord_rec_conv(n: int, k: int) -> MultiPoly:
    _check(n, k)
    return _conv_ord(n, k)


@lru_cache(maxsize=None)
def _diff_ord(n: int, k: int) -> MultiPoly:
    if k == 1:
        return U(n)
    if k == n:
        return U(1) ** n
    prev = _diff_ord(n - 1, k)
    total = U(1) * _diff_ord(n - 1, k - 1) * Fraction(k, n)
    for j in range(1, n - k + 1):
        total = total + U(j + 1) * prev.partial(u_name(j)) * Fraction(j + 1, n)
    return total


def bell_ord_rec_diff(n: int, k: int) -> MultiPoly:
    _check(n, k)
    return _diff_ord(n, k)


@lru_cache(maxsize=None)
def bell_complete_rec1(n: int) -> MultiPoly:
    """Scaled complete B_n = sum_k (k+1) (n-1)_k u_{k+1} B_{n-k-1}(scaled), B_0 = 1."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return ONE
    total = ZERO
    for k in range(n):
        total = total + ((k + 1) * falling(n - 1, k)) * U(k + 1) * bell_complete_rec1(n - k - 1)
    return total


@lru_cache(maxsize=None)
def bell_complete_rec2(n: int) -> MultiPoly:
    """Scaled complete B_n = u1 B_{n-1} + sum_k (k+1) u_{k+1} d/du_k B_{n-1}."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return ONE
    prev = bell_complete_rec2(n - 1)
    total = U(1) * prev
    for k in range(1, n):
        total = total + (k + 1) * U(k + 1) * prev.partial(u_name(k))
    return total


@lru_cache(maxsize=None)
def bell_complete_ord_rec1(n: int) -> MultiPoly:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return ONE
    total = ZERO
    for k in range(n):
        total = total + (k + 1) * U(k + 1) * bell_complete_ord_rec1(n - k - 1)
    return total * Fraction(1, n)


@lru_cache(maxsize=None)
def bell_complete_ord_rec2(n: int) -> MultiPoly:
    # the derivative term acts on the ordinary complete polynomial of order n-1
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return ONE
    prev = bell_complete_ord_rec2(n - 1)
    total = U(1) * prev
    for k in range(1, n):
        total = total + (k + 1) * U(k + 1) * prev.partial(u_name(k))
    return total * Fraction(1, n)


@lru_cache(maxsize=None)
def _stirling(n: int, k: int) -> int:
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0:
        return 0
    return _stirling(n - 1, k - 1) + (n - 1) * _stirling(n - 1, k)


def stirling_first_unsigned(n: int, k: int) -> int:
    """c(n, k) from c(n, k) = c(n-1, k-1) + (n-1) c(n-1, k)."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return _stirling(n, k)
