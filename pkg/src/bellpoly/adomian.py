"""Adomian polynomials for an abstract nonlinearity N.

An :class:`AdomianPoly` stores A_n as ``{j: coefficient polynomial in u1..un}``
meaning A_n = sum_j parts[j] * N^(j)(u0), with the derivative values left
symbolic. Concrete nonlinearities are plugged in afterwards through
:func:`adomian_evaluate`.

Six constructions are provided (Rach's partition sum, exponential Bell,
ordinary Bell, two Duan recursions, and a truncated power-series oracle) and
they must agree exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence, Union

from .bell import bell_complete_exp_scaled, bell_partial_exp_scaled, bell_partial_ord
from .exactnum import (
    ALPHA,
    BETA,
    EXPU0,
    ONE,
    U,
    ZERO,
    MultiPoly,
    factorial,
    falling,
    u_index,
    u_name,
)
from .partitions import enum_theta

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class AdomianPoly:
    n: int
    parts: Mapping[int, MultiPoly] = field(default_factory=dict)

    def __post_init__(self):
        clean = {j: MultiPoly.coerce(p) for j, p in sorted(dict(self.parts).items())}
        object.__setattr__(self, "parts", {j: p for j, p in clean.items() if not p.is_zero()})

    def __hash__(self):
        return hash((self.n, tuple(self.parts.items())))

    def __add__(self, other: "AdomianPoly") -> "AdomianPoly":
        out = dict(self.parts)
        for j, p in other.parts.items():
            out[j] = out.get(j, ZERO) + p
        return AdomianPoly(max(self.n, other.n), out)

    def scale(self, factor) -> "AdomianPoly":
        return AdomianPoly(self.n, {j: p * factor for j, p in self.parts.items()})

    def mul_poly(self, factor: MultiPoly, n: int) -> "AdomianPoly":
        return AdomianPoly(n, {j: p * factor for j, p in self.parts.items()})

    def d_u0(self) -> "AdomianPoly":
        """Derivative in u0: N^(j)(u0) -> N^(j+1)(u0); u0 appears nowhere else."""
        return AdomianPoly(self.n, {j + 1: p for j, p in self.parts.items()})

    def partial(self, name: str) -> "AdomianPoly":
        if u_index(name) == 0:
            return self.d_u0()
        return AdomianPoly(self.n, {j: p.partial(name) for j, p in self.parts.items()})


A0 = AdomianPoly(0, {0: ONE})


def _check_n(n: int, low: int = 0) -> None:
    if not isinstance(n, int) or n < low:
        raise ValueError(f"order must be an integer >= {low}, got {n!r}")


# -- constructions -------------------------------------------------------------

@lru_cache(maxsize=None)
def c_kn(k: int, n: int) -> MultiPoly:
    """C(k, n) = sum over theta vectors of prod u_j^k_j / k_j!."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    total = ZERO
    for v in enum_theta(n, k):
        den = 1
        mono = []
        for j, c in enumerate(v.parts):
            if c:
                den *= factorial(c)
                mono.append((u_name(j + 1), c))
        total = total + MultiPoly({tuple(mono): Fraction(1, den)})
    return total


def adomian_rach(n: int) -> AdomianPoly:
    _check_n(n)
    if n == 0:
        return A0
    return AdomianPoly(n, {k: c_kn(k, n) for k in range(1, n + 1)})


def adomian_from_bell(n: int) -> AdomianPoly:
    """parts[k] = B_{n,k}(1!u1, 2!u2, ...) / n!."""
    _check_n(n)
    if n == 0:
        return A0
    inv = Fraction(1, factorial(n))
    return AdomianPoly(n, {k: bell_partial_exp_scaled(n, k) * inv for k in range(1, n + 1)})


def adomian_from_ord_bell(n: int) -> AdomianPoly:
    """parts[k] = ordinary B_{n,k}(u1, u2, ...) / k!."""
    _check_n(n)
    if n == 0:
        return A0
    return AdomianPoly(n, {k: bell_partial_ord(n, k) * Fraction(1, factorial(k)) for k in range(1, n + 1)})


@lru_cache(maxsize=None)
def adomian_duan_rec1(n: int) -> AdomianPoly:
    """A_n = (1/n) sum_k (k+1) u_{k+1} d/du0 A_{n-k-1}."""
    _check_n(n)
    if n == 0:
        return A0
    total = AdomianPoly(n)
    for k in range(n):
        total = total + adomian_duan_rec1(n - k - 1).d_u0().mul_poly((k + 1) * U(k + 1), n)
    return total.scale(Fraction(1, n))


@lru_cache(maxsize=None)
def adomian_duan_rec2(n: int) -> AdomianPoly:
    """A_n = (1/n) sum_k (k+1) u_{k+1} d/du_k A_{n-1}, with d/du0 the index shift."""
    _check_n(n)
    if n == 0:
        return A0
    prev = adomian_duan_rec2(n - 1)
    total = AdomianPoly(n)
    for k in range(n):
        total = total + prev.partial(u_name(k)).mul_poly((k + 1) * U(k + 1), n)
    return total.scale(Fraction(1, n))


def _series_mul(a: list[MultiPoly], b: list[MultiPoly], order: int) -> list[MultiPoly]:
    out = [ZERO] * (order + 1)
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j in range(order + 1 - i):
            if not b[j].is_zero():
                out[i + j] = out[i + j] + ai * b[j]
    return out


def adomian_param_oracle(n: int) -> AdomianPoly:
    """Coefficient of lambda^n in N(u0 + w), w = sum_{k=1}^n u_k lambda^k.

    Taylor expansion around u0 gives sum_j N^(j)(u0) w^j / j!, evaluated with
    power series in lambda truncated at order n. Uses no partition machinery.
    """
    _check_n(n)
    if n == 0:
        return A0
    w = [ZERO] + [U(k) for k in range(1, n + 1)]
    power = [ONE] + [ZERO] * n
    parts = {}
    for j in range(1, n + 1):
        power = _series_mul(power, w, n)
        parts[j] = power[n] * Fraction(1, factorial(j))
    return AdomianPoly(n, parts)


def adomian_complete_exp(n: int) -> MultiPoly:
    """For N = exp: A_n / exp(u0) = B_n(1!u1, ..., n!un) / n!."""
    _check_n(n, 1)
    return bell_complete_exp_scaled(n) * Fraction(1, factorial(n))


METHODS = {
    "rach": adomian_rach,
    "bell": adomian_from_bell,
    "ordbell": adomian_from_ord_bell,
    "rec1": adomian_duan_rec1,
    "rec2": adomian_duan_rec2,
    "oracle": adomian_param_oracle,
}


# -- nonlinearities ----------------------------------------------------------------
#
# ``derivative(j, u0)`` returns ``(numerator, d)`` with N^(j)(u0) = numerator / alpha^d.
# ``u0=None`` asks for a symbolic value.


@dataclass(frozen=True)
class Linear:
    """N(u) = u."""

    def derivative(self, j: int, u0=None) -> tuple[MultiPoly, int]:
        if j == 0:
            return (U(0) if u0 is None else MultiPoly.coerce(u0)), 0
        return (ONE if j == 1 else ZERO), 0


@dataclass(frozen=True)
class Exp:
    """N(u) = exp(c*u); ``c`` may be a rational or a polynomial such as -beta.

    Symbolically exp(c*u0) is the variable ``expu0``. At a concrete u0 the value
    must be 1 (c*u0 = 0) or a power of E = exp(-beta).
    """

    c: Union[Scalar, MultiPoly] = 1

    def _exp_value(self, u0) -> MultiPoly:
        if u0 is None:
            return EXPU0
        z = MultiPoly.coerce(self.c) * Fraction(u0)
        if z.is_zero():
            return ONE
        s = z.coefficient([("beta", 1)])
        if z == BETA * s and (-s).denominator == 1 and -s > 0:
            return MultiPoly.var("E", int(-s))
        raise ValueError(f"exp({z}) is not representable with E = exp(-beta)")

    def derivative(self, j: int, u0=None) -> tuple[MultiPoly, int]:
        return MultiPoly.coerce(self.c) ** j * self._exp_value(u0), 0


@dataclass(frozen=True)
class Power:
    """N(u) = u^p with p = a + b/alpha.

    Derivatives are (p)_j u0^(p-j). With b != 0 they carry alpha^j in the
    denominator, returned cleared. Only concrete u0 is accepted.
    """

    a: Scalar = 1
    b: Scalar = 0

    def derivative(self, j: int, u0=None) -> tuple[MultiPoly, int]:
        if u0 is None:
            raise ValueError("power nonlinearity needs a concrete u0")
        u0 = Fraction(u0)
        a, b = Fraction(self.a), Fraction(self.b)
        if b:
            if u0 != 1:
                raise ValueError("symbolic exponent is only representable at u0 = 1")
            num = ONE
            for i in range(j):
                num = num * ((a - i) * ALPHA + b)
            return num, j
        coeff = falling(a, j)
        if u0 == 1 or coeff == 0:
            return MultiPoly.const(coeff), 0
        e = a - j
        if e.denominator != 1:
            raise ValueError(f"u0^{e} is not rational for u0={u0}")
        if u0 == 0 and e < 0:
            raise ValueError("negative power of zero")
        return MultiPoly.const(coeff * u0 ** int(e)), 0


@dataclass(frozen=True)
class PolyCoeffs:
    """N(u) = sum_i coeffs[i] u^i."""

    coeffs: Sequence[Scalar] = ()

    def derivative(self, j: int, u0=None) -> tuple[MultiPoly, int]:
        base = U(0) if u0 is None else MultiPoly.coerce(Fraction(u0))
        total = ZERO
        for i, c in enumerate(self.coeffs):
            if i >= j and c:
                total = total + base ** (i - j) * (Fraction(c) * falling(i, j))
        return total, 0


@dataclass(frozen=True)
class TaylorAtU0:
    """Derivative values N^(j)(u0) given directly; missing ones are zero."""

    values: Sequence[MultiPoly] = ()

    def derivative(self, j: int, u0=None) -> tuple[MultiPoly, int]:
        if j < len(self.values):
            return MultiPoly.coerce(self.values[j]), 0
        return ZERO, 0


def _strip_alpha(num: MultiPoly, d: int) -> tuple[MultiPoly, int]:
    if d <= 0 or num.is_zero():
        return num, 0
    low = min(dict(m).get("alpha", 0) for m, _ in num.items())
    k = min(low, d)
    return num.divide_monomial("alpha", k), d - k


def adomian_evaluate_cleared(a: AdomianPoly, spec, u0=None) -> tuple[MultiPoly, int]:
    """Return ``(num, d)`` with sum_j parts[j] N^(j)(u0) = num / alpha^d, d minimal."""
    vals = {j: spec.derivative(j, u0) for j in a.parts}
    d = max((dj for _, dj in vals.values()), default=0)
    num = ZERO
    for j, p in a.parts.items():
        vj, dj = vals[j]
        term = p * vj
        if d - dj:
            term = term * ALPHA ** (d - dj)
        num = num + term
    return _strip_alpha(num, d)


def adomian_evaluate(a: AdomianPoly, spec, u0=None) -> MultiPoly:
    """sum_j parts[j] N^(j)(u0) as a polynomial; raises if alpha stays in a denominator."""
    num, d = adomian_evaluate_cleared(a, spec, u0)
    if d:
        raise ValueError(f"result has alpha^{d} in the denominator; use adomian_evaluate_cleared")
    return num
