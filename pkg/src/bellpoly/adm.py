"""Decomposition-series solver for u' = alpha * N(u), u(0) = u0.

Written as u = u0 + alpha * int_0^x N(u(t)) dt, the components satisfy

    u_{n+1}(x) = alpha * int_0^x A_n(u_0, ..., u_n) dt

with A_n the Adomian polynomials of N. Integration is formal on polynomials
in x. Coefficients live in Q[alpha, beta, E] with E standing for exp(-beta).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .adomian import Exp, Linear, Power, adomian_evaluate_cleared, adomian_rach
from .exactnum import ALPHA, BETA, E, ONE, X, MultiPoly, factorial, falling, u_name

Param = Union[int, Fraction, MultiPoly]


@dataclass(frozen=True)
class SeriesSolution:
    components: tuple[MultiPoly, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(MultiPoly.coerce(c) for c in self.components))

    @property
    def order(self) -> int:
        return len(self.components) - 1

    def __getitem__(self, i: int) -> MultiPoly:
        return self.components[i]

    def partial_sum(self) -> MultiPoly:
        return sum(self.components, MultiPoly())


@dataclass(frozen=True)
class SeriesComparison:
    equal: bool
    index: int | None = None
    left: MultiPoly | None = None
    right: MultiPoly | None = None

    def __bool__(self):
        return self.equal


def adm_solve(spec, alpha: Param = ALPHA, u0: Param = 1, order: int = 4) -> SeriesSolution:
    """Components u_0..u_order of u' = alpha * N(u), u(0) = u0.

    ``spec`` is one of the nonlinearities from :mod:`bellpoly.adomian`; it must
    accept the concrete ``u0``. Derivative values with alpha in the
    denominator (u^(1 - 1/alpha)) are handled by exact division after the
    components, which carry matching powers of alpha, are substituted.
    """
    if not isinstance(order, int) or order < 1:
        raise ValueError(f"order must be a positive integer, got {order!r}")
    alpha = MultiPoly.coerce(alpha)
    comps = [MultiPoly.coerce(Fraction(u0))]
    for n in range(order):
        num, d = adomian_evaluate_cleared(adomian_rach(n), spec, u0)
        num = num.subst({u_name(j): comps[j] for j in range(1, n + 1)})
        integrand = (alpha * num).integrate_x()
        comps.append(integrand.divide_monomial("alpha", d))
    return SeriesSolution(tuple(comps))


def closed_form_exp_series(order: int) -> SeriesSolution:
    """Taylor components of 1 + log(1 + alpha beta E x) / beta:
    u_n = (-1)^(n+1) alpha^n beta^(n-1) E^n x^n / n."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    comps = [ONE]
    for n in range(1, order + 1):
        comps.append(ALPHA ** n * BETA ** (n - 1) * E ** n * X ** n * Fraction((-1) ** (n + 1), n))
    return SeriesSolution(tuple(comps))


def closed_form_power_series(order: int) -> SeriesSolution:
    """Binomial series of (1 + x)^alpha: u_n = (alpha)_n / n! x^n."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    return SeriesSolution(tuple(falling(ALPHA, n) * X ** n * Fraction(1, factorial(n)) for n in range(order + 1)))


def closed_form_linear_series(order: int) -> SeriesSolution:
    """exp(x): u_n = x^n / n!."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    return SeriesSolution(tuple(X ** n * Fraction(1, factorial(n)) for n in range(order + 1)))


def compare_series(a: SeriesSolution, b: SeriesSolution) -> SeriesComparison:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    for i, (p, q) in enumerate(zip(a.components, b.components)):
        if p != q:
            return SeriesComparison(False, i, p, q)
    return SeriesComparison(True)


# the three ODEs wired into the command line: (nonlinearity, alpha, closed form)
ODES = {
    "exp": (Exp(-BETA), ALPHA, closed_form_exp_series),
    "power": (Power(1, -1), ALPHA, closed_form_power_series),
    "linear": (Linear(), 1, closed_form_linear_series),
}


def solve_ode(name: str, order: int) -> tuple[SeriesSolution, SeriesSolution, SeriesComparison]:
    try:
        spec, alpha, closed = ODES[name]
    except KeyError:
        raise ValueError(f"unknown ode {name!r}; choose from {', '.join(ODES)}") from None
    sol = adm_solve(spec, alpha, 1, order)
    ref = closed(order)
    return sol, ref, compare_series(sol, ref)
