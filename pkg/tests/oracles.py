"""Independent reference computations used only by the tests.

None of these touch the partition-vector code in the package: Bell
polynomials come from set partitions or sympy, Adomian polynomials from
sympy differentiation of N(sum u_k lambda^k).
"""
from fractions import Fraction
from itertools import product

import sympy as sp

from bellpoly.exactnum import MultiPoly

U_SYMS = sp.symbols("u0:20")
_NAMES = {"alpha": "alpha", "beta": "beta", "x": "x", "E": "E", "expu0": "expu0"}


def from_sympy(expr) -> MultiPoly:
    """Convert a sympy polynomial expression into a MultiPoly."""
    expr = sp.expand(expr)
    if expr == 0:
        return MultiPoly()
    gens = sorted(expr.free_symbols, key=str)
    if not gens:
        q = sp.Rational(expr)
        return MultiPoly.const(Fraction(int(q.p), int(q.q)))
    poly = sp.Poly(expr, *gens)
    terms = {}
    for exps, c in poly.terms():
        mono = tuple((str(g), e) for g, e in zip(gens, exps) if e)
        q = sp.Rational(c)
        terms[mono] = Fraction(int(q.p), int(q.q))
    return MultiPoly(terms)


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]
        yield [[first]] + p


def bell_by_set_partitions(n: int, k: int) -> MultiPoly:
    """B_{n,k} = sum over set partitions of {1..n} into k blocks of prod u_{|block|}."""
    total = MultiPoly()
    for p in set_partitions(list(range(n))):
        if len(p) == k:
            term = MultiPoly.const(1)
            for block in p:
                term = term * MultiPoly.var(f"u{len(block)}")
            total = total + term
    return total


def bell_sympy(n: int, k: int) -> MultiPoly:
    return from_sympy(sp.bell(n, k, U_SYMS[1 : n - k + 2]))


def compositions_count(n: int, k: int) -> dict:
    """Brute-force multiplicity vectors by scanning all bounded tuples (tiny n only)."""
    length = n - k + 1
    out = []
    for t in product(range(k + 1), repeat=length):
        if sum(t) == k and sum((j + 1) * c for j, c in enumerate(t)) == n:
            out.append(t)
    return sorted(out)


def adomian_sympy(n: int, derivative_symbol: bool = True) -> dict[int, MultiPoly]:
    """parts[j] of A_n by differentiating f(sum u_k lam^k) n times with sympy.

    The chain rule leaves Subs/Derivative objects of an undefined f; the
    coefficient of the j-th derivative is read off after replacing them by
    symbols D_j.
    """
    lam, t = sp.symbols("lam t")
    f = sp.Function("f")
    w = sum(U_SYMS[k] * lam ** k for k in range(n + 1))
    expr = sp.diff(f(w), lam, n).subs(lam, 0).doit() / sp.factorial(n)
    D = sp.symbols(f"D0:{n + 1}")
    reps = {}
    for j in range(1, n + 1):
        reps[sp.Subs(sp.Derivative(f(t), (t, j)), t, U_SYMS[0])] = D[j]
        reps[sp.Derivative(f(U_SYMS[0]), (U_SYMS[0], j))] = D[j]
    expr = sp.expand(expr.subs(reps)).subs(f(U_SYMS[0]), D[0])
    parts = {}
    for j in range(n + 1):
        c = sp.expand(expr).coeff(D[j])
        if c != 0:
            parts[j] = from_sympy(c)
    return parts
