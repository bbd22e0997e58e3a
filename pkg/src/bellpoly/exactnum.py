"""Exact rational scalars and sparse multivariate polynomials.

Scalars are :class:`fractions.Fraction`. Polynomials live over a fixed set of
variables:

    u0, u1, u2, ...   decomposition components
    x                 independent variable of the ODE solver
    alpha, beta       formal parameters
    E                 formal stand-in for exp(-beta); no relation to beta
    expu0             formal stand-in for exp(c*u0) of an exponential nonlinearity

Monomials are stored as tuples of ``(variable, exponent)`` pairs sorted by
variable rank, so two equal polynomials always have identical term maps.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Fraction
Monomial = tuple  # tuple[tuple[str, int], ...]
Scalar = Union[int, Fraction]

_FIXED_RANK = {"x": 1, "alpha": 2, "beta": 3, "E": 4, "expu0": 5}
_U_RE = re.compile(r"u(0|[1-9][0-9]*)\Z")


def var_rank(name: str) -> tuple[int, int]:
    """Sort key of a variable: u0 < u1 < u2 < ... < x < alpha < beta < E < expu0."""
    m = _U_RE.match(name)
    if m:
        return (0, int(m.group(1)))
    try:
        return (_FIXED_RANK[name], 0)
    except KeyError:
        raise ValueError(f"unknown variable {name!r}") from None


def u_name(i: int) -> str:
    if i < 0:
        raise ValueError(f"component index must be >= 0, got {i}")
    return f"u{i}"


def u_index(name: str) -> int | None:
    m = _U_RE.match(name)
    return int(m.group(1)) if m else None


def _canon_monomial(pairs: Iterable[tuple[str, int]]) -> Monomial:
    acc: dict[str, int] = {}
    for v, e in pairs:
        var_rank(v)
        if e < 0:
            raise ValueError(f"negative exponent {e} for {v}")
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted(((v, e) for v, e in acc.items() if e), key=lambda p: var_rank(p[0])))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for v, e in b:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items(), key=lambda p: var_rank(p[0])))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_sort_key(m: Monomial):
    """Graded lexicographic key: total degree first, then variable/exponent pairs."""
    return (mono_degree(m), tuple((var_rank(v), e) for v, e in m))


class MultiPoly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                mono = _canon_monomial(mono)
                c = Fraction(c)
                if c:
                    total = clean.get(mono, 0) + c
                    if total:
                        clean[mono] = total
                    else:
                        clean.pop(mono, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "MultiPoly":
        # terms must already be canonical with no zero coefficients
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: Scalar) -> "MultiPoly":
        c = Fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        return cls({((name, power),): 1})

    @classmethod
    def coerce(cls, value) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.const(value)
        raise TypeError(f"cannot convert {type(value).__name__} to MultiPoly")

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((), Fraction(0))

    def coefficient(self, mono: Iterable[tuple[str, int]] = ()) -> Fraction:
        return self._terms.get(_canon_monomial(mono), Fraction(0))

    def variables(self) -> set[str]:
        return {v for m in self._terms for v, _ in m}

    def degree(self, name: str | None = None) -> int:
        """Total degree, or the degree in a single variable; -1 for zero."""
        if not self._terms:
            return -1
        if name is None:
            return max(mono_degree(m) for m in self._terms)
        return max(dict(m).get(name, 0) for m in self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: mono_sort_key(t[0]))

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return MultiPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return MultiPoly._raw({})
            return MultiPoly._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return MultiPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponent must be a nonnegative int, got {e!r}")
        result = MultiPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- calculus and substitution ---------------------------------------
    def partial(self, name: str) -> "MultiPoly":
        var_rank(name)
        out: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            d = dict(m)
            e = d.get(name, 0)
            if not e:
                continue
            if e == 1:
                del d[name]
            else:
                d[name] = e - 1
            nm = tuple(sorted(d.items(), key=lambda p: var_rank(p[0])))
            out[nm] = out.get(nm, 0) + c * e
        return MultiPoly._raw({m: c for m, c in out.items() if c})

    def subst(self, bindings: Mapping[str, "MultiPoly | Scalar"]) -> "MultiPoly":
        """Simultaneous substitution of variables by polynomials."""
        if not bindings:
            return self
        bound = {v: MultiPoly.coerce(p) for v, p in bindings.items()}
        for v in bound:
            var_rank(v)
        power_cache: dict[tuple[str, int], MultiPoly] = {}
        result = MultiPoly()
        for m, c in self._terms.items():
            kept = []
            term = MultiPoly.const(c)
            for v, e in m:
                if v in bound:
                    key = (v, e)
                    if key not in power_cache:
                        power_cache[key] = bound[v] ** e
                    term = term * power_cache[key]
                else:
                    kept.append((v, e))
            if kept:
                term = term * MultiPoly._raw({tuple(kept): Fraction(1)})
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """Evaluate at exact rational values; every variable must be bound."""
        p = self.subst(values)
        return p.constant_value()

    def divide_monomial(self, name: str, power: int) -> "MultiPoly":
        """Exact division by ``name**power``; raises if some term is not divisible."""
        if power < 0:
            return self * MultiPoly.var(name, -power)
        if power == 0:
            return self
        out = {}
        for m, c in self._terms.items():
            d = dict(m)
            e = d.get(name, 0)
            if e < power:
                raise ValueError(f"{self} is not divisible by {name}^{power}")
            if e == power:
                del d[name]
            else:
                d[name] = e - power
            out[tuple(sorted(d.items(), key=lambda p: var_rank(p[0])))] = c
        return MultiPoly._raw(out)

    def integrate_x(self) -> "MultiPoly":
        """Antiderivative in x with zero constant term: x^j -> x^(j+1)/(j+1)."""
        out = {}
        for m, c in self._terms.items():
            d = dict(m)
            e = d.get("x", 0) + 1
            d["x"] = e
            out[tuple(sorted(d.items(), key=lambda p: var_rank(p[0])))] = c / e
        return MultiPoly._raw(out)

    # -- rendering --------------------------------------------------------
    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        return to_text(self)


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


def poly_pow(a: MultiPoly, e: int) -> MultiPoly:
    return a ** e


def poly_partial(a: MultiPoly, v: str) -> MultiPoly:
    return a.partial(v)


def poly_subst(a: MultiPoly, bindings: Mapping[str, MultiPoly | Scalar]) -> MultiPoly:
    return a.subst(bindings)


def U(i: int) -> MultiPoly:
    return MultiPoly.var(u_name(i))


ZERO = MultiPoly()
ONE = MultiPoly.const(1)
X = MultiPoly.var("x")
ALPHA = MultiPoly.var("alpha")
BETA = MultiPoly.var("beta")
E = MultiPoly.var("E")
EXPU0 = MultiPoly.var("expu0")


# -- integer combinatorics --------------------------------------------------

def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def falling(a, k: int):
    """Falling factorial a(a-1)...(a-k+1); ``a`` may be an int, Fraction or MultiPoly."""
    if k < 0:
        raise ValueError(f"falling factorial order must be >= 0, got {k}")
    out = MultiPoly.const(1) if isinstance(a, MultiPoly) else 1
    for i in range(k):
        out = out * (a - i)
    return out


def binomial(m: int, j: int) -> int:
    if j < 0 or j > m:
        return 0
    return falling(m, j) // factorial(j)


# -- serialization ------------------------------------------------------------

def _fmt_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_json_obj(p: MultiPoly) -> list[dict]:
    return [
        {"coeff": f"{c.numerator}/{c.denominator}", "monomial": {v: e for v, e in m}}
        for m, c in p.sorted_terms()
    ]


def from_json_obj(obj: list[dict]) -> MultiPoly:
    terms: dict[Monomial, Fraction] = {}
    for t in obj:
        mono = _canon_monomial((v, int(e)) for v, e in t["monomial"].items())
        if mono in terms:
            raise ValueError(f"duplicate monomial {mono} in serialized polynomial")
        terms[mono] = Fraction(t["coeff"])
    return MultiPoly(terms)


def to_json(p: MultiPoly) -> str:
    return json.dumps(to_json_obj(p), separators=(",", ":"))


def from_json(s: str) -> MultiPoly:
    return from_json_obj(json.loads(s))


def _fmt_monomial(m: Monomial) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)


def to_text(p: MultiPoly) -> str:
    """Render with explicit ``*`` and ``^``, rationals as ``p/q``, graded-lex order."""
    if p.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        if not m:
            body = _fmt_fraction(a)
        elif a == 1:
            body = _fmt_monomial(m)
        else:
            body = f"{_fmt_fraction(a)}*{_fmt_monomial(m)}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)
