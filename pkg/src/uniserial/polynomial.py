"""Sparse commutative polynomials with exact coefficients.

Variables are any hashable, totally ordered keys; the detour coordinates use
``Var(m, arrow, i)``, which sorts in the canonical (m, arrow, i) order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, NamedTuple

from .fields import Fp, render_scalar


class Var(NamedTuple):
    m: int
    arrow: str
    i: int

    def __str__(self):
        return f"X({self.arrow},{self.m},{self.i})"


Monomial = tuple  # tuple[(var, exponent), ...] sorted by var

_SCALARS = (int, Fraction, Fp)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class Polynomial:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def const(cls, c) -> "Polynomial":
        return cls({(): c})

    @classmethod
    def var(cls, v, coeff=1) -> "Polynomial":
        return cls({((v, 1),): Fraction(coeff) if isinstance(coeff, int) else coeff})

    @staticmethod
    def lift(x) -> "Polynomial":
        if isinstance(x, Polynomial):
            return x
        if isinstance(x, int):
            x = Fraction(x)
        if isinstance(x, _SCALARS):
            return Polynomial.const(x)
        raise TypeError(f"cannot treat {type(x).__name__} as a polynomial")

    # arithmetic

    def __add__(self, other):
        try:
            other = Polynomial.lift(other)
        except TypeError:
            return NotImplemented
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return Polynomial(t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = Polynomial.lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Polynomial.lift(other) - self

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return Polynomial({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                t[m] = t.get(m, 0) + c1 * c2
        return Polynomial(t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Polynomial.const(Fraction(1))
        for _ in range(n):
            out = out * self
        return out

    # comparisons and queries

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            other = Polynomial.const(other) if other != 0 else Polynomial()
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e for _, e in m) for m in self.terms)

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def constant_term(self):
        return self.terms.get((), 0)

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def linear_coefficients(self) -> dict:
        """Coefficients of the degree-one monomials (only meaningful when degree <= 1)."""
        return {m[0][0]: c for m, c in self.terms.items() if len(m) == 1 and m[0][1] == 1}

    def evaluate(self, values: Mapping):
        """Substitute values (scalars or polynomials) for every variable present."""
        total = 0
        for m, c in self.terms.items():
            term = c
            for v, e in m:
                term = term * values[v] ** e
            total = total + term
        return total

    def substitute(self, mapping: Mapping) -> "Polynomial":
        """Replace some variables by polynomials, leaving the rest alone."""
        out = Polynomial()
        for m, c in self.terms.items():
            term = Polynomial.const(c)
            for v, e in m:
                if v in mapping:
                    term = term * Polynomial.lift(mapping[v]) ** e
                else:
                    term = term * Polynomial({((v, e),): 1})
            out = out + term
        return out

    def map_coefficients(self, f) -> "Polynomial":
        return Polynomial({m: f(c) for m, c in self.terms.items()})

    def monic(self) -> "Polynomial":
        """Scale so the leading (graded-lex) coefficient is 1."""
        if not self.terms:
            return self
        lead = self.sorted_terms()[0][1]
        return Polynomial({m: c / lead for m, c in self.terms.items()})

    def sorted_terms(self) -> list:
        """Terms in descending graded-lex order."""
        vs = sorted(self.variables())
        idx = {v: k for k, v in enumerate(vs)}

        def key(item):
            m = item[0]
            vec = [0] * len(vs)
            for v, e in m:
                vec[idx[v]] = e
            return (sum(vec), vec)

        return sorted(self.terms.items(), key=key, reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in m)
            neg = not isinstance(c, Fp) and c < 0
            mag = render_scalar(-c if neg else c)
            if not mono:
                body = mag
            elif mag == "1":
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"
