"""Exact scalar fields: the rationals and prime fields GF(q)."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import total_ordering


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@total_ordering
class Fp:
    """Element of GF(q), stored as its least non-negative residue."""

    __slots__ = ("value", "q")

    def __init__(self, value: int, q: int):
        self.q = q
        self.value = int(value) % q

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.q != self.q:
                raise ValueError(f"mixing GF({self.q}) and GF({other.q})")
            return other.value
        if isinstance(other, int):
            return other % self.q
        if isinstance(other, Fraction):
            den = other.denominator % self.q
            if den == 0:
                raise ZeroDivisionError(f"denominator of {other} vanishes mod {self.q}")
            return other.numerator * pow(den, -1, self.q) % self.q
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.value + o, self.q)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.value - o, self.q)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o - self.value, self.q)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.value * o, self.q)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.q)
        return Fp(self.value * pow(o, -1, self.q), self.q)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o, self.q) / self

    def __neg__(self):
        return Fp(-self.value, self.q)

    def __pow__(self, n: int):
        return Fp(pow(self.value, n, self.q), self.q)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.value == o

    def __lt__(self, other):
        return self.value < self._coerce(other)

    def __hash__(self):
        return hash((self.value, self.q))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Fp({self.value}, {self.q})"

    def __str__(self):
        return str(self.value)


class ScalarField:
    """Either the rationals (``q is None``) or the prime field GF(q)."""

    def __init__(self, q: int | None = None):
        if q is not None:
            if not _is_prime(q) or q > 2**31:
                raise ValueError(f"field characteristic must be a prime <= 2^31, got {q}")
        self.q = q

    @classmethod
    def parse(cls, text: str) -> "ScalarField":
        text = text.strip()
        if text in ("Q", "q", "QQ", "rationals"):
            return cls(None)
        return cls(int(text))

    @property
    def kind(self) -> str:
        return "rationals" if self.q is None else "prime-field"

    @property
    def is_rational(self) -> bool:
        return self.q is None

    def __call__(self, value):
        if self.q is None:
            if isinstance(value, Fp):
                raise TypeError("cannot lift a prime-field element to the rationals")
            return Fraction(value)
        if isinstance(value, Fp):
            if value.q != self.q:
                raise ValueError(f"element of GF({value.q}) given to GF({self.q})")
            return value
        return Fp(Fp(0, self.q)._coerce(Fraction(value)), self.q)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def elements(self):
        """All elements of a prime field, in residue order."""
        if self.q is None:
            raise ValueError("the rationals are infinite")
        return [Fp(i, self.q) for i in range(self.q)]

    def random_element(self, rng: random.Random, bound: int = 10**6):
        if self.q is None:
            return Fraction(rng.randint(-bound, bound))
        return Fp(rng.randrange(self.q), self.q)

    def __eq__(self, other):
        return isinstance(other, ScalarField) and other.q == self.q

    def __hash__(self):
        return hash(("ScalarField", self.q))

    def __repr__(self):
        return "ScalarField(Q)" if self.q is None else f"ScalarField(GF({self.q}))"


QQ = ScalarField(None)


def render_scalar(value) -> str:
    """Canonical text for a scalar: ``"p"`` or ``"p/q"`` in lowest terms."""
    if isinstance(value, Fp):
        return str(value.value)
    return str(Fraction(value))
