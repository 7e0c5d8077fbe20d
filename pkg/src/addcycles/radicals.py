"""Q-linear combinations of real cube roots of rationals.

A monomial ``q * cbrt(c)`` is stored with ``c`` a positive cube-free
integer; signs and cube factors of the radicand are absorbed into ``q``.
Distinct cube-free radicands are treated as linearly independent over Q,
which makes :meth:`RadScalar.is_zero` an exact test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import factorint

from .errors import DivisionByZero, ZeroRadicand
from .exact_arith import as_fraction

__all__ = ["RadMonomial", "RadScalar", "cbrt", "normalize"]


@lru_cache(maxsize=4096)
def _cube_split(m: int) -> tuple:
    """Write m = s^3 * r with r cube-free; returns (s, r)."""
    s = r = 1
    for p, e in factorint(m).items():
        s *= p ** (e // 3)
        r *= p ** (e % 3)
    return s, r


@dataclass(frozen=True, order=False)
class RadMonomial:
    q: Fraction
    c: int = 1

    def __post_init__(self):
        if self.c < 1:
            raise ValueError("use normalize() to build monomials from raw radicands")

    # construction ----------------------------------------------------------
    @classmethod
    def rational(cls, q) -> "RadMonomial":
        return cls(as_fraction(q), 1)

    # predicates --------------------------------------------------------------
    def is_zero(self) -> bool:
        return self.q == 0

    def is_rational(self) -> bool:
        return self.c == 1

    def sort_key(self):
        return (self.c, self.q)

    # arithmetic ------------------------------------------------------------
    def __mul__(self, other):
        if isinstance(other, RadMonomial):
            return normalize(self.q * other.q, self.c * other.c)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return normalize(self.q * other, self.c)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return RadMonomial(-self.q, self.c)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RadMonomial.rational(other)
        return self * other.invert()

    def invert(self) -> "RadMonomial":
        if self.q == 0:
            raise DivisionByZero("inverse of zero")
        # 1/(q cbrt(c)) = cbrt(c^2) / (q c)
        return normalize(1 / (self.q * self.c), self.c * self.c)

    def cube(self) -> Fraction:
        return self.q ** 3 * self.c

    def __pow__(self, n: int):
        if n < 0:
            return self.invert() ** (-n)
        out = RadMonomial(Fraction(1), 1)
        for _ in range(n):
            out = out * self
        return out

    def as_scalar(self) -> "RadScalar":
        return RadScalar.from_monomial(self)

    def __str__(self):
        if self.c == 1:
            return str(self.q)
        if self.q == 1:
            return f"cbrt({self.c})"
        if self.q == -1:
            return f"-cbrt({self.c})"
        return f"{self.q}*cbrt({self.c})"

    def __repr__(self):
        return f"RadMonomial({self})"

    def to_json(self):
        return {"q": str(self.q), "c": str(self.c)}


def normalize(q, c) -> RadMonomial:
    """Canonical monomial equal to ``q * cbrt(c)`` for rational ``c != 0``."""
    q = as_fraction(q)
    c = as_fraction(c)
    if c == 0:
        raise ZeroRadicand("cube root of zero radicand")
    if q == 0:
        return RadMonomial(Fraction(0), 1)
    if c < 0:
        q, c = -q, -c
    n, d = c.numerator, c.denominator
    # cbrt(n/d) = cbrt(n d^2) / d
    s, r = _cube_split(n * d * d)
    return RadMonomial(q * s / d, r)


def cbrt(c) -> RadMonomial:
    return normalize(1, c)


class RadScalar:
    """Sparse vector over the basis {cbrt(c) : c cube-free}."""

    __slots__ = ("terms", "_key")

    def __init__(self, terms=None):
        clean = {}
        for c, q in (terms or {}).items():
            q = as_fraction(q)
            if q:
                clean[int(c)] = clean.get(int(c), Fraction(0)) + q
        self.terms = {c: q for c, q in clean.items() if q}
        self._key = tuple(sorted(self.terms.items()))

    @classmethod
    def from_monomial(cls, m: RadMonomial) -> "RadScalar":
        return cls({m.c: m.q})

    @classmethod
    def rational(cls, q) -> "RadScalar":
        return cls({1: q})

    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self):
        return [RadMonomial(q, c) for c, q in self._key]

    def __eq__(self, other):
        if isinstance(other, RadMonomial):
            other = RadScalar.from_monomial(other)
        elif isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = RadScalar.rational(other)
        if not isinstance(other, RadScalar):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(("RadScalar", self._key))

    def __add__(self, other):
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        for c, q in other.terms.items():
            acc[c] = acc.get(c, Fraction(0)) + q
        return RadScalar(acc)

    __radd__ = __add__

    def __neg__(self):
        return RadScalar({c: -q for c, q in self.terms.items()})

    def __sub__(self, other):
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        acc: dict = {}
        for c1, q1 in self.terms.items():
            for c2, q2 in other.terms.items():
                m = normalize(q1 * q2, c1 * c2)
                acc[m.c] = acc.get(m.c, Fraction(0)) + m.q
        return RadScalar(acc)

    __rmul__ = __mul__

    def negate(self):
        return -self

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for m in self.monomials():
            s = str(m)
            if out:
                out.append(f"- {s[1:]}" if s.startswith("-") else f"+ {s}")
            else:
                out.append(s)
        return " ".join(out)

    def __repr__(self):
        return f"RadScalar({self})"

    def to_json(self):
        return [m.to_json() for m in self.monomials()]


def _as_scalar(x):
    if isinstance(x, RadScalar):
        return x
    if isinstance(x, RadMonomial):
        return RadScalar.from_monomial(x)
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return RadScalar.rational(x)
    return None
