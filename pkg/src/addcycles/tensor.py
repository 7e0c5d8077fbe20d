"""The group k ⊗_Z k× for k = Q, with radical first factors.

Q ⊗ Q× is a Q-vector space on the primes (the sign ±1 is torsion and
dies), so an element is a map prime → coefficient.  Coefficients are
RadScalars because star-scaled zero-cycles carry radical x-coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from sympy import factorint

from .boundary import ZeroCycle, boundary
from .errors import InvalidParameter
from .exact_arith import as_fraction
from .radicals import RadMonomial, RadScalar

__all__ = ["TensorElem", "cathelineau_tensor", "f_map", "g_map", "prime_exponents"]


@lru_cache(maxsize=16384)
def prime_exponents(b: Fraction) -> tuple:
    """Exponent vector of |b| as sorted ``(prime, exponent)`` pairs."""
    b = as_fraction(b)
    if b == 0:
        raise InvalidParameter("0 is not in Q×")
    exps = dict(factorint(abs(b.numerator)))
    for p, e in factorint(b.denominator).items():
        exps[p] = exps.get(p, 0) - e
    exps.pop(1, None)
    return tuple(sorted((p, e) for p, e in exps.items() if e))


class TensorElem:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {p: s for p, s in (coeffs or {}).items() if not s.is_zero()}

    @classmethod
    def simple(cls, a, b) -> "TensorElem":
        """The pure tensor a ⊗ b."""
        if isinstance(a, RadMonomial):
            a = a.as_scalar()
        elif not isinstance(a, RadScalar):
            a = RadScalar.rational(a)
        return cls({p: a * e for p, e in prime_exponents(as_fraction(b))})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other):
        acc = dict(self.coeffs)
        for p, s in other.coeffs.items():
            acc[p] = acc[p] + s if p in acc else s
        return TensorElem(acc)

    def __neg__(self):
        return TensorElem({p: -s for p, s in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, lam) -> "TensorElem":
        return TensorElem({p: s * lam for p, s in self.coeffs.items()})

    def __str__(self):
        if not self.coeffs:
            return "0"
        return "\n".join(f"{p}: {self.coeffs[p]}" for p in sorted(self.coeffs))

    def __repr__(self):
        inner = ", ".join(f"{p}: {self.coeffs[p]}" for p in sorted(self.coeffs))
        return f"TensorElem({{{inner}}})"

    def to_json(self):
        return {str(p): str(self.coeffs[p]) for p in sorted(self.coeffs)}


def g_map(z: ZeroCycle) -> TensorElem:
    """(x, b) ↦ (1/x) ⊗ b, extended linearly."""
    acc: dict = {}
    for (x, b), coeff in z.items():
        inv = x.invert() * coeff
        for p, e in prime_exponents(b):
            m = inv * e
            acc.setdefault(p, {})
            acc[p][m.c] = acc[p].get(m.c, Fraction(0)) + m.q
    return TensorElem({p: RadScalar(terms) for p, terms in acc.items()})


def f_map(a, b) -> ZeroCycle:
    """(a, b) ↦ (1/a, b), or 0 when a = 0."""
    a, b = as_fraction(a), as_fraction(b)
    if b == 0:
        raise InvalidParameter("b must be in k×")
    if a == 0:
        return ZeroCycle()
    return ZeroCycle.point(1 / a, b)


def cathelineau_tensor(a, b, repaired: bool = False) -> TensorElem:
    """g(∂D(a, b)); vanishes exactly when ∂̄₁ kills the Cathelineau combination."""
    from .catalog import D

    return g_map(boundary(D(a, b, repaired=repaired)))
