"""Parametrized curves in ◊₂ and formal Z-linear sums of star-scaled curves."""

from __future__ import annotations

import warnings
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .errors import FaceContainment, InvalidParameter
from .exact_arith import Poly, RatFunc, T, as_fraction
from .radicals import RadMonomial

__all__ = ["CycleSum", "ParamCurve", "make_C1", "make_C2", "materialize", "star", "user_curve"]

ONE_SCALE = RadMonomial(Fraction(1), 1)


def _fmt(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True)
class ParamCurve:
    """Curve ``t ↦ (x(t), t1(t), t2(t))``; the parameter line is its normalization."""

    x: RatFunc
    t1: RatFunc
    t2: RatFunc
    label: str | None = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        for name in ("x", "t1", "t2"):
            val = getattr(self, name)
            if not isinstance(val, RatFunc):
                object.__setattr__(self, name, RatFunc.const(val) if not isinstance(val, RatFunc) else val)
        if self.x.is_zero():
            raise InvalidParameter("curve lies inside {x = 0}")
        for name in ("t1", "t2"):
            val = getattr(self, name)
            if val == 1:
                raise InvalidParameter(f"{name} ≡ 1: curve lies in a removed hyperplane")
            if val.is_zero():
                raise FaceContainment(f"{name} ≡ 0: curve lies in a face")
        if self.x.is_constant() and self.t1.is_constant() and self.t2.is_constant():
            raise InvalidParameter("all coordinates constant: not a curve")

    def coords(self):
        return (self.x, self.t1, self.t2)

    def looks_birational(self) -> bool:
        """True when some coordinate has degree 1, hence is injective on P¹."""
        return any(c.degree == 1 for c in self.coords())

    def dsl(self) -> str:
        return f"curve({self.x}, {self.t1}, {self.t2})"

    def __str__(self):
        return self.label or self.dsl()


class CycleSum:
    """Finite formal sum ``Σ coeff · (scale * curve)``.

    Terms sharing ``(scale, curve)`` are merged; insertion order is kept so
    that reports are reproducible.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        acc: dict = {}
        for coeff, scale, curve in terms:
            if not isinstance(coeff, int):
                raise TypeError("cycle coefficients are integers")
            if scale.is_zero():
                raise InvalidParameter("zero scale")
            key = (scale, curve)
            acc[key] = acc.get(key, 0) + coeff
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def of(cls, curve: ParamCurve, coeff: int = 1, scale: RadMonomial = ONE_SCALE) -> "CycleSum":
        return cls([(coeff, scale, curve)])

    def terms(self) -> Iterator[tuple]:
        for (scale, curve), coeff in self._terms.items():
            yield coeff, scale, curve

    def curves(self) -> list:
        seen = {}
        for _, _, c in self.terms():
            seen.setdefault(c, None)
        return list(seen)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, CycleSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, CycleSum):
            return NotImplemented
        return CycleSum(list(self.terms()) + list(other.terms()))

    def __neg__(self):
        return CycleSum([(-c, s, k) for c, s, k in self.terms()])

    def __sub__(self, other):
        if not isinstance(other, CycleSum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, n):
        if not isinstance(n, int) or isinstance(n, bool):
            return NotImplemented
        return CycleSum([(n * c, s, k) for c, s, k in self.terms()])

    __rmul__ = __mul__

    def star(self, lam) -> "CycleSum":
        return star(lam, self)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for coeff, scale, curve in self.terms():
            body = str(curve)
            if scale != ONE_SCALE:
                body = f"{abs(coeff)}*{scale}*{body}"
            elif abs(coeff) != 1:
                body = f"{abs(coeff)}*{body}"
            sign = "-" if coeff < 0 else "+"
            parts.append(f"{sign} {body}" if parts or coeff < 0 else body)
        return " ".join(parts)

    def __repr__(self):
        return f"CycleSum({self})"


def star(lam, z: CycleSum) -> CycleSum:
    """k×-action ``λ * (x, t1, t2) = (x/λ, t1, t2)``, recorded on the scale."""
    if not isinstance(lam, RadMonomial):
        lam = RadMonomial.rational(lam)
    if lam.is_zero():
        raise InvalidParameter("star action by zero")
    return CycleSum([(c, s * lam, k) for c, s, k in z.terms()])


def _check_b(*bs):
    for b in bs:
        if b in (0, 1):
            raise InvalidParameter(f"b = {b} is not allowed (need b ∉ {{0, 1}})")


def make_C1(a1, a2, b) -> CycleSum:
    """The cycle C₁^{(a₁,a₂),b}; empty when a₁a₂ = 0."""
    return _make_C1(as_fraction(a1), as_fraction(a2), as_fraction(b))


@lru_cache(maxsize=4096)
def _make_C1(a1, a2, b) -> CycleSum:
    _check_b(b)
    label = f"C1({_fmt(a1)},{_fmt(a2)};{_fmt(b)})"
    if a1 * a2 == 0:
        return CycleSum()
    s = a1 + a2
    if s == 0:
        t1 = RatFunc(Poly._raw([Fraction(1), Fraction(0), -a1 * a1]))
    else:
        t1 = RatFunc(Poly._raw([Fraction(1), -s, a1 * a2]), Poly._raw([Fraction(1), -s]))
    return CycleSum.of(ParamCurve(T, t1, RatFunc.const(b), label=label))


def make_C2(a, b1, b2) -> CycleSum:
    """The cycle C₂^{a,(b₁,b₂)}; empty when a = 0."""
    return _make_C2(as_fraction(a), as_fraction(b1), as_fraction(b2))


@lru_cache(maxsize=4096)
def _make_C2(a, b1, b2) -> CycleSum:
    _check_b(b1, b2)
    label = f"C2({_fmt(a)};{_fmt(b1)},{_fmt(b2)})"
    if a == 0:
        return CycleSum()
    p = b1 * b2
    t2 = RatFunc(Poly._raw([-b1 * b2, b1]), Poly._raw([-p, Fraction(1)]))
    return CycleSum.of(ParamCurve(RatFunc.const(1 / a), T, t2, label=label))


def user_curve(x: RatFunc, t1: RatFunc, t2: RatFunc) -> CycleSum:
    c = ParamCurve(x, t1, t2)
    if not c.looks_birational():
        warnings.warn(
            f"{c.dsl()}: no coordinate of degree 1; the parametrization is assumed birational",
            stacklevel=2,
        )
    return CycleSum.of(c)


def materialize(z: CycleSum) -> CycleSum:
    """Substitute rational scales into x(t): ``λ * (x, t1, t2) -> (x/λ, t1, t2)``.

    Radical scales cannot be absorbed over Q and raise InvalidParameter.
    """
    terms = []
    for coeff, scale, curve in z.terms():
        if scale == ONE_SCALE:
            terms.append((coeff, scale, curve))
            continue
        if not scale.is_rational():
            raise InvalidParameter(f"scale {scale} is not rational")
        c = ParamCurve(curve.x / scale.q, curve.t1, curve.t2)
        terms.append((coeff, ONE_SCALE, c))
    return CycleSum(terms)
