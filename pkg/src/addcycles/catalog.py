"""Named cycles: Γ₁, Γ₂, their corrected versions, Γ₃, Q, Q̃, C_a and D(a, b).

Every constructor takes ``repaired``.  With ``repaired=False`` (default) the
formal sums are transcribed exactly as printed.  ``repaired=True`` applies
the minimal corrections needed for the stated boundary and regulator
identities to hold at cycle level:

* Γ̄₂: coefficient of C₂^{1/2,(4/3,3/2)} is −1, and the pair
  3·C₁^{(−1/3,−1/3),−1} − 3·C₂^{−1/3,(−1,−1)} is replaced by
  3·C₁^{(−1/12,−1/12),−1} + 3·C₂^{−1/12,(−1,−1)};
* Q̃(a): coefficients of C₂^{A/2,(1+1/A, A/(−2a))} and C₂^{−1/2,(−1,−2a)}
  are −1 (A = 1 − 2a);
* C_a: the scale α is ∛2 instead of ∛(−2), since R₂(Q(1 − 2a)) equals
  +a(1 − a)/2 − 1/8.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .cycles import CycleSum, ParamCurve, make_C1, make_C2, star
from .errors import InvalidParameter
from .exact_arith import T, as_fraction
from .radicals import RadMonomial, normalize

__all__ = [
    "CATALOG",
    "Ca",
    "D",
    "Gamma1",
    "Gamma2",
    "Gamma3",
    "GammaBar1",
    "GammaBar2",
    "Q",
    "Qtilde",
    "alpha",
    "alpha_prime",
    "build",
    "d_domain_ok",
    "qtilde_domain_ok",
]

HALF = Fraction(1, 2)
QT_EXCLUDED = frozenset({Fraction(0), HALF, Fraction(1), -HALF})


def _f(x) -> Fraction:
    return as_fraction(x)


def _combine(c1, c2) -> CycleSum:
    terms = []
    for make, rows in ((make_C1, c1), (make_C2, c2)):
        for n, args in rows:
            terms.extend((n * c, s, k) for c, s, k in make(*args).terms())
    return CycleSum(terms)


@lru_cache(maxsize=None)
def Gamma1(repaired: bool = False) -> CycleSum:
    return CycleSum.of(ParamCurve(T, T, (1 - T / 2) ** 2 / (1 - T), label="Gamma1"))


@lru_cache(maxsize=None)
def Gamma2(repaired: bool = False) -> CycleSum:
    return CycleSum.of(ParamCurve(T, 1 + T / 6, 1 - T * T / 4, label="Gamma2"))


@lru_cache(maxsize=None)
def GammaBar1(repaired: bool = False) -> CycleSum:
    return Gamma1() + make_C1(HALF, HALF, 2)


def _gamma_bar2_corrections(repaired: bool) -> CycleSum:
    F = Fraction
    c1 = [
        (1, (-HALF, HALF, F(2, 3))),
        (-1, (F(-1, 6), F(-1, 6), 2)),
        (-1, (F(-1, 6), F(-1, 3), 2)),
        (-1, (-HALF, HALF, 2)),
        (1, (HALF, HALF, 2)),
    ]
    c2 = [
        (-1, (F(-1, 6), 4, -2)),
        (-1, (F(-1, 6), -2, -2)),
        (1, (HALF, F(2, 3), F(3, 2))),
        (-3, (F(-1, 6), 2, -1)),
    ]
    if repaired:
        c1.append((3, (F(-1, 12), F(-1, 12), -1)))
        c2.append((3, (F(-1, 12), -1, -1)))
        c2.append((-1, (HALF, F(4, 3), F(3, 2))))
    else:
        c1.append((3, (F(-1, 3), F(-1, 3), -1)))
        c2.append((-3, (F(-1, 3), -1, -1)))
        c2.append((1, (HALF, F(4, 3), F(3, 2))))
    return _combine(c1, c2)


@lru_cache(maxsize=None)
def GammaBar2(repaired: bool = False) -> CycleSum:
    return Gamma2() + _gamma_bar2_corrections(repaired)


@lru_cache(maxsize=None)
def Gamma3(repaired: bool = False) -> CycleSum:
    if repaired:
        return GammaBar1() - GammaBar2(repaired=True)
    F = Fraction
    c1 = [
        (-1, (-HALF, HALF, F(2, 3))),
        (-3, (F(-1, 3), F(-1, 3), -1)),
        (1, (F(-1, 6), F(-1, 6), 2)),
        (1, (F(-1, 6), F(-1, 3), 2)),
        (1, (-HALF, HALF, 2)),
    ]
    c2 = [
        (1, (F(-1, 6), 4, -2)),
        (1, (F(-1, 6), -2, -2)),
        (-1, (HALF, F(2, 3), F(3, 2))),
        (3, (F(-1, 6), 2, -1)),
        (3, (F(-1, 3), -1, -1)),
        (-1, (HALF, F(4, 3), F(3, 2))),
    ]
    return Gamma1() - Gamma2() + _combine(c1, c2)


def Q(a, repaired: bool = False) -> CycleSum:
    a = _f(a)
    if a == 0:
        raise InvalidParameter("Q(a) needs a != 0")
    return CycleSum.of(ParamCurve(T, 1 + T / 2, 1 - a * a * T * T / 4, label=f"Q({a})"))


def qtilde_domain_ok(a) -> bool:
    return _f(a) not in QT_EXCLUDED


def _check_qtilde(a):
    if not qtilde_domain_ok(a):
        raise InvalidParameter(f"a = {a} is outside the domain a ∉ {{0, 1/2, 1, -1/2}}")


def qtilde_corrections(a, repaired: bool = False) -> CycleSum:
    """The C₁/C₂ correction terms added to Q(1 − 2a)."""
    a = _f(a)
    A = 1 - 2 * a
    m = -2 * a
    flip = -1 if repaired else 1
    c1 = [
        (1, (A / 2, -A / 2, 1 - 1 / A)),
        (1, (Fraction(-1, 4), Fraction(-1, 4), -1)),
        (1, (HALF, A / 2, 2 - 2 * a)),
        (-1, (-HALF, HALF, 2 - 2 * a)),
        (-1, (-HALF, A / 2, m)),
        (1, (a, 1 - a, 2)),
        (-1, (-a, a, m)),
        (-1, (a / 2, a / 2, -1)),
    ]
    c2 = [
        (1, (A / 2, 1 - 1 / A, A / m)),
        (flip, (A / 2, 1 + 1 / A, A / m)),
        (1, (A / 2, 2 - 2 * a, 1 / m)),
        (flip, (-HALF, -1, m)),
        (1, (Fraction(-1, 4), -1, -1)),
        (-1, (-HALF, 2 * a, 2 - 2 * a)),
        (-1, (A / 2, 1 / m, m)),
        (1, (a, a, -2)),
        (1, (1 - a, 1 - a, 2)),
        (1, (a, 2, -1)),
        (-1, (a / 2, -1, -1)),
    ]
    return _combine(c1, c2)


@lru_cache(maxsize=4096)
def Qtilde(a, repaired: bool = False) -> CycleSum:
    _check_qtilde(a)
    a = _f(a)
    return Q(1 - 2 * a) + qtilde_corrections(a, repaired)


def alpha(repaired: bool = False) -> RadMonomial:
    return normalize(1, 2 if repaired else -2)


def alpha_prime(repaired: bool = False) -> RadMonomial:
    return normalize(1, Fraction(-18, 7))


@lru_cache(maxsize=4096)
def Ca(a, repaired: bool = False) -> CycleSum:
    _check_qtilde(a)
    return star(alpha(repaired), Qtilde(a, repaired) - GammaBar1()) - star(
        alpha_prime(repaired), Gamma3(repaired)
    )


def d_domain_ok(a, b) -> bool:
    a, b = _f(a), _f(b)
    if a == b or a in (0, 1):
        return False
    return all(v not in QT_EXCLUDED for v in (a, b, b / a, (1 - b) / (1 - a)))


@lru_cache(maxsize=4096)
def D(a, b, repaired: bool = False) -> CycleSum:
    """C_a − C_b + a * C_{b/a} + (1 − a) * C_{(1−b)/(1−a)}."""
    a, b = _f(a), _f(b)
    if not d_domain_ok(a, b):
        raise InvalidParameter(f"(a, b) = ({a}, {b}) is outside the domain of D")
    return (
        Ca(a, repaired)
        - Ca(b, repaired)
        + star(a, Ca(b / a, repaired))
        + star(1 - a, Ca((1 - b) / (1 - a), repaired))
    )


@dataclass(frozen=True)
class Entry:
    name: str
    arity: int
    build: Callable
    anchor: str
    description: str


CATALOG = {
    e.name: e
    for e in [
        Entry("C1", 3, make_C1, "∂C₁ = −(1/a₁,b) − (1/a₂,b) + (1/(a₁+a₂),b)", "C1(a1,a2;b), three branches"),
        Entry("C2", 3, make_C2, "∂C₂ = (1/a,b₁) + (1/a,b₂) − (1/a,b₁b₂)", "C2(a;b1,b2) = (1/a, t, (b1 t - b1 b2)/(t - b1 b2))"),
        Entry("Gamma1", 0, Gamma1, "R₂(Γ₁) = 1/4", "(t, t, (1-t/2)^2/(1-t))"),
        Entry("Gamma2", 0, Gamma2, "R₂(Γ₂) = −1/24", "(t, 1+t/6, 1-t^2/4)"),
        Entry("GammaBar1", 0, GammaBar1, "∂Γ̄₁ = (1,2)", "Gamma1 + C1(1/2,1/2;2)"),
        Entry("GammaBar2", 0, GammaBar2, "∂Γ̄₂ = (1,2)", "Gamma2 + 6 C1-terms + 6 C2-terms"),
        Entry("Gamma3", 0, Gamma3, "∂Γ₃ = 0, R₂(Γ₃) = 7/24", "GammaBar1 - GammaBar2"),
        Entry("Q", 1, Q, "R₂(Q(a)) = −a²/8", "(t, 1+t/2, 1-a^2 t^2/4)"),
        Entry("Qtilde", 1, Qtilde, "∂Q̃(a) = (1/a,a) + (1/(1−a),1−a) + (1,2)", "Q(1-2a) + 8 C1-terms + 11 C2-terms"),
        Entry("Ca", 1, Ca, "R₂(C_a) = a(1−a), ∂C_a = α⋆((1/a,a) + (1/(1−a),1−a))", "alpha*(Qtilde(a) - GammaBar1) - alpha'*Gamma3"),
        Entry("D", 2, D, "C_a − C_b + a*C_{b/a} + (1−a)*C_{(1−b)/(1−a)} ≡ 0", "Cathelineau combination"),
    ]
}

_EDITIONED = {"Gamma1", "Gamma2", "GammaBar1", "GammaBar2", "Gamma3", "Q", "Qtilde", "Ca", "D"}


def build(name: str, params=(), repaired: bool = False) -> CycleSum:
    """Instantiate a catalog cycle by name."""
    try:
        entry = CATALOG[name]
    except KeyError:
        raise InvalidParameter(f"unknown catalog cycle {name!r}") from None
    if len(params) != entry.arity:
        raise InvalidParameter(f"{name} takes {entry.arity} parameters, got {len(params)}")
    if name in _EDITIONED:
        return entry.build(*params, repaired=repaired)
    return entry.build(*params)
