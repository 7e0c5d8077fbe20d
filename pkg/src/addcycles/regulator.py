"""The residue regulator R₂ on 1-cycles of ◊₂.

At a point p over {x = 0} satisfying the modulus condition for t₁ the local
value is res_p((1 − t₁)/x³ · dt₂/t₂); otherwise (modulus for t₂) it is
−res_p((1 − t₂)/x³ · dt₁/t₁).  Scaled terms contribute cube(scale) times
the value of the unscaled curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .boundary import _point_key, modulus_branches
from .cycles import CycleSum, ParamCurve
from .errors import ModulusViolation, NotOverXZero
from .exact_arith import RatFunc, ord_at, residue_at, zeros_poles

__all__ = ["PointValue", "r2", "r2_curve", "r2_point", "regulator_points", "vanishing_shortcuts"]


def _omega(a: RatFunc, b: RatFunc, x: RatFunc) -> RatFunc:
    """Coefficient of dt in (1 − a)/x³ · db/b."""
    db = b.derivative()
    if db.is_zero():
        return RatFunc.const(0)
    return (1 - a) * db / (x ** 3 * b)


def branch_value(curve: ParamCurve, p, branch: str) -> Fraction:
    if branch == "t1":
        return residue_at(_omega(curve.t1, curve.t2, curve.x), p)
    return -residue_at(_omega(curve.t2, curve.t1, curve.x), p)


@dataclass(frozen=True)
class PointValue:
    point: object
    branch: str
    value: Fraction
    alt_value: Fraction | None = None

    @property
    def disagrees(self) -> bool:
        return self.alt_value is not None and self.alt_value != self.value


def r2_point_detail(curve: ParamCurve, p, crosscheck: bool = False) -> PointValue:
    m = ord_at(curve.x, p)
    if m < 1:
        raise NotOverXZero(f"x does not vanish at t = {p} on {curve}")
    branches = modulus_branches(curve, p, m)
    if not branches:
        raise ModulusViolation(f"no modulus branch holds at t = {p} on {curve}")
    branch = "t1" if "t1" in branches else "t2"
    value = branch_value(curve, p, branch)
    alt = None
    if crosscheck and len(branches) == 2:
        alt = branch_value(curve, p, "t2")
    return PointValue(p, branch, value, alt)


def r2_point(curve: ParamCurve, p, crosscheck: bool = False) -> Fraction:
    return r2_point_detail(curve, p, crosscheck).value


def regulator_points(curve: ParamCurve, crosscheck: bool = False) -> list:
    """Per-point contributions over Supp ν*{x = 0}, in a fixed order."""
    if curve.x.is_constant():
        return []
    zs = zeros_poles(curve.x, 0)
    return [r2_point_detail(curve, p, crosscheck) for p in sorted(zs, key=_point_key)]


@lru_cache(maxsize=8192)
def r2_curve(curve: ParamCurve) -> Fraction:
    return sum((pv.value for pv in regulator_points(curve)), Fraction(0))


def r2(z: CycleSum) -> Fraction:
    total = Fraction(0)
    for coeff, scale, curve in z.terms():
        total += coeff * scale.cube() * r2_curve(curve)
    return total


def vanishing_shortcuts(curve: ParamCurve):
    """0 if R₂(curve) vanishes for a structural reason, else None.

    The reasons are: the closure misses {x = 0}, or t₁ or t₂ is constant.
    """
    if curve.t1.is_constant() or curve.t2.is_constant():
        return Fraction(0)
    if curve.x.is_constant() or not zeros_poles(curve.x, 0):
        return Fraction(0)
    return None
