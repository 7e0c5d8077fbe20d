"""Face intersections, the boundary map and admissibility of 1-cycles in ◊₂."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .cycles import CycleSum, ParamCurve
from .errors import FaceContainment, InadmissibleBoundaryPoint, InvalidParameter
from .exact_arith import INFINITY, as_fraction, ord_at, value_at, zeros_poles
from .radicals import RadMonomial

__all__ = [
    "AdmissibilityReport",
    "ZeroCycle",
    "boundary",
    "boundary_of_curve",
    "check_admissible",
    "face_intersections",
    "face_points",
]


def _as_monomial(x) -> RadMonomial:
    if isinstance(x, RadMonomial):
        return x
    return RadMonomial.rational(x)


def _point_key(p):
    return (1, Fraction(0)) if p is INFINITY else (0, p)


class ZeroCycle:
    """Formal sum of points ``(x, b)`` of ◊₁ with x a radical monomial, b ∈ Q∖{0, 1}."""

    __slots__ = ("_pts",)

    def __init__(self, pts=None):
        self._pts = {k: v for k, v in (pts or {}).items() if v}

    @classmethod
    def point(cls, x, b, coeff: int = 1) -> "ZeroCycle":
        """Single point; ``b = 1`` gives the empty cycle (the point is not in ◊₁)."""
        x = _as_monomial(x)
        b = as_fraction(b)
        if x.is_zero():
            raise InvalidParameter("point with x = 0 is not in c₀(◊₁)")
        if b == 0:
            raise InvalidParameter("point with b = 0 lies on a face")
        if b == 1:
            return cls()
        return cls({(x, b): coeff})

    @classmethod
    def from_pairs(cls, *items) -> "ZeroCycle":
        """``from_pairs((coeff, x, b), ...)``."""
        out = cls()
        for coeff, x, b in items:
            out = out + cls.point(x, b, coeff)
        return out

    def items(self):
        return sorted(self._pts.items(), key=lambda kv: (kv[0][0].sort_key(), kv[0][1]))

    def is_zero(self) -> bool:
        return not self._pts

    def __bool__(self):
        return bool(self._pts)

    def __len__(self):
        return len(self._pts)

    def __eq__(self, other):
        if not isinstance(other, ZeroCycle):
            return NotImplemented
        return self._pts == other._pts

    def __hash__(self):
        return hash(frozenset(self._pts.items()))

    def __add__(self, other):
        if not isinstance(other, ZeroCycle):
            return NotImplemented
        acc = dict(self._pts)
        for k, v in other._pts.items():
            acc[k] = acc.get(k, 0) + v
        return ZeroCycle(acc)

    def __neg__(self):
        return ZeroCycle({k: -v for k, v in self._pts.items()})

    def __sub__(self, other):
        if not isinstance(other, ZeroCycle):
            return NotImplemented
        return self + (-other)

    def __mul__(self, n):
        if not isinstance(n, int) or isinstance(n, bool):
            return NotImplemented
        return ZeroCycle({k: n * v for k, v in self._pts.items()})

    __rmul__ = __mul__

    def star(self, lam) -> "ZeroCycle":
        """``λ ⋆ (x, b) = (x/λ, b)``."""
        inv = _as_monomial(lam).invert()
        return ZeroCycle({(x * inv, b): v for (x, b), v in self._pts.items()})

    def __str__(self):
        if not self._pts:
            return "0"
        return " ".join(f"{'+' if v > 0 else '-'}{abs(v)}·({x}, {b})" for (x, b), v in self.items())

    def __repr__(self):
        return f"ZeroCycle({self})"

    def to_json(self):
        return [{"coeff": v, "x": x.to_json(), "b": str(b)} for (x, b), v in self.items()]


class FaceHit(NamedTuple):
    param: object
    mult: int
    x: object
    other: object
    kept: bool


def _face_values(i: int, j):
    if i not in (1, 2):
        raise ValueError("face index must be 1 or 2")
    if j != 0 and j is not INFINITY:
        raise ValueError("face value must be 0 or INFINITY")


@lru_cache(maxsize=8192)
def face_intersections(curve: ParamCurve, i: int, j) -> tuple:
    """All parameter points with ``t_i = j``, before dropping.

    Points with ``x = ∞`` or with the remaining coordinate equal to 1 are
    outside ◊₁ and marked ``kept=False``.  Points inside ◊₁ but off
    c₀(◊₁) raise InadmissibleBoundaryPoint.
    """
    _face_values(i, j)
    ti = curve.t1 if i == 1 else curve.t2
    other = curve.t2 if i == 1 else curve.t1
    if j == 0 and ti.is_zero():
        raise FaceContainment(f"t{i} ≡ 0")
    if ti.is_constant():
        return ()
    div = zeros_poles(ti, 0 if j == 0 else INFINITY)
    hits = []
    for p in sorted(div, key=_point_key):
        m = div[p]
        xv = value_at(curve.x, p)
        ov = value_at(other, p)
        if xv is INFINITY or ov == 1:
            hits.append(FaceHit(p, m, xv, ov, False))
            continue
        if xv == 0 or ov is INFINITY or ov == 0:
            raise InadmissibleBoundaryPoint(
                f"{curve}: face t{i}={j} meets t={p} at (x, t) = ({xv}, {ov}), outside c₀(◊₁)"
            )
        hits.append(FaceHit(p, m, xv, ov, True))
    return tuple(hits)


def face_points(curve: ParamCurve, i: int, j) -> ZeroCycle:
    """The 0-cycle ∂ᵢʲ of a curve, with multiplicity ord_p(tᵢ − j)."""
    out = ZeroCycle()
    for h in face_intersections(curve, i, j):
        if h.kept:
            out = out + ZeroCycle.point(h.x, h.other, h.mult)
    return out


@lru_cache(maxsize=8192)
def boundary_of_curve(curve: ParamCurve) -> ZeroCycle:
    """∂ = −(∂₁⁰ − ∂₁^∞) + (∂₂⁰ − ∂₂^∞)."""
    return (
        face_points(curve, 1, INFINITY)
        - face_points(curve, 1, 0)
        + face_points(curve, 2, 0)
        - face_points(curve, 2, INFINITY)
    )


def boundary(z: CycleSum) -> ZeroCycle:
    acc: dict = {}
    for coeff, scale, curve in z.terms():
        bc = boundary_of_curve(curve)
        inv = None if (scale.q == 1 and scale.c == 1) else scale.invert()
        for (x, b), v in bc._pts.items():
            key = (x, b) if inv is None else (x * inv, b)
            acc[key] = acc.get(key, 0) + coeff * v
    return ZeroCycle(acc)


@dataclass
class AdmissibilityReport:
    curve: ParamCurve
    proper_faces: bool = True
    modulus: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def admissible(self) -> bool:
        return self.proper_faces and not self.violations

    def to_json(self):
        return {
            "curve": str(self.curve),
            "admissible": self.admissible,
            "proper_faces": self.proper_faces,
            "modulus": {str(p): sorted(v) for p, v in self.modulus.items()},
            "violations": list(self.violations),
        }


def modulus_branches(curve: ParamCurve, p, mult: int | None = None) -> set:
    """Indices i (as 't1'/'t2') with ord_p(tᵢ − 1) ≥ 2·ord_p(x)."""
    m = ord_at(curve.x, p) if mult is None else mult
    out = set()
    for name, ti in (("t1", curve.t1), ("t2", curve.t2)):
        if ord_at(ti - 1, p) >= 2 * m:
            out.add(name)
    return out


def check_admissible(curve: ParamCurve) -> AdmissibilityReport:
    rep = AdmissibilityReport(curve)

    # codimension-2 faces: (t1, t2) ∈ {0, ∞}² must be avoided where x is finite
    cand = {}
    for j in (0, INFINITY):
        if not curve.t1.is_constant():
            cand.update(zeros_poles(curve.t1, j))
    for p in sorted(cand, key=_point_key):
        v2 = value_at(curve.t2, p)
        if (v2 == 0 or v2 is INFINITY) and value_at(curve.x, p) is not INFINITY:
            rep.proper_faces = False
            rep.violations.append(f"meets a codimension-2 face at t = {p}")

    for i in (1, 2):
        for j in (0, INFINITY):
            try:
                face_intersections(curve, i, j)
            except (InadmissibleBoundaryPoint, FaceContainment) as exc:
                rep.proper_faces = False
                rep.violations.append(str(exc))

    xzeros = zeros_poles(curve.x, 0) if not curve.x.is_constant() else {}
    for p in sorted(xzeros, key=_point_key):
        branches = modulus_branches(curve, p, xzeros[p])
        rep.modulus[p] = frozenset(branches)
        if not branches:
            rep.violations.append(f"modulus condition fails at t = {p}")
    return rep
