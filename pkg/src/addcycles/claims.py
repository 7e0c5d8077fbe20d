"""Stated identities between boundaries, encoded as data.

A :class:`ChainEq` reads ``Σ nᵢ·∂(cycleᵢ) + lhs = rhs`` in Z₀(◊₁).  The
telescoping chains below are given twice: as printed, and with the sign
fixes that make every step true.  Steps that differ between the two
editions are exactly the ones that fail as printed.

Cycles are built through the ``cycles`` module attribute, not a bound
name, so that tests can swap a constructor for a corrupted one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import cycles as _cyc
from .boundary import ZeroCycle, boundary, face_points
from .exact_arith import INFINITY, as_fraction

__all__ = [
    "ChainEq",
    "FaceClaim",
    "gamma_bar2_chain",
    "gamma_faces",
    "q_chain",
    "q_faces",
    "q_intermediate",
    "q_prime",
    "q_substituted",
    "qtilde_chain",
    "qtilde_from_chains",
]

HALF = Fraction(1, 2)


def _pts(items) -> ZeroCycle:
    out = ZeroCycle()
    for coeff, x, b in items:
        x, b = as_fraction(x), as_fraction(b)
        if x == 0:
            continue
        out = out + ZeroCycle.point(x, b, coeff)
    return out


def C1(a1, a2, b):
    return ("C1", (as_fraction(a1), as_fraction(a2), as_fraction(b)))


def C2(a, b1, b2):
    return ("C2", (as_fraction(a), as_fraction(b1), as_fraction(b2)))


def _build(spec):
    kind, args = spec
    return (_cyc.make_C1 if kind == "C1" else _cyc.make_C2)(*args)


def _spec_str(spec) -> str:
    kind, args = spec
    if kind == "C1":
        return f"C1({args[0]},{args[1]};{args[2]})"
    return f"C2({args[0]};{args[1]},{args[2]})"


def _pts_str(items) -> str:
    if not items:
        return "0"
    parts = []
    for coeff, x, b in items:
        sign = "-" if coeff < 0 else "+"
        mag = "" if abs(coeff) == 1 else f"{abs(coeff)}"
        parts.append(f"{sign} {mag}({as_fraction(x)}, {as_fraction(b)})")
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else s


@dataclass(frozen=True)
class ChainEq:
    label: str
    cycles: tuple
    lhs: tuple = ()
    rhs: tuple = ()

    def cycle_sum(self):
        out = _cyc.CycleSum()
        for n, spec in self.cycles:
            out = out + n * _build(spec)
        return out

    def evaluate(self):
        """(left side, right side) as ZeroCycles."""
        return boundary(self.cycle_sum()) + _pts(self.lhs), _pts(self.rhs)

    def holds(self) -> bool:
        left, right = self.evaluate()
        return left == right

    def __str__(self):
        parts = []
        for n, spec in self.cycles:
            sign = "-" if n < 0 else "+"
            mag = "" if abs(n) == 1 else f"{abs(n)}"
            parts.append(f"{sign} {mag}∂{_spec_str(spec)}")
        left = " ".join(parts)
        left = left[2:] if left.startswith("+ ") else left
        if self.lhs:
            extra = _pts_str(self.lhs)
            left += " " + (extra if extra.startswith("-") else "+ " + extra)
        return f"{left} = {_pts_str(self.rhs)}"


@dataclass(frozen=True)
class FaceClaim:
    """``∂ᵢʲ(cycle) = points`` for a single parametrized curve."""

    label: str
    cycle: object
    i: int
    j: object
    points: tuple

    def evaluate(self):
        (curve,) = self.cycle.curves()
        return face_points(curve, self.i, self.j), _pts(self.points)

    def holds(self) -> bool:
        left, right = self.evaluate()
        return left == right

    def __str__(self):
        j = "∞" if self.j is INFINITY else "0"
        return f"∂{self.i}^{j} {self.cycle} = {_pts_str(self.points)}"


def gamma_faces():
    from .catalog import Gamma1, Gamma2

    g1, g2 = Gamma1(), Gamma2()
    return [
        FaceClaim("Γ₁ ∂₁⁰", g1, 1, 0, ()),
        FaceClaim("Γ₁ ∂₁^∞", g1, 1, INFINITY, ()),
        FaceClaim("Γ₁ ∂₂⁰", g1, 2, 0, ((2, 2, 2),)),
        FaceClaim("Γ₁ ∂₂^∞", g1, 2, INFINITY, ()),
        FaceClaim("Γ₂ ∂₁⁰", g2, 1, 0, ((1, -6, -8),)),
        FaceClaim("Γ₂ ∂₁^∞", g2, 1, INFINITY, ()),
        FaceClaim("Γ₂ ∂₂⁰", g2, 2, 0, ((1, 2, Fraction(4, 3)), (1, -2, Fraction(2, 3)))),
        FaceClaim("Γ₂ ∂₂^∞", g2, 2, INFINITY, ()),
    ]


def gamma_bar2_chain(repaired: bool = False) -> list:
    """The twelve steps reducing ∂Γ₂ to (1, 2)."""
    F = Fraction
    eqs = [
        ChainEq("G1", ((-1, C2(F(-1, 6), 4, -2)),), ((-1, -6, -8),), ((-1, -6, 4), (-1, -6, -2))),
        ChainEq("G2", ((-1, C2(F(-1, 6), -2, -2)),), ((-1, -6, 4),), ((-1, -6, -2), (-1, -6, -2))),
        ChainEq("G3", ((1, C1(-HALF, HALF, F(2, 3))),), ((1, -2, F(2, 3)),), ((-1, 2, F(2, 3)),)),
        ChainEq("G4", ((1, C2(HALF, F(2, 3), F(3, 2))),), ((-1, 2, F(2, 3)),), ((1, 2, F(3, 2)),)),
        ChainEq("G5", ((-3, C2(F(-1, 6), 2, -1)),), ((-3, -6, -2),), ((-3, -6, 2), (-3, -6, -1))),
    ]
    if repaired:
        eqs += [
            ChainEq("G6", ((3, C1(F(-1, 12), F(-1, 12), -1)),), ((-3, -6, -1),), ((-6, -12, -1),)),
            ChainEq("G7", ((3, C2(F(-1, 12), -1, -1)),), ((-6, -12, -1),), ()),
            ChainEq(
                "G8",
                ((-1, C2(HALF, F(4, 3), F(3, 2))),),
                ((1, 2, F(4, 3)), (1, 2, F(3, 2))),
                ((1, 2, 2),),
            ),
        ]
    else:
        eqs += [
            ChainEq("G6", ((3, C1(F(-1, 3), F(-1, 3), -1)),), ((-3, -6, -1),), ((-6, -3, -1),)),
            ChainEq("G7", ((-3, C2(F(-1, 3), -1, -1)),), ((-6, -3, -1),), ()),
            ChainEq(
                "G8",
                ((1, C2(HALF, F(4, 3), F(3, 2))),),
                ((1, 2, F(4, 3)), (1, 2, F(3, 2))),
                ((1, 2, 2),),
            ),
        ]
    eqs += [
        ChainEq("G9", ((-1, C1(F(-1, 6), F(-1, 6), 2)),), ((-2, -6, 2),), ((-1, -3, 2),)),
        ChainEq("G10", ((-1, C1(F(-1, 6), F(-1, 3), 2)),), ((-1, -6, 2), (-1, -3, 2)), ((-1, -2, 2),)),
        ChainEq("G11", ((-1, C1(-HALF, HALF, 2)),), ((-1, -2, 2),), ((1, 2, 2),)),
        ChainEq("G12", ((1, C1(HALF, HALF, 2)),), ((2, 2, 2),), ((1, 1, 2),)),
    ]
    return eqs


def q_faces(q):
    """Face values of Q(q)."""
    from .catalog import Q

    q = as_fraction(q)
    c = Q(q)
    return [
        FaceClaim("Q ∂₁⁰", c, 1, 0, ((1, -2, 1 - q * q),)),
        FaceClaim("Q ∂₁^∞", c, 1, INFINITY, ()),
        FaceClaim("Q ∂₂⁰", c, 2, 0, ((1, 2 / q, 1 + 1 / q), (1, -2 / q, 1 - 1 / q))),
        FaceClaim("Q ∂₂^∞", c, 2, INFINITY, ()),
    ]


def q_chain(q, repaired: bool = False) -> list:
    """Twelve steps for ∂Q(q), written in the Q-parameter q."""
    a = as_fraction(q)
    s4 = -1 if repaired else 1
    s7 = -1 if repaired else 1
    s8 = -1 if repaired else 1
    return [
        ChainEq("E1", ((-1, C2(-HALF, 1 - a, 1 + a)),), ((-1, -2, 1 - a * a),), ((-1, -2, 1 - a), (-1, -2, 1 + a))),
        ChainEq("E2", ((1, C1(a / 2, -a / 2, 1 - 1 / a)),), ((1, -2 / a, 1 - 1 / a),), ((-1, 2 / a, 1 - 1 / a),)),
        ChainEq("E3", ((1, C2(a / 2, 1 - 1 / a, a / (a - 1))),), ((-1, 2 / a, 1 - 1 / a),), ((1, 2 / a, a / (a - 1)),)),
        ChainEq(
            "E4",
            ((s4, C2(a / 2, 1 + 1 / a, a / (a - 1))),),
            ((1, 2 / a, 1 + 1 / a), (1, 2 / a, a / (a - 1))),
            ((1, 2 / a, (a + 1) / (a - 1)),),
        ),
        ChainEq(
            "E5",
            ((1, C2(a / 2, a + 1, 1 / (a - 1))),),
            ((1, 2 / a, (a + 1) / (a - 1)),),
            ((1, 2 / a, a + 1), (1, 2 / a, 1 / (a - 1))),
        ),
        ChainEq("E6", ((-1, C2(a / 2, 1 / (a - 1), a - 1)),), ((1, 2 / a, 1 / (a - 1)),), ((-1, 2 / a, a - 1),)),
        ChainEq("E7", ((s7, C1(-HALF, HALF, 1 + a)),), ((-1, -2, 1 + a),), ((1, 2, 1 + a),)),
        ChainEq("E8", ((s8, C2(-HALF, -1, a - 1)),), ((-1, -2, 1 - a),), ((-1, -2, -1), (-1, -2, a - 1))),
        ChainEq("E9", ((1, C1(Fraction(-1, 4), Fraction(-1, 4), -1)),), ((-1, -2, -1),), ((-2, -4, -1),)),
        ChainEq("E10", ((1, C2(Fraction(-1, 4), -1, -1)),), ((-2, -4, -1),), ()),
        ChainEq(
            "E11",
            ((-1, C1(-HALF, a / 2, a - 1)),),
            ((-1, -2, a - 1), (-1, 2 / a, a - 1)),
            ((-1, 2 / (a - 1), a - 1),),
        ),
        ChainEq(
            "E12",
            ((1, C1(HALF, a / 2, a + 1)),),
            ((1, 2, 1 + a), (1, 2 / a, 1 + a)),
            ((1, 2 / (a + 1), a + 1),),
        ),
    ]


def q_prime(q, repaired: bool = False):
    """Q'(q): the sum of all correction cycles of :func:`q_chain`."""
    out = _cyc.CycleSum()
    for eq in q_chain(q, repaired):
        out = out + eq.cycle_sum()
    return out


def q_intermediate(q, repaired: bool = False):
    """(∂(Q(q) + Q'(q)), −(2/(q−1), q−1) + (2/(q+1), q+1))."""
    from .catalog import Q

    q = as_fraction(q)
    left = boundary(Q(q) + q_prime(q, repaired))
    return left, _pts(((-1, 2 / (q - 1), q - 1), (1, 2 / (q + 1), q + 1)))


def q_substituted(a, repaired: bool = False):
    """The intermediate identity at q = 1 − 2a, against its rewritten right side."""
    a = as_fraction(a)
    left, _ = q_intermediate(1 - 2 * a, repaired)
    return left, _pts(((-1, -1 / a, -2 * a), (1, 1 / (1 - a), 2 * (1 - a))))


def qtilde_chain(a, repaired: bool = False) -> list:
    """Seven steps finishing ∂Q̃(a), in the parameter a."""
    a = as_fraction(a)
    s5 = -1 if repaired else 1
    return [
        ChainEq("F1", ((-1, C1(-a, a, -2 * a)),), ((-1, -1 / a, -2 * a),), ((1, 1 / a, -2 * a),)),
        ChainEq("F2", ((1, C2(a, a, -2)),), ((1, 1 / a, -2 * a),), ((1, 1 / a, a), (1, 1 / a, -2))),
        ChainEq(
            "F3",
            ((1, C2(1 - a, 1 - a, 2)),),
            ((1, 1 / (1 - a), 2 * (1 - a)),),
            ((1, 1 / (1 - a), 1 - a), (1, 1 / (1 - a), 2)),
        ),
        ChainEq("F4", ((1, C2(a, 2, -1)),), ((1, 1 / a, -2),), ((1, 1 / a, 2), (1, 1 / a, -1))),
        ChainEq("F5", ((s5, C1(a / 2, a / 2, -1)),), ((1, 1 / a, -1),), ((2, 2 / a, -1),)),
        ChainEq("F6", ((-1, C2(a / 2, -1, -1)),), ((2, 2 / a, -1),), ()),
        ChainEq(
            "F7",
            ((1, C1(a, 1 - a, 2)),),
            ((1, 1 / a, 2), (1, 1 / (1 - a), 2)),
            ((1, 1, 2),),
        ),
    ]


def qtilde_from_chains(a, repaired: bool = False):
    """Q(1 − 2a) + Q'(1 − 2a) + the cycles of :func:`qtilde_chain`.

    Compared against the stated Q̃(a) to detect statement/proof drift.
    """
    from .catalog import Q

    a = as_fraction(a)
    out = Q(1 - 2 * a) + q_prime(1 - 2 * a, repaired)
    for eq in qtilde_chain(a, repaired):
        out = out + eq.cycle_sum()
    return out
