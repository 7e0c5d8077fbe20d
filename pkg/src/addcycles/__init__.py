"""Exact arithmetic for cubical additive 1-cycles with modulus.

Curves in ◊₂ are rational parametrizations over Q; the package computes
their boundaries in Z₀(◊₁), the residue regulator R₂, and the image of
boundaries in Q ⊗ Q×, all without floating point.
"""

from .boundary import ZeroCycle, boundary, check_admissible
from .catalog import CATALOG, Ca, D, Gamma1, Gamma2, Gamma3, GammaBar1, GammaBar2, Q, Qtilde
from .cycles import CycleSum, ParamCurve, make_C1, make_C2, star
from .dsl import evaluate, parse
from .exact_arith import INFINITY, Poly, RatFunc, T, parse_ratfunc
from .radicals import RadMonomial, RadScalar, cbrt, normalize
from .regulator import r2
from .tensor import TensorElem, cathelineau_tensor, f_map, g_map

__version__ = "0.1.0"

__all__ = [
    "CATALOG",
    "INFINITY",
    "Ca",
    "CycleSum",
    "D",
    "Gamma1",
    "Gamma2",
    "Gamma3",
    "GammaBar1",
    "GammaBar2",
    "ParamCurve",
    "Poly",
    "Q",
    "Qtilde",
    "RadMonomial",
    "RadScalar",
    "RatFunc",
    "T",
    "TensorElem",
    "ZeroCycle",
    "boundary",
    "cathelineau_tensor",
    "cbrt",
    "check_admissible",
    "evaluate",
    "f_map",
    "g_map",
    "make_C1",
    "make_C2",
    "normalize",
    "parse",
    "parse_ratfunc",
    "r2",
    "star",
]
