"""A small language for cycle expressions.

    expr   := term (('+' | '-') term)*
    term   := [INT '*'] [scalar '*'] atom
    scalar := factor ('*' factor)*      factor := RAT | 'cbrt(' RAT ')'
    atom   := C1(RAT,RAT;RAT) | C2(RAT;RAT,RAT) | Gamma1 | Gamma2 | Gamma3
            | GammaBar1 | GammaBar2 | Q(RAT) | Qtilde(RAT) | Ca(RAT)
            | D(RAT,RAT) | curve(RF, RF, RF)

A leading integer is the Z-coefficient of the term; every later factor
multiplies the star scale.  So ``2*Gamma1`` is Γ₁ + Γ₁ while ``1*2*Gamma1``
is 2 * Γ₁.  RATs may carry a sign; floats are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import catalog as _cat
from . import cycles as _cyc
from .errors import DSLSyntaxError
from .exact_arith import RatFunc, _RFParser
from .radicals import RadMonomial, normalize

__all__ = ["Atom", "CurveAtom", "Expr", "Term", "evaluate", "parse", "to_source"]

ONE = RadMonomial(Fraction(1), 1)

# name -> (arity, separators between args)
_ATOMS = {
    "C1": (3, (",", ";")),
    "C2": (3, (";", ",")),
    "Gamma1": (0, ()),
    "Gamma2": (0, ()),
    "Gamma3": (0, ()),
    "GammaBar1": (0, ()),
    "GammaBar2": (0, ()),
    "Q": (1, ()),
    "Qtilde": (1, ()),
    "Ca": (1, ()),
    "D": (2, (",",)),
}


@dataclass(frozen=True)
class Atom:
    name: str
    args: tuple = ()

    def __str__(self):
        if not self.args:
            return self.name
        _, seps = _ATOMS[self.name]
        out = str(self.args[0])
        for sep, a in zip(seps, self.args[1:]):
            out += f"{sep}{a}"
        return f"{self.name}({out})"


@dataclass(frozen=True)
class CurveAtom:
    x: RatFunc
    t1: RatFunc
    t2: RatFunc

    def __str__(self):
        return f"curve({self.x}, {self.t1}, {self.t2})"


@dataclass(frozen=True)
class Term:
    coeff: int
    scalar: RadMonomial | None
    atom: object


@dataclass(frozen=True)
class Expr:
    terms: tuple

    def __str__(self):
        return to_source(self)


def _scalar_str(m: RadMonomial) -> str:
    if m.c == 1:
        return str(m.q)
    if m.q in (1, -1):
        return f"cbrt({m.c if m.q == 1 else -m.c})"
    return f"{m.q}*cbrt({m.c})"


def to_source(e: Expr) -> str:
    """Canonical text; ``parse(to_source(e)) == e``."""
    parts = []
    for t in e.terms:
        mag = abs(t.coeff)
        body = str(t.atom)
        if t.scalar is not None:
            sc = _scalar_str(t.scalar)
            # a bare integer or a leading sign would be read as coefficient/term sign
            unambiguous = sc.startswith("cbrt") or ("/" in sc.split("*")[0] and not sc.startswith("-"))
            body = f"{sc}*{body}" if mag == 1 and unambiguous else f"{mag}*{sc}*{body}"
        elif mag != 1:
            body = f"{mag}*{body}"
        if not parts:
            parts.append(f"-{body}" if t.coeff < 0 else body)
        else:
            parts.append(f"{'-' if t.coeff < 0 else '+'} {body}")
    return " ".join(parts)


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def error(self, msg, pos=None):
        raise DSLSyntaxError(msg, self.src, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def eat(self, ch):
        if self.peek() != ch:
            self.error(f"'{ch}' expected")
        self.pos += 1

    def ident(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.src) and (self.src[self.pos].isalnum() or self.src[self.pos] == "_"):
            self.pos += 1
        return self.src[start:self.pos]

    def integer(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("number expected")
        if self.pos < len(self.src) and self.src[self.pos] in ".eE":
            self.error("floating-point literals are not accepted")
        return self.src[start:self.pos]

    def rational(self) -> tuple:
        """Returns (value, had_slash, had_sign)."""
        sign = 1
        signed = False
        if self.peek() in ("+", "-"):
            signed = True
            sign = -1 if self.src[self.pos] == "-" else 1
            self.pos += 1
        num = int(self.integer())
        if self.peek() == "/":
            self.pos += 1
            den_pos = self.pos
            den = int(self.integer())
            if den == 0:
                self.error("zero denominator", den_pos)
            return Fraction(sign * num, den), True, signed
        return Fraction(sign * num), False, signed

    def expr(self) -> Expr:
        if not self.src.strip():
            self.error("empty expression")
        terms = []
        sign = 1
        if self.peek() in ("+", "-") and self.peek():
            sign = -1 if self.src[self.pos] == "-" else 1
            self.pos += 1
        terms.append(self.term(sign))
        while self.peek() in ("+", "-") and self.peek():
            sign = -1 if self.src[self.pos] == "-" else 1
            self.pos += 1
            terms.append(self.term(sign))
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return Expr(tuple(terms))

    def term(self, sign: int) -> Term:
        factors = []  # (value, is_plain_int)
        while True:
            c = self.peek()
            if c.isdigit() or c in ("+", "-"):
                val, slash, signed = self.rational()
                factors.append((val, not slash and not signed))
            elif self.src.startswith("cbrt", self.pos):
                start = self.pos
                self.ident()
                self.eat("(")
                val, _, _ = self.rational()
                self.eat(")")
                if val == 0:
                    self.error("cbrt(0) is not a valid scale", start)
                factors.append((normalize(1, val), False))
            else:
                atom = self.atom()
                break
            self.eat("*")
        coeff = 1
        if factors and factors[0][1]:
            coeff = int(factors[0][0])
            factors = factors[1:]
        scalar = None
        for val, _ in factors:
            m = val if isinstance(val, RadMonomial) else RadMonomial.rational(val)
            scalar = m if scalar is None else scalar * m
        if coeff == 0:
            self.error("zero coefficient")
        if scalar is not None and scalar.is_zero():
            self.error("zero scale")
        if scalar == ONE:
            scalar = None
        return Term(sign * coeff, scalar, atom)

    def atom(self):
        self.skip()
        start = self.pos
        name = self.ident()
        if not name:
            self.error("cycle name expected")
        if name == "curve":
            self.eat("(")
            coords = []
            for k in range(3):
                if k:
                    self.eat(",")
                p = _RFParser(self.src, self.pos)
                coords.append(p.parse())
                self.pos = p.pos
            self.eat(")")
            return CurveAtom(*coords)
        if name not in _ATOMS:
            self.error(f"unknown cycle {name!r}", start)
        arity, seps = _ATOMS[name]
        args = []
        if arity:
            self.eat("(")
            for k in range(arity):
                if k:
                    self.eat(seps[k - 1])
                args.append(self.rational()[0])
            self.eat(")")
        return Atom(name, tuple(args))


def parse(src: str) -> Expr:
    return _Parser(src).expr()


def _atom_cycle(atom, repaired: bool):
    if isinstance(atom, CurveAtom):
        return _cyc.user_curve(atom.x, atom.t1, atom.t2)
    if atom.name == "C1":
        return _cyc.make_C1(*atom.args)
    if atom.name == "C2":
        return _cyc.make_C2(*atom.args)
    return _cat.build(atom.name, atom.args, repaired=repaired)


def evaluate(e, repaired: bool = False) -> _cyc.CycleSum:
    """Build the CycleSum of an expression (or of its source text)."""
    if isinstance(e, str):
        e = parse(e)
    out = _cyc.CycleSum()
    for t in e.terms:
        z = _atom_cycle(t.atom, repaired)
        if t.scalar is not None:
            z = _cyc.star(t.scalar, z)
        out = out + t.coeff * z
    return out
