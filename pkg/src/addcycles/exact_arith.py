"""Univariate polynomials and rational functions over Q in the variable t.

Points of the projective parameter line are plain ``Fraction`` values plus
the sentinel :data:`INFINITY`.  Orders, Laurent expansions and residues are
computed in the local parameter ``s = t - p`` at finite points and
``u = 1/t`` at infinity.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Iterable, Union

from sympy import divisors

from .errors import DSLSyntaxError, UnsupportedFactorization, ZeroFunction

__all__ = [
    "INFINITY",
    "Poly",
    "RatFunc",
    "T",
    "as_fraction",
    "laurent_coeffs",
    "ord_at",
    "parse_ratfunc",
    "rational_roots",
    "residue_at",
    "value_at",
    "zeros_poles",
]


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "oo"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()

PointP1 = Union[Fraction, _Infinity]


def as_fraction(value) -> Fraction:
    """Coerce int/str/Fraction to Fraction; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact rational expected, got {value!r}")
    return Fraction(value)


def as_point(p) -> PointP1:
    if p is INFINITY:
        return p
    return as_fraction(p)


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Dense polynomial with Fraction coefficients, index = degree."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([as_fraction(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: list) -> "Poly":
        p = object.__new__(cls)
        p.coeffs = _trim(coeffs)
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls._raw([as_fraction(c)])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([Fraction(other)])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Poly", self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return _format_poly(self.coeffs)

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs])

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw([])
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly._raw([Fraction(1)])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.coeffs
        dl = d[-1]
        if len(rem) < len(d):
            return Poly._raw([]), Poly._raw(rem)
        quot = [Fraction(0)] * (len(rem) - len(d) + 1)
        for k in range(len(quot) - 1, -1, -1):
            q = rem[k + len(d) - 1] / dl
            quot[k] = q
            if q:
                for j, c in enumerate(d):
                    rem[k + j] -= q * c
        return Poly._raw(quot), Poly._raw(rem[: len(d) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return Poly._raw([c / lc for c in self.coeffs])

    def derivative(self) -> "Poly":
        return Poly._raw([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift(self, p: Fraction) -> "Poly":
        """Coefficients of ``self(p + s)`` in ``s``."""
        out: list = []
        for c in reversed(self.coeffs):
            # out = out * (s + p) + c
            nxt = [Fraction(0)] * (len(out) + 1)
            for i, x in enumerate(out):
                nxt[i + 1] += x
                nxt[i] += x * p
            nxt[0] += c
            out = nxt
        return Poly._raw(out)

    def reversed(self) -> "Poly":
        """``t^deg * self(1/t)``."""
        return Poly._raw(list(reversed(self.coeffs)))

    def valuation(self) -> int:
        """Multiplicity of the root t = 0 (requires nonzero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ZeroFunction("valuation of the zero polynomial")


def _as_poly(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Poly._raw([Fraction(x)])
    return None


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while b:
        a, b = b, a % b
    return a.monic()


ONE = Poly._raw([Fraction(1)])
T_POLY = Poly._raw([Fraction(0), Fraction(1)])


def _fmt_coeff_term(c: Fraction, k: int) -> str:
    if k == 0:
        return str(abs(c))
    mono = "t" if k == 1 else f"t^{k}"
    if abs(c) == 1:
        return mono
    return f"{abs(c)}*{mono}"


def _format_poly(coeffs: tuple) -> str:
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        body = _fmt_coeff_term(c, k)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# --------------------------------------------------------------------------
# root finding


def _isqrt_fraction(q: Fraction):
    from math import isqrt

    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _integer_primitive(p: Poly) -> list:
    from math import gcd, lcm

    den = reduce(lcm, (c.denominator for c in p.coeffs), 1)
    ints = [int(c * den) for c in p.coeffs]
    g = reduce(gcd, ints, 0)
    return [c // g for c in ints]


def _find_rational_root(p: Poly):
    if p.degree == 1:
        return -p.coeffs[0] / p.coeffs[1]
    if p.degree == 2:
        c, b, a = p.coeffs
        r = _isqrt_fraction(b * b - 4 * a * c)
        if r is None:
            return None
        return (-b + r) / (2 * a)
    ints = _integer_primitive(p)
    a0, an = ints[0], ints[-1]
    for q in divisors(abs(an)):
        for num in divisors(abs(a0)):
            for cand in (Fraction(num, q), Fraction(-num, q)):
                if p(cand) == 0:
                    return cand
    return None


def rational_roots(p: Poly) -> dict:
    """All roots of ``p`` in Q with multiplicities.

    Raises UnsupportedFactorization if an irreducible factor of degree >= 2
    is left over, since its roots are not rational points.
    """
    if p.is_zero():
        raise ZeroFunction("roots of the zero polynomial")
    roots: dict = {}
    v = p.valuation()
    if v:
        roots[Fraction(0)] = v
        p = Poly._raw(list(p.coeffs[v:]))
    while p.degree >= 1:
        r = _find_rational_root(p)
        if r is None:
            raise UnsupportedFactorization(
                f"factor {p} of degree {p.degree} has no rational root"
            )
        lin = Poly._raw([-r, Fraction(1)])
        m = 0
        while True:
            q, rem = divmod(p, lin)
            if rem:
                break
            p = q
            m += 1
        roots[r] = roots.get(r, 0) + m
    return roots


# --------------------------------------------------------------------------
# rational functions


class RatFunc:
    """Reduced quotient ``num/den`` with ``den`` monic.

    ``factors`` optionally holds a factorization as ``(Poly, exponent)``
    pairs (negative exponents belong to the denominator).  It is kept only
    when it is consistent with the reduced form and is ignored by equality.
    """

    __slots__ = ("num", "den", "_factors", "_hash")

    def __init__(self, num, den=None, factors=None):
        num = _as_poly(num) if not isinstance(num, Poly) else num
        den = ONE if den is None else (_as_poly(den) if not isinstance(den, Poly) else den)
        if num is None or den is None:
            raise TypeError("RatFunc expects polynomials or rationals")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Poly._raw([]), ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lc = den.lc
            if lc != 1:
                num = Poly._raw([c / lc for c in num.coeffs])
                den = Poly._raw([c / lc for c in den.coeffs])
        self.num = num
        self.den = den
        self._factors = _check_factors(factors, num, den) if factors else None
        self._hash = None

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls(Poly.constant(c))

    # factored forms -------------------------------------------------------
    @property
    def factored_num(self):
        if self._factors is None:
            return None
        return [(p, e) for p, e in self._factors if e > 0]

    @property
    def factored_den(self):
        if self._factors is None:
            return None
        return [(p, -e) for p, e in self._factors if e < 0]

    def _factor_list(self):
        if self._factors is not None:
            return list(self._factors)
        out = []
        if self.num.degree > 0:
            out.append((self.num, 1))
        if self.den.degree > 0:
            out.append((self.den, -1))
        return out

    # basic predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.lc

    @property
    def degree(self) -> int:
        """Degree of the map P¹ → P¹ (max of numerator/denominator degrees)."""
        return max(self.num.degree, self.den.degree)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.den.degree == 0 and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("RatFunc", self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"

    # arithmetic -----------------------------------------------------------
    def __neg__(self):
        out = RatFunc.__new__(RatFunc)
        out.num, out.den, out._factors, out._hash = -self.num, self.den, self._factors, None
        return out

    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return RatFunc(
            self.num * other.num,
            self.den * other.den,
            _merge_factors(self._factor_list(), other._factor_list(), 1),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(
            self.num * other.den,
            self.den * other.num,
            _merge_factors(self._factor_list(), other._factor_list(), -1),
        )

    def __rtruediv__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("integer exponent required")
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RatFunc(self.den ** (-n), self.num ** (-n), [(p, e * n) for p, e in self._factor_list()])
        return RatFunc(self.num ** n, self.den ** n, [(p, e * n) for p, e in self._factor_list()] if n else None)

    def derivative(self) -> "RatFunc":
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __call__(self, x):
        return value_at(self, x)


def _as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    p = _as_poly(x)
    return None if p is None else RatFunc(p)


def _merge_factors(a, b, sign):
    acc: dict = {}
    order = []
    for p, e in a:
        p = p.monic()
        if p not in acc:
            order.append(p)
        acc[p] = acc.get(p, 0) + e
    for p, e in b:
        p = p.monic()
        if p not in acc:
            order.append(p)
        acc[p] = acc.get(p, 0) + sign * e
    return [(p, acc[p]) for p in order if acc[p] and p.degree > 0]


def _check_factors(factors, num, den):
    cleaned = [(p.monic(), e) for p, e in factors if p.degree > 0 and e]
    top = ONE
    bottom = ONE
    for p, e in cleaned:
        if e > 0:
            top = top * p ** e
        else:
            bottom = bottom * p ** (-e)
    if top == num.monic() and bottom == den:
        return tuple(cleaned)
    return None


T = RatFunc(T_POLY)


# --------------------------------------------------------------------------
# local analysis on P¹


def ord_at(f: RatFunc, p) -> int:
    """Order of vanishing of ``f`` at ``p`` (negative for poles)."""
    if f.is_zero():
        raise ZeroFunction("order of the zero function")
    p = as_point(p)
    if p is INFINITY:
        return f.den.degree - f.num.degree
    return f.num.shift(p).valuation() - f.den.shift(p).valuation()


def value_at(f: RatFunc, p):
    """Value of ``f`` at ``p`` as a point of P¹ (Fraction or INFINITY)."""
    p = as_point(p)
    if f.is_zero():
        return Fraction(0)
    if p is INFINITY:
        dn, dd = f.num.degree, f.den.degree
        if dn > dd:
            return INFINITY
        if dn < dd:
            return Fraction(0)
        return f.num.lc / f.den.lc
    d = f.den(p)
    if d == 0:
        return INFINITY
    return f.num(p) / d


def _root_divisor(polys_with_exp, sign) -> dict:
    out: dict = {}
    for poly, e in polys_with_exp:
        for r, m in rational_roots(poly).items():
            out[r] = out.get(r, 0) + sign * m * e
    return out


def zeros_poles(f: RatFunc, target=0) -> dict:
    """Divisor of points of P¹ where ``f`` takes the value ``target``.

    ``target`` is 0 or INFINITY; multiplicities are positive.
    """
    if target is not INFINITY and as_fraction(target) != 0:
        raise ValueError("target must be 0 or INFINITY")
    if f.is_zero():
        raise ZeroFunction("zero function has no zero divisor")
    if target is INFINITY:
        src = f.factored_den if f._factors is not None else [(f.den, 1)]
        at_inf = f.num.degree - f.den.degree
    else:
        src = f.factored_num if f._factors is not None else [(f.num, 1)]
        at_inf = f.den.degree - f.num.degree
    div = {r: m for r, m in _root_divisor([(p, e) for p, e in src if p.degree > 0], 1).items() if m}
    if at_inf > 0:
        div[INFINITY] = at_inf
    return div


def _series_div(n: list, d: list, terms: int) -> list:
    out = []
    d0 = d[0]
    for k in range(terms):
        acc = n[k] if k < len(n) else Fraction(0)
        for j in range(1, min(k, len(d) - 1) + 1):
            acc -= d[j] * out[k - j]
        out.append(acc / d0)
    return out


def _local_expansion(f: RatFunc, p):
    """(order, numerator coeffs, denominator coeffs) of the unit part at p."""
    if p is INFINITY:
        n = list(f.num.reversed().coeffs)
        d = list(f.den.reversed().coeffs)
        return f.den.degree - f.num.degree, n, d
    n = f.num.shift(p)
    d = f.den.shift(p)
    vn, vd = n.valuation(), d.valuation()
    return vn - vd, list(n.coeffs[vn:]), list(d.coeffs[vd:])


def laurent_coeffs(f: RatFunc, p, lo: int, hi: int) -> list:
    """Laurent coefficients of ``f`` at ``p`` for exponents ``lo..hi``.

    The local parameter is ``t - p``, or ``u = 1/t`` at infinity.
    """
    if f.is_zero():
        raise ZeroFunction("Laurent expansion of the zero function")
    p = as_point(p)
    k, n, d = _local_expansion(f, p)
    if hi < k:
        return [Fraction(0)] * (hi - lo + 1)
    unit = _series_div(n, d, hi - k + 1)
    return [unit[e - k] if e >= k else Fraction(0) for e in range(lo, hi + 1)]


def residue_at(f: RatFunc, p) -> Fraction:
    """Residue of the differential ``f(t) dt`` at ``p``."""
    if f.is_zero():
        return Fraction(0)
    p = as_point(p)
    if p is INFINITY:
        # f(1/u) * (-du/u^2): residue is minus the u^1 coefficient of f(1/u)
        return -laurent_coeffs(f, p, 1, 1)[0]
    return laurent_coeffs(f, p, -1, -1)[0]


# --------------------------------------------------------------------------
# textual form


class _RFParser:
    """Recursive-descent parser for rational functions in ``t``.

    Grammar: sum := prod (('+'|'-') prod)*; prod := unary (('*'|'/') unary)*;
    unary := '-' unary | '+' unary | power; power := atom ('^' INT)?
    Stops (without consuming) at ',' ')' ';' or end of input at depth 0.
    """

    def __init__(self, src: str, pos: int = 0):
        self.src = src
        self.pos = pos

    def error(self, msg):
        raise DSLSyntaxError(msg, self.src, self.pos)

    def skip(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def parse(self) -> RatFunc:
        return self.sum()

    def sum(self):
        val = self.prod()
        while self.peek() in ("+", "-") and self.peek():
            op = self.src[self.pos]
            self.pos += 1
            rhs = self.prod()
            val = val + rhs if op == "+" else val - rhs
        return val

    def prod(self):
        val = self.unary()
        while True:
            c = self.peek()
            if c == "*" and self.src.startswith("**", self.pos):
                break
            if c not in ("*", "/") or not c:
                break
            self.pos += 1
            rhs = self.unary()
            if c == "*":
                val = val * rhs
            else:
                if rhs.is_zero():
                    self.error("division by zero")
                val = val / rhs
        return val

    def unary(self):
        c = self.peek()
        if c == "-":
            self.pos += 1
            return -self.unary()
        if c == "+":
            self.pos += 1
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        self.skip()
        if self.src.startswith("^", self.pos) or self.src.startswith("**", self.pos):
            self.pos += 1 if self.src[self.pos] == "^" else 2
            self.skip()
            sign = 1
            if self.peek() == "-":
                sign = -1
                self.pos += 1
            start = self.pos
            while self.pos < len(self.src) and self.src[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                self.error("integer exponent expected")
            n = sign * int(self.src[start:self.pos])
            if n < 0 and base.is_zero():
                self.error("negative power of zero")
            return base ** n
        return base

    def atom(self):
        c = self.peek()
        if c == "(":
            self.pos += 1
            val = self.sum()
            if self.peek() != ")":
                self.error("')' expected")
            self.pos += 1
            return val
        if c == "t":
            self.pos += 1
            if self.pos < len(self.src) and (self.src[self.pos].isalnum() or self.src[self.pos] == "_"):
                self.error("unknown identifier")
            return RatFunc(T_POLY, None, [(T_POLY, 1)])
        if c.isdigit():
            start = self.pos
            while self.pos < len(self.src) and self.src[self.pos].isdigit():
                self.pos += 1
            if self.pos < len(self.src) and self.src[self.pos] in ".eE":
                self.error("floating-point literals are not accepted")
            return RatFunc.const(int(self.src[start:self.pos]))
        if not c:
            self.error("unexpected end of input")
        self.error(f"unexpected character {c!r}")


def parse_ratfunc(src: str) -> RatFunc:
    """Parse a rational function in ``t`` such as ``"(1-t/2)^2/(1-t)"``."""
    parser = _RFParser(src)
    val = parser.parse()
    if parser.peek():
        parser.error("trailing input")
    return val
