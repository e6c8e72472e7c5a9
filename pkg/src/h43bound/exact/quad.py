"""Arithmetic in Q(m)(s) with s^2 = 4m - 5, and in Q(sqrt(d)) at a fixed m.

``QuadElem`` keeps ``m`` symbolic: both parts are rational functions of ``m``.
``QuadNumber`` is what you get after fixing ``m``; its sign is decided by
rational comparisons only.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .poly import BiPoly, UniPoly, _q

# s^2 = 4m - 5
S_SQUARED = UniPoly([-5, 4], var="m")


def _mpoly(p) -> UniPoly:
    if isinstance(p, UniPoly):
        return UniPoly(p.coeffs, var="m")
    if isinstance(p, BiPoly):
        if not p.is_constant_in_x():
            raise ValueError("expected a polynomial in m only")
        return p.coeff_x(0)
    return UniPoly([_q(p)], var="m")


class RatFunc:
    """Reduced fraction of polynomials in ``m``; denominator monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        n, d = _mpoly(num), _mpoly(den)
        if d.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if n.is_zero():
            self.num, self.den = UniPoly((), "m"), UniPoly([1], "m")
            return
        g = n.gcd(d)
        n, d = n // g, d // g
        lc = d.lc
        self.num = UniPoly([c / lc for c in n.coeffs], "m")
        self.den = UniPoly([c / lc for c in d.coeffs], "m")

    @classmethod
    def _coerce(cls, other) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            return other
        try:
            return cls(other)
        except (TypeError, ValueError):
            return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        o = RatFunc._coerce(other)
        return o is not None and self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __add__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def derivative(self) -> "RatFunc":
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def __call__(self, m) -> Fraction:
        m = _q(m)
        d = self.den(m)
        if d == 0:
            raise ZeroDivisionError(f"pole at m = {m}")
        return self.num(m) / d


class QuadNumber:
    """``a + b*sqrt(d)`` with rational a, b and rational d >= 0."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=0):
        self.a, self.b, self.d = _q(a), _q(b), _q(d)
        if self.d < 0:
            raise ValueError("radicand must be nonnegative")

    def _coerce(self, other) -> "QuadNumber | None":
        if isinstance(other, QuadNumber):
            if other.d != self.d and other.b and self.b:
                raise ValueError(f"mixing sqrt({self.d}) with sqrt({other.d})")
            return other
        try:
            return QuadNumber(_q(other), 0, self.d)
        except TypeError:
            return None

    def _radicand(self, o: "QuadNumber") -> Fraction:
        return self.d if self.b else o.d

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNumber(self.a + o.a, self.b + o.b, self._radicand(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._radicand(o)
        return QuadNumber(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._radicand(o)
        norm = o.a * o.a - o.b * o.b * d
        if norm == 0:
            raise ZeroDivisionError("division by a zero-norm quadratic number")
        return self * QuadNumber(o.a / norm, -o.b / norm, d)

    def __eq__(self, other) -> bool:
        o = self._coerce(other) if not isinstance(other, QuadNumber) else other
        if o is None:
            return False
        return (self - o).sign() == 0

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.d))

    def sign(self) -> int:
        """Exact sign; decided by comparing a^2 with b^2 d."""
        a, b, d = self.a, self.b, self.d
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0) if d else 0
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        lhs, rhs = a * a, b * b * d
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __repr__(self) -> str:
        return f"QuadNumber({self})"

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        sign = "-" if self.b < 0 else "+"
        return f"{self.a} {sign} {abs(self.b)}*sqrt({self.d})"


class QuadElem:
    """``a(m) + b(m)*s`` with ``s^2 = 4m - 5``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        if isinstance(a, QuadElem):
            a, b = a.a, a.b + b
        self.a = a if isinstance(a, RatFunc) else RatFunc(a)
        self.b = b if isinstance(b, RatFunc) else RatFunc(b)

    @classmethod
    def _coerce(cls, other) -> "QuadElem | None":
        if isinstance(other, QuadElem):
            return other
        r = RatFunc._coerce(other)
        return None if r is None else cls(r, 0)

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __eq__(self, other) -> bool:
        o = QuadElem._coerce(other)
        return o is not None and self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"QuadElem({self})"

    def __str__(self) -> str:
        if self.b.is_zero():
            return str(self.a)
        if self.a.is_zero():
            return f"({self.b})*s"
        return f"{self.a} + ({self.b})*s"

    def __neg__(self):
        return QuadElem(-self.a, -self.b)

    def __add__(self, other):
        o = QuadElem._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = QuadElem._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = QuadElem._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.a * o.a + self.b * o.b * S_SQUARED, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def norm(self) -> RatFunc:
        return self.a * self.a - self.b * self.b * S_SQUARED

    def inverse(self) -> "QuadElem":
        n = self.norm()
        if n.is_zero():
            raise ZeroDivisionError("element has zero norm")
        return QuadElem(self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = QuadElem._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = QuadElem._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "QuadElem":
        out = QuadElem(1)
        for _ in range(k):
            out = out * self
        return out

    def at(self, m) -> QuadNumber:
        m = _q(m)
        return QuadNumber(self.a(m), self.b(m), S_SQUARED(m))

    def value(self, m) -> float:
        return float(self.at(m))


S = QuadElem(0, 1)
M = QuadElem(UniPoly([0, 1], "m"))
L = (1 + S) / 2  # L_m = (1 + sqrt(4m - 5)) / 2


def quad_eval(f: BiPoly, at, m=None):
    """Evaluate ``f(x, m)`` at ``x = at``.

    With ``m`` omitted the result is a symbolic ``QuadElem`` reduced modulo
    ``s^2 = 4m - 5``; with ``m`` fixed it is a ``QuadNumber``.
    """
    if m is not None:
        point = at.at(m) if isinstance(at, QuadElem) else at
        return QuadNumber(0, 0, S_SQUARED(_q(m))) + f.subs_m(m)(point)
    if not isinstance(at, QuadElem):
        at = QuadElem._coerce(at)
    acc = QuadElem(0)
    for i in range(f.degree_x, -1, -1):
        acc = acc * at + QuadElem(RatFunc(f.coeff_x(i)))
    return acc


def quad_m_derivative(e: QuadElem) -> QuadElem:
    """Total derivative in ``m`` using ds/dm = 2/s = 2s/(4m - 5)."""
    return QuadElem(e.a.derivative(), e.b.derivative() + e.b * RatFunc(2, S_SQUARED))


def quad_sign(e, m=None) -> int:
    """Exact sign of ``e`` (a QuadNumber, or a QuadElem together with ``m``)."""
    if isinstance(e, QuadElem):
        if m is None:
            raise ValueError("a symbolic element needs a value of m")
        if _q(m) < Fraction(3, 2):
            raise ValueError("need m >= 3/2 so that 4m - 5 >= 1")
        e = e.at(m)
    elif not isinstance(e, QuadNumber):
        e = QuadNumber(e)
    return e.sign()
