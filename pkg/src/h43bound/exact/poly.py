"""Univariate and bivariate polynomials with exact rational coefficients.

``UniPoly`` is a dense polynomial in one indeterminate; ``BiPoly`` is a sparse
polynomial in ``x`` and ``m``.  Both are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping

Rational = Fraction


def _q(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, _RationalABC)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot coerce {type(c).__name__} to an exact rational")


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_terms(terms: list[tuple[Fraction, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for k, (c, mono) in enumerate(terms):
        neg = c < 0
        a = -c if neg else c
        if mono and a == 1:
            body = mono
        elif mono:
            body = f"{_fmt_coeff(a)}*{mono}"
        else:
            body = _fmt_coeff(a)
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def _mono(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


class UniPoly:
    """Dense polynomial; ``coeffs[i]`` multiplies ``var**i``."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "x"):
        cs = [_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.var = var

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "x") -> "UniPoly":
        return cls([0] * k + [c], var)

    @classmethod
    def _coerce(cls, other, var: str) -> "UniPoly | None":
        if isinstance(other, UniPoly):
            return other
        try:
            return cls([_q(other)], var)
        except TypeError:
            return None

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        o = UniPoly._coerce(other, self.var)
        return o is not None and self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({self})"

    def __str__(self) -> str:
        terms = [(c, _mono(self.var, i)) for i, c in reversed(list(enumerate(self.coeffs))) if c]
        return _fmt_terms(terms)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs], self.var)

    def __add__(self, other):
        o = UniPoly._coerce(other, self.var)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly([self[i] + o[i] for i in range(n)], self.var)

    __radd__ = __add__

    def __sub__(self, other):
        o = UniPoly._coerce(other, self.var)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = UniPoly._coerce(other, self.var)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = UniPoly._coerce(other, self.var)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UniPoly((), self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative power")
        out = UniPoly([1], self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, value):
        """Horner evaluation; ``value`` may be any ring element that mixes with Fractions."""
        if not self.coeffs:
            return Fraction(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dg = other.degree
        inv = 1 / other.lc
        q = [Fraction(0)] * max(len(r) - dg, 0)
        for k in range(len(r) - 1, dg - 1, -1):
            c = r[k] * inv
            if c:
                q[k - dg] = c
                for i, b in enumerate(other.coeffs):
                    r[k - dg + i] -= c * b
        return UniPoly(q, self.var), UniPoly(r[:dg] if dg > 0 else [], self.var)

    def __divmod__(self, other):
        o = UniPoly._coerce(other, self.var)
        if o is None:
            return NotImplemented
        return self.divmod(o)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = self.divmod(UniPoly._coerce(other, self.var))
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return UniPoly([c / self.lc for c in self.coeffs], self.var)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def squarefree_part(self) -> "UniPoly":
        if self.degree < 1:
            return self
        g = self.gcd(self.derivative())
        return (self // g).monic()


class BiPoly:
    """Sparse polynomial in ``x`` and ``m``: ``{(x_degree, m_degree): coeff}``.

    Zero coefficients are never stored, so equality is dict equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        t = {}
        for k, c in (terms or {}).items():
            c = _q(c)
            if c:
                t[(int(k[0]), int(k[1]))] = c
        self.terms: dict[tuple[int, int], Fraction] = t

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def from_m_poly(cls, p: UniPoly) -> "BiPoly":
        return cls({(0, j): c for j, c in enumerate(p.coeffs)})

    @classmethod
    def from_x_poly(cls, p: UniPoly) -> "BiPoly":
        return cls({(i, 0): c for i, c in enumerate(p.coeffs)})

    @classmethod
    def _coerce(cls, other) -> "BiPoly | None":
        if isinstance(other, BiPoly):
            return other
        try:
            return cls.const(other)
        except TypeError:
            return None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def degree_m(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def coeff_x(self, i: int) -> UniPoly:
        """Coefficient of ``x**i`` as a polynomial in ``m``."""
        d = self.degree_m
        return UniPoly([self.terms.get((i, j), 0) for j in range(d + 1)], var="m")

    def lc_x(self) -> UniPoly:
        return self.coeff_x(self.degree_x)

    def is_constant_in_x(self) -> bool:
        return self.degree_x <= 0

    def __eq__(self, other) -> bool:
        o = BiPoly._coerce(other)
        return o is not None and self.terms == o.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        parts = []
        for (i, j) in sorted(self.terms, reverse=True):
            mono = "*".join(s for s in (_mono("x", i), _mono("m", j)) if s)
            parts.append((self.terms[(i, j)], mono))
        return _fmt_terms(parts)

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        o = BiPoly._coerce(other)
        if o is None:
            return NotImplemented
        t = dict(self.terms)
        for k, c in o.terms.items():
            t[k] = t.get(k, 0) + c
        return BiPoly(t)

    __radd__ = __add__

    def __sub__(self, other):
        o = BiPoly._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = BiPoly._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = BiPoly._coerce(other)
        if o is None:
            return NotImplemented
        t: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in o.terms.items():
                k = (i1 + i2, j1 + j2)
                t[k] = t.get(k, 0) + a * b
        return BiPoly(t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # scalar division only; polynomial division goes through divmod_x/exact_div
        c = _q(other)
        return BiPoly({k: v / c for k, v in self.terms.items()})

    def __pow__(self, k: int) -> "BiPoly":
        if k < 0:
            raise ValueError("negative power")
        out = BiPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def subs_m(self, value) -> UniPoly:
        """Fix ``m`` to a rational value; result is a UniPoly in ``x``."""
        v = _q(value)
        out: dict[int, Fraction] = {}
        for (i, j), c in self.terms.items():
            out[i] = out.get(i, 0) + c * v**j
        d = self.degree_x
        return UniPoly([out.get(i, 0) for i in range(d + 1)], var="x")

    def subs_x(self, value) -> UniPoly:
        """Fix ``x`` to a rational value; result is a UniPoly in ``m``."""
        v = _q(value)
        out: dict[int, Fraction] = {}
        for (i, j), c in self.terms.items():
            out[j] = out.get(j, 0) + c * v**i
        d = self.degree_m
        return UniPoly([out.get(j, 0) for j in range(d + 1)], var="m")

    def evaluate(self, x, m) -> Fraction:
        return self.subs_m(m)(_q(x))

    def diff_x(self) -> "BiPoly":
        return BiPoly({(i - 1, j): i * c for (i, j), c in self.terms.items() if i})

    def diff_m(self) -> "BiPoly":
        return BiPoly({(i, j - 1): j * c for (i, j), c in self.terms.items() if j})

    def divmod_x(self, g: "BiPoly") -> tuple["BiPoly", "BiPoly"]:
        """Divide with ``x`` as main variable over Q[m]; ``g`` must be monic in ``x``."""
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lc = g.lc_x()
        if lc != UniPoly([1], var="m"):
            raise ValueError(f"divisor must be monic in x, leading coefficient is {lc}")
        dg = g.degree_x
        q = BiPoly()
        r = self
        while r.degree_x >= dg:
            k = r.degree_x
            t = BiPoly({(k - dg, j): c for (i, j), c in r.terms.items() if i == k})
            q = q + t
            r = r - t * g
        return q, r

    def exact_div(self, g: "BiPoly") -> "BiPoly":
        """Exact quotient ``self / g`` (lex order, x > m); raises if ``g`` does not divide."""
        g = BiPoly._coerce(g)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        gi, gj = max(g.terms)
        gc = g.terms[(gi, gj)]
        q: dict[tuple[int, int], Fraction] = {}
        r = self
        while r.terms:
            i, j = max(r.terms)
            if i < gi or j < gj:
                raise ArithmeticError(f"{g} does not divide {self}")
            c = r.terms[(i, j)] / gc
            q[(i - gi, j - gj)] = c
            r = r - BiPoly({(i - gi, j - gj): c}) * g
        return BiPoly(q)


X = BiPoly({(1, 0): 1})
M = BiPoly({(0, 1): 1})
