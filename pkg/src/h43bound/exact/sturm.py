"""Sturm sequences and exact isolation of the largest real root."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .poly import UniPoly, _q

DEFAULT_TOL = Fraction(1, 10**12)


class NoRealRootError(ValueError):
    pass


def sturm_sequence(f: UniPoly) -> list[UniPoly]:
    seq = [f, f.derivative()]
    while seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return seq


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def _int_coeffs(p: UniPoly) -> tuple[int, ...]:
    """Coefficients scaled by a positive integer so they are all integers."""
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return tuple(int(c * den) for c in p.coeffs)


def _sign_at(ic: tuple[int, ...], x: Fraction) -> int:
    # sign of sum c_i p^i q^(n-i) equals sign of f(p/q) for q > 0
    p, q = x.numerator, x.denominator
    acc = 0
    qk = 1
    for c in reversed(ic):
        acc = acc * p + c * qk
        qk *= q
    return (acc > 0) - (acc < 0)


def _changes(signs) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sign_changes(seq: list[UniPoly], x) -> int:
    x = _q(x)
    return _changes(_sign_at(_int_coeffs(p), x) for p in seq)


def _int_seq_changes(iseq, x: Fraction) -> int:
    return _changes(_sign_at(ic, x) for ic in iseq)


def sign_changes_at_infinity(seq: list[UniPoly], positive: bool = True) -> int:
    signs = []
    for p in seq:
        s = _sign(p.lc)
        if not positive and p.degree % 2:
            s = -s
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_bound(f: UniPoly) -> Fraction:
    """Every root z of f satisfies |z| < the returned bound."""
    lc = abs(f.lc)
    return 1 + max((abs(c) / lc for c in f.coeffs[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class IsolatedRoot:
    """A half-open interval ``(lo, hi]`` holding exactly one root of ``poly``.

    ``poly`` is the squarefree part of the polynomial the root came from.
    """

    poly: UniPoly
    lo: Fraction
    hi: Fraction
    seq: tuple = field(repr=False, compare=False, default=())
    # sign changes of the Sturm sequence at lo and hi
    v_lo: int = field(repr=False, compare=False, default=-1)
    v_hi: int = field(repr=False, compare=False, default=-1)

    @classmethod
    def make(cls, poly: UniPoly, lo, hi) -> "IsolatedRoot":
        iseq = tuple(_int_coeffs(p) for p in sturm_sequence(poly))
        lo, hi = _q(lo), _q(hi)
        return cls(poly, lo, hi, iseq, _int_seq_changes(iseq, lo), _int_seq_changes(iseq, hi))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def roots_inside(self) -> int:
        return self.v_lo - self.v_hi

    def __float__(self) -> float:
        return float(self.midpoint)

    def count(self, a, b) -> int:
        return _int_seq_changes(self.seq, _q(a)) - _int_seq_changes(self.seq, _q(b))

    def bisect(self) -> "IsolatedRoot":
        """Halve the interval, keeping the largest root of ``poly`` inside it."""
        mid = self.midpoint
        v_mid = _int_seq_changes(self.seq, mid)
        if v_mid - self.v_hi >= 1:
            return IsolatedRoot(self.poly, mid, self.hi, self.seq, v_mid, self.v_hi)
        return IsolatedRoot(self.poly, self.lo, mid, self.seq, self.v_lo, v_mid)

    def refine(self, tol=DEFAULT_TOL) -> "IsolatedRoot":
        r = self
        tol = _q(tol)
        while r.width > tol:
            r = r.bisect()
        return r


def count_roots(f: UniPoly, lo, hi) -> int:
    """Number of distinct real roots of f in (lo, hi]."""
    seq = sturm_sequence(f.squarefree_part())
    return sign_changes(seq, _q(lo)) - sign_changes(seq, _q(hi))


def tarski_query(q: UniPoly, p: UniPoly, lo, hi) -> int:
    """Sum of sign(q(r)) over the distinct roots r of p in (lo, hi]."""
    seq = [p, p.derivative() * q]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return sign_changes(seq, _q(lo)) - sign_changes(seq, _q(hi))


def count_real_roots(f: UniPoly) -> int:
    seq = sturm_sequence(f.squarefree_part())
    return sign_changes_at_infinity(seq, False) - sign_changes_at_infinity(seq, True)


def sturm_largest_root(f: UniPoly, tol=DEFAULT_TOL) -> IsolatedRoot:
    """Isolate the largest real root of ``f`` in a rational interval of width <= tol.

    ``tol=None`` stops as soon as the root is isolated.
    """
    if f.is_zero():
        raise ValueError("the zero polynomial has no largest root")
    g = f.squarefree_part()
    if g.degree < 1:
        raise NoRealRootError(f"{f} has no real root")
    b = cauchy_bound(g)
    r = IsolatedRoot.make(g, -b, b)
    if r.roots_inside == 0:
        raise NoRealRootError(f"{f} has no real root")
    tol = None if tol is None else _q(tol)
    while r.roots_inside > 1 or (tol is not None and r.width > tol):
        r = r.bisect()
    return r


def compare_roots(r1: IsolatedRoot, r2: IsolatedRoot, max_steps: int = 200) -> int | None:
    """-1 if r1 < r2, +1 if r1 > r2, None if the intervals never separate."""
    for _ in range(max_steps + 1):
        if r1.hi <= r2.lo:
            return -1
        if r2.hi <= r1.lo:
            return 1
        if r1.width >= r2.width:
            r1 = r1.bisect()
        else:
            r2 = r2.bisect()
    return None


def isqrt_bounds(n: Fraction, digits: int = 30) -> tuple[Fraction, Fraction]:
    """Rational lo <= sqrt(n) <= hi with hi - lo <= 10**-digits."""
    n = _q(n)
    scale = 10**digits
    k = math.isqrt(n.numerator * scale * scale // n.denominator)
    lo = Fraction(k, scale)
    hi = Fraction(k + 1, scale)
    return lo, hi
