"""Exact kernel checked against sympy as an independent oracle."""

from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import assume, given, strategies as st

from h43bound import formulas as fm
from h43bound.exact import (
    BiPoly, L, M, QuadElem, QuadNumber, RatFunc, S, UniPoly, X,
    bipoly_divmod, char_poly, char_poly_symbolic, compare_roots, count_real_roots,
    count_roots, det_bareiss, det_cofactor, quad_eval, quad_m_derivative, quad_sign,
    sturm_largest_root,
)
from h43bound.exact.quad import M as Mq
from h43bound.spectral import p_poly

x, m = sp.symbols("x m")
small = st.integers(-6, 6)
coeffs = st.lists(small, min_size=0, max_size=6)
bicoeffs = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 3)), small, max_size=8)


def to_sympy(p) -> sp.Expr:
    if isinstance(p, UniPoly):
        return sum((sp.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(p.coeffs)),
                   sp.Integer(0))
    return sum((sp.Rational(c.numerator, c.denominator) * x**i * m**j for (i, j), c in p.terms.items()),
               sp.Integer(0))


def quad_to_sympy(e: QuadElem) -> sp.Expr:
    s = sp.sqrt(4 * m - 5)

    def rf(r: RatFunc):
        num = sum(sp.Rational(c.numerator, c.denominator) * m**i for i, c in enumerate(r.num.coeffs))
        den = sum(sp.Rational(c.numerator, c.denominator) * m**i for i, c in enumerate(r.den.coeffs))
        return num / den

    return rf(e.a) + rf(e.b) * s


# univariate ---------------------------------------------------------------------


def test_unipoly_normalizes_trailing_zeros():
    p = UniPoly([1, 2, 0, 0])
    assert p.degree == 1 and p.lc == 2
    assert UniPoly([]).degree == -1 and UniPoly([0]).is_zero()


@given(coeffs, coeffs)
def test_unipoly_ring_ops_match_sympy(a, b):
    f, g = UniPoly(a), UniPoly(b)
    assert sp.expand(to_sympy(f + g) - (to_sympy(f) + to_sympy(g))) == 0
    assert sp.expand(to_sympy(f * g) - to_sympy(f) * to_sympy(g)) == 0
    assert sp.expand(to_sympy(f.derivative()) - sp.diff(to_sympy(f), x)) == 0


@given(coeffs, coeffs)
def test_unipoly_division_recombines(a, b):
    f, g = UniPoly(a), UniPoly(b)
    assume(not g.is_zero())
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


@given(coeffs, coeffs)
def test_unipoly_gcd_matches_sympy(a, b):
    f, g = UniPoly(a), UniPoly(b)
    assume(not f.is_zero() and not g.is_zero())
    ours = to_sympy(f.gcd(g))
    theirs = sp.Poly(sp.gcd(to_sympy(f), to_sympy(g)), x).monic().as_expr()
    assert sp.expand(ours - theirs) == 0


def test_squarefree_part_drops_repeated_factors():
    f = UniPoly([-2, 1]) ** 2 * UniPoly([1, 1])
    assert f.squarefree_part() == UniPoly([-2, 1]) * UniPoly([1, 1])


# bivariate ------------------------------------------------------------------------


@given(bicoeffs, bicoeffs)
def test_bipoly_ring_ops_match_sympy(a, b):
    f, g = BiPoly(a), BiPoly(b)
    assert sp.expand(to_sympy(f * g) - to_sympy(f) * to_sympy(g)) == 0
    assert sp.expand(to_sympy(f - g) - (to_sympy(f) - to_sympy(g))) == 0


@given(bicoeffs, st.integers(-5, 5))
def test_bipoly_subs_m_is_coefficientwise(a, mv):
    f = BiPoly(a)
    assert sp.expand(to_sympy(f.subs_m(mv)) - to_sympy(f).subs(m, mv)) == 0


@given(bicoeffs, bicoeffs)
def test_bipoly_divmod_recombines(a, b):
    f = BiPoly(a)
    g = X**3 + BiPoly({k: v for k, v in b.items() if k[0] < 3})
    q, r = bipoly_divmod(f, g)
    assert q * g + r == f
    assert r.degree_x < 3


def test_divmod_requires_monic_divisor():
    with pytest.raises(ValueError):
        bipoly_divmod(X**3, M * X + 1)


def test_published_divisions():
    q, r = bipoly_divmod(fm.F_SAME, fm.P)
    assert q == X - 4 and r == fm.R_SAME
    q, r = bipoly_divmod(fm.F_MIX, fm.P)
    assert q == X**3 - 2 * X**2 + 3 * X + M - 26 and r == fm.R_MIX
    q, r = bipoly_divmod(fm.P, fm.P)
    assert q == BiPoly.const(1) and r.is_zero()


def test_p_m_constant_term():
    assert quad_eval(fm.P, QuadElem(0)) == QuadElem(RatFunc(UniPoly([-1, Fraction(1, 2)], "m")))


# determinants ---------------------------------------------------------------------


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinants_agree_with_sympy(rows):
    expected = sp.Matrix(rows).det()
    assert det_bareiss([[Fraction(v) for v in r] for r in rows]) == expected
    assert det_cofactor([[Fraction(v) for v in r] for r in rows]) == expected


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_char_poly_matches_sympy(rows):
    ours = char_poly(rows)
    theirs = sp.Matrix(rows).charpoly(x).as_expr()
    assert sp.expand(to_sympy(ours) - theirs) == 0


def test_symbolic_char_poly_matches_sympy_and_cofactor():
    mat = [[0, 4, M - 10], [1, 3, 0], [1, 0, 0]]
    ours = char_poly_symbolic(mat)
    cof = char_poly_symbolic(mat, method="cofactor")
    theirs = sp.Matrix([[0, 4, m - 10], [1, 3, 0], [1, 0, 0]]).charpoly(x).as_expr()
    assert ours == cof
    assert sp.expand(to_sympy(ours) - theirs) == 0
    assert ours == X**3 - 3 * X**2 + (6 - M) * X + 3 * M - 30


def test_identity_char_poly():
    assert char_poly([[1, 0], [0, 1]]) == UniPoly([-1, 1]) ** 2


# quadratic extension -------------------------------------------------------------


quad_parts = st.tuples(small, small, small, st.integers(1, 3))


def _elem(t):
    a0, a1, b0, d = t
    return QuadElem(RatFunc(UniPoly([a0, a1], "m"), d), RatFunc(UniPoly([b0], "m")))


@given(quad_parts, quad_parts, st.integers(2, 60))
def test_quad_elem_evaluation_is_a_homomorphism(t1, t2, mv):
    e1, e2 = _elem(t1), _elem(t2)
    assert (e1 * e2).at(mv) == e1.at(mv) * e2.at(mv)
    assert (e1 + e2).at(mv) == e1.at(mv) + e2.at(mv)


@given(bicoeffs, bicoeffs)
def test_quad_eval_respects_products(a, b):
    f, g = BiPoly(a), BiPoly(b)
    assert quad_eval(f * g, L) == quad_eval(f, L) * quad_eval(g, L)


@given(bicoeffs, st.integers(2, 40))
def test_quad_eval_symbolic_then_fixed_agrees_with_fixed(a, mv):
    f = BiPoly(a)
    assert quad_eval(f, L).at(mv) == quad_eval(f, L, m=mv)


@given(st.fractions(max_denominator=50).filter(lambda v: abs(v) < 100),
       st.fractions(max_denominator=50).filter(lambda v: abs(v) < 100),
       st.integers(0, 500))
def test_quad_sign_agrees_with_float(a, b, d):
    v = QuadNumber(a, b, d)
    f = float(a) + float(b) * np.sqrt(d)
    assume(abs(f) > 1e-6)
    assert v.sign() == (1 if f > 0 else -1)


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(0, 200))
def test_quad_sign_matches_sympy_exactly(a, b, d):
    expected = sp.sign(sp.Integer(a) + sp.Integer(b) * sp.sqrt(d))
    assert QuadNumber(a, b, d).sign() == int(expected)


def test_quad_sign_examples():
    assert quad_sign((QuadElem(-31) + 5 * S) / 4, 18) == 1
    assert quad_sign(QuadNumber(0)) == 0
    assert quad_sign(QuadNumber(-217, 39, 67)) == 1
    with pytest.raises(ValueError):
        quad_sign(S, 1)


def test_quad_eval_examples():
    assert quad_eval(fm.Q_T_POLY, L) == (4 * Mq + 5 * S - 103) / 4
    r = quad_eval(fm.R_SAME, L, m=18)
    assert (r.a, r.b, r.d) == (-217, 39, 67)


def test_L_is_a_root_of_its_quadratic():
    # L(L - 1) = (s^2 - 1)/4
    assert L * L - L - (Mq - Fraction(3, 2)) == QuadElem(0)


def test_m_derivative_of_s():
    assert quad_m_derivative(S) == 2 * S / (4 * Mq - 5)


@pytest.mark.parametrize("name", ["d/dm R_same(L)", "d/dm R_dist(L)", "d/dm R_mix(L)"])
def test_m_derivative_matches_sympy(name):
    f, order, _, stated = fm.CLOSED_FORMS[name]
    ours = quad_m_derivative(quad_eval(f, L))
    lm = (1 + sp.sqrt(4 * m - 5)) / 2
    theirs = sp.diff(to_sympy(f).subs(x, lm), m)
    assert sp.simplify(quad_to_sympy(ours) - theirs) == 0
    assert ours == stated


@pytest.mark.parametrize("mv", [18, 50, 100])
def test_exact_and_float_appendix_values_agree(mv):
    for name, (f, order, dm, stated) in fm.CLOSED_FORMS.items():
        lm = (1 + np.sqrt(4 * mv - 5)) / 2
        g = f
        for _ in range(order):
            g = g.diff_x()
        if dm:
            continue
        assert float(stated.at(mv)) == pytest.approx(float(g.subs_m(mv)(lm)), abs=1e-9 * max(1, abs(float(stated.at(mv)))))


# Sturm ---------------------------------------------------------------------------


def test_count_roots_half_open():
    f = UniPoly([2, -3, 1])  # (x-1)(x-2)
    assert count_roots(f, 1, 2) == 1
    assert count_roots(f, 0, 2) == 2
    assert count_roots(f, 2, 3) == 0


@given(st.lists(st.integers(-8, 8), min_size=1, max_size=5))
def test_count_real_roots_matches_sympy(roots):
    f = UniPoly([1])
    for r in roots:
        f = f * UniPoly([-r, 1])
    f = f * UniPoly([1, 0, 1])  # x^2 + 1 adds no real roots
    assert count_real_roots(f) == len(set(roots))


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=6))
def test_largest_root_interval_is_isolating(cs):
    f = UniPoly(cs)
    assume(f.degree >= 1 and count_real_roots(f) > 0)
    r = sturm_largest_root(f)
    sqf = f.squarefree_part()
    assert r.hi - r.lo <= Fraction(1, 10**12)
    assert count_roots(sqf, r.lo, r.hi) == 1
    assert count_roots(sqf, r.hi, abs(r.hi) + 10**4) == 0
    assert sqf(r.lo) * sqf(r.hi) <= 0
    real = [z.real for z in np.roots([float(c) for c in reversed(f.coeffs)]) if abs(z.imag) < 1e-6]
    assert float(r.midpoint) == pytest.approx(max(real), abs=1e-5)


def test_sturm_examples():
    r = sturm_largest_root(p_poly(18))
    assert abs(float(r.midpoint) - 4.593888315670) < 1e-9
    assert sturm_largest_root(UniPoly([-1, 0, 1])).lo < 1 <= sturm_largest_root(UniPoly([-1, 0, 1])).hi
    t = sturm_largest_root(UniPoly([24, -12, -3, 1]))
    assert 4.4 < float(t.midpoint) < 4.6
    assert compare_roots(t, r) == -1
    assert compare_roots(r, t) == 1


@pytest.mark.parametrize("mv", [6, 18, 100, 500])
def test_p_m_at_L_negative(mv):
    assert quad_sign(quad_eval(fm.P, L), mv) == -1
