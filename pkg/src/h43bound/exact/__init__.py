"""Exact arithmetic kernel: rationals, polynomials, Q(sqrt(4m-5)), Sturm isolation."""

from fractions import Fraction as Rational

from .linalg import char_poly, char_poly_symbolic, det_bareiss, det_cofactor
from .poly import BiPoly, M, UniPoly, X
from .quad import L, QuadElem, QuadNumber, RatFunc, S, quad_eval, quad_m_derivative, quad_sign
from .sturm import (
    DEFAULT_TOL,
    IsolatedRoot,
    NoRealRootError,
    compare_roots,
    count_real_roots,
    count_roots,
    sturm_largest_root,
    sturm_sequence,
)


def bipoly_divmod(f: BiPoly, g: BiPoly) -> tuple[BiPoly, BiPoly]:
    return f.divmod_x(g)


__all__ = [
    "Rational", "UniPoly", "BiPoly", "X", "M", "RatFunc", "QuadElem", "QuadNumber", "S", "L",
    "quad_eval", "quad_m_derivative", "quad_sign", "det_bareiss", "det_cofactor", "char_poly",
    "char_poly_symbolic", "bipoly_divmod", "sturm_sequence", "sturm_largest_root", "count_roots",
    "count_real_roots", "compare_roots", "IsolatedRoot", "NoRealRootError", "DEFAULT_TOL",
]
