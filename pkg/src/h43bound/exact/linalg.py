"""Determinants and characteristic polynomials over exact rings."""

from __future__ import annotations

from typing import Sequence

from .poly import BiPoly, UniPoly, X, _q


def _exact_div(a, b):
    if hasattr(a, "exact_div"):
        return a.exact_div(b)
    return a / b


def _is_zero(a) -> bool:
    return a.is_zero() if hasattr(a, "is_zero") else a == 0


def det_bareiss(matrix: Sequence[Sequence]):
    """Fraction-free Bareiss elimination.

    Works over any integral domain whose elements support ``+ - *`` and an
    exact division (``exact_div`` or ``/``).  Row swaps are used when a pivot
    vanishes.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            for r in range(k + 1, n):
                if not _is_zero(a[r][k]):
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return a[k][k] * 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = _exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    return a[n - 1][n - 1] if sign == 1 else -a[n - 1][n - 1]


def det_cofactor(matrix: Sequence[Sequence]):
    """Laplace expansion along the first row; exponential, for cross-checks only."""
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    total = None
    for j in range(n):
        if _is_zero(matrix[0][j]):
            continue
        minor = [row[:j] + row[j + 1:] for row in (list(r) for r in matrix[1:])]
        term = matrix[0][j] * det_cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else matrix[0][0] * 0


def _as_bipoly(e) -> BiPoly:
    return e if isinstance(e, BiPoly) else BiPoly.const(e)


def char_poly_symbolic(matrix: Sequence[Sequence], method: str = "bareiss") -> BiPoly:
    """det(xI - Q) for a matrix whose entries are polynomials in ``m``."""
    n = len(matrix)
    shifted = [
        [(X if i == j else BiPoly()) - _as_bipoly(matrix[i][j]) for j in range(n)]
        for i in range(n)
    ]
    det = det_bareiss if method == "bareiss" else det_cofactor
    out = det(shifted)
    return _as_bipoly(out)


def char_poly(matrix: Sequence[Sequence]) -> UniPoly:
    """det(xI - Q) for a rational matrix."""
    n = len(matrix)
    shifted = [
        [UniPoly([(-_q(matrix[i][j])), 1] if i == j else [-_q(matrix[i][j])]) for j in range(n)]
        for i in range(n)
    ]
    out = det_bareiss(shifted)
    return out if isinstance(out, UniPoly) else UniPoly([out])
