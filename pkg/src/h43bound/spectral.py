"""Perron roots of graphs and the extremal value rho'(m)."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exact import IsolatedRoot, UniPoly, char_poly, sturm_largest_root
from .exact.sturm import DEFAULT_TOL
from .graphs import Graph

log = logging.getLogger(__name__)

MAX_ITER = 100_000
EXACT_FALLBACK_MAX_N = 14

BELOW, ABOVE, EQUAL = "below", "above", "equal-within-margin"


class PerronFailure(RuntimeError):
    pass


def _power_iteration(a: np.ndarray, tol: float, max_iter: int) -> float | None:
    n = a.shape[0]
    x = np.ones(n) / np.sqrt(n)
    shifted = a + np.eye(n)  # A + I has no -rho partner, so bipartite graphs converge
    prev = None
    for _ in range(max_iter):
        ax = a @ x
        rq = float(x @ ax)
        if prev is not None and abs(rq - prev) < tol / 10:
            return rq
        prev = rq
        y = shifted @ x
        x = y / np.linalg.norm(y)
    return None


def perron_root(g: Graph, tol: float = 1e-12, max_iter: int = MAX_ITER) -> float:
    """Largest adjacency eigenvalue by shifted power iteration on A + I."""
    if g.num_edges == 0:
        raise ValueError("graph has no edges")
    rho = _power_iteration(g.adjacency(), tol, max_iter)
    if rho is not None:
        return rho
    if g.n <= EXACT_FALLBACK_MAX_N:
        log.info("power iteration stalled on n=%d; falling back to Sturm", g.n)
        return float(sturm_largest_root(char_poly(g.adjacency().astype(int).tolist())))
    raise PerronFailure(f"power iteration did not converge in {max_iter} steps (n={g.n})")


def p_poly(m) -> UniPoly:
    """p_m(x) = x^4 - m x^2 - (m-2) x + m/2 - 1 at a fixed m."""
    m = Fraction(m)
    return UniPoly([m / 2 - 1, -(m - 2), -m, 0, 1])


@dataclass(frozen=True)
class RhoPrime:
    m: int
    value: float
    lo: Fraction
    hi: Fraction
    root: IsolatedRoot

    def __float__(self) -> float:
        return self.value


@lru_cache(maxsize=None)
def rho_prime(m: int, tol: Fraction = DEFAULT_TOL) -> RhoPrime:
    """Largest root of p_m, isolated exactly and bisected to width <= tol."""
    if m % 2:
        raise ValueError(f"m must be even, got {m}")
    if m < 6:
        raise ValueError(f"rho'(m) is only defined here for even m >= 6, got {m}")
    r = sturm_largest_root(p_poly(m), tol)
    # the float is taken from a much narrower interval so that 12-digit output rounds correctly
    value = float(r.refine(Fraction(1, 10**20)).midpoint)
    return RhoPrime(m, value, r.lo, r.hi, r)


def compare_rho(g: Graph, m: int, margin: float = 1e-6, tol: float = 1e-12) -> str:
    diff = perron_root(g, tol) - rho_prime(m).value
    if diff > margin:
        return ABOVE
    if diff < -margin:
        return BELOW
    return EQUAL
