"""Exact checks of the characteristic polynomials, decompositions, closed forms,
sign claims and threshold inequalities for the explicit families."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import formulas as fm
from .exact import (
    BiPoly,
    QuadElem,
    QuadNumber,
    UniPoly,
    bipoly_divmod,
    char_poly_symbolic,
    compare_roots,
    count_roots,
    quad_eval,
    quad_m_derivative,
    sturm_largest_root,
)
from .exact.quad import L, M as Mq, S, S_SQUARED
from .exact.sturm import cauchy_bound, isqrt_bounds, tarski_query
from .graphs import symbolic_quotient
from .spectral import p_poly, rho_prime

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"
DEFAULT_M_MAX = 500


@dataclass
class CheckResult:
    check_id: str
    status: str
    detail: dict = field(default_factory=dict)
    m_range: tuple[int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        d = asdict(self)
        d["m_range"] = list(self.m_range) if self.m_range else None
        return d


def _even(lo: int, hi: int) -> range:
    return range(lo + (lo % 2), hi + 1, 2)


def _first_diff(a: BiPoly, b: BiPoly) -> dict:
    for k in sorted(set(a.terms) | set(b.terms), reverse=True):
        ca, cb = a.terms.get(k, 0), b.terms.get(k, 0)
        if ca != cb:
            return {"monomial": f"x^{k[0]} m^{k[1]}", "computed": str(ca), "stated": str(cb)}
    return {}


def _poly_check(check_id: str, computed: BiPoly, stated: BiPoly) -> CheckResult:
    if computed == stated:
        return CheckResult(check_id, PASS, {"polynomial": str(computed)})
    return CheckResult(check_id, FAIL, {"computed": str(computed), "stated": str(stated),
                                        "first_difference": _first_diff(computed, stated)})


# characteristic polynomials -----------------------------------------------------


def check_charpoly(check_id: str, matrix, stated: BiPoly) -> CheckResult:
    return _poly_check(check_id, char_poly_symbolic(matrix), stated)


def _matrix_check(check_id: str, derived, stated) -> CheckResult:
    to_bp = lambda e: e if isinstance(e, BiPoly) else BiPoly.const(e)
    bad = [(i, j) for i, row in enumerate(stated) for j, e in enumerate(row)
           if to_bp(derived[i][j]) != to_bp(e)]
    if not bad:
        return CheckResult(check_id, PASS, {"blocks": len(stated)})
    i, j = bad[0]
    return CheckResult(check_id, FAIL, {"entry": [i, j], "derived": str(derived[i][j]),
                                        "stated": str(stated[i][j])})


def verify_charpoly_formulas() -> list[CheckResult]:
    out = []
    for name, stated_matrix in fm.QUOTIENTS.items():
        derived = symbolic_quotient(name)
        out.append(_matrix_check(f"charpoly.{name}.quotient", derived, stated_matrix))
        out.append(check_charpoly(f"charpoly.{name}", derived, fm.CHAR_POLYS[name]))
    # the extremal graph's 4-block quotient carries p_m itself
    out.append(check_charpoly("charpoly.s-minus", symbolic_quotient("s-minus"), fm.P))
    return out


# decompositions f = q p_m + R -----------------------------------------------------


def verify_decompositions() -> list[CheckResult]:
    out = []
    for name, (f, q_stated, r_stated) in fm.DECOMPOSITIONS.items():
        q, r = bipoly_divmod(f, fm.P)
        res = _poly_check(f"decomp.{name}.quotient", q, q_stated)
        out.append(res)
        out.append(_poly_check(f"decomp.{name}.remainder", r, r_stated))
        out.append(_poly_check(f"decomp.{name}.identity", q_stated * fm.P + r_stated, f))
    return out


# closed forms at L_m --------------------------------------------------------------


def _diff_x(f: BiPoly, k: int) -> BiPoly:
    for _ in range(k):
        f = f.diff_x()
    return f


def closed_form(f: BiPoly, order: int = 0, m_derivative: bool = False) -> QuadElem:
    e = quad_eval(_diff_x(f, order), L)
    return quad_m_derivative(e) if m_derivative else e


def verify_appendix_closed_forms() -> list[CheckResult]:
    out = []
    for name, (f, k, stated) in fm.DERIVATIVES.items():
        out.append(_poly_check(f"appendix.derivative.{name}", _diff_x(f, k), stated))
    for name, (f, k, dm, stated) in fm.CLOSED_FORMS.items():
        got = closed_form(f, k, dm)
        cid = f"appendix.closed.{name}"
        if got == stated:
            out.append(CheckResult(cid, PASS, {"value": str(got)}))
        else:
            out.append(CheckResult(cid, FAIL, {"computed": str(got), "stated": str(stated),
                                               "difference": str(got - stated)}))
    for name, (a, b) in fm.AT_18.items():
        f, k, dm, _ = fm.CLOSED_FORMS[name]
        got = closed_form(f, k, dm).at(18)
        printed = QuadNumber(a, b, 67)
        cid = f"appendix.closed-at18.{name}"
        if got == printed:
            out.append(CheckResult(cid, PASS, {"value": str(got)}, (18, 18)))
        else:
            out.append(CheckResult(cid, FAIL, {"computed": str(got), "stated": str(printed),
                                               "difference": str(got - printed)}, (18, 18)))
    return out


def errata_at_18() -> list[dict]:
    """Printed m = 18 specializations that disagree with the general closed form."""
    out = []
    for name, (a, b) in fm.AT_18.items():
        f, k, dm, _ = fm.CLOSED_FORMS[name]
        got = closed_form(f, k, dm).at(18)
        printed = QuadNumber(a, b, 67)
        if got != printed:
            out.append({"quantity": f"{name} at m=18", "printed": str(printed),
                        "computed": str(got), "printed_sign": printed.sign(),
                        "computed_sign": got.sign()})
    return out


# positivity ----------------------------------------------------------------------


def _q(expr) -> QuadElem:
    return expr if isinstance(expr, QuadElem) else QuadElem(expr)


def positivity_claims() -> dict[str, tuple[QuadElem, bool]]:
    """name -> (quantity as a function of m, strict?).  Quantities are derived
    from the polynomials, not from the displayed closed forms."""
    m, s = Mq, S
    c = closed_form
    claims: dict[str, tuple[QuadElem, bool]] = {
        # T_m
        "t.q_T(L)>0": (c(fm.Q_T_POLY), True),
        "t.q_T'(L)>0": (c(fm.Q_T_POLY, 1), True),
        "t.16m^2>9(4m-5)": (_q(16 * m * m - 9 * (4 * m - 5)), True),
        "t.q_T''(L)>0": (c(fm.Q_T_POLY, 2), True),
        # same
        "same.L-4>=0": (L - 4, False),
        "same.R(L)>0": (c(fm.R_SAME), True),
        "same.d/dm R(L)>0": (c(fm.R_SAME, 0, True), True),
        "same.2m-147/4>=-3/4": (_q(2 * m - Fraction(147, 4) + Fraction(3, 4)), False),
        "same.(66m-139)/(4s)>(66m-139)/(8m)": ((66 * m - 139) / (4 * s) - (66 * m - 139) / (8 * m), True),
        "same.(66m-139)/(8m)>=1049/144": (_q((66 * m - 139) / (8 * m) - Fraction(1049, 144)), False),
        "same.R''(L)>0": (c(fm.R_SAME, 2), True),
        "same.R'(L)>0": (c(fm.R_SAME, 1), True),
        "same.d/dm R'(L)>0": (c(fm.R_SAME, 1, True), True),
        # dist
        "dist.L-4>=0": (L - 4, False),
        "dist.R(L)>0": (c(fm.R_DIST), True),
        "dist.d/dm R(L)>0": (c(fm.R_DIST, 0, True), True),
        "dist.2m-143/4>=1/4": (_q(2 * m - Fraction(143, 4) - Fraction(1, 4)), False),
        "dist.(66m-117)/(4s)>0": ((66 * m - 117) / (4 * s), True),
        "dist.R''(L)>0": (c(fm.R_DIST, 2), True),
        "dist.R'(L)>0": (c(fm.R_DIST, 1), True),
        "dist.d/dm R'(L)>0": (c(fm.R_DIST, 1, True), True),
        # mixed
        "mixed.q(L)>0": (c(fm.Q_MIX_FACTOR), True),
        "mixed.(2m+1)(s-8)>0": ((2 * m + 1) * (s - 8), True),
        "mixed.18m-89>0": (_q(18 * m - 89), True),
        "mixed.R(L)>0": (c(fm.R_MIX), True),
        "mixed.d/dm R(L)>0": (c(fm.R_MIX, 0, True), True),
        "mixed.24m^2-308m+51>0": (_q(24 * m * m - 308 * m + 51), True),
        "mixed.340m^2-3310m+4467>0": (_q(340 * m * m - 3310 * m + 4467), True),
        "mixed.39m-336>0": (_q(39 * m - 336), True),
        "mixed.R''(L)>0": (c(fm.R_MIX, 2), True),
        "mixed.4m^2-73m-32>0": (_q(4 * m * m - 73 * m - 32), True),
        "mixed.R'(L)>0": (c(fm.R_MIX, 1), True),
        "mixed.d/dm R'(L)>0": (c(fm.R_MIX, 1, True), True),
        "mixed.172m-1008>0": (_q(172 * m - 1008), True),
        "mixed.40m^2-478m+301>0": (_q(40 * m * m - 478 * m + 301), True),
    }
    return claims


def _holds(v: QuadNumber, strict: bool) -> bool:
    sg = v.sign()
    return sg > 0 if strict else sg >= 0


def sweep_claim(check_id: str, e: QuadElem, strict: bool, ms: Iterable[int]) -> CheckResult:
    ms = list(ms)
    if not ms:
        raise ValueError(f"{check_id}: empty range of m")
    worst = None
    for m in ms:
        v = e.at(m)
        if not _holds(v, strict):
            return CheckResult(check_id, FAIL, {"m": m, "value": str(v), "approx": float(v)},
                               (ms[0], ms[-1]))
        fv = float(v)
        if worst is None or fv < worst[1]:
            worst = (m, fv)
    return CheckResult(check_id, PASS, {"min_approx": worst[1], "argmin_m": worst[0],
                                        "count": len(ms)}, (ms[0], ms[-1]))


def certify_tail(e: QuadElem, m0: int, strict: bool = True) -> tuple[str, dict]:
    """Sign of ``e = a + b*s`` on all real m >= m0, not just even integers.

    Away from poles, e can only vanish at a root of the norm a^2 - b^2 (4m - 5),
    and at such a root e = 0 exactly when a and b have opposite signs.  A
    Sturm-Tarski query for sign(a*b) over the norm's roots rules that out, after
    which the sign on (m0, oo) is the sign at m0 + 1.
    """
    m0q = Fraction(m0)
    start = e.at(m0q)
    if not _holds(start, strict):
        return FAIL, {"m": m0, "value": str(start)}
    na, da, nb, db = e.a.num, e.a.den, e.b.num, e.b.den
    for label, den in (("pole(a)", da), ("pole(b)", db)):
        if den.degree >= 1 and count_roots(den, m0q, cauchy_bound(den) + abs(m0q) + 1):
            return INCONCLUSIVE, {"obstruction": label, "polynomial": str(den)}
    if nb.is_zero():
        crit = na.squarefree_part()
        n_roots = count_roots(crit, m0q, cauchy_bound(crit) + abs(m0q) + 1) if crit.degree >= 1 else 0
        if n_roots:
            return INCONCLUSIVE, {"obstruction": "zero(a)", "polynomial": str(na)}
    else:
        norm = ((na * db) ** 2 - (nb * da) ** 2 * S_SQUARED).squarefree_part()
        if norm.degree >= 1:
            hi = cauchy_bound(norm) + abs(m0q) + 1
            n_roots = count_roots(norm, m0q, hi)
            same_sign = tarski_query(na * da * nb * db, norm, m0q, hi)
            if same_sign != n_roots:
                return INCONCLUSIVE, {"obstruction": "norm root with sign(a*b) <= 0",
                                      "polynomial": str(norm)}
    beyond = e.at(m0q + 1).sign()
    if beyond <= 0:
        return FAIL, {"m": m0 + 1, "sign": beyond}
    return PASS, {"sign_at_m0": start.sign(), "sign_beyond": beyond}


def verify_appendix_positivity(m_max: int = DEFAULT_M_MAX, m_min: int = 18) -> list[CheckResult]:
    if m_max < m_min:
        raise ValueError(f"m_max must be >= {m_min}")
    ms = list(_even(m_min, m_max))
    out = []
    claims = positivity_claims()
    for name, (e, strict) in claims.items():
        out.append(sweep_claim(f"appendix.sign.{name}", e, strict, ms))
    for name, (e, strict) in claims.items():
        status, detail = certify_tail(e, m_min, strict)
        out.append(CheckResult(f"appendix.tail.{name}", status, detail, (m_min, -1)))
    # q_mix' = 3x^2 - 4x + 3 has negative discriminant
    d = Fraction(16 - 4 * 3 * 3)
    out.append(CheckResult("appendix.sign.mixed.q'(x)>0-all-x", PASS if d < 0 else FAIL,
                           {"discriminant": str(d)}))
    # the printed m = 18 values are claimed positive
    for name, (a, b) in fm.AT_18.items():
        printed = QuadNumber(a, b, 67)
        out.append(CheckResult(f"appendix.at18.{name}>0", PASS if printed.sign() > 0 else FAIL,
                               {"value": str(printed)}, (18, 18)))
    out.extend(verify_root_template(m_max, m_min))
    return out


def lower_bound_L(m: int, digits: int = 30) -> Fraction:
    """A rational x0 <= L_m within 10**-digits."""
    lo, _ = isqrt_bounds(Fraction(4 * m - 5), digits)
    return (1 + lo) / 2


def _nonneg_beyond(h: UniPoly, x0: Fraction, strict: bool) -> bool:
    """Sufficient test for h > 0 (or >= 0) on [x0, oo)."""
    if h.is_zero():
        return not strict
    v = h(x0)
    if v < 0 or (strict and v == 0):
        return False
    if h.degree < 1:
        return True
    hi = cauchy_bound(h) + abs(x0) + 1
    return h.lc > 0 and count_roots(h, x0, hi) == 0


def root_template_certificate(f: UniPoly, q: UniPoly, r: UniPoly, p: UniPoly, x0: Fraction) -> dict:
    """Exact certificate that the largest root of f is below the largest root of p.

    Needs f = q p + r, p's largest root >= x0, q >= 0 and r > 0 on [x0, oo).
    """
    identity = f == q * p + r
    # p is monic, so p(x0) < 0 puts a root of p above x0
    x0_ok = p.lc > 0 and p(x0) < 0
    q_ok = _nonneg_beyond(q, x0, strict=False)
    r_ok = _nonneg_beyond(r, x0, strict=True)
    return {"identity": identity, "x0_below_root": x0_ok, "q_nonneg": q_ok, "r_pos": r_ok,
            "certified": identity and x0_ok and q_ok and r_ok}


_TEMPLATES = {
    "t": (fm.Q_T_POLY, BiPoly(), fm.Q_T_POLY),
    "same": fm.DECOMPOSITIONS["same"],
    "dist": fm.DECOMPOSITIONS["dist"],
    "mixed": fm.DECOMPOSITIONS["mixed"],
}


def verify_root_template(m_max: int = DEFAULT_M_MAX, m_min: int = 18) -> list[CheckResult]:
    """Per-m decomposition-comparison certificates with x0 a rational lower bound of L_m,
    cross-checked against direct root comparison."""
    out = []
    ms = list(_even(m_min, m_max))
    for name, (f, q, r) in _TEMPLATES.items():
        failed = None
        for m in ms:
            fm_, qm, rm, pm = f.subs_m(m), q.subs_m(m), r.subs_m(m), p_poly(m)
            cert = root_template_certificate(fm_, qm, rm, pm, lower_bound_L(m))
            direct = compare_roots(sturm_largest_root(fm_, None), rho_prime(m).root)
            if not cert["certified"] or direct != -1:
                failed = {"m": m, **cert, "direct_comparison": direct}
                break
        if failed:
            out.append(CheckResult(f"template.{name}", FAIL, failed, (ms[0], ms[-1])))
        else:
            out.append(CheckResult(f"template.{name}", PASS, {"count": len(ms)}, (ms[0], ms[-1])))
    return out


# threshold inequalities ---------------------------------------------------------


def _sweep_first_true(e: QuadElem, lo: int, hi: int) -> int | None:
    for m in _even(lo, hi):
        if e.at(m).sign() > 0:
            return m
    return None


def verify_threshold_inequalities(m_max: int = DEFAULT_M_MAX) -> list[CheckResult]:
    if m_max < 24:
        raise ValueError("m_max must be >= 24")
    m, s = Mq, S
    out = []
    lower12 = m + s / 4 - Fraction(5, 4)
    lower32 = m - s / 4 - Fraction(7, 4)
    for cid, lhs, rhs in (("thresholds.identity.L^2-L/2", L * L - L / 2, lower12),
                          ("thresholds.identity.L^2-3L/2", L * L - 3 * L / 2, lower32)):
        ok = lhs == rhs
        out.append(CheckResult(cid, PASS if ok else FAIL,
                               {"lhs": str(lhs), "rhs": str(rhs)}))

    # rho'(m) > L_m, i.e. p_m(L_m) < 0
    out.append(sweep_claim("thresholds.p_m(L)<0", -quad_eval(fm.P, L), True, _even(6, m_max)))

    # branch-audit rows, even m >= 24
    rows = {
        "audit.L^2>m": (L * L - m, True),
        "audit.lower12>13": (lower12 - 13, True),
        "audit.lower12>18": (lower12 - 18, True),
        "audit.lower12>=m": (lower12 - m, False),
        "audit.lower12>10": (lower12 - 10, True),
        "audit.lower12>(m+11)/2": (lower12 - (m + 11) / 2, True),
    }
    for name, (e, strict) in rows.items():
        out.append(sweep_claim(f"thresholds.{name}", e, strict, _even(24, m_max)))

    # substituting e(A+) = 6, |A+| = 4 into the quadratic upper bound
    for e_w, cap, coeff, bound in ((2, 2, Fraction(3, 2), 18), (3, 3, Fraction(1, 2), 19)):
        got_coeff = 6 - 4 + Fraction(3, 2) - e_w
        got_bound = 2 * 6 + 4 + cap
        ok = got_coeff == coeff and got_bound == bound
        out.append(CheckResult(f"thresholds.k4-substitution.eW={e_w}", PASS if ok else FAIL,
                               {"coefficient": str(got_coeff), "bound": got_bound}))

    # e(W) = 2: lower32 > 18 needs m >= 24
    p71 = lower32 - 18
    out.append(sweep_claim("thresholds.eW2.lower32>18", p71, True, _even(24, m_max)))
    v22 = p71.at(22)
    first = _sweep_first_true(p71, 6, m_max)
    out.append(CheckResult(
        "thresholds.eW2.boundary-m22",
        PASS if v22.sign() < 0 and first == 24 else FAIL,
        {"label": "expected-fail-below-24", "value_at_22": str(v22), "approx": float(v22),
         "first_even_m_where_it_holds": first},
        (22, 22)))

    # e(W) = 3: lower12 > 19 needs m >= 20
    p81 = lower12 - 19
    out.append(sweep_claim("thresholds.eW3.lower12>19", p81, True, _even(20, m_max)))
    first = _sweep_first_true(p81, 6, m_max)
    out.append(CheckResult(
        "thresholds.eW3.boundary-m18",
        PASS if first == 20 else FAIL,
        {"label": "expected-fail-below-20", "value_at_18": str(p81.at(18)),
         "first_even_m_where_it_holds": first},
        (18, 18)))
    return out


# obstruction family ---------------------------------------------------------------


def t_root(m: int, tol=None):
    return sturm_largest_root(fm.Q_T_POLY.subs_m(m), tol)


def verify_obstruction_flip(m_lo: int = 10, m_hi: int = 200) -> list[CheckResult]:
    """rho(T_m) vs rho'(m) by separating exact isolating intervals."""
    if m_lo < 10 or m_lo >= m_hi or m_lo % 2 or m_hi % 2:
        raise ValueError("need even 10 <= m_lo < m_hi")
    out = []
    for m in _even(m_lo, m_hi):
        expected = 1 if m <= 16 else -1
        got = compare_roots(t_root(m), rho_prime(m).root, max_steps=200)
        verdict = {1: "above", -1: "below", None: "inconclusive"}[got]
        if got is None:
            status = INCONCLUSIVE
        else:
            status = PASS if got == expected else FAIL
        out.append(CheckResult(f"obstruction.m={m}", status,
                               {"verdict": verdict,
                                "expected": "above" if expected > 0 else "below",
                                "rho_T_approx": float(t_root(m, Fraction(1, 10**12))),
                                "rho_prime_approx": rho_prime(m).value}, (m, m)))
    return out


SUITES: dict[str, Callable[..., list[CheckResult]]] = {
    "charpoly": lambda m_max: verify_charpoly_formulas(),
    "decomp": lambda m_max: verify_decompositions(),
    "appendix": lambda m_max: verify_appendix_closed_forms() + verify_appendix_positivity(m_max),
    "thresholds": lambda m_max: verify_threshold_inequalities(m_max),
    "obstruction": lambda m_max: verify_obstruction_flip(10, max(18, min(m_max, 200))),
}


def run_suite(name: str, m_max: int = DEFAULT_M_MAX) -> list[CheckResult]:
    if name == "all":
        out = []
        for k in SUITES:
            out.extend(SUITES[k](m_max))
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name](m_max)
