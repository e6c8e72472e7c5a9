from fractions import Fraction

import pytest

from h43bound import formulas as fm
from h43bound.exact import M, QuadElem, QuadNumber, S, X
from h43bound.exact.quad import M as Mq
from h43bound.verify import (
    FAIL, INCONCLUSIVE, PASS, certify_tail, check_charpoly, closed_form, errata_at_18, lower_bound_L,
    positivity_claims, root_template_certificate, run_suite, sweep_claim,
    verify_appendix_closed_forms, verify_appendix_positivity, verify_charpoly_formulas,
    verify_decompositions, verify_obstruction_flip, verify_threshold_inequalities,
)
from h43bound.spectral import p_poly

# printed values found to disagree with exact recomputation; see README
KNOWN_FAILURES = {
    "appendix.closed-at18.R_mix(L)",
    "appendix.sign.mixed.4m^2-73m-32>0",
    "appendix.tail.mixed.4m^2-73m-32>0",
}


def by_id(results):
    return {r.check_id: r for r in results}


def test_charpoly_suite_passes():
    res = verify_charpoly_formulas()
    assert res and all(r.ok for r in res)


def test_dist_char_poly_example():
    stated = X**5 - 4 * X**4 + (11 - M) * X**3 + (4 * M - 45) * X**2 + (28 - 2 * M) * X + 45 - 3 * M
    assert check_charpoly("x", fm.Q_DIST, stated).ok


@pytest.mark.parametrize("i,j,delta", [(0, 1, 1), (1, 1, -1), (2, 0, 1), (0, 2, 1)])
def test_perturbed_matrix_fails(i, j, delta):
    bad = [list(r) for r in fm.Q_T]
    bad[i][j] = bad[i][j] + delta
    r = check_charpoly("negative-control", bad, fm.Q_T_POLY)
    assert r.status == FAIL
    assert "monomial" in r.detail["first_difference"]


def test_decompositions_pass():
    res = verify_decompositions()
    assert res and all(r.ok for r in res)


def test_closed_forms_only_known_erratum_fails():
    res = verify_appendix_closed_forms()
    failed = {r.check_id for r in res if not r.ok}
    assert failed == {"appendix.closed-at18.R_mix(L)"}
    d = by_id(res)["appendix.closed-at18.R_mix(L)"].detail
    assert d["computed"] == "-999/4 + 1551/4*sqrt(67)"


def test_errata_at_18_lists_only_R_mix():
    errs = errata_at_18()
    assert [e["quantity"] for e in errs] == ["R_mix(L) at m=18"]
    assert errs[0]["printed_sign"] == errs[0]["computed_sign"] == 1


def test_closed_form_examples():
    assert closed_form(fm.Q_MIX_FACTOR) == (2 * Mq * S + 2 * Mq + S - 97) / 4
    assert closed_form(fm.R_DIST, 1).at(18) == QuadNumber(452, Fraction(-25, 2), 67)


def test_positivity_only_known_claim_fails():
    res = verify_appendix_positivity(200)
    failed = {r.check_id for r in res if not r.ok}
    assert failed == KNOWN_FAILURES - {"appendix.closed-at18.R_mix(L)"}
    d = by_id(res)["appendix.sign.mixed.4m^2-73m-32>0"].detail
    assert d["m"] == 18 and d["value"] == "-50"


def test_false_claim_holds_from_19():
    e, strict = positivity_claims()["mixed.4m^2-73m-32>0"]
    assert sweep_claim("x", e, strict, range(19, 600)).ok
    assert certify_tail(e, 19)[0] == PASS
    # the quantity it was meant to support stays positive at 18
    assert positivity_claims()["mixed.R''(L)>0"][0].at(18).sign() == 1


def test_q_T_at_18_example():
    assert closed_form(fm.Q_T_POLY).at(18).sign() == 1


def test_certify_tail_cases():
    assert certify_tail(S - 8, 18)[0] == PASS
    assert certify_tail(QuadElem(Mq - 20), 18)[0] == FAIL
    # positive at 18 and 19 but with a real zero further out
    assert certify_tail((Mq - 30) * (Mq - 31), 32)[0] == PASS
    assert certify_tail(QuadElem((Mq - 30) * (Mq - 40)), 18)[0] == INCONCLUSIVE
    assert certify_tail(8 - S + Mq / 100, 16)[0] == INCONCLUSIVE  # negative on roughly (17, 1580)


def test_root_template_rejects_wrong_remainder():
    m = 18
    f, q, r = (g.subs_m(m) for g in fm.DECOMPOSITIONS["same"])
    ok = root_template_certificate(f, q, r, p_poly(m), lower_bound_L(m))
    assert ok["certified"]
    bad = root_template_certificate(f, q, r - 10**6, p_poly(m), lower_bound_L(m))
    assert not bad["identity"] and not bad["certified"]


def test_thresholds_pass_with_labelled_boundaries():
    res = by_id(verify_threshold_inequalities(100))
    assert all(r.ok for r in res.values())
    b = res["thresholds.eW2.boundary-m22"].detail
    assert b["label"] == "expected-fail-below-24"
    assert b["first_even_m_where_it_holds"] == 24
    assert b["approx"] == pytest.approx(22 - 83**0.5 / 4 - 7 / 4 - 18, abs=1e-12)


def test_m24_threshold_value():
    e = Mq - S / 4 - Fraction(7, 4)
    assert float(e.at(24)) == pytest.approx(19.865, abs=1e-3)
    assert (e - 18).at(24).sign() == 1


@pytest.mark.parametrize("m,verdict", [(10, "above"), (16, "above"), (18, "below"), (40, "below")])
def test_obstruction_examples(m, verdict):
    (r,) = verify_obstruction_flip(m, m + 2)[:1]
    assert r.ok and r.detail["verdict"] == verdict


def test_obstruction_rejects_bad_range():
    with pytest.raises(ValueError):
        verify_obstruction_flip(8, 20)


def test_run_suite_dispatch():
    assert [r.check_id for r in run_suite("charpoly")] == [r.check_id for r in verify_charpoly_formulas()]
    with pytest.raises(KeyError):
        run_suite("nope")


def test_check_result_json_has_counterexample_on_fail():
    r = sweep_claim("neg", QuadElem(Mq - 20), True, range(18, 30, 2))
    assert r.status == FAIL and r.detail["m"] == 18
    assert r.to_json()["m_range"] == [18, 28]
