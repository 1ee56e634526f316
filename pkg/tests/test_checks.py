from __future__ import annotations

import pytest

from periodcheck import checks as ck
from periodcheck.report import EXPECTED_FAIL, FAIL, PASS, CheckReport, SuiteReport


def test_wu_lemma_pass_and_perturb():
    assert ck.check_wu_lemma(32).status == PASS
    bad = ck.check_wu_lemma(32, perturb=True)
    assert bad.status == FAIL and bad.witness["exponent"] == 3


def test_frobenius_lift_p2():
    r = ck.check_frobenius_lift(2, 32)
    assert r.status == PASS
    assert r.witness["leading_x_term"]["coefficient"] == 1


def test_frobenius_lift_p3_is_a_finding():
    r = ck.check_frobenius_lift(3, 32)
    assert r.status == EXPECTED_FAIL and r.witness["exponent"] == 3


@pytest.mark.parametrize("p", [2, 3, 5])
def test_fx_conjugation(p):
    assert ck.check_fx_conjugation(p, 24).status == PASS


def test_artin_hasse():
    assert ck.check_artin_hasse_congruence(2, 64).status == PASS
    r = ck.check_artin_hasse_congruence(3, 27)
    assert r.status == EXPECTED_FAIL and r.witness["exponent"] == 3


def test_wu_unit_identities():
    assert ck.check_wu_unit_identities(64).status == PASS
    assert ck.check_wu_unit_identities(16, perturb=True).status == FAIL


def test_dli1():
    r = ck.check_dli1_decomposition(32)
    assert r.status == PASS and r.witness["residue"] == -1
    assert ck.check_dli1_decomposition(32, perturb=True).status == FAIL


def test_hopf_ring():
    r = ck.check_hopf_ring(6)
    assert r.status == PASS and r.witness["z0z1_coefficient"] == "1*b^2"
    assert ck.check_hopf_ring(6, perturb=True).witness["exponent"] == [1, 1]


def test_ahat_corollary_records_nonintegrality():
    r = ck.check_ahat_wu_corollary(32)
    assert r.status == EXPECTED_FAIL
    assert r.witness["exponent"] == 2 and r.witness["valuation"] == -1
    assert r.witness["mod2_exponent_sign"] == 1


@pytest.mark.parametrize(
    "fn",
    [ck.check_tate_boundary, ck.check_punctured_line, ck.check_divided_moments, ck.check_stefan_boltzmann,
     ck.check_regularized_polylog, ck.check_zeta_bernoulli],
)
def test_suite_members_pass(fn):
    assert fn().status == PASS


def test_run_suite_full():
    rep = ck.run_suite()
    assert rep.exit_code == 0
    assert len(rep.checks) >= 10
    names = [c.check_name for c in rep.checks]
    assert names == sorted(names)
    assert rep.summary[FAIL] == 0 and rep.summary[EXPECTED_FAIL] >= 1


def test_run_suite_unknown():
    with pytest.raises(KeyError):
        ck.run_suite(["no-such-check"])


def test_suite_primes_include_three():
    assert ck.SuiteOptions(prime=5).primes() == [2, 3, 5]


def test_fail_needs_witness():
    with pytest.raises(ValueError):
        CheckReport("x", {}, FAIL)


def test_report_roundtrip():
    rep = SuiteReport([CheckReport("b", {"p": 2}, PASS), CheckReport("a", {}, FAIL, {"exponent": 1})], 0.5)
    again = SuiteReport.from_json(rep.to_json())
    assert again.to_dict() == rep.to_dict()
    assert [c.check_name for c in again.checks] == ["a", "b"]
    assert rep.exit_code == 1
