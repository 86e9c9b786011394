from fractions import Fraction

import pytest

from heunforms.closed_forms import (
    HC_FAMILIES,
    HL_FAMILIES,
    CertificationFailure,
    certify_family,
    certify_hl_member,
    hc_closed_form,
    hl_closed_form,
    hl_members,
    index_form_sum,
    negative_binomial_closed_form,
    normalize_family_id,
)
from heunforms.exact import binomial
from heunforms.heun import confluent_series, heun_series
from heunforms.series import ClosedFormExpr, Polynomial, cf_expand_series

F = Fraction
T = ClosedFormExpr.t_power


def coeffs(ps):
    return [ps[k] for k in range(ps.order + 1)]


def test_hl_examples():
    f = hl_closed_form("F2.2", 1)
    assert f.primary == ClosedFormExpr([(F(1, 2), 0), (F(1, 2), 2)])
    g = hl_closed_form("F2.3", 2, 1)
    assert g.primary == ClosedFormExpr([(F(1, 4), 0), (F(3, 4), 2)])
    x = Polynomial.x()
    assert ClosedFormExpr.from_x_polynomial(1 + 3 * (x * x - x)) == g.primary
    for m in range(5):
        assert hl_closed_form("T4", 0, m).primary == T(-2 * m - 1)


def test_hl_argument_validation():
    with pytest.raises(ValueError):
        hl_closed_form("F2.3", 2)
    with pytest.raises(ValueError):
        hl_closed_form("F2.3", 2, 3)
    with pytest.raises(ValueError):
        hl_closed_form("F2.2", 2, 1)
    with pytest.raises(ValueError):
        hl_closed_form("F2.15", 0, 0)
    with pytest.raises(KeyError):
        hl_closed_form("F9.9", 1)


def test_family_ids():
    assert normalize_family_id("2.2") == "F2.2"
    assert normalize_family_id("t4") == "F2.T4"
    assert normalize_family_id("3.14") == "C3.14"
    assert normalize_family_id("C3.3") == "C3.3"
    with pytest.raises(KeyError, match="available"):
        normalize_family_id("3.99")


def test_hc_examples():
    for p in (F(1), F(2), F(-1, 3)):
        assert hc_closed_form("C3.14", p=p, n=1).polynomial == Polynomial([1, 8 * p])
        assert hc_closed_form("C3.12", p=p, n=1, j=0, lam=0).polynomial == Polynomial([1, 4 * p])
        for j in range(5):
            assert hc_closed_form("C3.11", p=p, n=j, j=j).polynomial == Polynomial([1])


def test_hc_validation():
    with pytest.raises(ValueError):
        hc_closed_form("C3.11", p=1, n=1, j=2)
    with pytest.raises(ValueError):
        hc_closed_form("C3.17", p=1, n=1, lam=-1)
    with pytest.raises(ValueError):
        hc_closed_form("C3.14", p=0, n=1)
    with pytest.raises(ValueError):
        hc_closed_form("C3.7", p=2, n=1)
    with pytest.raises(ValueError):
        hc_closed_form("C3.3", p=1)


def test_kummer_families_match_frobenius():
    for n in range(1, 4):
        form = hc_closed_form("C3.7", n=n)
        assert form.taylor_coefficients(15) == coeffs(confluent_series(form.params, 15))
    form = hc_closed_form("C3.3", p=F(3, 2), alpha=F(-3), gamma=F(3, 2))
    assert form.taylor_coefficients(10) == coeffs(confluent_series(form.params, 10))


def test_certify_examples():
    assert certify_family("F2.2", 10).passed
    assert certify_family("C3.14", 10).passed
    rep = certify_family("F2.21", 10)
    assert len(rep) == sum(n + 1 for n in range(11))
    assert rep.passed


def test_certification_catches_a_wrong_form(monkeypatch):
    fam = HL_FAMILIES["F2.2"]

    def broken(n, aux):
        params, primary, alt = fam.build(n, aux)
        return params, primary + T(2 * n + 2, F(1, 10**6)), None

    from dataclasses import replace
    monkeypatch.setitem(HL_FAMILIES, "F2.2", replace(fam, build=broken))
    res = certify_hl_member("F2.2", 2, None)
    assert not res.passed
    assert res.leading_residual is not None
    rep = certify_family("F2.2", 3)
    assert len(rep.failures) == 4


def test_certification_catches_mismatched_alternate(monkeypatch):
    fam = HL_FAMILIES["F2.3"]

    def broken(n, aux):
        params, primary, alt = fam.build(n, aux)
        return params, primary, alt + T(0, 1)

    from dataclasses import replace
    monkeypatch.setitem(HL_FAMILIES, "F2.3", replace(fam, build=broken))
    assert certify_hl_member("F2.3", 3, 1).forms_equal is False
    with pytest.raises(CertificationFailure):
        hl_closed_form("F2.3", 3, 1)


def test_clearing_exponents_give_even_polynomials():
    for fid, fam in HL_FAMILIES.items():
        if fam.clearing_exponent is None:
            continue
        for n, aux in hl_members(fid, 8, 4):
            e = hl_closed_form(fid, n, aux).primary * T(fam.clearing_exponent(n, aux or 0))
            assert (e.min_exponent or 0) >= 0
            assert all(k % 2 == 0 for _, k in e.terms)


def test_series_agreement_f22_f23():
    for n in range(6):
        for m in range(n + 1):
            f = hl_closed_form("F2.3", n, m)
            assert coeffs(heun_series(f.params, 30)) == coeffs(cf_expand_series(f.primary, 30))


def test_index_sum_examples():
    assert index_form_sum("1.3", 1, F(1, 2)).value == F(1, 2)
    for n in range(6):
        assert index_form_sum("1.3", n, 0).value == 1
    s = index_form_sum("1.4", 1, 1, 1e-15)
    brute = sum(F(1, 4 ** (k + 1)) for k in range(200))
    assert abs(s.value - brute) <= F(1, 10**15)
    assert abs(s.value - F(1, 3)) <= s.tail_bound
    with pytest.raises(ValueError):
        index_form_sum("1.4", 1, 0)
    with pytest.raises(ValueError):
        index_form_sum("1.9", 1, 1)


def test_negative_binomial_brute_force():
    for n in range(1, 5):
        for x in (F(1, 10), F(1, 2), F(1)):
            brute = sum(
                (binomial(n + k - 1, k) * x**k / (1 + x) ** (n + k)) ** 2 for k in range(400)
            )
            assert abs(float(negative_binomial_closed_form(n, x) - brute)) < 1e-14


def test_every_family_certifies_small():
    for fid in list(HL_FAMILIES) + list(HC_FAMILIES):
        assert certify_family(fid, 4).passed, fid
