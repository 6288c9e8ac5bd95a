from fractions import Fraction

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from conftest import forms, forms_of_degree
from hankel_index.apolarity import apolar_generators, form_from_apolar, is_apolar_member
from hankel_index.corepoly import BinaryForm, RootClass, form, root_signature
from hankel_index.errors import DegreeMismatch
from hankel_index.ranks import (
    RootCondition,
    almost_real_upper_bound,
    almost_real_witness_upper,
    arrank,
    cbrank,
    crank,
    exists_almost_real,
    rank_report,
    real_rooted_member,
    rrank,
    verify_certificate,
    verify_witness,
)


def mono(d, i):
    return BinaryForm.monomial(d - i, i)


# -- border and complex rank ------------------------------------------------------------


@pytest.mark.parametrize("d", range(2, 11))
def test_monomial_border_and_complex_rank(d):
    for i in range(0, d // 2 + 1):
        assert cbrank(mono(d, i)) == i + 1
        if i >= 1:
            assert crank(mono(d, i)) == d - i + 1


def test_small_rank_examples():
    l6 = form("2*x-y") ** 6
    assert cbrank(l6) == crank(l6) == 1
    assert cbrank(form("x^4+y^4")) == crank(form("x^4+y^4")) == 2


# -- existence --------------------------------------------------------------------------


def test_exists_on_the_quartic_pencil():
    ans = exists_almost_real([form("x^4"), form("y^4")])
    assert ans.verdict == "Yes"
    assert root_signature(ans.witness).classification is RootClass.ONE_COMPLEX_PAIR
    assert ans.witness.coeffs[1:4] == (0, 0, 0)


def test_common_factor_refutes():
    W = [form("x*y^4"), form("y^5")]
    ans = exists_almost_real(W)
    assert ans.verdict == "No"
    assert ans.certificate["kind"] == "common_factor"
    assert verify_certificate(ans.certificate, W, RootCondition.ALMOST_REAL)


@pytest.mark.parametrize("d", range(8, 13))
def test_descartes_refutes_monomial_layers(d):
    for i in range(3, d // 2 + 1):
        A = apolar_generators(mono(d, i))
        W = A.layer(d - 3)
        ans = exists_almost_real(W)
        assert ans.verdict == "No"
        # with i = 3 the layer is y^4 times linear forms
        assert ans.certificate["kind"] == ("descartes" if i >= 4 else "common_factor")
        assert verify_certificate(ans.certificate, W, RootCondition.ALMOST_REAL)


def test_empty_and_mixed_spaces():
    assert exists_almost_real([]).verdict == "No"
    with pytest.raises(DegreeMismatch):
        exists_almost_real([form("x^2"), form("y^3")])
    one = exists_almost_real([form("x^3-x*y^2")], RootCondition.ALL_SIMPLE_REAL)
    assert one.verdict == "Yes"
    assert exists_almost_real([form("x^3+y^3")], RootCondition.ALL_SIMPLE_REAL).certificate["kind"] == "single_form"


def test_tampered_certificate_fails():
    W = [form("x*y^4"), form("y^5")]
    cert = exists_almost_real(W).certificate
    assert not verify_certificate(cert, [form("x^5"), form("y^5"), form("x^3*y^2")], RootCondition.ALMOST_REAL)


def _dense_pencil_hits(g, h, cond, n=400):
    """Members g + t h at many rational t plus h itself, filtered by the condition."""
    ts = [Fraction(a, b) for b in (1, 2, 3, 5, 7) for a in range(-40, 41)]
    return [m for m in [g + h.scale(t) for t in ts[:n]] + [h] if not m.is_zero() and cond.holds(root_signature(m))]


@settings(max_examples=50, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(forms_of_degree(4, -4, 4), forms_of_degree(4, -4, 4),
       st.sampled_from(list(RootCondition)))
def test_pencil_verdicts_agree_with_dense_sampling(g, h, cond):
    assume(not g.proportional_to(h))
    ans = exists_almost_real([g, h], cond)
    if ans.verdict == "Yes":
        assert cond.holds(root_signature(ans.witness))
    elif ans.verdict == "No":
        assert not _dense_pencil_hits(g, h, cond)
        assert verify_certificate(ans.certificate, [g, h], cond)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=5, max_size=5, unique=True), forms_of_degree(5, -4, 4),
       st.fractions(1, 50, max_denominator=97), st.fractions(-3, 3, max_denominator=89))
def test_pencil_finds_a_hidden_real_rooted_member(roots, h, a, t):
    """g is real rooted; the pencil is handed over as (g - t*h', h') with unrelated denominators."""
    assume(t != 0)
    g = BinaryForm((1,))
    for r in roots:
        g = g * BinaryForm.linear(r, 1)
    hs = h.scale(a)
    assume(not hs.is_zero() and not g.proportional_to(hs))
    ans = exists_almost_real([g - hs.scale(t), hs], RootCondition.ALL_SIMPLE_REAL)
    assert ans.verdict == "Yes"


def test_pencil_with_rational_basis():
    # g is a product of six rational lines; the layer basis has unrelated denominators
    g = BinaryForm((1,))
    for a in (4, -5, 6, -2, -6, -1):
        g = g * BinaryForm.linear(a, 1)
    F = form_from_apolar(g, form("-4*x^6+x^5*y-3*x^4*y^2+5*x^3*y^3-2*x^2*y^4-2*x*y^5-4*y^6"))
    A = apolar_generators(F)
    assert A.type == (6, 6)
    assert exists_almost_real(A.layer(6)).verdict == "Yes"
    assert arrank(F).lo == arrank(F).hi == 6


@settings(max_examples=25, deadline=None)
@given(st.lists(forms_of_degree(5, -4, 4), min_size=3, max_size=4))
def test_larger_spaces_never_give_wrong_yes(W):
    try:
        ans = exists_almost_real(W, budget=300)
    except DegreeMismatch:
        return
    if ans.verdict == "Yes":
        assert RootCondition.ALMOST_REAL.holds(root_signature(ans.witness))
    if ans.verdict == "No":
        assert verify_certificate(ans.certificate, W, RootCondition.ALMOST_REAL)


# -- almost real rank ----------------------------------------------------------------------


def test_arrank_of_the_sextic_monomial():
    iv = arrank(form("x^3*y^3"))
    assert (iv.lo, iv.hi) == (4, 4)
    assert verify_witness("arrank", iv.witness, form("x^3*y^3"))


@pytest.mark.parametrize("d", range(4, 11))
def test_arrank_monomials(d):
    for i in range(0, d // 2 + 1):
        iv = arrank(mono(d, i))
        expected = {0: 1, 1: 2, 2: d - 1}.get(i, d - 2)
        assert iv.exact and iv.lo == expected, (d, i, iv)


def test_witness_upper_examples():
    g, r = almost_real_witness_upper(form("x^3+x*y^2-2*y^3"))
    assert r <= 2 and verify_witness("arrank", g, form("x^3+x*y^2-2*y^3"))
    F = form("x^5+y^5")  # crank = d, apolar type (2, d)
    g, r = almost_real_witness_upper(F)
    assert r == 2 and g.proportional_to(apolar_generators(F).f_perp)
    g, r = almost_real_witness_upper(form("x^3*y^3"))
    assert r <= 5 and verify_witness("arrank", g, form("x^3*y^3"))


@settings(max_examples=40, deadline=None)
@given(forms(3, 9))
def test_witness_upper_is_verified_and_capped(F):
    g, r = almost_real_witness_upper(F)
    assert r <= max(F.degree - 1, 1)
    assert verify_witness("arrank", g, F)


def test_upper_bound_rule():
    assert almost_real_upper_bound(form("x^3*y^3")) == 4  # no cube in the ideal
    assert almost_real_upper_bound(mono(8, 2)) == 7  # x^6 y^2 has y^3 in its ideal


# -- real ranks ----------------------------------------------------------------------------


@pytest.mark.parametrize("d", range(3, 9))
def test_real_rank_of_monomials(d):
    for i in range(1, d // 2 + 1):
        iv = rrank(mono(d, i))
        assert (iv.lo, iv.hi) == (d, d)
        assert verify_witness("rrank", iv.witness, mono(d, i))


def test_real_rank_examples():
    assert (rrank(form("3*x+y") ** 5).lo, rrank(form("3*x+y") ** 5).hi) == (1, 1)
    iv = rrank(form("x^4+y^4"))
    assert (iv.lo, iv.hi) == (2, 2) and iv.witness.proportional_to(form("x*y"))


@settings(max_examples=30, deadline=None)
@given(forms(2, 8))
def test_real_rooted_member_construction(F):
    A = apolar_generators(F)
    g = real_rooted_member(A)
    assert g.degree <= F.degree + 1
    assert g.degree > F.degree or is_apolar_member(g, F)
    assert RootCondition.ALL_SIMPLE_REAL.holds(root_signature(g))


# -- the full ladder --------------------------------------------------------------------------


def _check_ladder(F, report):
    d = F.degree
    assert report.cbrank <= report.crank
    assert report.cbrank <= report.arrank.lo <= report.arrank.hi
    assert report.arrank.hi <= report.rrank.hi
    assert report.rbrank.lo <= report.rbrank.hi <= report.rrank.hi
    assert report.arrank.hi <= max(d - 1, report.cbrank)
    for kind, (g, _) in report.witnesses.items():
        assert verify_witness(kind, g, F), kind
    for (kind, r), cert in report.nonexistence_certs.items():
        cond = {"arrank": RootCondition.ALMOST_REAL, "rrank": RootCondition.ALL_SIMPLE_REAL,
                "rbrank": RootCondition.ALL_REAL_WITH_MULTIPLICITY}[kind]
        assert verify_certificate(cert, apolar_generators(F).layer(r), cond)


def test_ladder_of_x6():
    rep = rank_report(form("x^6"))
    assert rep.cbrank == rep.crank == rep.arrank.lo == rep.rrank.lo == rep.rbrank.lo == 1
    assert rep.arrank.hi == rep.rrank.hi == rep.rbrank.hi == 1


@settings(max_examples=25, deadline=None)
@given(forms(3, 8))
def test_ladder_invariants_on_random_forms(F):
    _check_ladder(F, rank_report(F, budget=2000, real_budget=256))


def test_determinism():
    F = form("3*x^7-2*x^5*y^2+x^4*y^3+5*x*y^6-y^7")
    a = rank_report(F, seed=11).to_json()
    b = rank_report(F, seed=11).to_json()
    assert a == b
