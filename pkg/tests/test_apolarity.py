from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import forms, pairing_oracle, to_sympy, X, Y
from hankel_index import _linalg as la
from hankel_index.apolarity import (
    apolar_generators,
    catalecticant_kernel,
    form_from_apolar,
    generalized_decomposition,
    is_apolar_member,
    kernel_dimension,
    nodes_of,
)
from hankel_index.corepoly import BinaryForm, Gaussian, form, form_gcd
from hankel_index.errors import IrrationalNodes, NotApolar, NotCoprime, ZeroForm


def _kernel_oracle(F: BinaryForm, k: int):
    """Null space of the pairing map on degree-k forms, built by differentiation in sympy."""
    cols = []
    for j in range(k + 1):
        cols.append([sympy.Rational(c.numerator, c.denominator) for c in pairing_oracle(BinaryForm.monomial(k - j, j), F).coeffs])
    m = sympy.Matrix(cols).T
    return [[Fraction(int(v.p), int(v.q)) for v in vec] for vec in m.nullspace()]


# -- catalecticants ---------------------------------------------------------------


def test_kernel_examples():
    assert catalecticant_kernel(form("x^3*y^3"), 4) == [form("x^4"), form("y^4")]
    assert catalecticant_kernel(form("x^5"), 1) == [form("y")]
    assert catalecticant_kernel(form("x^4+y^4"), 2) == [form("x*y")]


@settings(max_examples=60, deadline=None)
@given(forms(2, 8), st.integers(0, 8))
def test_kernel_matches_oracle(F, k):
    assume(k <= F.degree)
    ours = [list(f.coeffs) for f in catalecticant_kernel(F, k)]
    ref = _kernel_oracle(F, k)
    assert len(ours) == len(ref) == kernel_dimension(F, k)
    assert la.same_span(ours, ref, k + 1)


# -- generators ------------------------------------------------------------------------


@pytest.mark.parametrize("d", range(2, 11))
def test_monomial_generators(d):
    for i in range(0, d // 2 + 1):
        A = apolar_generators(BinaryForm.monomial(d - i, i))
        assert A.type == (i + 1, d - i + 1)
        gens = {BinaryForm.monomial(0, i + 1), BinaryForm.monomial(d - i + 1, 0)}
        assert {A.f_perp.normalized(), A.f_circ.normalized()} == gens
        if i + 1 < d - i + 1:
            assert A.f_perp.proportional_to(BinaryForm.monomial(0, i + 1))


def test_generator_examples():
    A = apolar_generators(form("2*x+3*y"))
    assert A.type == (1, 2) and A.f_perp.proportional_to(form("3*x-2*y"))
    A = apolar_generators(form("x^4+y^4"))
    assert A.type == (2, 4) and A.f_perp.proportional_to(form("x*y"))


@settings(max_examples=60, deadline=None)
@given(forms(1, 9))
def test_type_sums_to_degree_plus_two_and_generators_coprime(F):
    A = apolar_generators(F)
    assert A.d1 + A.d2 == F.degree + 2
    assert form_gcd(A.f_perp, A.f_circ).degree == 0
    assert is_apolar_member(A.f_perp, F)
    assert A.f_circ.degree > F.degree or is_apolar_member(A.f_circ, F)
    assert A.d1 <= F.degree // 2 + 1


@settings(max_examples=40, deadline=None)
@given(forms(2, 8), st.integers(0, 10))
def test_layers_match_catalecticant_kernels(F, r):
    A = apolar_generators(F)
    if r <= F.degree:
        assert la.same_span([list(f.coeffs) for f in A.layer(r)],
                            [list(f.coeffs) for f in catalecticant_kernel(F, r)], r + 1)
    assert len(A.layer(r)) == A.layer_dimension(r)


def test_zero_form_rejected():
    with pytest.raises(ZeroForm):
        apolar_generators(BinaryForm.zero(4))


# -- membership ------------------------------------------------------------------


def test_membership_examples():
    F = form("x^3*y^3")
    assert is_apolar_member(form("x^4"), F)
    assert is_apolar_member(form("y^4"), F)
    assert not is_apolar_member(form("x^2*y^2"), F)


@settings(max_examples=60, deadline=None)
@given(forms(1, 5), forms(5, 8))
def test_membership_matches_pairing(G, F):
    assert is_apolar_member(G, F) == pairing_oracle(G, F).is_zero()


# -- reconstruction from generators --------------------------------------------------------


def test_form_from_apolar_examples():
    assert form_from_apolar(form("x^4"), form("y^4")).proportional_to(form("x^3*y^3"))
    for d in (2, 5):
        assert form_from_apolar(form("y"), BinaryForm.monomial(d + 1, 0)).proportional_to(BinaryForm.monomial(d, 0))
    assert form_from_apolar(form("x*y"), form("x^4-y^4")).proportional_to(form("x^4+y^4"))


def test_form_from_apolar_needs_coprime():
    with pytest.raises(NotCoprime):
        form_from_apolar(form("x*y"), form("x^3"))


@settings(max_examples=40, deadline=None)
@given(forms(1, 9))
def test_generators_then_socle_roundtrip(F):
    A = apolar_generators(F)
    assert form_from_apolar(A.f_perp, A.f_circ).proportional_to(F)


# -- decompositions -------------------------------------------------------------------------


def test_decomposition_of_the_sextic_monomial():
    F = form("80*x^3*y^3")
    dec = generalized_decomposition(F, form("x^4-y^4"))
    by_point = {tuple(n.root): c for n, c in zip(dec.nodes, dec.coefficients)}
    # 80 x^3 y^3 = (x+y)^6 - (x-y)^6 + 2 Re(i (x + i y)^6)
    assert by_point[(1, 1)] == (1,)
    assert by_point[(1, -1)] == (-1,)
    assert by_point[(1, Gaussian(0, 1))] == (Gaussian(0, 1),)
    re_part = (form("x+y") ** 6) - (form("x-y") ** 6)
    xr, yr = sympy.symbols("x y", real=True)
    six = sympy.re(sympy.expand((xr + sympy.I * yr) ** 6 * sympy.I))
    total = to_sympy(re_part).subs({X: xr, Y: yr}, simultaneous=True) + 2 * six
    assert sympy.expand(total - 80 * xr**3 * yr**3) == 0


def test_decomposition_simple_examples():
    # y*(x+y) has roots [1:0] and [1:-1]; x^5 is the pure power at the first
    dec = generalized_decomposition(form("x^5"), form("x*y+y^2"))
    weights = {n.root: c for n, c in zip(dec.nodes, dec.coefficients)}
    assert weights[(Fraction(1), Fraction(0))] == (1,)
    assert weights[(Fraction(1), Fraction(-1))] == (0,)
    F = form("x+y") ** 4 + form("x-y") ** 4
    dec = generalized_decomposition(F, form("x^2-y^2"))
    assert sorted(c for (c,) in dec.coefficients) == [1, 1]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(1, 3)), min_size=2, max_size=5, unique_by=lambda t: Fraction(t[0], t[1])),
       st.integers(0, 3), st.lists(st.integers(-5, 5), min_size=8, max_size=8))
def test_decomposition_reconstructs(roots, extra, weights):
    g = BinaryForm((1,))
    for a, b in roots:
        g = g * BinaryForm((-a, b))  # vanishes at t = a/b
    d = g.degree + extra
    # a center with g in its apolar ideal: combination of the dual powers
    F = BinaryForm.zero(d)
    for (a, b), w in zip(roots, weights):
        F = F + BinaryForm((b, a)) ** d * w
    assume(not F.is_zero())
    dec = generalized_decomposition(F, g)
    assert dec.reconstruct() == F


def test_decomposition_with_double_root():
    g = form("x*y") * form("x-y") ** 2
    F = form_from_apolar(g, form("x^3+2*y^3"))
    dec = generalized_decomposition(F, g)
    assert dec.reconstruct() == F
    assert [n.multiplicity for n in dec.nodes].count(2) == 1


def test_decomposition_errors():
    with pytest.raises(NotApolar):
        generalized_decomposition(form("x^3*y^3"), form("x^2*y^2"))
    with pytest.raises(IrrationalNodes):
        nodes_of(form("x^2-2*y^2"))
    with pytest.raises(IrrationalNodes):
        nodes_of(form("x^2+2*y^2"))
    # a Gaussian rational pair is fine
    (n,) = nodes_of(form("x^2+4*y^2"))
    assert n.complex
