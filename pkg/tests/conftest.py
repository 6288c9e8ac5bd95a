"""Shared strategies and independent sympy oracles."""

from __future__ import annotations

from fractions import Fraction

import sympy
from hypothesis import strategies as st

from hankel_index.corepoly import BinaryForm

X, Y = sympy.symbols("x y")


def to_sympy(f: BinaryForm):
    d = f.degree
    return sum(sympy.Rational(c.numerator, c.denominator) * X ** (d - i) * Y**i for i, c in enumerate(f.coeffs))


def from_sympy(expr, d: int) -> BinaryForm:
    p = sympy.Poly(sympy.expand(expr), X, Y)
    coeffs = []
    for i in range(d + 1):
        c = sympy.Rational(p.coeff_monomial(X ** (d - i) * Y**i))
        coeffs.append(Fraction(int(c.p), int(c.q)))
    return BinaryForm(tuple(coeffs))


def pairing_oracle(f: BinaryForm, F: BinaryForm) -> BinaryForm:
    """f(d/dx, d/dy) applied to F, by symbolic differentiation."""
    expr = to_sympy(F)
    n = f.degree
    out = 0
    for i, c in enumerate(f.coeffs):
        if c:
            term = expr
            if n - i:
                term = sympy.diff(term, X, n - i)
            if i:
                term = sympy.diff(term, Y, i)
            out += sympy.Rational(c.numerator, c.denominator) * term
    return from_sympy(out, F.degree - n)


def real_root_data(f: BinaryForm):
    """(simple real, distinct real, real with multiplicity) over the projective line, via sympy."""
    inf = f.infinity_multiplicity
    t = sympy.Symbol("t")
    p = sympy.Poly(sum(sympy.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(f.coeffs)), t)
    simple = distinct = withmult = 0
    if inf:
        distinct += 1
        withmult += inf
        simple += inf == 1
    if p.degree() > 0:
        _, parts = p.sqf_list()
        for fac, k in parts:
            n = fac.count_roots()
            distinct += n
            withmult += k * n
            if k == 1:
                simple += n
    return simple, distinct, withmult


def int_coeff_lists(min_deg=1, max_deg=8, lo=-9, hi=9):
    return st.integers(min_deg, max_deg).flatmap(
        lambda d: st.lists(st.integers(lo, hi), min_size=d + 1, max_size=d + 1).filter(any)
    )


def forms(min_deg=1, max_deg=8, lo=-9, hi=9):
    return int_coeff_lists(min_deg, max_deg, lo, hi).map(lambda c: BinaryForm(tuple(c)))


def forms_of_degree(d: int, lo=-9, hi=9):
    return st.lists(st.integers(lo, hi), min_size=d + 1, max_size=d + 1).filter(any).map(
        lambda c: BinaryForm(tuple(c))
    )


def products_of_lines(n_min=1, n_max=5, lo=-4, hi=4):
    """Forms built from explicit linear factors, so repeated and real roots are common."""
    line = st.tuples(st.integers(lo, hi), st.integers(lo, hi)).filter(lambda pq: pq != (0, 0))
    quad = st.tuples(st.integers(1, 4), st.integers(-3, 3), st.integers(1, 4))

    def build(parts):
        lines, quads = parts
        f = BinaryForm((1,))
        for p, q in lines:
            f = f * BinaryForm((p, q))
        for a, b, c in quads:
            f = f * BinaryForm((a, b, c))
        return f

    return st.tuples(st.lists(line, min_size=n_min, max_size=n_max), st.lists(quad, max_size=2)).map(build)
