"""Exact analysis of a pencil of binary forms g + t*h.

The root structure of g + t*h can only change where two roots collide,
i.e. at real roots of a critical polynomial in t.  Between consecutive
critical values one rational sample decides the whole open interval.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from . import _upoly as up
from ._linalg import det_bareiss
from .corepoly import BinaryForm, RootSignature, form_gcd, root_signature


def _int_coeffs(f: BinaryForm, *more: BinaryForm) -> list[int] | tuple[list[int], ...]:
    """Integer multiples of the given forms by one common denominator, keeping all coefficients.

    A shared factor matters for pencils: scaling g and h separately would
    rescale the parameter t of g + t*h.
    """
    den = 1
    for c in (c for form in (f, *more) for c in form.coeffs):
        den = den * c.denominator // _gcd(den, c.denominator)
    out = tuple([int(c * den) for c in form.coeffs] for form in (f, *more))
    return out if more else out[0]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def sylvester_resultant(a: list[int], b: list[int]) -> int:
    """Resultant of two binary forms given by full coefficient lists."""
    m, n = len(a) - 1, len(b) - 1
    if m == 0 and n == 0:
        return 1
    if m == 0:
        return a[0] ** n
    if n == 0:
        return b[0] ** m
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(a) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(b) + [0] * (size - n - 1 - i))
    return det_bareiss(rows)


def form_discriminant(coeffs: list[int]) -> int:
    """Res(f_x, f_y): zero iff the form has a repeated projective root."""
    n = len(coeffs) - 1
    if n <= 1:
        return 1
    fx = [(n - i) * coeffs[i] for i in range(n)]
    fy = [i * coeffs[i] for i in range(1, n + 1)]
    return sylvester_resultant(fx, fy)


def interpolate(values: list[int]) -> list[int]:
    """Polynomial through (k, values[k]) for k = 0..n, as a primitive integer list."""
    n = len(values)
    coef = [Fraction(v) for v in values]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / j
    # Newton form to monomial form
    poly = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (t - i) + coef[i]
        new = [Fraction(0)] * n
        for k in range(n - 1):
            new[k + 1] += poly[k]
        for k in range(n):
            new[k] -= i * poly[k]
        new[0] += coef[i]
        poly = new
    return up.from_fractions(poly)


def simplest_between(a: Fraction, b: Fraction) -> Fraction:
    """The rational with the smallest denominator strictly inside (a, b)."""
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        raise ValueError("empty interval")
    if a < 0 < b:
        return Fraction(0)
    if b <= 0:
        return -simplest_between(-b, -a)
    fl = floor(a)
    if fl + 1 < b:
        return Fraction(fl + 1)
    # fl <= a < b <= fl + 1, write the answer as fl + 1/y
    if a == fl:
        y = Fraction(floor(1 / (b - fl)) + 1)
    else:
        y = simplest_between(1 / (b - fl), 1 / (a - fl))
    return fl + 1 / y


@dataclass
class PencilSweep:
    g: BinaryForm
    h: BinaryForm
    common: BinaryForm
    critical: list  # integer coefficients of the critical polynomial in t
    samples: list = field(default_factory=list)  # (t or None for infinity, member, signature)
    rational_critical: list = field(default_factory=list)  # (t, member, signature)
    irrational_critical: int = 0

    def to_json(self) -> dict:
        return {
            "kind": "pencil_sweep",
            "g": str(self.g),
            "h": str(self.h),
            "common_factor": str(self.common),
            "critical_polynomial_t": [str(c) for c in self.critical],
            "interval_samples": [("inf" if t is None else str(t)) for t, _, _ in self.samples],
            "rational_critical_values": [str(t) for t, _, _ in self.rational_critical],
            "irrational_critical_values": self.irrational_critical,
        }


def critical_polynomial(g: BinaryForm, h: BinaryForm) -> tuple[list[int], BinaryForm]:
    """Polynomial in t vanishing where g + t*h gains a repeated root; also the common factor."""
    c = form_gcd(g, h)
    gq = g.exact_divide(c)
    hq = h.exact_divide(c)
    n = gq.degree
    gi, hi_ = _int_coeffs(gq, hq)
    csf = _squarefree_form(c)
    ci = _int_coeffs(csf) if csf.degree > 0 else None
    npts = 2 * max(n - 1, 0) + (csf.degree if ci else 0) + 1
    values = []
    for t in range(npts):
        m = [a + t * b for a, b in zip(gi, hi_)]
        v = form_discriminant(m)
        if ci is not None:
            v *= sylvester_resultant(ci, m)
        values.append(v)
    return up.trim(interpolate(values)), c


def _squarefree_form(c: BinaryForm) -> BinaryForm:
    if c.degree == 0:
        return c
    inf = c.infinity_multiplicity
    parts = up.squarefree_decomposition(c.to_upoly())
    acc = [1]
    for s, _ in parts:
        acc = up.mul(acc, s)
    coeffs = list(acc) + ([0] if inf else [])
    return BinaryForm(tuple(coeffs))


def sweep(g: BinaryForm, h: BinaryForm, need_critical: bool = False) -> PencilSweep:
    crit, c = critical_polynomial(g, h)
    out = PencilSweep(g, h, c, crit)
    points: list[Fraction] = []
    if crit and len(crit) > 1:
        parts = up.squarefree_decomposition(crit)
        sf = [1]
        for s, _ in parts:
            sf = up.mul(sf, s)
        bounds = up.isolate_real_roots(sf)
        # samples strictly between consecutive root intervals
        if not bounds:
            points.append(Fraction(0))
        else:
            points.append(simplest_between(bounds[0][0] - 2, bounds[0][0]))
            for (lo1, hi1), (lo2, hi2) in zip(bounds, bounds[1:]):
                a = hi1
                b = lo2
                if a == b:
                    # shared endpoint that is not a root: shrink both sides
                    lo1, hi1 = up.refine(sf, lo1, hi1, (hi1 - lo1) / 4)
                    lo2, hi2 = up.refine(sf, lo2, hi2, (hi2 - lo2) / 4)
                    a, b = hi1, lo2
                    if a == b:
                        points.append(a)
                        continue
                points.append(simplest_between(a, b))
            points.append(simplest_between(bounds[-1][1], bounds[-1][1] + 2))
        if need_critical:
            _critical_members(out, crit, g, h)
    else:
        points.append(Fraction(0))
    for t in points:
        member = g + h.scale(t)
        out.samples.append((t, member, root_signature(member)))
    out.samples.append((None, h, root_signature(h)))
    return out


def _critical_members(out: PencilSweep, crit: list[int], g: BinaryForm, h: BinaryForm) -> None:
    import sympy

    t = sympy.Symbol("t")
    _, facs = sympy.Poly(list(reversed(crit)), t, domain="ZZ").factor_list()
    for fac, _ in facs:
        coeffs = [int(v) for v in reversed(fac.all_coeffs())]
        if len(coeffs) == 2:
            tv = Fraction(-coeffs[0], coeffs[1])
            member = g + h.scale(tv)
            out.rational_critical.append((tv, member, root_signature(member)))
        else:
            out.irrational_critical += up.count_real_roots(coeffs)


def signature_at(g: BinaryForm, h: BinaryForm, t) -> RootSignature:
    return root_signature(h if t is None else g + h.scale(t))
