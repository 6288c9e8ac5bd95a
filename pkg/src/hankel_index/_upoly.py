"""Univariate polynomials with integer coefficients.

A polynomial is a list of ints in ascending order, ``p[i]`` being the
coefficient of t^i, with no trailing zeros ([] is the zero polynomial).
Only what the real-root machinery needs lives here: primitive gcd,
Yun's squarefree decomposition, Sturm sequences and bisection.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Poly = list


def trim(p: Iterable[int]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Sequence[int]) -> int:
    return len(p) - 1


def from_fractions(coeffs: Sequence[Fraction]) -> Poly:
    """Scale rational coefficients to a primitive integer polynomial (sign kept)."""
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    return primitive(trim(int(c * den) for c in coeffs))


def content(p: Sequence[int]) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def primitive(p: Poly) -> Poly:
    g = content(p)
    return [c // g for c in p] if g > 1 else list(p)


def primitive_positive(p: Poly) -> Poly:
    p = primitive(p)
    if p and p[-1] < 0:
        p = [-c for c in p]
    return p


def derivative(p: Sequence[int]) -> Poly:
    return [i * p[i] for i in range(1, len(p))]


def mul(a: Sequence[int], b: Sequence[int]) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def prem(a: Sequence[int], b: Sequence[int]) -> Poly:
    """Pseudo-remainder, scaled by |lc(b)|^k so that its sign matches a true remainder."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    scale_sign = 1 if lb > 0 else -1
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        lr = r[-1]
        # r <- |lb| r - sign(lb) lr t^shift b
        r = [abs(lb) * c for c in r]
        f = scale_sign * lr
        for j, c in enumerate(b):
            r[shift + j] -= f * c
        r = trim(r)
    return r


def div_exact_q(a: Sequence, b: Sequence) -> list:
    """Quotient of a by b over the rationals, assumed exact (no rescaling)."""
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = [Fraction(c) for c in a]
    lb = b[-1]
    for i in range(len(q) - 1, -1, -1):
        coef = r[i + len(b) - 1] / lb
        q[i] = coef
        if coef:
            for j, c in enumerate(b):
                r[i + j] -= coef * c
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return q


def exact_div(a: Sequence[int], b: Sequence[int]) -> Poly:
    """Primitive integer quotient of an exact division."""
    return from_fractions(div_exact_q(a, b))


def poly_gcd(a: Sequence[int], b: Sequence[int]) -> Poly:
    """Primitive gcd with positive leading coefficient."""
    a, b = primitive(trim(a)), primitive(trim(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, primitive(prem(a, b))
    return primitive_positive(a)


def squarefree_decomposition(p: Sequence[int]) -> list[tuple[Poly, int]]:
    """Yun's algorithm: [(s_k, k)] with p = c * prod s_k^k, each s_k squarefree, coprime."""
    p = primitive(trim(p))
    if len(p) <= 1:
        return []
    out: list[tuple[Poly, int]] = []
    dp = derivative(p)
    a = poly_gcd(p, dp)
    b = div_exact_q(p, a)
    c = div_exact_q(dp, a)
    k = 1
    while len(b) > 1:
        diff = _qtrim(x - y for x, y in zip(_pad(c, len(b) - 1), _qderivative(b)))
        if not diff:
            out.append((from_fractions(b), k))
            break
        s = poly_gcd(from_fractions(b), from_fractions(diff))
        if len(s) > 1:
            out.append((s, k))
        b = div_exact_q(b, s)
        c = div_exact_q(diff, s)
        k += 1
    return [(primitive_positive(s), k) for s, k in out]


def _qderivative(p: Sequence) -> list:
    return [i * p[i] for i in range(1, len(p))]


def _qtrim(p: Iterable) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _pad(p: Sequence, n: int) -> list:
    return list(p) + [0] * (n - len(p))


def evaluate_sign(p: Sequence[int], x: Fraction) -> int:
    """Sign of p(x) for rational x, using integer Horner on num/den."""
    n, d = x.numerator, x.denominator
    acc = 0
    power = 1
    # sum p_i n^i d^(deg-i), same sign as p(x) since d > 0
    m = len(p) - 1
    dpow = [1] * (m + 1)
    for i in range(1, m + 1):
        dpow[i] = dpow[i - 1] * d
    for i, c in enumerate(p):
        if c:
            acc += c * power * dpow[m - i]
        power *= n
    return (acc > 0) - (acc < 0)


def sturm_sequence(p: Sequence[int]) -> list[Poly]:
    seq = [primitive(trim(p))]
    if len(seq[0]) <= 1:
        return seq
    seq.append(primitive(derivative(seq[0])))
    while len(seq[-1]) > 1:
        r = prem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(primitive([-c for c in r]))
    return seq


def _variations(signs: Iterable[int]) -> int:
    last = 0
    v = 0
    for s in signs:
        if s:
            s = 1 if s > 0 else -1
            if last and s != last:
                v += 1
            last = s
    return v


def variations_at(seq: Sequence[Poly], x: Fraction | None, side: int = 0) -> int:
    """Sign variations of a Sturm sequence at x (x None means -inf if side<0, +inf if side>0)."""
    if x is None:
        if side > 0:
            return _variations(q[-1] if q else 0 for q in seq)
        return _variations((q[-1] * (-1) ** (len(q) - 1)) if q else 0 for q in seq)
    return _variations(evaluate_sign(q, x) for q in seq)


def count_real_roots(p: Sequence[int], lo: Fraction | None = None, hi: Fraction | None = None) -> int:
    """Distinct real roots of p in (lo, hi]; None endpoints are infinite."""
    p = trim(p)
    if len(p) <= 1:
        return 0
    seq = sturm_sequence(p)
    return variations_at(seq, lo, -1) - variations_at(seq, hi, 1)


def root_bound(p: Sequence[int]) -> Fraction:
    """Cauchy bound: every root has absolute value < 1 + max|p_i / p_n|."""
    lead = abs(p[-1])
    m = max((abs(c) for c in p[:-1]), default=0)
    return Fraction(lead + m, lead) + 1


def isolate_real_roots(p: Sequence[int]) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (lo, hi] each holding exactly one distinct real root, sorted.

    Rational roots that land on a bisection point come back as degenerate
    intervals (r, r).
    """
    p = trim(p)
    if len(p) <= 1:
        return []
    seq = sturm_sequence(p)
    b = root_bound(p)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-b, b, variations_at(seq, -b) - variations_at(seq, b))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if evaluate_sign(p, mid) == 0:
            out.append((mid, mid))
            eps = (hi - lo) / 1024
            while evaluate_sign(p, mid - eps) == 0 or evaluate_sign(p, mid + eps) == 0 or \
                    count_in(seq, mid - eps, mid + eps) != 1:
                eps /= 2
            stack.append((lo, mid - eps, count_in(seq, lo, mid - eps)))
            stack.append((mid + eps, hi, count_in(seq, mid + eps, hi)))
            continue
        stack.append((lo, mid, count_in(seq, lo, mid)))
        stack.append((mid, hi, count_in(seq, mid, hi)))
    out.sort()
    return out


def count_in(seq: Sequence[Poly], lo: Fraction, hi: Fraction) -> int:
    return variations_at(seq, lo) - variations_at(seq, hi)


def refine(p: Sequence[int], lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval (lo, hi] of a squarefree p below the given width."""
    if lo == hi:
        return lo, hi
    slo = evaluate_sign(p, lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = evaluate_sign(p, mid)
        if s == 0:
            return mid, mid
        if s == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi
