"""Binary forms over the rationals, the apolar pairing and real-root classification.

A degree-d form stores d+1 coefficients; ``coeffs[i]`` multiplies x^(d-i) y^i.
Dehomogenizing with t = y/x turns the coefficient tuple directly into an
ascending univariate polynomial.  Under that chart the point at infinity is
[0:1] (the zero of x), and its multiplicity as a root is the number of
trailing zero coefficients.

A root point [p:q] is the zero of the linear factor p*y - q*x, and its
"dual" linear form is p*x + q*y, whose d-th power is the point evaluation
on degree-d forms.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, isqrt
from typing import Iterable, Sequence

from . import _upoly as up
from .errors import DegreeMismatch, ParseError, ZeroForm

Scalar = Fraction


def to_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, str):
        return Fraction(v.strip())
    return Fraction(v)


def format_fraction(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


# --------------------------------------------------------------------------
# Gaussian rationals


@dataclass(frozen=True)
class Gaussian:
    """A + B i with rational A, B. Used only inside complex-node computations."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", to_fraction(self.re))
        object.__setattr__(self, "im", to_fraction(self.im))

    @staticmethod
    def lift(v) -> "Gaussian":
        return v if isinstance(v, Gaussian) else Gaussian(to_fraction(v))

    def __add__(self, o):
        o = Gaussian.lift(o)
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-Gaussian.lift(o))

    def __rsub__(self, o):
        return Gaussian.lift(o) - self

    def __mul__(self, o):
        o = Gaussian.lift(o)
        return Gaussian(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "Gaussian":
        return Gaussian(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, o):
        o = Gaussian.lift(o)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        p = self * o.conjugate()
        return Gaussian(p.re / n, p.im / n)

    def __pow__(self, k: int):
        out = Gaussian(Fraction(1))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return format_fraction(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{format_fraction(self.re)}{sign}{format_fraction(abs(self.im))} i"


# --------------------------------------------------------------------------
# Binary forms


@dataclass(frozen=True)
class BinaryForm:
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(to_fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a binary form needs at least one coefficient")

    # construction -----------------------------------------------------
    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls((0,) * (degree + 1))

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "BinaryForm":
        """c * x^a * y^b"""
        coeffs = [0] * (a + b + 1)
        coeffs[b] = c
        return cls(tuple(coeffs))

    @classmethod
    def linear(cls, a, b) -> "BinaryForm":
        """a*x + b*y"""
        return cls((a, b))

    @classmethod
    def parse(cls, text: str) -> "BinaryForm":
        return parse_form(text)

    # basic data ---------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        return format_form(self)

    def __repr__(self) -> str:
        return f"BinaryForm('{format_form(self)}')"

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    # arithmetic ---------------------------------------------------------
    def _check_same(self, other: "BinaryForm"):
        if self.degree != other.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree} differ")

    def __add__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        self._check_same(other)
        return BinaryForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        self._check_same(other)
        return BinaryForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return BinaryForm(tuple(-a for a in self.coeffs))

    def scale(self, c) -> "BinaryForm":
        c = to_fraction(c)
        return BinaryForm(tuple(c * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            out = [Fraction(0)] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        if b:
                            out[i + j] += a * b
            return BinaryForm(tuple(out))
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(Fraction(1) / to_fraction(c))
        return NotImplemented

    def __pow__(self, k: int) -> "BinaryForm":
        out = BinaryForm((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def diff_x(self) -> "BinaryForm":
        d = self.degree
        if d == 0:
            return BinaryForm((0,))
        return BinaryForm(tuple((d - i) * self.coeffs[i] for i in range(d)))

    def diff_y(self) -> "BinaryForm":
        d = self.degree
        if d == 0:
            return BinaryForm((0,))
        return BinaryForm(tuple(i * self.coeffs[i] for i in range(1, d + 1)))

    def evaluate(self, x, y):
        d = self.degree
        return sum((c * x ** (d - i) * y ** i for i, c in enumerate(self.coeffs)), Fraction(0))

    def normalized(self) -> "BinaryForm":
        """Scale so that the first nonzero coefficient is 1."""
        lead = next((c for c in self.coeffs if c), None)
        if lead is None:
            raise ZeroForm("cannot normalize the zero form")
        return self.scale(1 / lead)

    def primitive(self) -> "BinaryForm":
        """Integer coefficients with content 1 and positive first nonzero coefficient."""
        if self.is_zero():
            raise ZeroForm("the zero form has no primitive part")
        ints = up.from_fractions(self.coeffs)
        ints = ints + [0] * (self.degree + 1 - len(ints))
        lead = next(c for c in ints if c)
        if lead < 0:
            ints = [-c for c in ints]
        return BinaryForm(tuple(ints))

    def proportional_to(self, other: "BinaryForm") -> bool:
        if self.degree != other.degree or self.is_zero() or other.is_zero():
            return False
        return self.normalized() == other.normalized()

    def to_upoly(self) -> list:
        """Primitive integer polynomial in t = y/x (root at infinity dropped)."""
        return up.from_fractions(self.coeffs)

    @property
    def infinity_multiplicity(self) -> int:
        """Multiplicity of [0:1] as a root, i.e. the number of trailing zero coefficients."""
        n = 0
        for c in reversed(self.coeffs):
            if c:
                break
            n += 1
        return n

    def divmod(self, other: "BinaryForm") -> tuple["BinaryForm", "BinaryForm"]:
        """Division in t = y/x from the x-side; exact for homogeneous divisors."""
        if other.is_zero():
            raise ZeroForm("division by the zero form")
        q_deg = self.degree - other.degree
        if q_deg < 0:
            return BinaryForm.zero(0), self
        # divide ascending polynomials (lowest power of y first) using the
        # first nonzero coefficient of the divisor; handles factors of y
        lead_idx = next(i for i, c in enumerate(other.coeffs) if c)
        rem = list(self.coeffs)
        quo = [Fraction(0)] * (q_deg + 1)
        for k in range(q_deg + 1):
            idx = k + lead_idx
            coef = rem[idx] / other.coeffs[lead_idx]
            quo[k] = coef
            if coef:
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= coef * c
        return BinaryForm(tuple(quo)), BinaryForm(tuple(rem))

    def exact_divide(self, other: "BinaryForm") -> "BinaryForm | None":
        q, r = self.divmod(other)
        return q if r.is_zero() else None

    def divides(self, other: "BinaryForm") -> bool:
        return other.degree >= self.degree and other.exact_divide(self) is not None


def form(text_or_coeffs) -> BinaryForm:
    """Convenience constructor from a polynomial string or a coefficient sequence."""
    if isinstance(text_or_coeffs, BinaryForm):
        return text_or_coeffs
    if isinstance(text_or_coeffs, str):
        return parse_form(text_or_coeffs)
    return BinaryForm(tuple(text_or_coeffs))


def linear_from_root(p, q) -> BinaryForm:
    """The linear factor p*y - q*x vanishing at [p:q]."""
    return BinaryForm((-to_fraction(q), to_fraction(p)))


def dual_linear(l: BinaryForm) -> BinaryForm:
    """l_perp = b x - a y for l = a x + b y."""
    a, b = l.coeffs
    return BinaryForm((b, -a))


def form_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Projective gcd, normalized to primitive integer coefficients."""
    if f.is_zero():
        return g.primitive()
    if g.is_zero():
        return f.primitive()
    inf = min(f.infinity_multiplicity, g.infinity_multiplicity)
    u = up.poly_gcd(f.to_upoly(), g.to_upoly())
    coeffs = list(u) + [0] * inf
    return BinaryForm(tuple(coeffs)).primitive()


def forms_gcd(forms: Iterable[BinaryForm]) -> BinaryForm:
    out = None
    for f in forms:
        out = f.primitive() if out is None else form_gcd(out, f)
    if out is None:
        raise ZeroForm("gcd of an empty family")
    return out


def is_squarefree(f: BinaryForm) -> bool:
    if f.is_zero():
        raise ZeroForm("the zero form")
    if f.infinity_multiplicity > 1:
        return False
    p = f.to_upoly()
    return len(up.poly_gcd(p, up.derivative(p))) <= 1


def cube_root_linear(f: BinaryForm) -> BinaryForm | None:
    """The linear form l with f proportional to l^3, if f is a cube of a real linear form."""
    if f.degree != 3 or f.is_zero():
        return None
    if f.infinity_multiplicity == 3:
        return BinaryForm((1, 0))
    parts = up.squarefree_decomposition(f.to_upoly())
    if f.infinity_multiplicity == 0 and len(parts) == 1 and parts[0][1] == 3:
        s = parts[0][0]
        return BinaryForm((s[0], s[1]))
    return None


# --------------------------------------------------------------------------
# text format

def format_form(f: BinaryForm) -> str:
    d = f.degree
    if f.is_zero():
        return "0" if d == 0 else f"0*x^{d}"
    parts = []
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        a, b = d - i, i
        mono = []
        if a:
            mono.append("x" if a == 1 else f"x^{a}")
        if b:
            mono.append("y" if b == 1 else f"y^{b}")
        mag = abs(c)
        if not mono:
            body = format_fraction(mag)
        elif mag == 1:
            body = "*".join(mono)
        else:
            body = format_fraction(mag) + "*" + "*".join(mono)
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(sign + body)
    return "".join(parts)


_NUM = re.compile(r"\d+(?:/\d+)?")
_VAR = re.compile(r"([xy])(?:\s*(?:\^|\*\*)\s*(\d+))?")


def parse_form(text: str) -> BinaryForm:
    """Parse sums of terms c*x^a*y^b. All terms must share one total degree."""
    s = text
    pos = 0
    n = len(s)
    terms: list[tuple[Fraction, int, int, int]] = []

    def skip(p):
        while p < n and s[p].isspace():
            p += 1
        return p

    pos = skip(pos)
    if pos == n:
        raise ParseError("empty polynomial", 0)
    first = True
    while True:
        pos = skip(pos)
        start = pos
        sign = 1
        if pos < n and s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos = skip(pos + 1)
        elif not first:
            raise ParseError("expected '+' or '-'", pos)
        first = False
        coef = Fraction(1)
        a = b = 0
        have_factor = False
        while True:
            pos = skip(pos)
            m = _NUM.match(s, pos)
            if m:
                coef *= Fraction(m.group(0))
                pos = m.end()
                have_factor = True
            else:
                m = _VAR.match(s, pos)
                if not m:
                    raise ParseError("expected a number, x or y", pos)
                e = int(m.group(2)) if m.group(2) else 1
                if m.group(1) == "x":
                    a += e
                else:
                    b += e
                pos = m.end()
                have_factor = True
            pos = skip(pos)
            if pos < n and s[pos] == "*" and not s.startswith("**", pos):
                pos += 1
                continue
            break
        if not have_factor:
            raise ParseError("empty term", start)
        terms.append((sign * coef, a, b, start))
        pos = skip(pos)
        if pos == n:
            break
        if s[pos] not in "+-":
            raise ParseError(f"unexpected character {s[pos]!r}", pos)

    degrees = {a + b for _, a, b, _ in terms}
    if len(degrees) > 1:
        d0 = terms[0][1] + terms[0][2]
        bad = next(t for t in terms if t[1] + t[2] != d0)
        raise ParseError(f"inhomogeneous term of degree {bad[1] + bad[2]} (expected {d0})", bad[3])
    d = degrees.pop()
    coeffs = [Fraction(0)] * (d + 1)
    for c, a, b, _ in terms:
        coeffs[b] += c
    return BinaryForm(tuple(coeffs))


# --------------------------------------------------------------------------
# apolar pairing


@lru_cache(maxsize=None)
def _pair_weights(n: int, d: int) -> tuple:
    """w[m][j]: weight of f_j * g_(j+m) in coefficient m of <f, g>, f of degree n, g of degree d."""
    k = d - n
    return tuple(
        tuple(
            factorial(d - j - m) // factorial(k - m) * (factorial(j + m) // factorial(m))
            for j in range(n + 1)
        )
        for m in range(k + 1)
    )


def apolar_pair(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Apply f(d/dx, d/dy) to g."""
    n, d = f.degree, g.degree
    if n > d:
        raise DegreeMismatch(f"operator degree {n} exceeds form degree {d}")
    w = _pair_weights(n, d)
    fc, gc = f.coeffs, g.coeffs
    out = []
    for m in range(d - n + 1):
        wm = w[m]
        out.append(sum((fc[j] * gc[j + m] * wm[j] for j in range(n + 1) if fc[j]), Fraction(0)))
    return BinaryForm(tuple(out))


def pairing_matrix(F: BinaryForm, k: int) -> list:
    """Matrix of g -> <g, F> on degree-k forms; rows index result coefficients."""
    d = F.degree
    if k > d:
        raise DegreeMismatch(f"degree {k} exceeds {d}")
    w = _pair_weights(k, d)
    fc = F.coeffs
    return [[fc[j + m] * w[m][j] for j in range(k + 1)] for m in range(d - k + 1)]


# --------------------------------------------------------------------------
# root classification


class RootClass(str, enum.Enum):
    ALL_SIMPLE_REAL = "AllSimpleReal"
    ONE_COMPLEX_PAIR = "OneComplexPair"
    ONE_DOUBLE_REAL = "OneDoubleReal"
    NOT_ALMOST_REAL = "NotAlmostReal"

    @property
    def almost_real(self) -> bool:
        return self is not RootClass.NOT_ALMOST_REAL


@dataclass(frozen=True)
class RootSignature:
    """Root counts of a form, without locating the roots.

    ``parts`` holds (multiplicity, number of distinct roots, number of those real)
    over the projective line, the point at infinity included.
    """

    degree: int
    parts: tuple

    @property
    def simple_real(self) -> int:
        return sum(r for m, _, r in self.parts if m == 1)

    @property
    def distinct_real(self) -> int:
        return sum(r for _, _, r in self.parts)

    @property
    def real_with_multiplicity(self) -> int:
        return sum(m * r for m, _, r in self.parts)

    @property
    def all_real(self) -> bool:
        return self.real_with_multiplicity == self.degree

    @property
    def squarefree(self) -> bool:
        return all(m == 1 for m, _, _ in self.parts)

    @property
    def classification(self) -> RootClass:
        d = self.degree
        s = self.simple_real
        if s == d:
            return RootClass.ALL_SIMPLE_REAL
        if s == d - 2:
            if any(m == 2 and r == 1 for m, _, r in self.parts):
                return RootClass.ONE_DOUBLE_REAL
            return RootClass.ONE_COMPLEX_PAIR
        return RootClass.NOT_ALMOST_REAL


def root_signature(f: BinaryForm) -> RootSignature:
    """Squarefree decomposition plus Sturm counts; fast and exact."""
    if f.is_zero():
        raise ZeroForm("cannot classify the zero form")
    parts: dict[int, list[int]] = {}
    inf = f.infinity_multiplicity
    if inf:
        parts.setdefault(inf, [0, 0])
        parts[inf][0] += 1
        parts[inf][1] += 1
    for s, k in up.squarefree_decomposition(f.to_upoly()):
        nreal = up.count_real_roots(s)
        e = parts.setdefault(k, [0, 0])
        e[0] += len(s) - 1
        e[1] += nreal
    return RootSignature(f.degree, tuple(sorted((m, n, r) for m, (n, r) in parts.items())))


@dataclass(frozen=True)
class AlgebraicRealRoot:
    lo: Fraction
    hi: Fraction
    minimal_polynomial: tuple  # ascending integer coefficients in t = y/x

    def to_json(self) -> dict:
        return {
            "interval": [format_fraction(self.lo), format_fraction(self.hi)],
            "minimal_polynomial_t": [str(c) for c in self.minimal_polynomial],
            "chart": "t = y/x",
        }


@dataclass(frozen=True)
class RootProfile:
    """Exact root multiset of a form.

    ``complex_pairs`` entries are (irreducible real factor, multiplicity,
    number of conjugate pairs in that factor).
    """

    degree: int
    rational_roots: tuple  # ((p, q), multiplicity)
    algebraic_real_roots: tuple  # (AlgebraicRealRoot, multiplicity)
    complex_pairs: tuple  # (BinaryForm, multiplicity, pairs)
    classification: RootClass

    @property
    def simple_real_count(self) -> int:
        return sum(1 for _, m in self.rational_roots if m == 1) + sum(
            1 for _, m in self.algebraic_real_roots if m == 1
        )

    @property
    def distinct_real_count(self) -> int:
        return len(self.rational_roots) + len(self.algebraic_real_roots)

    def multiplicity_total(self) -> int:
        return (
            sum(m for _, m in self.rational_roots)
            + sum(m for _, m in self.algebraic_real_roots)
            + sum(2 * m * k for _, m, k in self.complex_pairs)
        )

    @property
    def almost_real(self) -> bool:
        return self.classification.almost_real

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "classification": self.classification.value,
            "rational_roots": [
                {"point": [format_fraction(p), format_fraction(q)], "multiplicity": m}
                for (p, q), m in self.rational_roots
            ],
            "algebraic_real_roots": [
                dict(r.to_json(), multiplicity=m) for r, m in self.algebraic_real_roots
            ],
            "complex_pairs": [
                {"factor": str(q), "multiplicity": m, "pairs": k} for q, m, k in self.complex_pairs
            ],
        }


def factor_over_rationals(f: BinaryForm) -> list[tuple[BinaryForm, int]]:
    """Irreducible factors over Q with multiplicities (projective: x counts as a factor).

    Each factor is a primitive form; the leading constant is dropped.
    """
    import sympy

    if f.is_zero():
        raise ZeroForm("cannot factor the zero form")
    out: list[tuple[BinaryForm, int]] = []
    inf = f.infinity_multiplicity
    if inf:
        out.append((BinaryForm((1, 0)), inf))
    p = f.to_upoly()
    if len(p) > 1:
        t = sympy.Symbol("t")
        _, facs = sympy.Poly(list(reversed(p)), t, domain="ZZ").factor_list()
        for fac, m in facs:
            asc = [int(c) for c in reversed(fac.all_coeffs())]
            out.append((BinaryForm(tuple(asc)).primitive(), m))
    return out


def _point_of_linear(l: BinaryForm) -> tuple[Fraction, Fraction]:
    """[p:q] with l(p, q) = 0, normalized to p = 1 or (0, 1)."""
    a, b = l.coeffs  # l = a x + b y
    if b == 0:
        return (Fraction(0), Fraction(1))
    return (Fraction(1), -a / b)


def classify_roots(f: BinaryForm) -> RootProfile:
    """Full exact root profile: rational roots, isolated irrational real roots, complex pairs."""
    if f.is_zero():
        raise ZeroForm("cannot classify the zero form")
    rational, algebraic, pairs = [], [], []
    for fac, m in factor_over_rationals(f):
        if fac.degree == 1:
            rational.append((_point_of_linear(fac), m))
            continue
        u = fac.to_upoly()
        intervals = up.isolate_real_roots(u)
        for lo, hi in intervals:
            algebraic.append((AlgebraicRealRoot(lo, hi, tuple(u)), m))
        k = (fac.degree - len(intervals)) // 2
        if k:
            pairs.append((fac, m, k))
    rational.sort(key=lambda e: (e[0][0] == 0, e[0][1]))
    algebraic.sort(key=lambda e: e[0].lo)
    sig = root_signature(f)
    return RootProfile(f.degree, tuple(rational), tuple(algebraic), tuple(pairs), sig.classification)


def sturm_count(f: BinaryForm, interval: tuple | None = None) -> int:
    """Distinct real roots of the dehomogenization f(1, t), t = y/x, in (lo, hi].

    ``interval`` None means the whole affine line.  The root at infinity [0:1]
    is not counted here; read it from ``f.infinity_multiplicity``.
    """
    if f.is_zero():
        raise ZeroForm("cannot count roots of the zero form")
    p = f.to_upoly()
    if interval is None:
        return up.count_real_roots(p)
    lo, hi = interval
    return up.count_real_roots(
        p, None if lo is None else to_fraction(lo), None if hi is None else to_fraction(hi)
    )


# --------------------------------------------------------------------------
# Descartes bounds


def descartes_support_bound(support: Iterable[int]) -> int:
    """Bound on distinct nonzero real roots of any polynomial with the given support.

    For each consecutive pair of support exponents, positive and negative roots
    together gain at most 2 sign changes when the gap is even and exactly one
    side can change sign when the gap is odd.  The sum is the maximum over all
    sign assignments of the positive plus negative Descartes counts.
    """
    s = sorted(set(support))
    if not s:
        raise ValueError("empty support")
    return sum(1 if (b - a) % 2 else 2 for a, b in zip(s, s[1:]))


def projective_support_bound(support: Iterable[int], degree: int | None = None, mode: str = "distinct") -> int:
    """Bound on real projective roots of degree-``degree`` forms supported on exponents of y.

    Any member may lose its extreme coefficients, so every contiguous run of
    the support is tried as the actual support.  A member whose lowest
    exponent is e > 0 has the root t = 0 of multiplicity e; a top exponent
    e < degree gives the root at infinity of multiplicity degree - e.

    mode "distinct" counts distinct real roots, "simple" only simple ones and
    "multiplicity" counts real roots with multiplicity.
    """
    s = sorted(set(support))
    if not s:
        raise ValueError("empty support")
    if degree is None:
        degree = s[-1]
    best = 0
    n = len(s)
    for lo_cut in range(n):
        for hi_cut in range(lo_cut, n):
            core = s[lo_cut:hi_cut + 1]
            low, high = core[0], degree - core[-1]
            if mode == "simple":
                extra = (low == 1) + (high == 1)
            elif mode == "multiplicity":
                extra = low + high
            else:
                extra = (low > 0) + (high > 0)
            best = max(best, descartes_support_bound(core) + extra)
    return best


def support_of(forms: Sequence[BinaryForm]) -> set[int]:
    return {i for f in forms for i, c in enumerate(f.coeffs) if c}


# --------------------------------------------------------------------------
# complex linear forms


def complex_power(p: Gaussian, q: Gaussian, d: int) -> tuple[BinaryForm, BinaryForm]:
    """Real and imaginary parts of (p x + q y)^d for Gaussian p, q."""
    p, q = Gaussian.lift(p), Gaussian.lift(q)
    re, im = [], []
    pp = [Gaussian(1)]
    qq = [Gaussian(1)]
    for _ in range(d):
        pp.append(pp[-1] * p)
        qq.append(qq[-1] * q)
    for i in range(d + 1):
        c = pp[d - i] * qq[i] * comb(d, i)
        re.append(c.re)
        im.append(c.im)
    return BinaryForm(tuple(re)), BinaryForm(tuple(im))


def gaussian_roots_of_quadratic(q: BinaryForm) -> Gaussian | None:
    """For an irreducible real quadratic form, its root t0 = y/x with Im t0 > 0, if Gaussian-rational."""
    if q.degree != 2:
        return None
    a, b, c = q.coeffs  # a + b t + c t^2 in t = y/x
    if c == 0:
        return None
    disc = b * b - 4 * a * c
    if disc >= 0:
        return None
    neg = -disc
    num, den = neg.numerator, neg.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    w = Fraction(rn, rd)
    return Gaussian(-b / (2 * c), w / (2 * c) if c > 0 else -w / (2 * c))


def rational_point_key(pt: tuple[Fraction, Fraction]) -> tuple:
    return (pt[0] == 0, pt[1])


__all__ = [
    "AlgebraicRealRoot",
    "BinaryForm",
    "Gaussian",
    "RootClass",
    "RootProfile",
    "RootSignature",
    "apolar_pair",
    "classify_roots",
    "complex_power",
    "cube_root_linear",
    "descartes_support_bound",
    "dual_linear",
    "factor_over_rationals",
    "form",
    "form_gcd",
    "forms_gcd",
    "format_form",
    "gaussian_roots_of_quadratic",
    "is_squarefree",
    "linear_from_root",
    "pairing_matrix",
    "parse_form",
    "projective_support_bound",
    "root_signature",
    "sturm_count",
    "support_of",
]
