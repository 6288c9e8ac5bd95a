"""Apolar ideals of binary forms and generalized Waring decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _linalg as la
from .corepoly import (
    BinaryForm,
    Gaussian,
    apolar_pair,
    complex_power,
    factor_over_rationals,
    form_gcd,
    format_fraction,
    gaussian_roots_of_quadratic,
    pairing_matrix,
)
from .errors import DegreeMismatch, IrrationalNodes, NotApolar, NotCoprime, SingularSystem, ZeroForm


def _require_nonzero(F: BinaryForm):
    if F.is_zero():
        raise ZeroForm("the zero form has no apolar ideal")


def catalecticant_kernel(F: BinaryForm, k: int) -> list[BinaryForm]:
    """Reduced echelon basis of the degree-k part of the apolar ideal of F."""
    _require_nonzero(F)
    d = F.degree
    if k < 0 or k > d + 1:
        raise DegreeMismatch(f"k = {k} outside 0..{d + 1}")
    if k == d + 1:
        return [BinaryForm.monomial(k - i, i) for i in range(k + 1)]
    rows = pairing_matrix(F, k)
    return [BinaryForm(tuple(v)) for v in la.nullspace(rows, k + 1)]


def kernel_dimension(F: BinaryForm, k: int) -> int:
    if k > F.degree:
        return k + 1
    return k + 1 - la.rank(pairing_matrix(F, k), k + 1)


def multiples_basis(g: BinaryForm, degree: int) -> list[BinaryForm]:
    """g times each monomial of the complementary degree."""
    e = degree - g.degree
    if e < 0:
        return []
    return [g * BinaryForm.monomial(e - i, i) for i in range(e + 1)]


@dataclass(frozen=True)
class ApolarIdeal:
    """Generators (f_perp, f_circ) of the apolar ideal, deg f_perp <= deg f_circ."""

    f_perp: BinaryForm
    f_circ: BinaryForm
    source: BinaryForm

    @property
    def type(self) -> tuple[int, int]:
        return (self.f_perp.degree, self.f_circ.degree)

    @property
    def d1(self) -> int:
        return self.f_perp.degree

    @property
    def d2(self) -> int:
        return self.f_circ.degree

    @property
    def f_perp_unique(self) -> bool:
        return self.d1 < self.d2

    def layer(self, r: int) -> list[BinaryForm]:
        """Reduced echelon basis of the degree-r part of the ideal."""
        if r > self.source.degree:
            return [BinaryForm.monomial(r - i, i) for i in range(r + 1)]
        gens = multiples_basis(self.f_perp, r) + multiples_basis(self.f_circ, r)
        if not gens:
            return []
        rows = la.row_space([list(g.coeffs) for g in gens], r + 1)
        return [BinaryForm(tuple(v)) for v in rows]

    def layer_dimension(self, r: int) -> int:
        if r > self.source.degree:
            return r + 1
        return max(r - self.d1 + 1, 0) + max(r - self.d2 + 1, 0)

    def contains(self, g: BinaryForm) -> bool:
        return is_apolar_member(g, self.source) if g.degree <= self.source.degree else True

    def to_json(self) -> dict:
        return {
            "f_perp": str(self.f_perp),
            "f_circ": str(self.f_circ),
            "type": list(self.type),
            "f_perp_unique": self.f_perp_unique,
        }


def _reduce_against(v: list, basis_rows: list, pivots: list) -> list:
    v = list(v)
    for row, p in zip(basis_rows, pivots):
        if v[p]:
            f = v[p]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def apolar_generators(F: BinaryForm) -> ApolarIdeal:
    _require_nonzero(F)
    d = F.degree
    d1 = next(k for k in range(d + 2) if kernel_dimension(F, k) > 0)
    d2 = d + 2 - d1
    low = catalecticant_kernel(F, d1)
    if d1 == d2:
        f_perp, f_circ = low[0].normalized(), low[1].normalized()
        return ApolarIdeal(f_perp, f_circ, F)
    f_perp = low[0].normalized()
    span_rows, span_piv = la.rref([list(g.coeffs) for g in multiples_basis(f_perp, d2)], d2 + 1)
    for v in catalecticant_kernel(F, d2):
        w = _reduce_against(v.coeffs, span_rows, span_piv)
        if any(w):
            return ApolarIdeal(f_perp, BinaryForm(tuple(w)).normalized(), F)
    raise AssertionError("apolar ideal has no second generator")  # unreachable


def is_apolar_member(G: BinaryForm, F: BinaryForm) -> bool:
    """G annihilates F, tested as (G)_d inside the apolar ideal of F."""
    n, d = G.degree, F.degree
    if n > d:
        raise DegreeMismatch(f"degree {n} exceeds {d}")
    for h in multiples_basis(G, d):
        if apolar_pair(h, F).coeffs[0] != 0:
            return False
    return True


def form_from_apolar(g: BinaryForm, h: BinaryForm) -> BinaryForm:
    """The form of degree deg g + deg h - 2 whose apolar ideal is (g, h), first coefficient 1."""
    if g.is_zero() or h.is_zero():
        raise ZeroForm("generators must be nonzero")
    if form_gcd(g, h).degree > 0:
        raise NotCoprime(f"gcd({g}, {h}) is not constant")
    d = g.degree + h.degree - 2
    rows = []
    for gen in (g, h):
        if gen.degree > d:
            continue
        # column j = <gen, x^(d-j) y^j>
        cols = [apolar_pair(gen, BinaryForm.monomial(d - j, j)).coeffs for j in range(d + 1)]
        rows.extend([list(r) for r in zip(*cols)])
    ker = la.nullspace(rows, d + 1)
    if len(ker) != 1:
        raise AssertionError(f"socle space has dimension {len(ker)}")
    return BinaryForm(tuple(ker[0])).normalized()


# --------------------------------------------------------------------------
# decompositions


@dataclass(frozen=True)
class Node:
    """One root of g, as used by the apolarity lemma.

    Real node: ``root`` = (p, q) rational, linear factor p*y - q*x.
    Complex node: ``root`` = (1, t0) with t0 Gaussian, Im t0 > 0; its
    conjugate is implicit.
    """

    root: tuple
    multiplicity: int
    complex: bool = False

    @property
    def p(self):
        return self.root[0]

    @property
    def q(self):
        return self.root[1]

    def linear_factor(self) -> BinaryForm:
        if self.complex:
            raise IrrationalNodes("complex node has no real linear factor")
        return BinaryForm((-self.q, self.p))

    def dual_form(self) -> BinaryForm:
        """p x + q y (real nodes)."""
        if self.complex:
            raise IrrationalNodes("complex node has no real dual form")
        return BinaryForm((self.p, self.q))

    def basis_forms(self, d: int) -> list:
        """l^j * l_perp^(d-j) for j < multiplicity. Complex nodes give (re, im) pairs."""
        out = []
        for j in range(self.multiplicity):
            if self.complex:
                # l = y - t0 x, l_perp = x + t0 y
                out.append(_complex_product(j, d, self.q))
            else:
                out.append(self.linear_factor() ** j * self.dual_form() ** (d - j))
        return out

    def to_json(self) -> dict:
        p, q = self.root
        return {
            "point": [str(p), str(q)],
            "multiplicity": self.multiplicity,
            "complex_pair": self.complex,
        }


def _complex_product(j: int, d: int, t0: Gaussian) -> tuple[BinaryForm, BinaryForm]:
    """Real and imaginary parts of (y - t0 x)^j (x + t0 y)^(d - j)."""
    lre, lim = complex_power(-t0, Gaussian(1), j)
    pre, pim = complex_power(Gaussian(1), t0, d - j)
    return lre * pre - lim * pim, lre * pim + lim * pre


@dataclass(frozen=True)
class Decomposition:
    """F = sum over nodes and j of c[node][j] * l^j * l_perp^(d-j).

    Complex nodes carry Gaussian coefficients; the conjugate node contributes
    the conjugate term, so each complex term enters as 2 Re(c * B).
    """

    source: BinaryForm
    nodes: tuple
    coefficients: tuple  # per node, tuple of Fraction (real) or Gaussian (complex)

    def reconstruct(self) -> BinaryForm:
        d = self.source.degree
        acc = BinaryForm.zero(d)
        for node, cs in zip(self.nodes, self.coefficients):
            for c, b in zip(cs, node.basis_forms(d)):
                if node.complex:
                    re, im = b
                    acc = acc + re.scale(2 * c.re) - im.scale(2 * c.im)
                else:
                    acc = acc + b.scale(c)

        return acc

    def complex_functional(self, node_index: int) -> tuple[BinaryForm, BinaryForm]:
        """Real and imaginary parts of c * l_perp^d for a simple complex node.

        Absorbing c into the power plays the role of rescaling l so that the
        coefficient is 1, without taking a d-th root.
        """
        node = self.nodes[node_index]
        c = self.coefficients[node_index][0]
        re, im = complex_power(Gaussian(1), node.q, self.source.degree)
        return re.scale(c.re) - im.scale(c.im), re.scale(c.im) + im.scale(c.re)

    def to_json(self) -> dict:
        def fmt(c):
            if isinstance(c, Gaussian):
                return f"{format_fraction(c.re)}{'+' if c.im >= 0 else '-'}{format_fraction(abs(c.im))} i"
            return format_fraction(c)

        return {
            "source": str(self.source),
            "nodes": [n.to_json() for n in self.nodes],
            "coefficients": [[fmt(c) for c in cs] for cs in self.coefficients],
        }


def nodes_of(g: BinaryForm) -> list[Node]:
    """Exact nodes of g: rational real roots and Gaussian-rational conjugate pairs."""
    nodes = []
    for fac, m in factor_over_rationals(g):
        if fac.degree == 1:
            a, b = fac.coeffs  # a x + b y vanishes at [b : -a]
            p, q = (Fraction(1), -a / b) if b != 0 else (Fraction(0), Fraction(1))
            nodes.append(Node((p, q), m))
        elif fac.degree == 2 and (t0 := gaussian_roots_of_quadratic(fac)) is not None:
            nodes.append(Node((Fraction(1), t0), m, complex=True))
        else:
            raise IrrationalNodes(f"factor {fac} has irrational roots")
    real = sorted((n for n in nodes if not n.complex), key=lambda n: (n.p == 0, n.q))
    cplx = [n for n in nodes if n.complex]
    return real + cplx


def generalized_decomposition(F: BinaryForm, g: BinaryForm, nodes: Sequence[Node] | None = None) -> Decomposition:
    """Solve the apolarity-lemma linear system for F at the roots of g."""
    _require_nonzero(F)
    d = F.degree
    if g.degree > d:
        raise DegreeMismatch(f"deg g = {g.degree} exceeds deg F = {d}")
    if not is_apolar_member(g, F):
        raise NotApolar(f"{g} does not annihilate {F}")
    nodes = list(nodes) if nodes is not None else nodes_of(g)
    columns: list[tuple] = []
    layout = []  # (node index, j, part) per unknown; part 're'/'im' for complex
    for ni, node in enumerate(nodes):
        for j, b in enumerate(node.basis_forms(d)):
            if node.complex:
                re, im = b
                columns.append(tuple(2 * c for c in re.coeffs))
                layout.append((ni, j, "re"))
                columns.append(tuple(-2 * c for c in im.coeffs))
                layout.append((ni, j, "im"))
            else:
                columns.append(b.coeffs)
                layout.append((ni, j, None))
    a = [list(row) for row in zip(*columns)]
    n = len(columns)
    aug = [row + [rhs] for row, rhs in zip(a, F.coeffs)]
    red, piv = la.rref(aug, n + 1)
    if n in piv:
        raise NotApolar("F is not in the span of the node functionals")
    if len(piv) < n:
        raise SingularSystem("node functionals are linearly dependent")
    sol = [Fraction(0)] * n
    for row, p in zip(red, piv):
        sol[p] = row[n]
    coeffs: list[list] = [[None] * node.multiplicity for node in nodes]
    for (ni, j, part), v in zip(layout, sol):
        if part is None:
            coeffs[ni][j] = v
        elif part == "re":
            coeffs[ni][j] = Gaussian(v, 0)
        else:
            coeffs[ni][j] = Gaussian(coeffs[ni][j].re, v)
    dec = Decomposition(F, tuple(nodes), tuple(tuple(c) for c in coeffs))
    assert dec.reconstruct() == F
    return dec
