"""Exact symmetric matrices: moment matrices of degree-2d forms, restriction, inertia.

A functional on degree-2d forms is represented by a form L through the
pairing, and its moment matrix on degree-d forms uses the plain monomial
basis x^(d-i) y^i with entries L_(i+j) / C(2d, i+j).  That is the pairing
<m_i m_j, L> divided by (2d)!, so point evaluations (p x + q y)^(2d) give
rank-one matrices v v^T with v_i = p^(d-i) q^i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from . import _linalg as la
from .corepoly import BinaryForm, format_fraction, forms_gcd
from .errors import DimensionMismatch, EmptyKernel, OddDegree


def monomial_labels(d: int) -> list[str]:
    out = []
    for i in range(d + 1):
        a, b = d - i, i
        parts = []
        if a:
            parts.append("x" if a == 1 else f"x^{a}")
        if b:
            parts.append("y" if b == 1 else f"y^{b}")
        out.append("*".join(parts) or "1")
    return out


@dataclass(frozen=True)
class SymQuadForm:
    entries: tuple
    basis_labels: tuple

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("matrix is not square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")
        if len(self.basis_labels) != n:
            raise DimensionMismatch("one basis label per row is required")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "basis_labels", tuple(self.basis_labels))

    @classmethod
    def from_rows(cls, rows, labels=None) -> "SymQuadForm":
        rows = [list(r) for r in rows]
        return cls(tuple(map(tuple, rows)), tuple(labels or (f"e{i}" for i in range(len(rows)))))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def principal_submatrix(self, idx: Sequence[int]) -> "SymQuadForm":
        idx = list(idx)
        return SymQuadForm(
            tuple(tuple(self.entries[i][j] for j in idx) for i in idx),
            tuple(self.basis_labels[i] for i in idx),
        )

    def to_json(self) -> dict:
        return {
            "basis_labels": list(self.basis_labels),
            "entries": [[format_fraction(v) for v in row] for row in self.entries],
        }


def middle_catalecticant(L: BinaryForm) -> SymQuadForm:
    """Moment matrix of the functional <., L> on degree-d forms, deg L = 2d."""
    if L.degree % 2:
        raise OddDegree(f"degree {L.degree} is odd")
    d = L.degree // 2
    n = 2 * d
    rows = [[L.coeffs[i + j] / comb(n, i + j) for j in range(d + 1)] for i in range(d + 1)]
    return SymQuadForm.from_rows(rows, monomial_labels(d))


def _basis_matrix(H, n: int) -> list[list[Fraction]]:
    """Columns of B are the basis vectors of H."""
    vecs = [list(h.coeffs) if isinstance(h, BinaryForm) else [Fraction(v) for v in h] for h in H]
    if any(len(v) != n for v in vecs):
        raise DimensionMismatch(f"basis vectors must have length {n}")
    return vecs


def restrict(Q: SymQuadForm, H, labels=None) -> SymQuadForm:
    """B^T Q B for the basis vectors of H (BinaryForms or coordinate vectors)."""
    vecs = _basis_matrix(H, Q.dim)
    qb = [la.matvec(Q.rows(), v) for v in vecs]
    rows = [[sum((a * b for a, b in zip(u, w)), Fraction(0)) for w in qb] for u in vecs]
    if labels is None:
        labels = [str(h) if isinstance(h, BinaryForm) else f"h{i}" for i, h in enumerate(H)]
    return SymQuadForm.from_rows(rows, labels)


def inertia(Q: SymQuadForm) -> tuple[int, int, int]:
    """(n+, n0, n-) by symmetric LDL^T with 1x1 and 2x2 pivots."""
    a = Q.rows()
    pos = neg = 0
    while a:
        n = len(a)
        k = next((i for i in range(n) if a[i][i] != 0), None)
        if k is not None:
            p = a[k][k]
            if p > 0:
                pos += 1
            else:
                neg += 1
            col = [a[i][k] for i in range(n)]
            rest = [i for i in range(n) if i != k]
            a = [[a[i][j] - col[i] * col[j] / p for j in rest] for i in rest]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
        if pair is None:
            break
        i0, j0 = pair
        # pivot block [[0, b], [b, 0]] has one positive and one negative eigenvalue
        b = a[i0][j0]
        pos += 1
        neg += 1
        u = [a[i][i0] for i in range(n)]
        v = [a[i][j0] for i in range(n)]
        rest = [i for i in range(n) if i not in (i0, j0)]
        # inverse of the block is [[0, 1/b], [1/b, 0]]
        a = [[a[i][j] - (u[i] * v[j] + v[i] * u[j]) / b for j in rest] for i in rest]
    return pos, Q.dim - pos - neg, neg


def is_psd(Q: SymQuadForm) -> bool:
    return inertia(Q)[2] == 0


def rank(Q: SymQuadForm) -> int:
    p, _, n = inertia(Q)
    return p + n


def kernel(Q: SymQuadForm) -> list[list[Fraction]]:
    """Reduced echelon basis of the kernel."""
    return la.nullspace(Q.rows(), Q.dim)


def pull_back(vectors: Sequence[Sequence[Fraction]], H: Sequence[BinaryForm]) -> list[BinaryForm]:
    """Forms sum_k v_k H_k for coordinate vectors v relative to the basis H."""
    out = []
    for v in vectors:
        acc = BinaryForm.zero(H[0].degree)
        for c, h in zip(v, H):
            if c:
                acc = acc + h.scale(c)
        out.append(acc)
    return out


def basepoint_free(kernel_forms: Sequence[BinaryForm]) -> tuple[bool, BinaryForm]:
    """A family of forms has no common projective zero iff its gcd is constant."""
    if not kernel_forms:
        raise EmptyKernel("no kernel forms to test")
    degs = {f.degree for f in kernel_forms}
    if len(degs) != 1:
        raise DimensionMismatch("kernel forms must share one degree")
    nonzero = [f for f in kernel_forms if not f.is_zero()]
    if not nonzero:
        raise EmptyKernel("all kernel forms vanish")
    g = forms_gcd(nonzero)
    return g.degree == 0, g
