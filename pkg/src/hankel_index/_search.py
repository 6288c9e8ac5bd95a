"""Randomized search for a member of a linear series with many real roots.

Floating point only proposes candidates.  Every candidate that passes the
cheap screen is rebuilt with rational coefficients and classified exactly,
so a returned witness never depends on rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Sequence

import numpy as np

from . import _linalg as la
from .corepoly import BinaryForm, RootSignature, forms_gcd, root_signature


@dataclass
class SearchRecord:
    budget: int
    samples: int = 0
    screened: int = 0
    verified: int = 0

    def to_json(self) -> dict:
        return {"budget": self.budget, "samples": self.samples,
                "screen_passes": self.screened, "exact_checks": self.verified}


def _float_rows(forms: Sequence[BinaryForm]) -> np.ndarray:
    rows = np.array([[float(c) for c in f.coeffs] for f in forms])
    norms = np.linalg.norm(rows, axis=1)
    return rows / norms[:, None]


def _real_root_counts(polys: np.ndarray) -> np.ndarray:
    """Approximate count of real roots of each row (ascending coefficients in t)."""
    n = polys.shape[1] - 1
    if n == 0:
        return np.zeros(len(polys), dtype=int)
    out = np.zeros(len(polys), dtype=int)
    lead = polys[:, -1]
    ok = np.abs(lead) > 1e-12 * np.max(np.abs(polys), axis=1)
    if n == 1:
        out[:] = 1
        return out
    # batched companion matrices; rows with a vanishing lead keep a root at infinity
    idx = np.nonzero(ok)[0]
    if len(idx):
        p = polys[idx] / lead[idx, None]
        comp = np.zeros((len(idx), n, n))
        comp[:, 1:, :-1] = np.eye(n - 1)
        comp[:, :, -1] = -p[:, :-1]
        try:
            roots = np.linalg.eigvals(comp)
        except np.linalg.LinAlgError:
            roots = np.array([np.roots(row[::-1]) for row in p])
        tol = 1e-6 * (1 + np.abs(roots))
        out[idx] = np.sum(np.abs(roots.imag) <= tol, axis=1)
    for i in np.nonzero(~ok)[0]:
        r = np.roots(polys[i][::-1])
        out[i] = 1 + np.sum(np.abs(r.imag) <= 1e-6 * (1 + np.abs(r)))
    return out


def _rationalize(v: np.ndarray, bits: int = 24) -> list[Fraction]:
    scale = max(float(np.max(np.abs(v))), 1e-300)
    return [Fraction(int(round(x / scale * 2**bits)), 2**bits) for x in v]


def _combine(basis: Sequence[BinaryForm], coeffs: Sequence[Fraction]) -> BinaryForm:
    acc = BinaryForm.zero(basis[0].degree)
    for c, f in zip(coeffs, basis):
        if c:
            acc = acc + f.scale(c)
    return acc


def _interpolating_member(reduced: Sequence[BinaryForm], points) -> list[Fraction] | None:
    """Exact coefficients of a member of span(reduced) vanishing at integer points (p, q)."""
    rows = [[f.evaluate(p, q) for f in reduced] for p, q in points]
    ker = la.nullspace(rows, len(reduced))
    return ker[0] if len(ker) == 1 else None


def search(
    basis: Sequence[BinaryForm],
    predicate: Callable[[RootSignature], bool],
    min_real: int,
    budget: int,
    rng: np.random.Generator,
    chunk: int = 256,
    checks_per_chunk: int = 8,
) -> tuple[BinaryForm | None, SearchRecord]:
    """Look for g in span(basis) with predicate(root_signature(g)).

    min_real is a necessary lower bound on the number of real roots of
    g / gcd(basis); it drives the float screen.
    """
    record = SearchRecord(budget)
    k = len(basis)
    common = forms_gcd(basis)
    reduced = [f.exact_divide(common) for f in basis]
    n = reduced[0].degree
    rows = _float_rows(reduced)
    q, _ = np.linalg.qr(rows.T)
    ortho = q.T  # orthonormal rows spanning the same space
    while record.samples < budget:
        m = min(chunk, budget - record.samples)
        half = m // 2 if k >= 2 else 0
        cand_float = []
        cand_exact = []  # lazily built exact coefficient thunks
        if m - half:
            u = rng.standard_normal((m - half, k))
            polys = u @ ortho
            cand_float.append(polys)
            for row in polys:
                cand_exact.append(("combo", row))
        if half:
            theta = rng.uniform(0.0, np.pi, size=(half, k - 1))
            pts = np.stack([np.round(64 * np.cos(theta)), np.round(64 * np.sin(theta))], axis=-1).astype(int)
            r = np.maximum(np.hypot(pts[..., 0], pts[..., 1]), 1.0)
            xs, ys = pts[..., 0] / r, pts[..., 1] / r
            e = np.arange(n + 1)
            vand = xs[..., None] ** (n - e) * ys[..., None] ** e  # (half, k-1, n+1)
            _, _, vt = np.linalg.svd(vand @ rows.T)
            polys = vt[:, -1, :] @ rows
            for j in range(half):
                cand_exact.append(("interp", [tuple(map(int, pt)) for pt in pts[j]]))
            cand_float.append(polys)
        polys = np.vstack(cand_float)
        record.samples += len(polys)
        counts = _real_root_counts(polys)
        order = np.argsort(-counts, kind="stable")
        checked = 0
        for idx in order:
            if counts[idx] < min_real or checked >= checks_per_chunk:
                break
            record.screened += 1
            kind, data = cand_exact[idx]
            if kind == "combo":
                member = _combo_member(reduced, data)
            else:
                pts = data
                if len(set(_normalize_point(p) for p in pts)) < len(pts):
                    continue
                coeffs = _interpolating_member(reduced, pts)
                member = _combine(reduced, coeffs) if coeffs is not None else None
            if member is None or member.is_zero():
                continue
            checked += 1
            record.verified += 1
            full = member * common
            if predicate(root_signature(full)):
                return full, record
    return None, record


def _normalize_point(pt):
    p, q = pt
    g = gcd(p, q) or 1
    p, q = p // g, q // g
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    return p, q


def _combo_member(reduced: Sequence[BinaryForm], poly: np.ndarray) -> BinaryForm | None:
    """Rational member close to the float polynomial poly."""
    a = np.array([[float(c) for c in f.coeffs] for f in reduced]).T
    coef, *_ = np.linalg.lstsq(a, poly, rcond=None)
    if not np.all(np.isfinite(coef)):
        return None
    return _combine(reduced, _rationalize(coef))
