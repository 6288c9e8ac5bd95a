"""Invariants of the rational curve obtained by projecting the rational normal curve from a point.

The point is encoded by a binary form F of degree d (the center).  All
invariants reduce to apolar data of F: the border rank gives the scroll
type and the linear-strand length, the almost real rank gives the Hankel
index.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .apolarity import ApolarIdeal, apolar_generators, catalecticant_kernel
from .corepoly import BinaryForm
from .errors import CenterOnSecant, DegreeTooSmall, IrrationalNodes, HankelError, ZeroForm
from .ranks import DEFAULT_BUDGET, RankInterval, arrank


@dataclass(frozen=True)
class ProjectedCurve:
    d: int
    center: BinaryForm
    apolar: ApolarIdeal
    h_basis: tuple

    def to_json(self) -> dict:
        return {
            "degree": self.d,
            "center": str(self.center),
            "apolar": self.apolar.to_json(),
            "hyperplane_basis": [str(h) for h in self.h_basis],
        }


def make_curve(F: BinaryForm) -> ProjectedCurve:
    if F.is_zero():
        raise ZeroForm("the center must be nonzero")
    d = F.degree
    if d < 6:
        raise DegreeTooSmall(f"degree {d} < 6")
    A = apolar_generators(F)
    if A.d1 <= 3:
        raise CenterOnSecant(A.d1)
    H = tuple(catalecticant_kernel(F, d))
    assert len(H) == d
    return ProjectedCurve(d, F, A, H)


def gl_index(c: ProjectedCurve) -> int:
    """Length of the linear strand: border rank minus 3."""
    return c.apolar.d1 - 3


def scroll_type(c: ProjectedCurve) -> tuple[int, int]:
    a = c.apolar.d1 - 2
    return a, (c.d - 2) - a


@dataclass
class HankelIndex:
    lo: int
    hi: int
    arrank: RankInterval
    ray: dict | None = None
    ray_note: str | None = None
    extras: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def to_json(self) -> dict:
        out = {"lo": self.lo, "hi": self.hi, "exact": self.exact, "arrank": self.arrank.to_json()}
        if self.ray is not None:
            out["ray"] = self.ray
        if self.ray_note:
            out["ray_note"] = self.ray_note
        return out


def hankel_index(c: ProjectedCurve, budget: int = DEFAULT_BUDGET, seed: int = 0,
                 with_ray: bool = True, numeric_fallback: bool = False,
                 ray_budget: int = 300) -> HankelIndex:
    """arrank(center) - 2, with a certified ray of that rank attached when the rank is exact."""
    ar = arrank(c.center, budget, seed)
    out = HankelIndex(ar.lo - 2, ar.hi - 2, ar)
    if not (with_ray and ar.exact):
        return out
    from .rays import check_no_proper_divisor, construct_ray, construct_ray_numeric, exact_node_member, nodes_of

    g = None
    if ar.witness is not None:
        try:
            nodes_of(ar.witness)
            if check_no_proper_divisor(ar.witness, c.center):
                g = ar.witness
        except IrrationalNodes:
            pass
    if g is None:
        g = exact_node_member(c.center, ar.lo, budget=ray_budget, seed=seed)
    if g is not None:
        try:
            spec, rep = construct_ray(c.center, g, repair=False)
            out.ray = {"spec": spec.to_json(), "verification": rep.to_json()}
            return out
        except HankelError as exc:  # surfaced, not hidden
            out.ray_note = f"exact ray failed: {type(exc).__name__}: {exc}"
    else:
        out.ray_note = "no almost real member with rational or Gaussian rational nodes found"
    if numeric_fallback and ar.witness is not None:
        try:
            out.ray = construct_ray_numeric(c.center, ar.witness)
        except (HankelError, IrrationalNodes) as exc:
            out.ray_note = (out.ray_note or "") + f"; numeric ray failed: {exc}"
    return out


def bound_report(c: ProjectedCurve, eta: HankelIndex | None = None, budget: int = DEFAULT_BUDGET,
                 seed: int = 0) -> dict:
    """Green-Lazarsfeld index, Hankel index and the bounds relating them."""
    eta = eta or hankel_index(c, budget, seed, with_ray=False)
    alpha = gl_index(c)
    out = {
        "alpha": alpha,
        "eta": eta.lo if eta.exact else [eta.lo, eta.hi],
        "eta_exact": eta.exact,
        "scroll": list(scroll_type(c)),
    }
    if eta.exact:
        out["gap"] = eta.lo - (alpha + 1)
        out["lower_bound_holds"] = alpha + 1 <= eta.lo
        out["range_holds"] = 2 <= eta.lo <= c.d - 4
    else:
        out["gap"] = [eta.lo - (alpha + 1), eta.hi - (alpha + 1)]
        out["lower_bound_holds"] = alpha + 1 <= eta.hi
        out["range_holds"] = eta.hi >= 2 and eta.lo <= c.d - 4
    return out
