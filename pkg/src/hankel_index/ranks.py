"""The rank ladder of a binary form: border, complex, real border, real and almost real.

Ranks that are not decided exactly are reported as intervals [lo, hi].
Every hi comes with a witness in the apolar ideal (or a theorem bound)
and every layer below lo carries a certificate that no member of that
degree satisfies the root condition.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _linalg as la
from ._pencil import sweep
from ._search import SearchRecord, search
from .apolarity import ApolarIdeal, apolar_generators, is_apolar_member
from .corepoly import (
    BinaryForm,
    RootProfile,
    RootSignature,
    classify_roots,
    cube_root_linear,
    forms_gcd,
    is_squarefree,
    projective_support_bound,
    root_signature,
    support_of,
)
from .errors import DegreeMismatch, SearchExhausted, ZeroForm

DEFAULT_BUDGET = 10_000


class RootCondition(str, enum.Enum):
    ALMOST_REAL = "AlmostReal"
    ALL_SIMPLE_REAL = "AllSimpleReal"
    ALL_REAL_WITH_MULTIPLICITY = "AllRealWithMultiplicity"
    # at most three roots missing from the distinct real ones; the negation of
    # "at least two complex pairs" used by the typical-rank test
    FEW_MISSING_REAL = "FewMissingReal"

    def holds(self, sig: RootSignature) -> bool:
        d = sig.degree
        if self is RootCondition.ALMOST_REAL:
            return sig.simple_real >= d - 2
        if self is RootCondition.ALL_SIMPLE_REAL:
            return sig.simple_real == d
        if self is RootCondition.ALL_REAL_WITH_MULTIPLICITY:
            return sig.all_real
        return sig.distinct_real >= d - 3

    def deficit(self, sig: RootSignature) -> int:
        """How many roots fail the relevant count; monotone under multiplication."""
        if self is RootCondition.ALL_REAL_WITH_MULTIPLICITY:
            return sig.degree - sig.real_with_multiplicity
        if self is RootCondition.FEW_MISSING_REAL:
            return sig.degree - sig.distinct_real
        return sig.degree - sig.simple_real

    @property
    def allowed_deficit(self) -> int:
        return {
            RootCondition.ALMOST_REAL: 2,
            RootCondition.ALL_SIMPLE_REAL: 0,
            RootCondition.ALL_REAL_WITH_MULTIPLICITY: 0,
            RootCondition.FEW_MISSING_REAL: 3,
        }[self]

    @property
    def bound_mode(self) -> str:
        return {
            RootCondition.ALMOST_REAL: "simple",
            RootCondition.ALL_SIMPLE_REAL: "simple",
            RootCondition.ALL_REAL_WITH_MULTIPLICITY: "multiplicity",
            RootCondition.FEW_MISSING_REAL: "distinct",
        }[self]

    @property
    def needs_critical_values(self) -> bool:
        # conditions that can hold only at isolated pencil parameters
        return self in (RootCondition.ALL_REAL_WITH_MULTIPLICITY, RootCondition.FEW_MISSING_REAL)


@dataclass
class ExistenceAnswer:
    verdict: str  # "Yes" | "No" | "Unknown"
    condition: RootCondition
    degree: int
    witness: BinaryForm | None = None
    certificate: dict | None = None
    search: SearchRecord | None = None

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "condition": self.condition.value, "degree": self.degree}
        if self.witness is not None:
            out["witness"] = str(self.witness)
        if self.certificate is not None:
            out["certificate"] = self.certificate
        if self.search is not None:
            out["search"] = self.search.to_json()
        return out


# --------------------------------------------------------------------------
# non-existence certificates


def _common_factor_certificate(W: Sequence[BinaryForm], cond: RootCondition) -> dict | None:
    c = forms_gcd(W)
    if c.degree == 0:
        return None
    sig = root_signature(c)
    if cond.deficit(sig) > cond.allowed_deficit:
        return {"kind": "common_factor", "factor": str(c), "deficit": cond.deficit(sig),
                "allowed": cond.allowed_deficit}
    return None


def _descartes_certificate(W: Sequence[BinaryForm], cond: RootCondition) -> dict | None:
    r = W[0].degree
    supp = sorted(support_of(W))
    bound = projective_support_bound(supp, r, cond.bound_mode)
    need = r - cond.allowed_deficit
    if bound < need:
        return {"kind": "descartes", "support": supp, "mode": cond.bound_mode,
                "bound": bound, "required": need}
    return None


def verify_certificate(cert: dict, W: Sequence[BinaryForm], cond: RootCondition) -> bool:
    """Re-derive a non-existence certificate from scratch."""
    kind = cert.get("kind")
    if kind == "empty_space":
        return len(W) == 0
    if not W:
        return False
    if kind == "single_form":
        basis = la.row_space([list(f.coeffs) for f in W], W[0].degree + 1)
        return len(basis) == 1 and not cond.holds(root_signature(W[0]))
    if kind == "common_factor":
        return _common_factor_certificate(W, cond) is not None
    if kind == "descartes":
        return _descartes_certificate(W, cond) is not None
    if kind == "pencil_sweep":
        basis = la.row_space([list(f.coeffs) for f in W], W[0].degree + 1)
        if len(basis) != 2:
            return False
        g, h = (BinaryForm(tuple(v)) for v in basis)
        sw = sweep(g, h, need_critical=cond.needs_critical_values)
        if any(cond.holds(s) for _, _, s in sw.samples):
            return False
        if cond.needs_critical_values:
            if sw.irrational_critical or any(cond.holds(s) for _, _, s in sw.rational_critical):
                return False
        return True
    return False


# --------------------------------------------------------------------------
# existence in a linear series


def _rng(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng([seed & 0xFFFFFFFF, *key])


def exists_almost_real(
    W: Sequence[BinaryForm],
    required: RootCondition | str = RootCondition.ALMOST_REAL,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
) -> ExistenceAnswer:
    """Decide whether span(W) holds a form satisfying the root condition.

    One form or a pencil is decided exactly.  Larger spaces get Yes from a
    verified search hit and No only from a support or common-factor bound.
    """
    cond = RootCondition(required)
    W = [f for f in W]
    if not W:
        return ExistenceAnswer("No", cond, -1, certificate={"kind": "empty_space"})
    r = W[0].degree
    if any(f.degree != r for f in W):
        raise DegreeMismatch("all forms of the space need one degree")
    basis = [BinaryForm(tuple(v)) for v in la.row_space([list(f.coeffs) for f in W], r + 1)]
    if not basis:
        return ExistenceAnswer("No", cond, r, certificate={"kind": "empty_space"})
    if len(basis) == 1:
        g = basis[0].primitive()
        if cond.holds(root_signature(g)):
            return ExistenceAnswer("Yes", cond, r, witness=g)
        return ExistenceAnswer("No", cond, r, certificate={"kind": "single_form", "form": str(g)})
    # cheap candidates first: they give short witnesses
    for f in basis:
        if cond.holds(root_signature(f)):
            return ExistenceAnswer("Yes", cond, r, witness=f.primitive())
    cert = _common_factor_certificate(basis, cond) or _descartes_certificate(basis, cond)
    if cert is not None:
        return ExistenceAnswer("No", cond, r, certificate=cert)
    if len(basis) == 2:
        return _decide_pencil(basis[0], basis[1], cond, r)
    found, record = search(basis, cond.holds, _min_real(basis, cond), budget, _rng(seed, r, len(basis)))
    if found is not None:
        return ExistenceAnswer("Yes", cond, r, witness=found.primitive(), search=record)
    return ExistenceAnswer("Unknown", cond, r, search=record)


def _min_real(basis: Sequence[BinaryForm], cond: RootCondition) -> int:
    """Real roots the cofactor of the common factor must have at least."""
    c = forms_gcd(basis)
    r = basis[0].degree
    need = r - cond.allowed_deficit
    if c.degree == 0:
        return need
    sig = root_signature(c)
    have = {
        "simple": sig.simple_real,
        "multiplicity": sig.real_with_multiplicity,
        "distinct": sig.distinct_real,
    }[cond.bound_mode]
    return max(0, need - have)


def _decide_pencil(g: BinaryForm, h: BinaryForm, cond: RootCondition, r: int) -> ExistenceAnswer:
    sw = sweep(g, h, need_critical=cond.needs_critical_values)
    for _, member, sig in sw.samples:
        if cond.holds(sig):
            return ExistenceAnswer("Yes", cond, r, witness=member.primitive())
    if cond.needs_critical_values:
        for _, member, sig in sw.rational_critical:
            if cond.holds(sig):
                return ExistenceAnswer("Yes", cond, r, witness=member.primitive())
        if sw.irrational_critical:
            return ExistenceAnswer("Unknown", cond, r, certificate=dict(sw.to_json(), complete=False))
    return ExistenceAnswer("No", cond, r, certificate=sw.to_json())


# --------------------------------------------------------------------------
# ranks


@dataclass
class RankInterval:
    lo: int
    hi: int
    witness: BinaryForm | None = None
    hi_reason: str = "witness"  # or "theorem"

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def to_json(self) -> dict:
        out = {"lo": self.lo, "hi": self.hi, "exact": self.exact, "hi_reason": self.hi_reason}
        if self.witness is not None:
            out["witness"] = str(self.witness)
        return out


def _ideal(F: BinaryForm | ApolarIdeal) -> ApolarIdeal:
    if isinstance(F, ApolarIdeal):
        return F
    if F.is_zero():
        raise ZeroForm("ranks of the zero form are undefined")
    return apolar_generators(F)


def cbrank(F: BinaryForm) -> int:
    return _ideal(F).d1


def crank(F: BinaryForm) -> int:
    A = _ideal(F)
    if A.f_perp_unique:
        return A.d1 if is_squarefree(A.f_perp) else A.d2
    # both generators share the degree, so either answer is d1; still locate a squarefree member
    return A.d1


def squarefree_member(A: ApolarIdeal) -> BinaryForm | None:
    """A squarefree form of degree d1 in the ideal, if one exists."""
    if A.f_perp_unique:
        return A.f_perp if is_squarefree(A.f_perp) else None
    g, h = A.f_perp, A.f_circ
    for t in range(2 * A.d1 + 2):
        m = g + h.scale(t)
        if is_squarefree(m):
            return m
    return h if is_squarefree(h) else None


def _has_cube(A: ApolarIdeal) -> bool:
    """Whether the ideal holds the cube of a linear form."""
    if A.d1 <= 2:
        return True
    if A.d1 > 3:
        return False
    if A.f_perp_unique:
        return cube_root_linear(A.f_perp) is not None
    # a pencil of cubes: a cube is a member with a triple root
    sw = sweep(A.f_perp, A.f_circ, need_critical=True)
    members = [m for _, m, _ in sw.samples] + [m for _, m, _ in sw.rational_critical]
    return any(cube_root_linear(m) is not None for m in members)


def almost_real_upper_bound(F: BinaryForm) -> int:
    """Smallest degree the structure theorems guarantee for an almost real apolar form."""
    A = _ideal(F)
    d = F.degree
    if A.d1 <= 2:
        return A.d1
    if d >= 5 and not _has_cube(A):
        return d - 2
    return d - 1


def _scan(A: ApolarIdeal, cond: RootCondition, start: int, stop: int, budget: int, seed: int,
          certs: dict, kind: str) -> tuple[int, int | None, BinaryForm | None]:
    """Layers start..stop: (first layer not refuted, first layer with a witness, witness)."""
    lo = start
    contiguous = True
    for r in range(start, stop + 1):
        ans = exists_almost_real(A.layer(r), cond, budget, seed)
        if ans.verdict == "Yes":
            return (lo, r, ans.witness)
        if ans.verdict == "No":
            certs[(kind, r)] = ans.certificate
            if contiguous:
                lo = r + 1
        else:
            contiguous = False
    return (lo, None, None)


def arrank(F: BinaryForm, budget: int = DEFAULT_BUDGET, seed: int = 0,
           certs: dict | None = None) -> RankInterval:
    A = _ideal(F)
    d = A.source.degree
    certs = {} if certs is None else certs
    if A.d1 <= 2:
        return RankInterval(A.d1, A.d1, A.f_perp.primitive())
    cap = almost_real_upper_bound(A.source)
    # layers d1..d2-1 only hold multiples of f_perp; d2 onward mixes both generators
    lo, hi, w = _scan(A, RootCondition.ALMOST_REAL, A.d1, cap, budget, seed, certs, "arrank")
    if hi is not None:
        return RankInterval(lo, hi, w)
    # the structure theorems still cap the rank: try the constructive witness, then a longer search
    if cap == d - 1:
        try:
            g, _ = almost_real_witness_upper(A.source)
            return RankInterval(lo, g.degree, g.primitive())
        except SearchExhausted:
            pass
    ans = exists_almost_real(A.layer(cap), RootCondition.ALMOST_REAL, 4 * budget, seed + 1)
    if ans.verdict == "Yes":
        return RankInterval(lo, cap, ans.witness)
    return RankInterval(min(lo, cap), cap, None, hi_reason="theorem")


def almost_real_witness_upper(F: BinaryForm, eps_budget: int = 64) -> tuple[BinaryForm, int]:
    """An almost real form of degree at most d-1 apolar to F, built by descending on derivatives."""
    if F.is_zero():
        raise ZeroForm("no witness for the zero form")
    g = _witness_upper(F, eps_budget)
    return g, g.degree


def _witness_upper(F: BinaryForm, eps_budget: int) -> BinaryForm:
    A = apolar_generators(F)
    d = F.degree
    if A.d1 <= 2:
        return A.f_perp
    # directional derivative along a coordinate direction that keeps F nonzero
    from .corepoly import apolar_pair

    for lu in (BinaryForm.linear(1, 0), BinaryForm.linear(0, 1), BinaryForm.linear(1, 1)):
        DF = apolar_pair(lu, F)
        if not DF.is_zero():
            break
    G = _witness_upper(DF, eps_budget)
    G = _pad_almost_real(G, d - 2)
    base = G * lu
    if RootCondition.ALMOST_REAL.holds(root_signature(base)):
        return base
    H = next((h for h in _layer_members(A, d - 1) if is_squarefree(h)), None)
    if H is None:
        raise SearchExhausted("no squarefree form of degree d-1 in the apolar ideal")
    for steps in (eps_budget, 2 * eps_budget):
        eps = Fraction(1)
        for _ in range(steps):
            for s in (eps, -eps):
                cand = base + H.scale(s)
                if RootCondition.ALMOST_REAL.holds(root_signature(cand)):
                    return cand
            eps /= 2
    raise SearchExhausted("no perturbation size produced almost real roots")


def _layer_members(A: ApolarIdeal, r: int):
    basis = A.layer(r)
    yield from basis
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            yield basis[i] + basis[j]
            yield basis[i] - basis[j].scale(2)


def _pad_almost_real(G: BinaryForm, degree: int) -> BinaryForm:
    """Multiply by linear forms with fresh real roots up to the given degree."""
    k = 0
    while G.degree < degree:
        l = BinaryForm.linear(k, 1)  # root t = -k ... any fresh point works
        k += 1
        cand = G * l
        if root_signature(cand).simple_real == root_signature(G).simple_real + 1:
            G = cand
    return G


def rrank(F: BinaryForm, budget: int = DEFAULT_BUDGET, seed: int = 0, certs: dict | None = None,
          start: int | None = None) -> RankInterval:
    A = _ideal(F)
    d = A.source.degree
    certs = {} if certs is None else certs
    if A.d1 == 1:
        return RankInterval(1, 1, A.f_perp.primitive())
    start = A.d1 if start is None else start
    lo, hi, w = _scan(A, RootCondition.ALL_SIMPLE_REAL, start, d - 1, budget, seed, certs, "rrank")
    if hi is not None:
        return RankInterval(lo, hi, w)
    g = real_rooted_member(A)
    return RankInterval(lo, g.degree, g)


def real_rooted_member(A: ApolarIdeal) -> BinaryForm:
    """A form of degree d with d simple real roots apolar to F.

    Fix d-1 distinct rational roots; the last linear factor is pinned by the
    single linear condition of apolarity in degree d.
    """
    F = A.source
    d = F.degree
    from .corepoly import apolar_pair

    for shift in range(64):
        pts = [Fraction(shift + i) for i in range(d - 1)]
        base = BinaryForm((Fraction(1),))
        for p in pts:
            base = base * BinaryForm.linear(-p, 1)  # y - p x
        a = apolar_pair(base * BinaryForm.linear(1, 0), F).coeffs[0]
        b = apolar_pair(base * BinaryForm.linear(0, 1), F).coeffs[0]
        lin = BinaryForm.linear(-b, a) if (a or b) else BinaryForm.linear(1, 0)
        g = base * lin
        if RootCondition.ALL_SIMPLE_REAL.holds(root_signature(g)):
            return g.primitive()
    # degree d+1 is always possible: every form of that degree is apolar
    g = BinaryForm((Fraction(1),))
    for i in range(d + 1):
        g = g * BinaryForm.linear(-i, 1)
    return g


def rbrank(F: BinaryForm, budget: int = DEFAULT_BUDGET, seed: int = 0, certs: dict | None = None,
           stop: int | None = None) -> RankInterval:
    A = _ideal(F)
    d = A.source.degree
    certs = {} if certs is None else certs
    stop = d if stop is None else stop
    lo, hi, w = _scan(A, RootCondition.ALL_REAL_WITH_MULTIPLICITY, A.d1, stop, budget, seed, certs, "rbrank")
    if hi is not None:
        return RankInterval(lo, hi, w)
    return RankInterval(lo, stop + 1, None, hi_reason="rrank")


# --------------------------------------------------------------------------
# report


@dataclass
class RankReport:
    form: BinaryForm
    ideal: ApolarIdeal
    cbrank: int
    crank: int
    rbrank: RankInterval
    rrank: RankInterval
    arrank: RankInterval
    witnesses: dict = field(default_factory=dict)  # kind -> (BinaryForm, RootProfile)
    nonexistence_certs: dict = field(default_factory=dict)  # (kind, r) -> certificate

    def to_json(self) -> dict:
        return {
            "form": str(self.form),
            "degree": self.form.degree,
            "apolar_type": list(self.ideal.type),
            "cbrank": self.cbrank,
            "crank": self.crank,
            "rbrank": self.rbrank.to_json(),
            "rrank": self.rrank.to_json(),
            "arrank": self.arrank.to_json(),
            "witnesses": {k: {"form": str(g), "roots": p.to_json()} for k, (g, p) in self.witnesses.items()},
            "nonexistence_certificates": [
                {"rank": k, "degree": r, "certificate": c} for (k, r), c in sorted(self.nonexistence_certs.items())
            ],
        }


def rank_report(F: BinaryForm, budget: int = DEFAULT_BUDGET, seed: int = 0,
                real_budget: int | None = None) -> RankReport:
    """All five ranks with witnesses and certificates.

    real_budget caps the search spent on the real and real border ranks,
    whose upper ends have exact constructions anyway.
    """
    A = _ideal(F)
    real_budget = budget if real_budget is None else real_budget
    certs: dict = {}
    cb = A.d1
    cr = crank(A.source) if A.f_perp_unique else A.d1
    ar = arrank(A, budget, seed, certs)
    # below arrank.lo every layer is refuted for the weaker condition already
    rr = rrank(A, real_budget, seed, certs, start=max(A.d1, ar.lo))
    for (kind, r), c in list(certs.items()):
        if kind == "arrank" and r < ar.lo:
            certs.setdefault(("rrank", r), c)
    rr.lo = max(rr.lo, ar.lo)
    rb = rbrank(A, real_budget, seed, certs, stop=rr.hi - 1)
    if rb.hi > rr.hi or rb.witness is None:
        rb = RankInterval(rb.lo, rr.hi, rr.witness)
    rr.lo = max(rr.lo, rb.lo)
    if rr.hi < ar.hi:
        ar = RankInterval(ar.lo, rr.hi, rr.witness)
    witnesses = {}
    for kind, iv in (("arrank", ar), ("rrank", rr), ("rbrank", rb)):
        if iv.witness is not None:
            witnesses[kind] = (iv.witness, classify_roots(iv.witness))
    sq = squarefree_member(A)
    if sq is not None:
        witnesses["crank"] = (sq.primitive(), classify_roots(sq))
    return RankReport(A.source, A, cb, cr, rb, rr, ar, witnesses, certs)


def verify_witness(kind: str, g: BinaryForm, F: BinaryForm) -> bool:
    """Membership in the apolar ideal plus the root condition of the rank kind."""
    if not is_apolar_member(g, F):
        return False
    sig = root_signature(g)
    if kind == "arrank":
        return RootCondition.ALMOST_REAL.holds(sig)
    if kind == "rrank":
        return RootCondition.ALL_SIMPLE_REAL.holds(sig)
    if kind == "rbrank":
        return RootCondition.ALL_REAL_WITH_MULTIPLICITY.holds(sig)
    if kind == "crank":
        return sig.squarefree
    return False


def profile_matches(kind: str, profile: RootProfile) -> bool:
    if kind == "arrank":
        return profile.almost_real
    if kind == "rrank":
        return profile.simple_real_count == profile.degree
    if kind == "rbrank":
        return not profile.complex_pairs
    return True
