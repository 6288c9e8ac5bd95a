"""Low-rank extreme rays of the dual cone built from an almost real apolar form.

Given a center F of degree d and an almost real g in the apolar ideal of F,
the roots of g carry a decomposition F = sum c_i * (dual form)^d.  Weights
d_i are then chosen so that the functional

    L = sum d_i * (dual form)^(2d)   (plus the complex or double-root terms)

is positive semidefinite of rank deg g - 2 on the hyperplane (F)^perp_d.
Everything is exact over the rationals; an mpmath fallback handles nodes
that are not rational.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import _linalg as la
from . import quadforms as qf
from .apolarity import (
    Decomposition,
    apolar_generators,
    catalecticant_kernel,
    generalized_decomposition,
    is_apolar_member,
    multiples_basis,
    nodes_of,
)
from .corepoly import BinaryForm, Gaussian, RootClass, factor_over_rationals, format_fraction, root_signature
from .errors import (
    CenterOnThirdSecant,
    DegreeMismatch,
    DegreeTooSmall,
    IrrationalNodes,
    NotAlmostReal,
    NotApolar,
    ProperDivisor,
    VerificationFailed,
    ZeroCoefficient,
)


class RayCase(str, enum.Enum):
    SIMPLE_REAL = "SimpleReal"
    COMPLEX_PAIR = "ComplexPair"
    DOUBLE_ROOT = "DoubleRoot"

    @classmethod
    def of(cls, rc: RootClass) -> "RayCase":
        try:
            return {
                RootClass.ALL_SIMPLE_REAL: cls.SIMPLE_REAL,
                RootClass.ONE_COMPLEX_PAIR: cls.COMPLEX_PAIR,
                RootClass.ONE_DOUBLE_REAL: cls.DOUBLE_ROOT,
            }[rc]
        except KeyError:
            raise NotAlmostReal("the witness does not have almost real roots") from None


# --------------------------------------------------------------------------
# proper divisors


def _divisor_tests(g: BinaryForm) -> list[list[BinaryForm]]:
    """For each irreducible factor of g, forms that all lie in an ideal iff g / l does.

    A rational root l gives the single form g / l.  For an irreducible factor
    of degree k >= 2 with cofactor h, the forms m with h*m in the ideal make up
    a rational subspace; it holds fac / l iff it holds every Galois conjugate,
    and those conjugates span all forms of degree k - 1.
    """
    out = []
    for fac, _ in factor_over_rationals(g):
        h = g.exact_divide(fac)
        k = fac.degree - 1
        out.append([h * BinaryForm.monomial(k - i, i) for i in range(k + 1)])
    return out


def check_no_proper_divisor(g: BinaryForm, F: BinaryForm) -> bool:
    """No divisor of g of degree deg g - 1 is apolar to F (hence no proper divisor at all)."""
    if not is_apolar_member(g, F):
        raise NotApolar(f"{g} does not annihilate {F}")
    return not any(all(is_apolar_member(f, F) for f in forms) for forms in _divisor_tests(g))


# --------------------------------------------------------------------------
# coefficients


@dataclass(frozen=True)
class RayCoefficients:
    d: tuple  # weights for the real nodes (and the double-root pair)
    alpha: object = None
    beta: object = None
    k: object = None
    v: object = None


def solve_coefficients(case: RayCase | str, c: Sequence, free: dict | None = None) -> RayCoefficients:
    """Weights making the restricted quadratic form singular and positive semidefinite.

    c holds the real-node coefficients of the decomposition: all r of them for
    SimpleReal, the r - 2 real ones for ComplexPair (the pair's coefficient is
    absorbed into its power), and r values ending with (c_(r-1), c_r) for
    DoubleRoot, c_r being the coefficient of l * l_perp^(d-1).
    Works with any field elements (Fraction or mpmath numbers).
    """
    case = RayCase(case)
    free = dict(free or {})
    c = list(c)
    if case is RayCase.SIMPLE_REAL:
        if any(ci == 0 for ci in c):
            raise ZeroCoefficient("every node coefficient must be nonzero")
        dd = list(free.get("d", [1] * (len(c) - 1)))
        _check_positive(dd, len(c) - 1)
        s = sum(ci * ci / di for ci, di in zip(c[:-1], dd))
        return RayCoefficients(tuple(dd + [-c[-1] * c[-1] / s]))
    if case is RayCase.COMPLEX_PAIR:
        if not c or any(ci == 0 for ci in c):
            raise ZeroCoefficient("every real node coefficient must be nonzero")
        dd = list(free.get("d", [1] * len(c)))
        _check_positive(dd, len(c))
        k = free.get("k", 1)
        if k == 0:
            raise ValueError("k must be nonzero so that beta is nonzero")
        s = sum(ci * ci / di for ci, di in zip(c, dd))
        alpha = -1 / (s * (1 + k * k))
        beta = -k / (s * (1 + k * k))
        return RayCoefficients(tuple(dd), alpha, beta, k=k)
    # double root
    if len(c) < 2:
        raise ValueError("a double root needs two coefficients")
    simple, c_prev, c_last = c[:-2], c[-2], c[-1]
    if c_last == 0 or any(ci == 0 for ci in simple):
        raise ZeroCoefficient("node coefficients of the simple roots and of l * l_perp^(d-1) must be nonzero")
    dd = list(free.get("d", [1] * len(simple)))
    _check_positive(dd, len(simple))
    s = sum(ci * ci / di for ci, di in zip(simple, dd))
    v0 = free.get("v", 1)
    if v0 == 0:
        raise ValueError("v must be nonzero")
    for v in _v_candidates(v0):
        d_prev = 2 * v * c_prev + v * v * s
        if d_prev > 0:
            return RayCoefficients(tuple(dd + [d_prev, v * c_last]), v=v)
    raise ZeroCoefficient("no admissible ratio d_r / c_r found")  # unreachable: one sign always works


def _v_candidates(v0):
    v = v0
    for _ in range(64):
        yield v
        yield -v
        v = 2 * v


def _check_positive(dd, n):
    if len(dd) != n:
        raise DegreeMismatch(f"expected {n} weights, got {len(dd)}")
    if any(x <= 0 for x in dd):
        raise ValueError("free weights must be positive")


def case_equation(case: RayCase, c: Sequence, coeffs: RayCoefficients):
    """Left-hand side of the case equation; zero exactly when the weights are admissible."""
    dd = coeffs.d
    if case is RayCase.SIMPLE_REAL:
        return sum(ci * ci / di for ci, di in zip(c, dd))
    if case is RayCase.COMPLEX_PAIR:
        a, b = coeffs.alpha, coeffs.beta
        return a / (a * a + b * b) + sum(ci * ci / di for ci, di in zip(c, dd))
    simple, c_prev, c_last = c[:-2], c[-2], c[-1]
    s = sum(ci * ci / di for ci, di in zip(simple, dd[:-2]))
    d_prev, d_last = dd[-2], dd[-1]
    return d_prev - 2 * d_last * c_prev / c_last - d_last * d_last / (c_last * c_last) * s


# --------------------------------------------------------------------------
# the ray


@dataclass
class RaySpec:
    case: RayCase
    g: BinaryForm
    nodes: tuple
    decomposition: Decomposition
    c: tuple  # real coefficients fed to solve_coefficients
    coefficients: RayCoefficients
    L: BinaryForm
    scale: Fraction = Fraction(1)

    @property
    def rank(self) -> int:
        return self.g.degree - 2

    def to_json(self) -> dict:
        co = self.coefficients
        out = {
            "case": self.case.value,
            "g": str(self.g),
            "center_scale": format_fraction(self.scale),
            "nodes": [n.to_json() for n in self.nodes],
            "decomposition": self.decomposition.to_json(),
            "c": [format_fraction(x) for x in self.c],
            "d": [format_fraction(x) for x in co.d],
            "L": str(self.L),
        }
        if co.alpha is not None:
            out["alpha"] = format_fraction(co.alpha)
            out["beta"] = format_fraction(co.beta)
            out["k"] = format_fraction(Fraction(co.k))
        if co.v is not None:
            out["v"] = format_fraction(Fraction(co.v))
        return out


@dataclass
class VerificationReport:
    psd: bool
    rank: int
    expected_rank: int
    inertia_q: tuple
    inertia_Q: tuple
    lorentz_Q: bool
    kernel_forms: list
    kernel_gcd: BinaryForm
    basepoint_free: bool
    kernel_Q_is_multiples_of_g: bool
    kernel_vector: tuple
    kernel_vector_nonzero: bool
    case_equation_holds: bool
    double_root_identity: bool | None = None
    notes: list = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return (self.psd and self.rank == self.expected_rank and self.basepoint_free and self.lorentz_Q
                and self.case_equation_holds and self.kernel_vector_nonzero
                and self.double_root_identity is not False)

    def to_json(self) -> dict:
        return {
            "certified": self.certified,
            "psd": self.psd,
            "rank": self.rank,
            "expected_rank": self.expected_rank,
            "inertia_q": list(self.inertia_q),
            "inertia_Q": list(self.inertia_Q),
            "lorentz_Q": self.lorentz_Q,
            "kernel": [str(f) for f in self.kernel_forms],
            "kernel_gcd": str(self.kernel_gcd),
            "basepoint_free": self.basepoint_free,
            "kernel_Q_equals_multiples_of_g": self.kernel_Q_is_multiples_of_g,
            "kernel_vector": [format_fraction(x) for x in self.kernel_vector],
            "kernel_vector_nonzero": self.kernel_vector_nonzero,
            "case_equation_holds": self.case_equation_holds,
            "double_root_identity": self.double_root_identity,
        }


def _real_coefficients(case: RayCase, dec: Decomposition) -> tuple[list, int | None]:
    """Real coefficient vector in solve_coefficients order, plus the complex node index."""
    real = [(i, n) for i, n in enumerate(dec.nodes) if not n.complex]
    cplx = [i for i, n in enumerate(dec.nodes) if n.complex]
    if case is RayCase.COMPLEX_PAIR:
        (ci,) = cplx
        if dec.coefficients[ci][0] == Gaussian(0):
            raise ZeroCoefficient("the conjugate pair carries a zero coefficient")
        return [dec.coefficients[i][0] for i, _ in real], ci
    if case is RayCase.DOUBLE_ROOT:
        simple = [dec.coefficients[i][0] for i, n in real if n.multiplicity == 1]
        (dbl,) = [i for i, n in real if n.multiplicity == 2]
        c_prev, c_last = dec.coefficients[dbl]
        return simple + [c_prev, c_last], None
    return [dec.coefficients[i][0] for i, _ in real], None


def assemble_L(spec_case: RayCase, dec: Decomposition, coeffs: RayCoefficients) -> BinaryForm:
    """The degree-2d form representing the functional of the ray."""
    d = dec.source.degree
    L = BinaryForm.zero(2 * d)
    real = [n for n in dec.nodes if not n.complex]
    simple = [n for n in real if n.multiplicity == 1]
    for n, w in zip(simple, coeffs.d):
        L = L + (n.dual_form() ** (2 * d)).scale(w)
    if spec_case is RayCase.COMPLEX_PAIR:
        ci = next(i for i, n in enumerate(dec.nodes) if n.complex)
        re, im = dec.complex_functional(ci)
        a, b = coeffs.alpha, coeffs.beta
        L = L + (re * re - im * im).scale(4 * a) - (re * im).scale(8 * b)
    elif spec_case is RayCase.DOUBLE_ROOT:
        n = next(n for n in real if n.multiplicity == 2)
        A = n.dual_form() ** d
        B = (n.linear_factor() * n.dual_form() ** (d - 1)).scale(2)
        d_prev, d_last = coeffs.d[-2], coeffs.d[-1]
        L = L + (A * A).scale(d_prev) + (A * B).scale(d_last)
    return L


def _kernel_vector(case: RayCase, c: Sequence, co: RayCoefficients) -> tuple:
    """The explicit kernel direction of the restricted form in node coordinates."""
    if case is RayCase.SIMPLE_REAL:
        return tuple(ci / di for ci, di in zip(c, co.d))
    if case is RayCase.COMPLEX_PAIR:
        z = [ci / di for ci, di in zip(c, co.d)]
        s = sum(ci * zi for ci, zi in zip(c, z))
        u = -s / 2
        return tuple(z + [u, -co.beta * u / co.alpha])
    simple = c[:-2]
    z = [ci / di for ci, di in zip(simple, co.d[:-2])]
    return tuple(z + [c[-1] / co.d[-1]])


def verify_ray(F: BinaryForm, L: BinaryForm, g: BinaryForm, expected_rank: int | None = None) -> VerificationReport:
    """Exact certificate checks for a functional L against the center F."""
    d = F.degree
    Q = qf.middle_catalecticant(L)
    H = catalecticant_kernel(F, d)
    q = qf.restrict(Q, H)
    iq, iQ = qf.inertia(q), qf.inertia(Q)
    kvecs = qf.kernel(q)
    kforms = qf.pull_back(kvecs, H) if kvecs else []
    if kforms:
        bpf, kg = qf.basepoint_free(kforms)
    else:
        bpf, kg = True, BinaryForm((Fraction(1),))
    r = g.degree
    kerQ = qf.pull_back(qf.kernel(Q), [BinaryForm.monomial(d - i, i) for i in range(d + 1)]) if qf.kernel(Q) else []
    mult = multiples_basis(g, d)
    same = la.same_span([list(f.coeffs) for f in kerQ], [list(f.coeffs) for f in mult], d + 1)
    exp = r - 2 if expected_rank is None else expected_rank
    return VerificationReport(
        psd=iq[2] == 0,
        rank=iq[0] + iq[2],
        expected_rank=exp,
        inertia_q=iq,
        inertia_Q=iQ,
        lorentz_Q=iQ == (r - 1, d + 1 - r, 1),
        kernel_forms=kforms,
        kernel_gcd=kg,
        basepoint_free=bpf,
        kernel_Q_is_multiples_of_g=same,
        kernel_vector=(),
        kernel_vector_nonzero=True,
        case_equation_holds=True,
    )


def _check_ray_input(F: BinaryForm, g: BinaryForm):
    if F.is_zero():
        from .errors import ZeroForm

        raise ZeroForm("the center must be nonzero")
    d = F.degree
    A = apolar_generators(F)
    if A.d1 < 4:
        raise CenterOnThirdSecant(f"border rank {A.d1} < 4 puts the center on the third secant variety")
    r = g.degree
    if r <= 3:
        raise DegreeTooSmall(f"deg g = {r} must exceed 3")
    if r > d - 1:
        raise DegreeMismatch(f"deg g = {r} exceeds d - 1 = {d - 1}")
    if not is_apolar_member(g, F):
        raise NotApolar(f"{g} does not annihilate {F}")
    return A


def construct_ray(
    F: BinaryForm,
    g: BinaryForm,
    free: dict | None = None,
    scale=1,
    repair: bool = True,
    repair_budget: int = 2000,
    seed: int = 0,
) -> tuple[RaySpec, VerificationReport]:
    """Build and certify the ray of rank deg g - 2 from the almost real apolar form g.

    scale multiplies the center before decomposing.  The functional L does
    not depend on it (the complex node absorbs it), but the reported
    coefficients c, d, alpha and beta do.
    """
    A = _check_ray_input(F, g)
    d, r = F.degree, g.degree
    if not check_no_proper_divisor(g, F):
        if not (repair and r >= A.d2):
            raise ProperDivisor(f"a proper divisor of {g} annihilates the center")
        g = _repair(g, F, A, repair_budget, seed)
    case = RayCase.of(root_signature(g).classification)
    nodes = nodes_of(g)
    scale = Fraction(scale)
    dec = generalized_decomposition(F.scale(scale), g, nodes)
    c, _ = _real_coefficients(case, dec)
    co = solve_coefficients(case, c, free)
    L = assemble_L(case, dec, co)
    spec = RaySpec(case, g, tuple(nodes), dec, tuple(c), co, L, scale)
    rep = verify_ray(F, L, g)
    rep.kernel_vector = _kernel_vector(case, c, co)
    rep.kernel_vector_nonzero = all(x != 0 for x in rep.kernel_vector)
    rep.case_equation_holds = case_equation(case, c, co) == 0
    if case is RayCase.DOUBLE_ROOT:
        n = next(n for n in nodes if n.multiplicity == 2)
        l, lp = n.linear_factor(), n.dual_form()
        rep.double_root_identity = (lp ** d) * (l * l * lp ** (d - 2)) == (l * lp ** (d - 1)) ** 2
    if not rep.certified:
        raise VerificationFailed(f"ray certificate failed: {rep.to_json()}")
    return spec, rep


def exact_node_member(F: BinaryForm, r: int, budget: int = 2000, seed: int = 0,
                      avoid_divisors: bool = True) -> BinaryForm | None:
    """An almost real member of (F)^perp_r whose nodes are all rational or Gaussian rational.

    Prescribing dim - 1 rational roots pins the member down up to scale; the
    member is kept when its remaining factor splits over the Gaussian
    rationals.  Deterministic for a given seed.
    """
    import numpy as np

    A = apolar_generators(F)
    layer = A.layer(r)
    k = len(layer) - 1
    if k < 0:
        return None
    pool = sorted({Fraction(a, b) for a in range(-6, 7) for b in range(1, 5)}, key=lambda t: (t.denominator, abs(t), t))
    rng = np.random.default_rng([seed, r, 7])
    tried = set()
    for attempt in range(budget):
        if attempt < len(pool) and k == 1:
            pts = (pool[attempt],)  # simplest points first for pencils
        else:
            idx = sorted(rng.choice(len(pool), size=min(k, len(pool)), replace=False))
            pts = tuple(pool[i] for i in idx)
        if pts in tried:
            continue
        tried.add(pts)
        rows = [[f.evaluate(1, t) for f in layer] for t in pts]
        ker = la.nullspace(rows, len(layer))
        if len(ker) != 1:
            continue
        cand = BinaryForm.zero(r)
        for c, f in zip(ker[0], layer):
            if c:
                cand = cand + f.scale(c)
        if cand.is_zero() or not root_signature(cand).classification.almost_real:
            continue
        try:
            nodes_of(cand)
        except IrrationalNodes:
            continue
        if not avoid_divisors or check_no_proper_divisor(cand, F):
            return cand.primitive()
    return None


def _repair(g: BinaryForm, F: BinaryForm, A, budget: int, seed: int = 0) -> BinaryForm:
    """Replace g by another almost real member of its degree with exact nodes and no apolar divisor."""
    cand = exact_node_member(F, g.degree, budget, seed)
    if cand is None:
        raise ProperDivisor(f"a proper divisor of {g} annihilates the center and repair found no exact substitute")
    return cand


# --------------------------------------------------------------------------
# numeric fallback


def construct_ray_numeric(F: BinaryForm, g: BinaryForm, free: dict | None = None, dps: int | None = None,
                          max_dps: int = 960) -> dict:
    """Floating-point version of construct_ray for witnesses with irrational nodes.

    Uses mpmath.  Eigenvalue signs are read with the tolerance reported in
    the result; this is not an interval-certified computation, and the
    report says so.  Without an explicit dps the precision doubles from 60
    until two consecutive runs agree on every inertia and on basepoint
    freeness ("stable": true).
    """
    if dps is not None:
        return _numeric_ray_at(F, g, free, dps)
    key = lambda rep: (rep["inertia_q"], rep["inertia_Q"], rep["basepoint_free"])
    prev = _numeric_ray_at(F, g, free, 60)
    cur_dps = 120
    while cur_dps <= max_dps:
        cur = _numeric_ray_at(F, g, free, cur_dps)
        if key(cur) == key(prev):
            cur["stable"] = True
            return cur
        prev, cur_dps = cur, 2 * cur_dps
    prev["stable"] = False
    return prev


def _numeric_ray_at(F: BinaryForm, g: BinaryForm, free: dict | None, dps: int) -> dict:
    import mpmath as mp

    _check_ray_input(F, g)
    d, r = F.degree, g.degree
    case = RayCase.of(root_signature(g).classification)
    with mp.workdps(dps):
        nodes = _numeric_nodes(g, mp)
        cols, layout = [], []
        for kind, pt, j in nodes:
            cols.append(_mp_node_form(kind, pt, j, d, mp))
            layout.append((kind, pt, j))
            if kind == "complex":
                cols.append([mp.conj(v) for v in cols[-1]])
                layout.append(("conj", pt, j))
        A = mp.matrix(d + 1, len(cols))
        for jc, col in enumerate(cols):
            for i, v in enumerate(col):
                A[i, jc] = v
        b = mp.matrix([mp.mpf(c.numerator) / c.denominator for c in F.coeffs])
        # normal equations: qr_solve divides by a zero pivot when a node sits at infinity
        AH = A.H
        sol = mp.lu_solve(AH * A, AH * b)
        res = mp.norm(A * sol - b)
        c_real = [mp.re(sol[i]) for i, (kind, _, _) in enumerate(layout) if kind == "real"]
        c_dbl = [mp.re(sol[i]) for i, (kind, _, _) in enumerate(layout) if kind == "double"]
        c_cplx = [sol[i] for i, (kind, _, _) in enumerate(layout) if kind == "complex"]
        c = c_real + c_dbl
        co = solve_coefficients(case, c, free)
        L = [mp.mpc(0)] * (2 * d + 1)
        reals = [pt for kind, pt, _ in nodes if kind == "real"]
        for pt, w in zip(reals, co.d):
            L = _mp_add(L, _mp_power(pt, 2 * d, mp), w)
        if case is RayCase.COMPLEX_PAIR:
            (pt,) = [pt for kind, pt, _ in nodes if kind == "complex"]
            (cc,) = c_cplx
            sq = [cc * cc * v for v in _mp_power(pt, 2 * d, mp)]
            dr = 2 * co.alpha + 2j * co.beta
            L = [acc + 2 * mp.re(dr * v) for acc, v in zip(L, sq)]
        elif case is RayCase.DOUBLE_ROOT:
            (pt,) = {pt for kind, pt, _ in nodes if kind == "double"}
            Apow = _mp_power(pt, 2 * d, mp)
            cross = _mp_mul(_mp_linear_factor(pt, mp), _mp_power(pt, 2 * d - 1, mp))
            L = _mp_add(L, Apow, co.d[-2])
            L = _mp_add(L, cross, 2 * co.d[-1])
        L = [mp.re(v) for v in L]
        Q = mp.matrix(d + 1, d + 1)
        for i in range(d + 1):
            for j in range(d + 1):
                Q[i, j] = L[i + j] / mp.binomial(2 * d, i + j)
        Hb = catalecticant_kernel(F, d)
        B = mp.matrix(d + 1, len(Hb))
        for jc, h in enumerate(Hb):
            for i, v in enumerate(h.coeffs):
                B[i, jc] = mp.mpf(v.numerator) / v.denominator
        q = B.T * Q * B
        ev_q, vec_q = mp.eigsy(q)
        ev_Q, _ = mp.eigsy(Q)
        scale_q = max(abs(v) for v in ev_q) or 1
        tol = mp.mpf(10) ** (-(dps // 2))
        inert = lambda ev, s: (sum(1 for v in ev if v > tol * s), sum(1 for v in ev if abs(v) <= tol * s),
                               sum(1 for v in ev if v < -tol * s))
        iq = inert(ev_q, scale_q)
        iQ = inert(ev_Q, max(abs(v) for v in ev_Q) or 1)
        kernel = []
        for jv in range(len(ev_q)):
            if abs(ev_q[jv]) <= tol * scale_q:
                v = B * vec_q[:, jv]
                kernel.append([v[i] for i in range(d + 1)])
        bpf = _numeric_basepoint_free(kernel, mp, tol)
        return {
            "numeric": True,
            "tolerance": mp.nstr(tol, 5),
            "precision_digits": dps,
            "case": case.value,
            "g": str(g),
            "residual": mp.nstr(res, 5),
            "c": [mp.nstr(x, 15) for x in c],
            "d": [mp.nstr(x, 15) for x in co.d],
            "alpha": None if co.alpha is None else mp.nstr(co.alpha, 15),
            "beta": None if co.beta is None else mp.nstr(co.beta, 15),
            "inertia_q": list(iq),
            "inertia_Q": list(iQ),
            "psd": iq[2] == 0,
            "rank": iq[0] + iq[2],
            "expected_rank": r - 2,
            "lorentz_Q": iQ[2] == 1,
            "basepoint_free": bpf,
            "case_equation_residual": mp.nstr(abs(case_equation(case, c, co)), 5),
        }


def _numeric_nodes(g: BinaryForm, mp) -> list:
    """(kind, point, j) per basis functional; kind in real / complex / double."""
    from . import _upoly as up

    out = []
    inf = g.infinity_multiplicity
    if inf == 1:
        out.append(("real", (mp.mpf(0), mp.mpf(1)), 0))
    elif inf == 2:
        out += [("double", (Fraction(0), Fraction(1)), 0), ("double", (Fraction(0), Fraction(1)), 1)]
    parts = up.squarefree_decomposition(g.to_upoly())
    for s, k in parts:
        if k == 2 and len(s) == 2:
            t = Fraction(-s[0], s[1])
            out += [("double", (Fraction(1), t), 0), ("double", (Fraction(1), t), 1)]
            continue
        roots = mp.polyroots([mp.mpf(v) for v in reversed(s)], maxsteps=200, extraprec=4 * mp.mp.dps)
        for z in roots:
            if abs(mp.im(z)) <= mp.mpf(10) ** (-(mp.mp.dps // 2)) * (1 + abs(z)):
                out.append(("real", (mp.mpf(1), mp.re(z)), 0))
            elif mp.im(z) > 0:
                out.append(("complex", (mp.mpf(1), z), 0))
    return out


def _mp_power(pt, n: int, mp) -> list:
    p, q = (mp.mpf(v.numerator) / v.denominator if isinstance(v, Fraction) else v for v in pt)
    return [mp.binomial(n, k) * p ** (n - k) * q**k for k in range(n + 1)]


def _mp_linear_factor(pt, mp) -> list:
    p, q = (mp.mpf(v.numerator) / v.denominator if isinstance(v, Fraction) else v for v in pt)
    return [-q, p]


def _mp_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _mp_add(acc: list, v: list, w) -> list:
    return [a + w * b for a, b in zip(acc, v)]


def _mp_node_form(kind, pt, j, d, mp) -> list:
    if j == 0:
        return _mp_power(pt, d, mp)
    return _mp_mul(_mp_linear_factor(pt, mp), _mp_power(pt, d - 1, mp))


def _numeric_basepoint_free(kernel: list, mp, tol) -> bool:
    if not kernel:
        return True
    first = kernel[0]
    lead = max(range(len(first)), key=lambda i: abs(first[i]))
    coeffs = list(first)
    while len(coeffs) > 1 and abs(coeffs[-1]) <= tol * abs(first[lead]):
        coeffs.pop()
    at_infinity = len(coeffs) < len(first)
    cands = []
    if len(coeffs) > 1:
        cands = [(mp.mpf(1), z) for z in mp.polyroots(list(reversed(coeffs)), maxsteps=200, extraprec=2 * mp.mp.dps)]
    if at_infinity:
        cands.append((mp.mpf(0), mp.mpf(1)))
    n = len(first) - 1
    for p, q in cands:
        norm = abs(p) + abs(q)
        if all(abs(sum(v[i] * p ** (n - i) * q**i for i in range(n + 1))) <= mp.sqrt(tol) * max(1, norm) ** n
               * max(abs(x) for x in v) for v in kernel):
            return False
    return True


# --------------------------------------------------------------------------
# diagnostics


def reduction_of_order(L: BinaryForm, F: BinaryForm) -> dict:
    """Compare kernels of the restricted form with those cut out by L_perp and its half power.

    L_perp is the lower generator of the apolar ideal of L; its reduction of
    order keeps each irreducible factor with exponent ceil(m / 2), so L_perp
    divides its square.  Purely diagnostic.
    """
    d = F.degree
    Lp = apolar_generators(L).f_perp
    tilde = BinaryForm((Fraction(1),))
    for fac, m in factor_over_rationals(Lp):
        tilde = tilde * fac ** ((m + 1) // 2)
    H = catalecticant_kernel(F, d)
    Q = qf.middle_catalecticant(L)
    kq = qf.pull_back(qf.kernel(qf.restrict(Q, H)), H)

    def in_H(forms):
        if not forms:
            return []
        rows = [[sum((a * b for a, b in zip(f.coeffs, h)), Fraction(0)) for f in forms] for h in _H_equations(F)]
        ker = la.nullspace(rows, len(forms)) if rows else [[Fraction(int(i == j)) for j in range(len(forms))] for i in range(len(forms))]
        return [sum((f.scale(c) for c, f in zip(v, forms) if c), BinaryForm.zero(d)) for v in ker]

    def rows_of(forms):
        return [list(f.coeffs) for f in forms]

    mt = in_H(multiples_basis(tilde, d)) if tilde.degree <= d else []
    mp = in_H(multiples_basis(Lp, d)) if Lp.degree <= d else []
    return {
        "L_perp": str(Lp),
        "reduced": str(tilde),
        "tilde_cap_H_equals_kernel": la.same_span(rows_of(mt), rows_of(kq), d + 1),
        "kernel_equals_L_perp_cap_H": la.same_span(rows_of(mp), rows_of(kq), d + 1),
    }


def _H_equations(F: BinaryForm) -> list[list[Fraction]]:
    """Coefficient functional whose kernel is (F)^perp_d."""
    from .corepoly import pairing_matrix

    return [list(row) for row in pairing_matrix(F, F.degree)]
