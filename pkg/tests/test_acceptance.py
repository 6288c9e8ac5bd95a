"""The seven acceptance criteria, one test each, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` or as a script.
"""

import time
from fractions import Fraction
from math import comb

import numpy as np
import pytest

from hankel_index import _linalg as la
from hankel_index import quadforms as qf
from hankel_index.apolarity import apolar_generators, catalecticant_kernel, form_from_apolar
from hankel_index.cli import ExperimentConfig, random_form, sample_typical
from hankel_index.corepoly import BinaryForm, form, form_gcd
from hankel_index.curve import bound_report, gl_index, hankel_index, make_curve
from hankel_index.errors import HankelError
from hankel_index.ranks import RootCondition, arrank, rank_report, verify_certificate, verify_witness
from hankel_index.rays import RayCase, case_equation, construct_ray

BOX = (-20, 20)


@pytest.fixture
def report(capsys):
    """Print one PASS/FAIL line straight to the terminal and return the verdict."""

    def emit(n, ok, detail, elapsed, limit=None):
        within = limit is None or elapsed < limit
        status = "PASS" if ok and within else "FAIL"
        timing = f"{elapsed:.2f}s" + (f" (limit {limit}s)" if limit else "")
        with capsys.disabled():
            print(f"\ncriterion {n}: {status}  {detail}  [{timing}]")
        return ok and within

    return emit


# -- 1 ------------------------------------------------------------------------------------


def test_criterion_1_golden_case(report):
    t = time.perf_counter()
    F, g = form("x^3*y^3"), form("x^4-y^4")
    spec, rep = construct_ray(F, g, free={"d": [1, 1], "k": -1}, scale=80)
    co = spec.coefficients
    M = [[3, 1, 1], [1, 1, -1], [1, -1, 3]]
    q = qf.restrict(qf.middle_catalecticant(spec.L), catalecticant_kernel(F, 6))
    checks = {
        "free choices": co.d == (1, 1) and (co.alpha, co.beta) == (Fraction(-1, 4), Fraction(1, 4)),
        "q = [[M,M],[M,M]]": q.rows() == [a + a for a in M] * 2,
        "inertia (2,4,0)": qf.inertia(q) == (2, 4, 0),
        "basepoint free": rep.basepoint_free,
    }
    # kernel vectors in coordinates w_j = C(6, j) (-1)^j v_(6-j)
    mapped = [[comb(6, j) * (-1) ** j * f.coeffs[6 - j] for j in range(7)] for f in rep.kernel_forms]
    basis = [[-1, 12, 0, 0, 0, 0, 1], [0, -1, 0, 0, 0, 1, 0], [-1, 0, 0, 0, 15, 0, 0], [-1, 12, 15, 0, 0, 0, 0]]
    checks["kernel span"] = la.same_span(mapped, basis, 7)
    c = make_curve(F)
    eta = hankel_index(c, with_ray=False)
    checks["eta = 2"] = eta.exact and eta.lo == 2
    checks["alpha = 1"] = gl_index(c) == 1
    elapsed = time.perf_counter() - t
    failed = [k for k, v in checks.items() if not v]
    assert report(1, not failed, f"golden ray; failed: {failed or 'none'}", elapsed, 1)


# -- 2 ------------------------------------------------------------------------------------


def _expected_monomial_arrank(d, i):
    return {0: 1, 1: 2, 2: d - 1}.get(i, d - 2)


def test_criterion_2_monomial_table(report):
    t = time.perf_counter()
    bad = []
    kinds = set()
    for d in range(3, 13):
        for i in range(0, d // 2 + 1):
            F = BinaryForm.monomial(d - i, i)
            A = apolar_generators(F)
            certs = {}
            iv = arrank(F, certs=certs)
            if not iv.exact or iv.lo != _expected_monomial_arrank(d, i):
                bad.append((d, i, "value", iv.lo, iv.hi))
                continue
            for r in range(1, iv.lo):
                W = A.layer(r)
                if not W:
                    kinds.add("empty_space")
                    continue
                cert = certs.get(("arrank", r))
                if cert is None or not verify_certificate(cert, W, RootCondition.ALMOST_REAL):
                    bad.append((d, i, "layer", r))
                else:
                    kinds.add(cert["kind"])
    elapsed = time.perf_counter() - t
    assert report(2, not bad, f"d=3..12 table; certificate kinds {sorted(kinds)}; bad {bad[:5]}", elapsed, 60)


# -- 3 ------------------------------------------------------------------------------------


def test_criterion_3_rank_ladder(report):
    t = time.perf_counter()
    per_degree = 500
    violations, total, collapsed = [], 0, 0
    for d in range(4, 11):
        rng = np.random.default_rng([2024, d])
        for _ in range(per_degree):
            F = random_form(d, BOX, rng)
            rep = rank_report(F, real_budget=256)
            total += 1
            collapsed += rep.arrank.exact
            ok = (rep.cbrank <= rep.crank and rep.cbrank <= rep.arrank.lo
                  and rep.arrank.hi <= rep.rrank.hi and rep.arrank.hi <= d - 1)
            for kind, (g, _) in rep.witnesses.items():
                ok = ok and verify_witness(kind, g, F)
            if not ok:
                violations.append(str(F))
    frac = collapsed / total
    elapsed = time.perf_counter() - t
    assert report(3, not violations and frac >= 0.99,
                  f"{total} forms, collapsed {frac:.4f}, violations {len(violations)}", elapsed, 300)


# -- 4 ------------------------------------------------------------------------------------


def _ray_case(F, g, case):
    t = time.perf_counter()
    spec, rep = construct_ray(F, g)
    d, r = F.degree, spec.g.degree
    dim_h = len(catalecticant_kernel(F, d))
    ok = (spec.case is case and rep.certified and rep.inertia_q == (r - 2, dim_h - (r - 2), 0)
          and rep.inertia_Q[2] == 1 and rep.basepoint_free
          and case_equation(spec.case, spec.c, spec.coefficients) == 0)
    return ok, time.perf_counter() - t


def test_criterion_4_three_ray_cases(report):
    h = form("x^5+y^5+x^2*y^3")
    g_simple = form("x^3*y-x*y^3") * form("x-2*y") * form("x+3*y")
    g_double = form("x*y") * form("x-y") ** 2 * form("x+y") * form("x-3*y")
    cases = {
        "SimpleReal": (form_from_apolar(g_simple, h), g_simple, RayCase.SIMPLE_REAL),
        "ComplexPair": (form("x^3*y^3"), form("x^4-y^4"), RayCase.COMPLEX_PAIR),
        "DoubleRoot": (form_from_apolar(g_double, h), g_double, RayCase.DOUBLE_ROOT),
    }
    results = {name: _ray_case(*args) for name, args in cases.items()}
    ok = all(r[0] and r[1] < 10 for r in results.values())
    detail = ", ".join(f"{k} {'ok' if v[0] else 'bad'} {v[1]:.2f}s" for k, v in results.items())
    assert report(4, ok, detail, max(v[1] for v in results.values()), 10)


# -- 5 ------------------------------------------------------------------------------------


def _center_with_rational_lines(d, rng):
    r = (d + 2) // 2
    g = BinaryForm((1,))
    for a in rng.choice(np.arange(-6, 7), size=r, replace=False):
        g = g * BinaryForm.linear(int(a), 1)
    while True:
        h = random_form(d + 2 - r, (-5, 5), rng)
        if form_gcd(g, h).degree == 0:
            return form_from_apolar(g, h)


def test_criterion_5_bound_chain(report):
    t = time.perf_counter()
    bad, checked, rays = [], 0, 0
    for d in range(6, 11):
        rng = np.random.default_rng([77, d])
        for k in range(40):
            F = random_form(d, BOX, rng)
            try:
                c = make_curve(F)
            except HankelError:
                continue
            # attach rays on a few curves to check the certified rank meets eta
            eta = hankel_index(c, with_ray=k < 4, ray_budget=100)
            if not eta.exact:
                continue
            rep = bound_report(c, eta)
            checked += 1
            if not (rep["lower_bound_holds"] and rep["range_holds"]):
                bad.append(str(F))
            if eta.ray is not None and "verification" in eta.ray:
                rays += 1
                v = eta.ray["verification"]
                if not (v["certified"] and v["rank"] == eta.lo):
                    bad.append(("ray", str(F)))
    # centers with an all-real apolar form of rational roots, so exact rays exist
    for d in range(6, 11):
        rng = np.random.default_rng([78, d])
        for _ in range(3):
            c = make_curve(_center_with_rational_lines(d, rng))
            eta = hankel_index(c, ray_budget=100)
            if not eta.exact:
                continue
            rep = bound_report(c, eta)
            checked += 1
            if not (rep["lower_bound_holds"] and rep["range_holds"]):
                bad.append(str(c.center))
            if eta.ray is not None and "verification" in eta.ray:
                rays += 1
                v = eta.ray["verification"]
                if not (v["certified"] and v["rank"] == eta.lo):
                    bad.append(("ray", str(c.center)))
    gaps = {}
    for d in (8, 10, 12):
        rep = bound_report(make_curve(BinaryForm.monomial((d + 1) // 2, d // 2)))
        gaps[d] = rep["gap"]
        if rep["gap"] != (d + 1) // 2 - 3 or rep["gap"] < 1:
            bad.append(("gap", d, rep["gap"]))
    elapsed = time.perf_counter() - t
    assert report(5, not bad, f"{checked} curves, {rays} rays, monomial gaps {gaps}, bad {bad[:3]}", elapsed)


# -- 6 ------------------------------------------------------------------------------------


def test_criterion_6_typical_ranks(report):
    t = time.perf_counter()
    h7 = sample_typical(ExperimentConfig(7, 200, BOX, 0))
    h5 = sample_typical(ExperimentConfig(5, 200, BOX, 0))
    hist7 = {int(k): v for k, v in h7["histogram"].items()}
    hist5 = {int(k): v for k, v in h5["histogram"].items()}
    n7, n5 = sum(hist7.values()), sum(hist5.values())
    ok7 = n7 and (hist7.get(4, 0) + hist7.get(5, 0)) / n7 >= 0.99 and hist7.get(4) and hist7.get(5)
    ok5 = n5 and hist5.get(3, 0) / n5 >= 0.99
    elapsed = time.perf_counter() - t
    assert report(6, bool(ok7 and ok5), f"d=7 {hist7} open {h7['open']}; d=5 {hist5} open {h5['open']}", elapsed, 180)


# -- 7 ------------------------------------------------------------------------------------


def _random_functional(d2, rng):
    """Half dense random forms, half short sums of powers so kernels are nontrivial."""
    if rng.random() < 0.5:
        return random_form(d2, (-9, 9), rng)
    L = BinaryForm.zero(d2)
    for _ in range(int(rng.integers(1, d2 // 2 + 1))):
        a, b = (int(v) for v in rng.integers(-4, 5, size=2))
        if a or b:
            L = L + BinaryForm.linear(a, b) ** d2 * int(rng.choice([-2, -1, 1, 2]))
    return L if not L.is_zero() else random_form(d2, (-9, 9), rng)


def test_criterion_7_linear_algebra_oracles(report):
    t = time.perf_counter()
    rng = np.random.default_rng(7)
    bad, nontrivial = [], 0
    for d2 in (8, 12, 16):
        d = d2 // 2
        for _ in range(100):
            L = _random_functional(d2, rng)
            Q = qf.middle_catalecticant(L)
            ker = [list(v) for v in qf.kernel(Q)]
            ref = [list(f.coeffs) for f in catalecticant_kernel(L, d)]
            nontrivial += bool(ref)
            if not la.same_span(ker, ref, d + 1):
                bad.append(("kernel", str(L)))
            p, _, n = qf.inertia(Q)
            for _ in range(5):
                k = int(rng.integers(1, d + 1))
                idx = sorted(rng.choice(d + 1, size=k, replace=False).tolist())
                sp, _, sn = qf.inertia(Q.principal_submatrix(idx))
                if sp > p or sn > n:
                    bad.append(("interlacing", str(L), idx))
    elapsed = time.perf_counter() - t
    assert report(7, not bad, f"300 functionals ({nontrivial} with nonzero kernel), bad {bad[:3]}", elapsed)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
