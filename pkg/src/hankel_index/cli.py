"""Command-line interface.

Every subcommand prints one JSON document (compact with --json, indented
otherwise).  Exit codes: 0 success, 2 invalid input, 3 an Unknown verdict
or an open rank interval, 1 a failed internal certificate.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _linalg as la
from . import quadforms as qf
from .apolarity import apolar_generators, catalecticant_kernel, generalized_decomposition, nodes_of
from .corepoly import BinaryForm, apolar_pair, parse_form, root_signature
from .curve import bound_report, hankel_index, make_curve
from .errors import GenericTypeRequired, HankelError, IrrationalNodes, OpenInterval, VerificationFailed
from .ranks import DEFAULT_BUDGET, RootCondition, arrank, exists_almost_real, rank_report

EXIT_OK, EXIT_BUG, EXIT_INVALID, EXIT_UNKNOWN = 0, 1, 2, 3


class _Unknown(Exception):
    """Carries a finished payload whose verdict is Unknown or open."""

    def __init__(self, payload: dict):
        super().__init__("unknown")
        self.payload = payload


# --------------------------------------------------------------------------
# single-form commands


def cmd_apolar(args) -> dict:
    F = parse_form(args.form)
    return apolar_generators(F).to_json()


def cmd_ranks(args) -> dict:
    F = parse_form(args.form)
    out = rank_report(F, budget=args.budget, seed=args.seed).to_json()
    if not all(out[k]["exact"] for k in ("rbrank", "rrank", "arrank")):
        raise _Unknown(out)
    return out


def cmd_decompose(args) -> dict:
    F = parse_form(args.form)
    if args.witness:
        g = parse_form(args.witness)
    else:
        g = apolar_generators(F).f_perp
    return generalized_decomposition(F, g, nodes_of(g)).to_json()


def _ray_witness(F: BinaryForm, args) -> BinaryForm:
    if args.witness:
        return parse_form(args.witness)
    from .rays import exact_node_member

    ar = arrank(F, args.budget, args.seed)
    if not ar.exact:
        raise OpenInterval(f"almost real rank is only known to lie in [{ar.lo}, {ar.hi}]")
    g = exact_node_member(F, ar.lo, seed=args.seed)
    if g is None:
        if args.numeric_fallback and ar.witness is not None:
            return ar.witness
        raise IrrationalNodes("no almost real witness with exact nodes found; try --numeric-fallback")
    return g


def _free_choices(args) -> dict | None:
    if not args.free:
        return None
    out = {}
    for item in args.free:
        key, _, val = item.partition("=")
        if key == "d":
            out["d"] = [Fraction(v) for v in val.split(",")]
        elif key in ("k", "v"):
            out[key] = Fraction(val)
        else:
            raise argparse.ArgumentTypeError(f"unknown free choice {key!r}; use d=, k= or v=")
    return out


def cmd_ray(args) -> dict:
    from .rays import construct_ray, construct_ray_numeric

    F = parse_form(args.form)
    g = _ray_witness(F, args)
    free = _free_choices(args)
    try:
        spec, rep = construct_ray(F, g, free=free, scale=Fraction(args.scale), seed=args.seed)
    except IrrationalNodes:
        if not args.numeric_fallback:
            raise
        return {"numeric": construct_ray_numeric(F, g, free)}
    out = {"ray": spec.to_json(), "verification": rep.to_json()}
    if args.emit_matrix:
        Q = qf.middle_catalecticant(spec.L)
        q = qf.restrict(Q, catalecticant_kernel(F, F.degree))
        out["Q"] = Q.to_json()
        out["q"] = q.to_json()
    return out


def cmd_index(args) -> dict:
    F = parse_form(args.form)
    c = make_curve(F)
    eta = hankel_index(c, budget=args.budget, seed=args.seed, with_ray=not args.no_ray,
                       numeric_fallback=args.numeric_fallback)
    out = bound_report(c, eta)
    out["degree"] = c.d
    out["apolar_type"] = list(c.apolar.type)
    out["hankel_index"] = eta.to_json()
    if not eta.exact:
        raise _Unknown(out)
    return out


# --------------------------------------------------------------------------
# sampling experiments


@dataclass(frozen=True)
class ExperimentConfig:
    degree: int
    samples: int
    box: tuple[int, int] = (-20, 20)
    seed: int = 0
    workers: int = 1
    budget: int = DEFAULT_BUDGET
    stratify: int | None = None

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("the sample count must be positive")
        if self.box[0] > self.box[1]:
            raise ValueError("empty coefficient box")


def _sample_rng(cfg: ExperimentConfig, i: int) -> np.random.Generator:
    # one independent stream per sample index, so output ignores the worker count
    return np.random.default_rng([cfg.seed, cfg.degree, cfg.stratify or 0, i])


def random_form(d: int, box: tuple[int, int], rng: np.random.Generator) -> BinaryForm:
    while True:
        f = BinaryForm(tuple(int(c) for c in rng.integers(box[0], box[1] + 1, size=d + 1)))
        if not f.is_zero():
            return f


def stratum_form(r: int, d: int, box: tuple[int, int], rng: np.random.Generator) -> tuple[BinaryForm, BinaryForm]:
    """A form with an almost real apolar member g of degree r: g is a quadratic times r - 2 lines."""
    lo, hi = box
    while True:
        g = BinaryForm(tuple(int(c) for c in rng.integers(lo, hi + 1, size=3)))
        for _ in range(r - 2):
            p, q = (int(v) for v in rng.integers(lo, hi + 1, size=2))
            g = g * BinaryForm((p, q))
        if g.is_zero() or g.degree != r or not root_signature(g).classification.almost_real:
            continue
        # forms annihilated by g: kernel of F -> <g, F>
        rows = [list(col) for col in zip(*[apolar_pair(g, BinaryForm.monomial(d - j, j)).coeffs for j in range(d + 1)])]
        basis = la.nullspace(rows, d + 1)
        weights = rng.integers(lo, hi + 1, size=len(basis))
        coeffs = [sum(Fraction(int(w)) * v[i] for w, v in zip(weights, basis)) for i in range(d + 1)]
        F = BinaryForm(tuple(coeffs))
        if not F.is_zero():
            return F.primitive(), g


def _one_sample(job) -> tuple[str, int | None, str]:
    cfg, i = job
    rng = _sample_rng(cfg, i)
    if cfg.stratify is None:
        F = random_form(cfg.degree, cfg.box, rng)
    else:
        F, _ = stratum_form(cfg.stratify, cfg.degree, cfg.box, rng)
    ar = arrank(F, cfg.budget, cfg.seed)
    return ("exact" if ar.exact else "open", ar.lo if ar.exact else None, str(F))


def sample_typical(cfg: ExperimentConfig) -> dict:
    jobs = [(cfg, i) for i in range(cfg.samples)]
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            results = list(pool.map(_one_sample, jobs, chunksize=8))
    else:
        results = [_one_sample(j) for j in jobs]
    hist = Counter(r for kind, r, _ in results if kind == "exact")
    opened = [f for kind, _, f in results if kind == "open"]
    out = {
        "degree": cfg.degree,
        "samples": cfg.samples,
        "box": list(cfg.box),
        "seed": cfg.seed,
        "histogram": {str(k): hist[k] for k in sorted(hist)},
        "open": len(opened),
        "open_forms": opened,
    }
    if cfg.stratify is not None:
        out["stratify"] = cfg.stratify
        out["all_at_most_stratum"] = all(k <= cfg.stratify for k in hist) and not opened
    else:
        d = cfg.degree
        lo, hi = (d + 2) // 2, max((d + 2) // 2, d - 2)
        inside = sum(v for k, v in hist.items() if lo <= k <= hi)
        collapsed = sum(hist.values())
        out["typical_range"] = [lo, hi]
        out["fraction_in_typical_range"] = inside / collapsed if collapsed else None
    return out


def cmd_sample_typical(args) -> dict:
    if args.degree < 5:
        raise GenericTypeRequired("sample-typical needs degree at least 5")
    cfg = ExperimentConfig(args.degree, args.samples, tuple(args.box), args.seed, args.workers, args.budget,
                           args.stratify)
    return sample_typical(cfg)


def typical_test(F: BinaryForm, budget: int = DEFAULT_BUDGET, seed: int = 0) -> dict:
    """Whether every member of the layer below arrank has at least two complex pairs."""
    A = apolar_generators(F)
    d = F.degree
    if A.d1 != (d + 2) // 2:
        raise GenericTypeRequired(f"apolar type {A.type} is not the generic type for degree {d}")
    ar = arrank(A, budget, seed)
    if not ar.exact:
        raise OpenInterval(f"almost real rank is only known to lie in [{ar.lo}, {ar.hi}]")
    r = ar.lo
    layer = A.layer(r - 1)
    ans = exists_almost_real(layer, RootCondition.FEW_MISSING_REAL, budget, seed)
    verdict = {"No": True, "Yes": False}.get(ans.verdict)
    return {
        "form": str(F),
        "arrank": r,
        "layer_degree": r - 1,
        "layer_dimension": len(layer),
        "typical": verdict,
        "answer": ans.to_json(),
    }


def cmd_typical_test(args) -> dict:
    out = typical_test(parse_form(args.form), args.budget, args.seed)
    if out["typical"] is None:
        raise _Unknown(out)
    return out


# --------------------------------------------------------------------------
# plumbing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="compact single-line JSON output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search samples per layer")
    common.add_argument("--numeric-fallback", action="store_true",
                        help="allow a high-precision floating point ray when nodes are irrational")

    p = argparse.ArgumentParser(prog="hankel-index", parents=[common],
                                description="Apolarity, rank ladders and Hankel indices of real binary forms.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("apolar", parents=[common], help="apolar ideal generators and type")
    s.add_argument("form")
    s.set_defaults(func=cmd_apolar)

    s = sub.add_parser("ranks", parents=[common], help="the five ranks with witnesses and certificates")
    s.add_argument("form")
    s.set_defaults(func=cmd_ranks)

    s = sub.add_parser("decompose", parents=[common], help="generalized decomposition along an apolar form")
    s.add_argument("form")
    s.add_argument("--witness", help="apolar form to decompose along (default: the lowest generator)")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("ray", parents=[common], help="construct and certify a low-rank extreme ray")
    s.add_argument("form")
    s.add_argument("--witness", help="almost real apolar form (default: found at the almost real rank)")
    s.add_argument("--free", action="append", metavar="KEY=VALUE",
                   help="free choices: d=1,1,... or k=1 or v=1")
    s.add_argument("--scale", default="1", help="rational factor applied to the center before decomposing")
    s.add_argument("--emit-matrix", action="store_true", help="include the full and restricted matrices")
    s.set_defaults(func=cmd_ray)

    s = sub.add_parser("index", parents=[common], help="Hankel and Green-Lazarsfeld indices of the projected curve")
    s.add_argument("form")
    s.add_argument("--no-ray", action="store_true", help="skip the ray attached to the index")
    s.set_defaults(func=cmd_index)

    s = sub.add_parser("sample-typical", parents=[common], help="histogram of almost real ranks of random forms")
    s.add_argument("degree", type=int)
    s.add_argument("-N", "--samples", type=int, default=200)
    s.add_argument("--box", type=int, nargs=2, default=[-20, 20], metavar=("LO", "HI"))
    s.add_argument("--stratify", type=int, metavar="R", help="sample forms with an almost real apolar form of degree R")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_sample_typical)

    s = sub.add_parser("typical-test", parents=[common], help="decide the layer test below the almost real rank")
    s.add_argument("form")
    s.set_defaults(func=cmd_typical_test)
    return p


def _emit(payload: dict, compact: bool) -> None:
    if compact:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(json.dumps(payload, sort_keys=True, indent=2))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
        code = EXIT_OK
    except _Unknown as u:
        payload, code = u.payload, EXIT_UNKNOWN
    except OpenInterval as exc:
        payload, code = {"error": "OpenInterval", "message": str(exc)}, EXIT_UNKNOWN
    except VerificationFailed as exc:
        payload, code = {"error": "VerificationFailed", "message": str(exc)}, EXIT_BUG
    except HankelError as exc:
        payload = {"error": type(exc).__name__, "message": str(exc)}
        if hasattr(exc, "position"):
            payload["position"] = exc.position
        code = EXIT_INVALID
    except (ValueError, argparse.ArgumentTypeError) as exc:
        payload, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_INVALID
    _emit(payload, args.json)
    return code


if __name__ == "__main__":
    sys.exit(main())
