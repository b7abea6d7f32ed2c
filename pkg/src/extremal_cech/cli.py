"""Command-line front end.

Subcommands: generate, filtration, betti, persistence, radii, oracle,
verify.  Exit codes: 0 success / all PASS, 1 claim or check FAIL, 2 usage
error (argparse default), 3 numeric or controller failure (delta controller
exhausted, class overlap, emptiness assertion, subset budget).

Outputs are deterministic: identical invocations produce byte-identical
files; nothing embeds timestamps.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import complexgen, construct, homology, oracle, verify
from .complexgen import NotCriticalError, OverlapError
from .construct import DeltaExhaustedError
from .oracle import BudgetExceededError

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3

_KIND_CHOICES = ("even", "3d", "odd", "suspended")


def _add_construction_args(p, kinds=_KIND_CHOICES):
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--k", type=int, default=None, help="circle-count parameter")
    p.add_argument("--n", type=int, required=True, help="points-per-circle parameter")
    p.add_argument("--delta", default="auto",
                   help="arc half-width; 'auto' engages the halving controller")
    p.add_argument("--h", type=float, default=0.5, help="apex height (suspended kind)")


def _parse_delta(value):
    return "auto" if value == "auto" else float(value)


def _default_k(args):
    if args.k is not None:
        return args.k
    if args.kind == "3d":
        return 1
    raise SystemExit(f"error: --k is required for kind {args.kind}")


def _build_plain(args) -> construct.PointSet:
    """Construct a point set without downstream validation (generate only).
    Explicit deltas are used verbatim; 'auto' takes the controller default."""
    delta = _parse_delta(args.delta)
    k = _default_k(args)
    if args.kind == "even":
        return construct.build_even(k, args.n)
    if delta == "auto":
        delta = construct.default_delta(args.n)
    if args.kind == "3d":
        return construct.build_3d(args.n, delta)
    if args.kind == "odd":
        return construct.build_odd(k, args.n, delta)
    return construct.build_suspended(k, args.n, delta, args.h)


def _build_validated(args):
    if args.kind == "suspended":
        raise SystemExit("error: the suspended kind has no combinatorial filtration; "
                         "use `verify --suspension` or `generate`")
    return construct.build_validated(args.kind, k=_default_k(args), n=args.n,
                                     delta=_parse_delta(args.delta))


def _cmd_generate(args) -> int:
    if args.delta == "auto" and args.kind in ("3d", "odd"):
        ps, _, _ = _build_validated(args)
    else:
        ps = _build_plain(args)
    construct.save_points(ps, args.output)
    print(f"wrote {len(ps)} points to {args.output}")
    return EXIT_OK


def _cmd_filtration(args) -> int:
    if args.points:
        ps = construct.load_points(args.points)
        fc = complexgen.build_filtration(ps, threads=args.threads)
    else:
        ps, fc, _ = _build_validated(args)
    complexgen.save_filtration(fc, args.output)
    print(f"wrote {len(fc)} simplices to {args.output}")
    return EXIT_OK


def _cmd_betti(args) -> int:
    _, fc, _ = _build_validated(args)
    vec = homology.betti_of_subcomplex(fc, args.radius, reduced=not args.unreduced,
                                       eps=1e-12)
    if args.p is not None:
        print(vec[args.p])
    else:
        print(" ".join(str(b) for b in vec))
    return EXIT_OK


def _cmd_persistence(args) -> int:
    _, fc, _ = _build_validated(args)
    pd = homology.reduce(fc, reduced=not args.unreduced)
    homology.save_diagram(pd, args.output)
    print(f"wrote {len(pd.pairs)} pairs to {args.output}")
    if args.svg:
        homology.diagram_svg(pd, args.svg)
        print(f"wrote scatter to {args.svg}")
    return EXIT_OK


def _cmd_radii(args) -> int:
    _, fc, thresholds = _build_validated(args)
    print("touch short count      min_value             max_value")
    for cls, (lo, hi, count) in sorted(fc.class_ranges().items()):
        print(f"{cls[0]:5d} {cls[1]:5d} {count:5d} {format(lo, '.17g'):>22s} "
              f"{format(hi, '.17g'):>22s}")
    print("thresholds:")
    for th in thresholds:
        print(f"  after {th.below}: {format(th.rho, '.17g')}")
    return EXIT_OK


def _cmd_oracle(args) -> int:
    ps, fc, thresholds = _build_validated(args)
    maxdim = args.maxdim if args.maxdim is not None else ps.dim
    rep = oracle.enumeration_matches_oracle(ps, maxdim, budget=args.budget,
                                            strict=not args.relaxed)
    print(f"enumeration vs empty-sphere oracle (maxdim {maxdim}): "
          f"{rep.n_enumerated} enumerated, {rep.n_oracle} oracle, "
          f"{len(rep.missing)} missing, {len(rep.extra)} extra -> "
          f"{'PASS' if rep.ok else 'FAIL'}")
    if args.diff_csv and (rep.missing or rep.extra):
        with open(args.diff_csv, "w") as fh:
            fh.write("side,vertices\n")
            for v in rep.missing:
                fh.write(f"missing,{' '.join(map(str, v))}\n")
            for v in rep.extra:
                fh.write(f"extra,{' '.join(map(str, v))}\n")
    ok = rep.ok
    pmax = min(ps.dim - 1, fc.max_dim())
    for th in thresholds:
        eq = oracle.cech_equals_alpha_betti(ps, th.rho, pmax, fc=fc, budget=args.budget)
        print(f"cech vs alpha at rho={th.rho:.9g}: {eq.cech_vector} vs "
              f"{eq.alpha_vector} -> {'PASS' if eq.ok else 'FAIL'}")
        ok &= eq.ok
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_verify(args) -> int:
    claims = []
    if args.theorem == "3.1":
        claims += verify.verify_betti_3d(args.n)
    elif args.theorem == "2.1":
        claims += verify.verify_betti_even(args.k or 2, args.n)
    elif args.theorem == "4.1":
        claims += verify.verify_betti_odd(args.k or 1, args.n)
    if args.suspension:
        claims += verify.verify_suspension(args.k or 2, args.n)
    if args.radii:
        claims += verify.verify_radius_formulas(args.k or 2, args.n)
    if args.hypotheses:
        claims += verify.verify_hypotheses(args.k or 1, args.n)
    if args.all:
        claims += verify.verify_betti_3d(2)
        claims += verify.verify_betti_even(2, 5)
        claims += verify.verify_betti_odd(1, 2)
        claims += verify.verify_betti_odd(2, 2)
        claims += verify.verify_radius_formulas(2, 5)
        claims += verify.verify_hypotheses(1, 2)
        claims += verify.verify_suspension(2, 2)
    if not claims:
        raise SystemExit("error: nothing selected; pass --theorem/--suspension/"
                         "--radii/--hypotheses/--all")
    for line in verify.claims_lines(claims):
        print(line)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(verify.claims_csv(claims))
    n_fail = sum(1 for c in claims if c.status == verify.FAIL)
    print(f"{len(claims)} claims, {n_fail} failures")
    return EXIT_OK if n_fail == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extremal-cech",
        description="Extremal point sets for Cech/Alpha complexes: generation, "
                    "filtrations, persistence, and claim verification.")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker cap for radius evaluation "
                             "(default: EXTREMAL_CECH_THREADS or 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a point-set CSV")
    _add_construction_args(p)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("filtration", help="write the radius-sorted filtration")
    _add_construction_args(p, kinds=("even", "3d", "odd"))
    p.add_argument("--points", help="read a point-set CSV instead of constructing")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_filtration)

    p = sub.add_parser("betti", help="Betti numbers of the alpha sublevel complex")
    _add_construction_args(p, kinds=("even", "3d", "odd"))
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--p", type=int, default=None, help="print one Betti number only")
    p.add_argument("--unreduced", action="store_true")
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("persistence", help="write the persistence diagram CSV")
    _add_construction_args(p, kinds=("even", "3d", "odd"))
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--svg", help="also write a births-vs-deaths SVG scatter")
    p.add_argument("--unreduced", action="store_true")
    p.set_defaults(func=_cmd_persistence)

    p = sub.add_parser("radii", help="print per-class radius ranges and thresholds")
    _add_construction_args(p, kinds=("even", "3d", "odd"))
    p.set_defaults(func=_cmd_radii)

    p = sub.add_parser("oracle", help="brute-force cross checks")
    _add_construction_args(p, kinds=("even", "3d", "odd"))
    p.add_argument("--maxdim", type=int, default=None)
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    p.add_argument("--relaxed", action="store_true",
                   help="accept zero-margin empty spheres in the face test")
    p.add_argument("--diff-csv", help="dump the symmetric difference, if any")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify", help="run claim suites")
    p.add_argument("--theorem", choices=("2.1", "3.1", "4.1"),
                   help="Betti-number suite for the even/3d/odd family")
    p.add_argument("--suspension", action="store_true")
    p.add_argument("--radii", action="store_true")
    p.add_argument("--hypotheses", action="store_true")
    p.add_argument("--all", action="store_true")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--csv", help="also write claim results as CSV")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads is not None:
        os.environ["EXTREMAL_CECH_THREADS"] = str(max(1, args.threads))
    try:
        return args.func(args)
    except (NotCriticalError, OverlapError, DeltaExhaustedError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
