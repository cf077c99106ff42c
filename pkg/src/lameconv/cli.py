"""Command-line interface.

    lameconv radius algebraic --a A --b B --c C
    lameconv radius weierstrass --rho RHO
    lameconv series eval --rho RHO --xi XI [--q Q] [--alpha ALPHA] [--lambda LAM] [--n-max N]
    lameconv experiment table2 [--out FILE]
    lameconv domain scan --steps K --out FILE
    lameconv compare --rho RHO --xi XI

Exit codes: 0 success, 2 invalid parameters, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import functools
import sys

from lameconv.domain import classify_algebraic, radius, weierstrass_bound
from lameconv.errors import LameError
from lameconv.experiments import (
    run_compare,
    run_domain_scan,
    run_table2,
    write_table2_csv,
)
from lameconv.perron import classify_point, ratio_limit_estimate
from lameconv.recurrence import (
    AlgebraicParameters,
    generate_sequence,
    limits,
    partial_sum,
)

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 2, 3


def _radius_algebraic(args) -> None:
    params = AlgebraicParameters(args.a, args.b, args.c)
    case = classify_algebraic(params)
    print(f"case={case.tag.value}")
    print(f"radius={case.radius:.6e}")
    print(f"radius_generic={radius(limits(params)):.6e}")


def _radius_weierstrass(args) -> None:
    print(f"{weierstrass_bound(args.rho):.6e}")


def _series_eval(args) -> None:
    if not 0.0 < args.rho < 1.0:
        raise LameError(f"modulus rho must lie in (0, 1), got {args.rho}")
    params = AlgebraicParameters(0.0, 1.0, 1.0 / args.rho ** 2, args.alpha, args.q)
    seq = generate_sequence(params, args.lam, args.n_max)
    lim = limits(params)
    verdict = classify_point(lim, args.xi)
    print(f"partial_sum={partial_sum(seq, args.xi):.6e}")
    print(f"d_N={seq.d[-1]:.6e}")
    if seq.N >= 2:
        window = min(10, seq.N)
        try:
            print(f"ratio_estimate={ratio_limit_estimate(seq, window):.6e}")
        except LameError:
            print("ratio_estimate=nan")
    print(f"r_star={verdict.r_star:.6e}")
    print(f"verdict={verdict.tag.value}")


def _experiment_table2(args) -> None:
    rows = run_table2()
    if args.out is None:
        write_table2_csv(rows, sys.stdout)
        return
    try:
        with open(args.out, "w", newline="") as fh:
            write_table2_csv(rows, fh)
    except OSError as exc:
        raise OSError(f"cannot write table to {args.out}: {exc}") from exc


def _domain_scan(args) -> None:
    run_domain_scan(args.steps, args.out)


def _compare(args) -> None:
    for line in run_compare(args.rho, args.xi).lines():
        print(line)


@functools.lru_cache(maxsize=None)
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lameconv",
        description="Convergence domains of Lamé-equation Frobenius series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rad = sub.add_parser("radius", help="absolute-convergence radius")
    rad_sub = rad.add_subparsers(dest="form", required=True)
    alg = rad_sub.add_parser("algebraic", help="radius in z = x - a")
    alg.add_argument("--a", type=float, required=True)
    alg.add_argument("--b", type=float, required=True)
    alg.add_argument("--c", type=float, required=True)
    alg.set_defaults(func=_radius_algebraic)
    wei = rad_sub.add_parser("weierstrass", help="bound on sn^2(z, rho)")
    wei.add_argument("--rho", type=float, required=True)
    wei.set_defaults(func=_radius_weierstrass)

    series = sub.add_parser("series", help="Frobenius series about xi = 0")
    series_sub = series.add_subparsers(dest="action", required=True)
    ev = series_sub.add_parser("eval", help="evaluate a truncated series")
    ev.add_argument("--rho", type=float, required=True)
    ev.add_argument("--xi", type=float, required=True)
    ev.add_argument("--q", type=float, default=0.0)
    ev.add_argument("--alpha", type=float, default=0.0)
    ev.add_argument("--lambda", dest="lam", type=float, choices=(0.0, 0.5), default=0.0)
    ev.add_argument("--n-max", dest="n_max", type=int, default=200)
    ev.set_defaults(func=_series_eval)

    exp = sub.add_parser("experiment", help="reproduce tabulated experiments")
    exp_sub = exp.add_subparsers(dest="name", required=True)
    t2 = exp_sub.add_parser("table2", help="double sum at rho=0.8, xi=0.7")
    t2.add_argument("--out", default=None)
    t2.set_defaults(func=_experiment_table2)

    dom = sub.add_parser("domain", help="convergence-domain scans")
    dom_sub = dom.add_subparsers(dest="action", required=True)
    scan = dom_sub.add_parser("scan", help="write rho,s_star,s_pp CSV")
    scan.add_argument("--steps", type=int, required=True)
    scan.add_argument("--out", required=True)
    scan.set_defaults(func=_domain_scan)

    cmp_ = sub.add_parser("compare", help="absolute vs Poincaré-Perron verdict at a point")
    cmp_.add_argument("--rho", type=float, required=True)
    cmp_.add_argument("--xi", type=float, required=True)
    cmp_.set_defaults(func=_compare)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except LameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
