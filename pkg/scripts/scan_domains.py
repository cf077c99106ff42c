"""Tabulate the absolute bound s* and the Poincaré-Perron bound on sn^2 over rho,
and locate where the square-truncated double sum stops converging."""

import argparse
import sys

import mpmath

from lameconv.experiments import DoubleSumSpec, double_sum_mp, run_domain_scan


def crossover(rho: float) -> float:
    # corner term C(2N, N) (rho^2 xi^2)^N ((1 + rho^2) xi)^N ~ (4 rho^2 (1 + rho^2) xi^3)^N
    return (4 * rho**2 * (1 + rho**2)) ** (-1 / 3)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=9)
    parser.add_argument("--out", default="domain_scan.csv")
    args = parser.parse_args()

    rows = run_domain_scan(args.steps, args.out)
    print(f"{'rho':>6}  {'s_star':>9}  {'xi_c':>9}  {'S(400)/S(200) at xi_c -/+ 0.02'}")
    for rho, s_star, _ in rows:
        xc = crossover(rho)
        ratios = []
        for xi in (xc - 0.02, xc + 0.02):
            if not 0 < xi < 1:
                ratios.append("   -   ")
                continue
            lo = double_sum_mp(DoubleSumSpec(rho, xi, 200))
            hi = double_sum_mp(DoubleSumSpec(rho, xi, 400))
            ratios.append(mpmath.nstr(hi / lo, 4))
        print(f"{rho:6.3f}  {s_star:9.6f}  {xc:9.6f}  {'  '.join(ratios)}")
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
