"""Double-sum rearrangement experiment and domain scans.

The generating function of ``d_{n+1} = A d_n + B d_{n-1}`` (d_0 = 1, d_1 = A) is
``G(xi) = 1 / (1 - A xi - B xi^2)``. Expanding it in ``x = B xi^2`` and
``y = A xi`` gives the double series

    G = sum_{n, m} C(n+m, n) x^n y^m,

truncated here to the square ``0 <= n, m <= N``. With the Weierstrass limits
``A = 1 + rho^2``, ``B = -rho^2`` this is the experiment tabulated for
``rho = 0.8``, ``xi = 0.7``.

For those inputs the terms reach ~1e222 at N = 1000 while the sum is ~3e156,
so float64 term-by-term summation loses every digit. ``double_sum_mp`` sums
each row in closed recursive form and accumulates the rows in mpmath, raising
the working precision until two evaluations agree.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

import mpmath

from lameconv.domain import weierstrass_bound
from lameconv.errors import DoubleSumOverflowError, ParameterDomainError, PoleError
from lameconv.perron import ConvergenceVerdict, Verdict, classify_point
from lameconv.recurrence import LimitPair

TABLE2_RHO = 0.8
TABLE2_XI = 0.7
TABLE2_ORDERS = (10, 50, 100, 200, 300, 400, 500, 600, 700, 800, 900, 1000)

_START_DPS = 30
_GUARD_DPS = 20
_MAX_DPS = 20000


@dataclass(frozen=True)
class DoubleSumSpec:
    rho: float
    xi: float
    N: int

    @property
    def x_tilde(self) -> float:
        return -self.rho ** 2 * self.xi ** 2

    @property
    def y_tilde(self) -> float:
        return (1 + self.rho ** 2) * self.xi


@dataclass(frozen=True)
class ExperimentRow:
    N: int
    value: float


def _row_sums(x, y, N):
    # S_n = sum_{m<=N} C(n+m, m) y^m obeys (1 - y) S_n = S_{n-1} - C(n+N, N) y^(N+1).
    # Run it backward from S_N when |1 - y| <= 1 and forward from S_0 otherwise,
    # so rounding errors are damped in both cases.
    one_y = 1 - y
    y_top = y ** (N + 1)
    S = [None] * (N + 1)
    if abs(one_y) <= 1:
        t = s = mpmath.mpf(1)
        for m in range(1, N + 1):
            t = t * (N + m) / m * y
            s += t
        S[N] = s
        c = mpmath.binomial(2 * N, N)
        for n in range(N, 0, -1):
            S[n - 1] = one_y * S[n] + c * y_top
            c = c * n / (n + N)
    else:
        S[0] = (1 - y_top) / one_y
        c = mpmath.mpf(1)
        for n in range(1, N + 1):
            c = c * (n + N) / n
            S[n] = (S[n - 1] - c * y_top) / one_y
    return S


def _double_sum_at(x: float, y: float, N: int, dps: int):
    with mpmath.workdps(dps):
        x, y = mpmath.mpf(x), mpmath.mpf(y)
        total = mpmath.mpf(0)
        xn = mpmath.mpf(1)
        for s_n in _row_sums(x, y, N):
            total += xn * s_n
            xn *= x
        return total


def double_sum_mp(spec: DoubleSumSpec, digits: int = _GUARD_DPS):
    """Truncated double sum as an mpmath number, accurate to at least ``digits`` digits.

    Raise ``digits`` to resolve increments far below the value itself, e.g. in the
    convergent regime where successive truncations differ by 1e-100 or less.
    """
    if spec.N < 0:
        raise ParameterDomainError(f"truncation order must be >= 0, got {spec.N}")
    if digits < 1:
        raise ParameterDomainError(f"digits must be >= 1, got {digits}")
    x, y = spec.x_tilde, spec.y_tilde
    dps = max(_START_DPS, digits + 10)
    while dps <= _MAX_DPS:
        lo = _double_sum_at(x, y, spec.N, dps)
        hi = _double_sum_at(x, y, spec.N, dps + digits)
        with mpmath.workdps(dps + digits):
            if abs(hi - lo) <= abs(hi) * mpmath.mpf(10) ** (-digits):
                return hi
        dps *= 2
    raise ArithmeticError(f"double sum did not stabilise below {_MAX_DPS} digits")


def double_sum(spec: DoubleSumSpec) -> float:
    value = float(double_sum_mp(spec))
    if math.isinf(value):
        raise DoubleSumOverflowError(
            f"double sum at rho={spec.rho}, xi={spec.xi}, N={spec.N} exceeds float64 range"
        )
    return value


def generating_value(limits: LimitPair, xi: float) -> float:
    """Closed form ``1 / (1 - A xi - B xi^2)``."""
    lin, quad = limits.A * xi, limits.B * xi * xi
    den = 1.0 - lin - quad
    if abs(den) <= 1e-12 * (1.0 + abs(lin) + abs(quad)):
        raise PoleError(f"1 - A xi - B xi^2 vanishes at xi={xi}")
    return 1.0 / den


def run_table2() -> list[ExperimentRow]:
    return [
        ExperimentRow(N, double_sum(DoubleSumSpec(TABLE2_RHO, TABLE2_XI, N)))
        for N in TABLE2_ORDERS
    ]


def write_table2_csv(rows, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["N", "value"])
    for row in rows:
        writer.writerow([row.N, f"{row.value:.6g}"])


def scan_grid(rho_steps: int) -> list[float]:
    """``rho_steps`` evenly spaced interior points of (0, 1)."""
    if rho_steps < 2:
        raise ParameterDomainError(f"rho_steps must be >= 2, got {rho_steps}")
    return [i / (rho_steps + 1) for i in range(1, rho_steps + 1)]


def run_domain_scan(rho_steps: int, out) -> list[tuple[float, float, float]]:
    """Write ``rho,s_star,s_pp`` rows for the absolute and Poincaré-Perron bounds on sn^2."""
    rows = [(rho, weierstrass_bound(rho), 1.0) for rho in scan_grid(rho_steps)]
    path = Path(out)
    try:
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["rho", "s_star", "s_pp"])
            for row in rows:
                writer.writerow([f"{v:.6e}" for v in row])
    except OSError as exc:
        raise OSError(f"cannot write domain scan to {path}: {exc}") from exc
    return rows


def format_sci(value) -> str:
    """``%.6e`` formatting that also covers mpmath values beyond float64 range."""
    as_float = float(value)
    if math.isfinite(as_float) and (as_float != 0.0 or value == 0):
        return f"{as_float:.6e}"
    with mpmath.workdps(30):
        exp = int(mpmath.floor(mpmath.log10(abs(value))))
        mant = float(value / mpmath.mpf(10) ** exp)
    if round(abs(mant), 6) >= 10.0:
        mant, exp = mant / 10, exp + 1
    return f"{mant:.6f}e{exp:+03d}"


@dataclass
class CompareReport:
    rho: float
    xi: float
    verdict: ConvergenceVerdict
    closed_form: float | None = None
    double_sum_200: float | None = None
    abs_diff: float | None = None
    growth: dict = field(default_factory=dict)
    divergent: bool = False

    def lines(self) -> list[str]:
        out = [
            f"rho={self.rho:.6e} xi={self.xi:.6e}",
            f"r_star={self.verdict.r_star:.6e}",
            f"r_pp={self.verdict.r_pp:.6e}",
            f"verdict={self.verdict.tag.value}",
        ]
        if self.closed_form is not None:
            out += [
                f"closed_form={self.closed_form:.6e}",
                f"double_sum_N200={self.double_sum_200:.6e}",
                f"abs_diff={self.abs_diff:.6e}",
            ]
        for N, value in self.growth.items():
            out.append(f"double_sum_N{N}={format_sci(value)}")
        if self.growth:
            out.append(f"double_sum={'divergent' if self.divergent else 'bounded'}")
        return out


COMPARE_N = 200
_GROWTH_ORDERS = (100, 200)


def run_compare(rho: float, xi: float) -> CompareReport:
    if not 0.0 < rho < 1.0:
        raise ParameterDomainError(f"modulus rho must lie in (0, 1), got {rho}")
    lim = LimitPair.weierstrass(rho)
    report = CompareReport(rho, xi, classify_point(lim, xi))
    if report.verdict.tag is Verdict.ABSOLUTELY_CONVERGENT:
        report.closed_form = generating_value(lim, xi)
        report.double_sum_200 = double_sum(DoubleSumSpec(rho, xi, COMPARE_N))
        report.abs_diff = abs(report.closed_form - report.double_sum_200)
    else:
        report.growth = {N: double_sum_mp(DoubleSumSpec(rho, xi, N)) for N in _GROWTH_ORDERS}
        lo, hi = (abs(report.growth[N]) for N in _GROWTH_ORDERS)
        report.divergent = bool(hi > 10 * lo)
    return report
