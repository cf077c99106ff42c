import csv
import io
import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lameconv.domain import radius, weierstrass_bound
from lameconv.errors import DoubleSumOverflowError, ParameterDomainError, PoleError
from lameconv.experiments import (
    TABLE2_ORDERS,
    DoubleSumSpec,
    double_sum,
    double_sum_mp,
    format_sci,
    generating_value,
    run_compare,
    run_domain_scan,
    run_table2,
    scan_grid,
    write_table2_csv,
)
from lameconv.perron import Verdict
from lameconv.recurrence import LimitPair, asymptotic_sequence, partial_sum

TABLE2 = {
    10: 8.97174,
    50: 4.44473e6,
    100: 2.62952e14,
    200: 1.28525e30,
    300: 7.23351e45,
    400: 4.31499e61,
    500: 2.65768e77,
    600: 1.67043e93,
    700: 1.06472e109,
    800: 6.85643e124,
    900: 4.45007e140,
    1000: 2.90618e156,
}


def term_recursion_oracle(rho, xi, N, dps=400):
    """Literal square sum built term by term, T(n,m) = T(n,m-1) (n+m)/m y, T(n,0) = x^n."""
    spec = DoubleSumSpec(rho, xi, N)
    with mpmath.workdps(dps):
        x, y = mpmath.mpf(spec.x_tilde), mpmath.mpf(spec.y_tilde)
        total = mpmath.mpf(0)
        head = mpmath.mpf(1)
        for n in range(N + 1):
            t = head
            total += t
            for m in range(1, N + 1):
                t = t * (n + m) / m * y
                total += t
            head *= x
        return total


def exact_oracle(rho, xi, N):
    spec = DoubleSumSpec(rho, xi, N)
    x, y = Fraction(spec.x_tilde), Fraction(spec.y_tilde)
    return sum(math.comb(n + m, n) * x**n * y**m for n in range(N + 1) for m in range(N + 1))


class TestDoubleSum:
    @pytest.mark.parametrize("N", [0, 1, 2, 7, 15])
    def test_exact_small_orders(self, N):
        assert double_sum(DoubleSumSpec(0.8, 0.7, N)) == pytest.approx(float(exact_oracle(0.8, 0.7, N)), rel=1e-15)

    @pytest.mark.parametrize("xi", [0.3, 0.7, 0.9, 1.5])
    def test_term_recursion_oracle(self, xi):
        mine = double_sum_mp(DoubleSumSpec(0.8, xi, 60))
        ref = term_recursion_oracle(0.8, xi, 60)
        assert abs(mine - ref) <= abs(ref) * mpmath.mpf(10) ** -20

    @settings(max_examples=25, deadline=None)
    @given(st.floats(0.05, 0.95), st.floats(-1.2, 1.2), st.integers(0, 40))
    def test_matches_oracle(self, rho, xi, N):
        ref = float(exact_oracle(rho, xi, N))
        assert double_sum(DoubleSumSpec(rho, xi, N)) == pytest.approx(ref, rel=1e-13, abs=1e-300)

    def test_spec_quantities(self):
        spec = DoubleSumSpec(0.8, 0.7, 10)
        assert spec.x_tilde == pytest.approx(-0.3136, rel=1e-15)
        assert spec.y_tilde == pytest.approx(1.148, rel=1e-15)

    @pytest.mark.parametrize("N, value", sorted(TABLE2.items()))
    def test_table2_rows(self, N, value):
        assert double_sum(DoubleSumSpec(0.8, 0.7, N)) == pytest.approx(value, rel=1e-4)

    def test_closed_form_inside_domain(self):
        assert double_sum(DoubleSumSpec(0.8, 0.3, 100)) == pytest.approx(1.768034, abs=1e-6)

    def test_overflow(self):
        with pytest.raises(DoubleSumOverflowError):
            double_sum(DoubleSumSpec(0.8, 0.9, 700))
        assert double_sum_mp(DoubleSumSpec(0.8, 0.9, 700)) > mpmath.mpf("1e300")

    def test_negative_order(self):
        with pytest.raises(ParameterDomainError):
            double_sum(DoubleSumSpec(0.8, 0.7, -1))

    def test_digits_rejected(self):
        with pytest.raises(ParameterDomainError):
            double_sum_mp(DoubleSumSpec(0.8, 0.7, 3), digits=0)

    def test_deterministic(self):
        spec = DoubleSumSpec(0.8, 0.7, 300)
        assert double_sum(spec) == double_sum(spec)


class TestGeneratingValue:
    def test_rho_08(self):
        assert generating_value(LimitPair(1.64, -0.64), 0.3) == pytest.approx(1.768034, abs=1e-6)

    @given(st.floats(-50, 50), st.floats(-50, 50))
    def test_origin(self, A, B):
        assert generating_value(LimitPair(A, B), 0.0) == 1.0

    @pytest.mark.parametrize("xi", [1.0, 1.0 + 1e-14, 1 / 0.64])
    def test_pole(self, xi):
        with pytest.raises(PoleError):
            generating_value(LimitPair(1.64, -0.64), xi)

    @given(st.floats(0.05, 0.95), st.floats(0.0, 0.9))
    def test_oracle_equivalence(self, rho, frac):
        # |A xi| + |B xi^2| <= 0.9 on this family
        lim = LimitPair.weierstrass(rho)
        r = radius(lim)
        xi = frac * r
        while abs(lim.A) * xi + abs(lim.B) * xi * xi > 0.9:
            xi *= 0.99
        g = generating_value(lim, xi)
        assert abs(double_sum(DoubleSumSpec(rho, xi, 200)) - g) <= 1e-6 * abs(g)

    @settings(max_examples=30, deadline=None)
    @given(st.floats(0.05, 0.95), st.floats(0.0, 0.8), st.integers(100, 200))
    def test_rearrangement_consistency(self, rho, frac, N):
        lim = LimitPair.weierstrass(rho)
        xi = frac * radius(lim)
        ds = double_sum(DoubleSumSpec(rho, xi, N))
        ps = partial_sum(asymptotic_sequence(lim, 2 * N), xi)
        assert ds == pytest.approx(ps, rel=1e-8)


class TestDivergence:
    @pytest.mark.parametrize("xi", [0.63, 0.7, 0.8, 0.9, 0.94])
    @pytest.mark.parametrize("N", [100, 200, 400])
    def test_doubling_ratio_above_crossover(self, xi, N):
        lo = double_sum_mp(DoubleSumSpec(0.8, xi, N))
        hi = double_sum_mp(DoubleSumSpec(0.8, xi, 2 * N))
        assert hi / lo > 10

    @pytest.mark.xfail(strict=True, reason="square truncation still converges below (4 rho^2 (1 + rho^2))^(-1/3)")
    @pytest.mark.parametrize("xi", [0.56, 0.6])
    def test_doubling_ratio_just_above_r_star(self, xi):
        lo = double_sum_mp(DoubleSumSpec(0.8, xi, 100))
        hi = double_sum_mp(DoubleSumSpec(0.8, xi, 200))
        assert hi / lo > 10

    @pytest.mark.parametrize("xi", [0.56, 0.6])
    def test_square_truncation_converges_below_crossover(self, xi):
        assert xi > weierstrass_bound(0.8) + 0.05
        value = double_sum_mp(DoubleSumSpec(0.8, xi, 800))
        assert float(value) == pytest.approx(generating_value(LimitPair.weierstrass(0.8), xi), rel=1e-12)

    def test_crossover_location(self):
        # corner term C(2N, N) |x|^N |y|^N ~ (4 rho^2 (1 + rho^2) xi^3)^N decays only below xi_c
        rho = 0.8
        xi_c = (4 * rho**2 * (1 + rho**2)) ** (-1 / 3)
        assert 0.61 < xi_c < 0.63
        below = [double_sum_mp(DoubleSumSpec(rho, xi_c - 0.02, N)) for N in (200, 400)]
        above = [double_sum_mp(DoubleSumSpec(rho, xi_c + 0.02, N)) for N in (200, 400)]
        assert abs(below[1] - below[0]) < 1e-3
        assert abs(above[1]) > 100 * abs(above[0])

    @pytest.mark.parametrize("xi", [0.55, 0.7, 0.9])
    def test_monotone_on_tabulated_orders(self, xi):
        values = [double_sum_mp(DoubleSumSpec(0.8, xi, N), digits=150) for N in range(50, 1001, 50)]
        assert all(b > a for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("xi", [0.7, 0.9])
    def test_unit_steps_alternate(self, xi):
        # the n = N column carries sign (-1)^N, so single steps are not monotone
        values = [double_sum_mp(DoubleSumSpec(0.8, xi, N)) for N in range(50, 56)]
        steps = [b - a for a, b in zip(values, values[1:])]
        assert any(s < 0 for s in steps) and any(s > 0 for s in steps)


class TestTable2:
    def test_rows(self):
        rows = run_table2()
        assert [r.N for r in rows] == list(TABLE2_ORDERS)
        for row in rows:
            assert row.value == pytest.approx(TABLE2[row.N], rel=1e-4)

    def test_growth_ratio(self):
        rows = {r.N: r.value for r in run_table2()}
        assert rows[200] / rows[100] == pytest.approx(4.888e15, rel=1e-3)

    def test_csv(self):
        buf = io.StringIO()
        write_table2_csv(run_table2(), buf)
        lines = buf.getvalue().splitlines()
        assert lines[0] == "N,value"
        assert lines[1] == "10,8.97174"
        assert lines[-1] == "1000,2.90618e+156"
        assert len(lines) == 13


class TestDomainScan:
    def test_grid(self):
        assert scan_grid(2) == [1 / 3, 2 / 3]
        with pytest.raises(ParameterDomainError):
            scan_grid(1)

    def test_csv(self, tmp_path):
        out = tmp_path / "scan.csv"
        rows = run_domain_scan(4, out)
        with out.open() as fh:
            table = list(csv.reader(fh))
        assert table[0] == ["rho", "s_star", "s_pp"]
        assert len(table) == 5 and len(rows) == 4
        assert table[4] == ["8.000000e-01", "5.087504e-01", "1.000000e+00"]
        rhos = [float(r[0]) for r in table[1:]]
        assert rhos == sorted(rhos) and 0 < rhos[0] and rhos[-1] < 1
        assert all(float(r[1]) < float(r[2]) for r in table[1:])

    def test_two_steps(self, tmp_path):
        assert [r[0] for r in run_domain_scan(2, tmp_path / "s.csv")] == [1 / 3, 2 / 3]

    def test_deterministic(self, tmp_path):
        run_domain_scan(9, tmp_path / "a.csv")
        run_domain_scan(9, tmp_path / "b.csv")
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()

    def test_io_error_names_path(self, tmp_path):
        bad = tmp_path / "missing" / "scan.csv"
        with pytest.raises(OSError, match="missing"):
            run_domain_scan(3, bad)


class TestCompare:
    def test_inside(self):
        report = run_compare(0.8, 0.3)
        assert report.verdict.tag is Verdict.ABSOLUTELY_CONVERGENT
        assert report.abs_diff < 1e-6
        assert "verdict=AbsolutelyConvergent" in report.lines()

    def test_conditional(self):
        report = run_compare(0.8, 0.7)
        assert report.verdict.tag is Verdict.CONDITIONAL_REGION
        assert report.divergent
        assert report.lines()[-1] == "double_sum=divergent"

    def test_beyond_unit_bound(self):
        report = run_compare(0.8, 1.5)
        assert report.verdict.tag is Verdict.DIVERGENT
        assert report.closed_form is None

    def test_bad_modulus(self):
        with pytest.raises(ParameterDomainError):
            run_compare(1.0, 0.3)


class TestFormatSci:
    def test_float(self):
        assert format_sci(0.50875043) == "5.087504e-01"

    def test_beyond_float_range(self):
        assert format_sci(mpmath.mpf("1.2345678e400")) == "1.234568e+400"

    def test_zero(self):
        assert format_sci(0.0) == "0.000000e+00"
