#!/usr/bin/env python3
"""
Tests for the lower- and upper-bound constants
"""

import math
import os
import sys
from decimal import Decimal
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.models.compat import CompatKind
from src.services.bounds import (
    c_const,
    c_d_const,
    crude_upper_exponents,
    divisor_profile,
    lower_bound_report,
    nu_const,
    p_div,
    p_lcm,
    ratio_constants,
    series_terms,
    ub_xi_const,
    ub_yi_const,
    ub_yseq_const,
    upper_bound_report,
    x0_analytic_const,
    x0_densities,
    x0_density_total,
    x0_direct_sums,
    x0_empirical_const,
)
from src.services.compat import build_matrix_on
from src.services.fixture_store import FixtureStore
from src.services.numtheory import tau
from src.services.permanent import permanent_bruteforce, permanent_ryser
from src.utils.config import Config
from src.utils.errors import InvalidArgumentError, ResourceLimitError
from tests.runner import run_module

store = FixtureStore()


def test_full_block_count_is_factorial():
    for b in (2, 4, 12, 24, 60, 120):
        assert p_lcm(b, b) == math.factorial(tau(b))


def test_div_counts_below_lcm_counts():
    for b in (12, 24, 60):
        for a in divisor_profile(b).divisors:
            assert p_div(a, b) <= p_lcm(a, b)


def test_local_counts_oracle_vs_ryser():
    for b in (12, 24):
        profile = divisor_profile(b)
        for a in profile.divisors:
            for kind, bound in ((CompatKind.LCM, a), (CompatKind.DIV, None)):
                matrix = build_matrix_on(kind, profile.below(a), bound=bound)
                assert permanent_bruteforce(matrix) == permanent_ryser(matrix)


def test_p_requires_divisor():
    with pytest.raises(InvalidArgumentError):
        p_lcm(5, 12)


def test_c_constants_for_four():
    # log(3!)/4 + (1/4) log 2
    expected = math.log(6) / 4 + math.log(2) / 4
    assert abs(c_const(4) - expected) < 1e-12
    assert abs(c_const(4) - 0.621227) < 5e-7
    assert c_d_const(4) == c_const(4)


def test_lower_bound_row_for_four():
    report = lower_bound_report(4)
    assert report.alpha == Fraction(4, 7)
    assert report.table_row() == ".354987,1.4261,.354987,1.4261"
    assert report.phi_variant <= report.c_alpha


def test_table2_fast_rows():
    for row in store.table2_rows():
        if tau(row["b"]) >= Config.SLOW_TABLE2_TAU:
            continue
        report = lower_bound_report(row["b"])
        assert abs(report.c_alpha - float(row["c_alpha"])) <= 5e-7, f"b={row['b']}"
        assert abs(report.cd_alpha - float(row["cd_alpha"])) <= 5e-7, f"b={row['b']}"
        assert f"{report.exp_c_alpha:.4f}" == row["exp_c_alpha"]
        assert f"{report.exp_cd_alpha:.4f}" == row["exp_cd_alpha"]


@pytest.mark.skipif(not Config.RUN_SLOW, reason="slow tier (set ARITHPERM_SLOW=1)")
def test_table2_slow_rows():
    slow = [row for row in store.table2_rows() if tau(row["b"]) >= Config.SLOW_TABLE2_TAU]
    assert [row["b"] for row in slow] == [420, 480]
    for row in slow:
        b = row["b"]
        report = lower_bound_report(b)
        assert abs(report.c_alpha - float(row["c_alpha"])) <= 5e-7, f"b={b}"
        assert abs(report.cd_alpha - float(row["cd_alpha"])) <= 5e-7, f"b={b}"
        assert f"{report.exp_c_alpha:.4f}" == row["exp_c_alpha"]
        assert f"{report.exp_cd_alpha:.4f}" == row["exp_cd_alpha"]


def test_div_columns_for_240():
    # the printed .648821 / 1.9132 is not reproducible from p_d(a, 240)
    row = store.table2_row(240)
    report = lower_bound_report(240)
    assert abs(report.cd_alpha - 0.642829) <= 5e-7
    assert f"{report.exp_cd_alpha:.4f}" == "1.9018"
    assert row["cd_alpha"] == ".642829" and row["cd_alpha_printed"] == ".648821"
    assert abs(report.c_alpha - 0.740127) <= 5e-7


def test_lower_bound_refuses_large_tau():
    with pytest.raises(ResourceLimitError):
        lower_bound_report(5040)


def test_series_constants():
    assert abs(ub_yseq_const(30) - 0.1554) < 5e-5
    assert abs(ub_xi_const(30) - 0.2269) < 5e-5
    assert abs(ub_yi_const(30) - 0.3134) < 5e-5
    assert abs(ub_yseq_const(100) - 0.0571) < 1e-4
    assert abs(ub_xi_const(100) - 0.0807) < 1e-4
    assert abs(ub_yi_const(100) - 0.1175) < 1e-4
    assert ub_yseq_const(1000) < ub_yseq_const(100) < ub_yseq_const(30)
    with pytest.raises(InvalidArgumentError):
        ub_yseq_const(1)


def test_series_truncation_is_stable():
    for which, const in (("yseq", ub_yseq_const), ("xi", ub_xi_const), ("yi", ub_yi_const)):
        for k in (30, 100):
            terms = series_terms(k, which)
            longer = series_terms(k, which, count=len(terms) + 1)
            assert abs(math.fsum(longer) - const(k)) < 1e-12


def test_first_xi_term():
    first = series_terms(30, "xi", count=1)[0]
    assert abs(first - (math.log(30) + math.log(2 * math.log(30) + 1) + 1) / 30) < 1e-15


def test_top_interval_densities():
    assert x0_densities(3) == {(1, 1): Fraction(2, 3), (1, 2): Fraction(1, 6), (2, 1): Fraction(1, 6)}
    assert abs(nu_const(30) - 0.8877) < 1e-4
    assert abs(x0_analytic_const(30) - 1.9115) < 1e-3


def test_analytic_total():
    report = upper_bound_report(30)
    assert 2.6070 <= report.total_analytic <= 2.6075
    assert report.x0_empirical is None and report.total_empirical is None


def test_density_sum_matches_direct_count():
    n = 10 ** 6
    for k in (5, 10, 30):
        sums = x0_direct_sums(k, n)
        assert abs(sums["direct_sum"] - sums["analytic_sum"]) / sums["analytic_sum"] < 0.01, f"k={k}"
    assert abs(sums["direct_count"] - sums["analytic_count"]) / sums["analytic_count"] < 0.01


def test_single_neighbour_rule():
    n = 10 ** 6
    for k in (3, 30):
        sums = x0_direct_sums(k, n)
        assert sums["direct_ones"] == sums["exact_ones"], f"k={k}"
        assert sums["direct_ones"] >= sums["rough_ones"]
        # 17 | j with j <= 17n/30 still has a single neighbour at k = 30
        assert sums["direct_ones"] > sums["analytic_ones"]


def test_density_total():
    for k in (3, 10, 30):
        assert abs(x0_density_total(k) - float(sum(x0_densities(k).values()))) < 1e-12
    with pytest.raises(ResourceLimitError):
        x0_densities(Config.X0_EXACT_MAX_K + 1)
    with pytest.raises(ResourceLimitError):
        x0_density_total(Config.X0_MAX_K + 1)
    assert upper_bound_report(2000).total_analytic > 0


def test_empirical_exponents():
    n = Config.EMPIRICAL_N
    assert abs(x0_empirical_const(3, n) - math.log(2) / 3) < 1e-3
    report = upper_bound_report(30, empirical_n=n)
    assert abs(report.x0_empirical - 1.5466) < 0.005
    assert abs(report.total_empirical - 2.2423) < 0.01
    report = upper_bound_report(100, empirical_n=n)
    assert abs(report.x0_empirical - 1.8709) < 0.01
    assert abs(report.total_empirical - 2.1262) < 0.02


def test_empirical_range_checks():
    with pytest.raises(InvalidArgumentError):
        x0_empirical_const(30, 100)
    with pytest.raises(ResourceLimitError):
        x0_empirical_const(30, 10 ** 9)


def test_crude_exponents():
    exact, tau_bound = crude_upper_exponents(100)
    assert 0 < exact <= tau_bound


def test_ratio_constants():
    constants = ratio_constants()
    assert constants.ratio_base == Fraction(14, 9)
    assert constants.c > Decimal("1.00057")
    assert abs(float(constants.density_lhs) - 0.001451) < 5e-6
    assert constants.density_lhs > Decimal(14) / Decimal(10 ** 4)


if __name__ == "__main__":
    sys.exit(0 if run_module(globals(), "bound constants") else 1)
