"""Recompute every published value and compare it with the fixtures in data/."""

from decimal import Decimal
from fractions import Fraction
from typing import List, Optional

from ..models.compat import CompatKind
from ..models.output import CheckResult
from ..utils.config import Config
from ..utils.errors import PrecisionError
from ..utils.logger import get_logger
from .bounds import lower_bound_report, ratio_constants, upper_bound_report
from .fixture_store import FixtureStore
from .numtheory import tau
from .permanent import count_permutations

logger = get_logger("verification")


def _record(results: List[CheckResult], name: str, expected, actual, ok: bool):
    status = "PASS" if ok else "FAIL"
    result = CheckResult(name=name, expected=str(expected), actual=str(actual), status=status)
    if ok:
        logger.info(f"PASS {name}: {actual}")
    else:
        logger.error(f"FAIL {name}: expected {expected}, got {actual}")
    results.append(result)


def _skip(results: List[CheckResult], name: str, expected):
    logger.info(f"SKIP {name} (slow tier)")
    results.append(CheckResult(name=name, expected=str(expected), actual="", status="SKIP"))


def verify_table1(store: FixtureStore, max_n: int, engine: str = "auto",
                  threads: Optional[int] = None, min_n: int = 1) -> List[CheckResult]:
    results = []
    for row in store.table1_rows(max_n):
        n = row["n"]
        if n < min_n:
            continue
        for kind in (CompatKind.DIV, CompatKind.LCM):
            expected = store.expected_count(kind, n)
            if expected is None:
                continue
            got = count_permutations(kind, n, engine, threads)
            _record(results, f"table1 {kind.value} n={n}", expected.count, got.count,
                    got.count == expected.count)
            _record(results, f"table1 {kind.value} root n={n}", f"{expected.nth_root:.4f}",
                    f"{got.nth_root:.4f}", f"{got.nth_root:.4f}" == f"{expected.nth_root:.4f}")
    return results


def verify_table2(store: FixtureStore, slow: bool = False) -> List[CheckResult]:
    results = []
    for row in store.table2_rows():
        b = row["b"]
        expected = ",".join([row["c_alpha"], row["exp_c_alpha"], row["cd_alpha"], row["exp_cd_alpha"]])
        if tau(b) >= Config.SLOW_TABLE2_TAU and not slow:
            _skip(results, f"table2 b={b}", expected)
            continue
        report = lower_bound_report(b)
        ok = (
            abs(report.c_alpha - float(row["c_alpha"])) <= 5e-7
            and abs(report.cd_alpha - float(row["cd_alpha"])) <= 5e-7
            and f"{report.exp_c_alpha:.4f}" == row["exp_c_alpha"]
            and f"{report.exp_cd_alpha:.4f}" == row["exp_cd_alpha"]
        )
        _record(results, f"table2 b={b}", expected, report.table_row(), ok)
    return results


def verify_upper(store: FixtureStore, empirical_n: Optional[int] = None) -> List[CheckResult]:
    results = []
    empirical_n = empirical_n or Config.EMPIRICAL_N
    for k, tolerance in ((30, 5e-5), (100, 1e-4)):
        expected = store.upper_constants(k)
        report = upper_bound_report(k, empirical_n=empirical_n)
        for key, value in (("yseq", report.yseq_const), ("xi", report.xi_const), ("yi", report.yi_const)):
            _record(results, f"upper k={k} {key}", expected[key], f"{value:.6f}",
                    abs(value - expected[key]) <= tolerance)
        if "x0_analytic" in expected:
            _record(results, f"upper k={k} x0_analytic", expected["x0_analytic"], f"{report.x0_analytic:.6f}",
                    abs(report.x0_analytic - expected["x0_analytic"]) <= 1e-3)
            low, high = expected["total_analytic_range"]
            _record(results, f"upper k={k} total_analytic", f"[{low}, {high}]", f"{report.total_analytic:.6f}",
                    low <= report.total_analytic <= high)
        root_tolerance, total_tolerance = (0.005, 0.01) if k == 30 else (0.01, 0.02)
        _record(results, f"upper k={k} x0_empirical n={empirical_n}", expected["x0_empirical"],
                f"{report.x0_empirical:.6f}",
                abs(report.x0_empirical - expected["x0_empirical"]) <= root_tolerance)
        _record(results, f"upper k={k} total_empirical n={empirical_n}", expected["total_empirical"],
                f"{report.total_empirical:.6f}",
                abs(report.total_empirical - expected["total_empirical"]) <= total_tolerance)
    return results


def verify_ratio(store: FixtureStore) -> List[CheckResult]:
    results = []
    expected = store.ratio_constants()
    try:
        constants = ratio_constants()
    except PrecisionError as e:
        _record(results, "ratio self-check", "no precision failure", str(e), False)
        return results
    base = f"{constants.ratio_base.numerator}/{constants.ratio_base.denominator}"
    _record(results, "ratio density", f"> {expected['density_rhs']}", f"{constants.density_lhs:.6f}",
            constants.density_lhs * 10000 > 14)
    _record(results, "ratio base", expected["ratio_base"], base,
            constants.ratio_base == Fraction(expected["ratio_base"]))
    _record(results, "ratio c", f"> {expected['c_floor']}", f"{constants.c:.9f}",
            constants.c > Decimal(expected["c_floor"]))
    return results


def run_verification(slow: bool = False, engine: str = "auto", threads: Optional[int] = None,
                     empirical_n: Optional[int] = None, nightly: bool = False) -> List[CheckResult]:
    """All regression checks; deterministic for any thread count.

    nightly implies slow and extends the count table to Config.NIGHTLY_TIER_MAX_N.
    """
    store = FixtureStore()
    slow = slow or nightly
    if nightly:
        max_n = Config.NIGHTLY_TIER_MAX_N
    else:
        max_n = Config.SLOW_TIER_MAX_N if slow else Config.FAST_TIER_MAX_N
    results = []
    results.extend(verify_table1(store, max_n, engine, threads))
    results.extend(verify_table2(store, slow))
    results.extend(verify_upper(store, empirical_n))
    results.extend(verify_ratio(store))
    failed = sum(1 for r in results if r.status == "FAIL")
    logger.info(f"Verification finished: {len(results) - failed} of {len(results)} passed or skipped")
    return results
