"""Constants behind the lower and upper bounds for #S_lcm(n) and #S_div(n)."""

import math
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from ..models.bounds import DivisorProfile, LowerBoundReport, RatioConstants, UpperBoundReport
from ..models.compat import CompatKind
from ..utils.config import Config
from ..utils.errors import InvalidArgumentError, PrecisionError, ResourceLimitError
from ..utils.logger import get_logger
from .compat import build_matrix, build_matrix_on, neighbor_count_table
from .numtheory import alpha, divisors, mertens_product, phi, table_covering
from .permanent import count_permutations, permanent

logger = get_logger("bounds")


# Lower bounds

def divisor_profile(b: int) -> DivisorProfile:
    if b < 1:
        raise InvalidArgumentError(f"b must be positive, got {b}")
    return DivisorProfile(b=b, divisors=tuple(divisors(b)))


def _check_divisor(a: int, b: int):
    if b < 1 or a < 1 or b % a:
        raise InvalidArgumentError(f"{a} is not a divisor of {b}")


@lru_cache(maxsize=None)
def p_lcm(a: int, b: int) -> int:
    """Permutations of s(a,b) with lcm[d, pi(d)] <= a for every d"""
    _check_divisor(a, b)
    matrix = build_matrix_on(CompatKind.LCM, divisor_profile(b).below(a), bound=a)
    return permanent(matrix)


@lru_cache(maxsize=None)
def p_div(a: int, b: int) -> int:
    """Permutations of s(a,b) with d | pi(d) or pi(d) | d for every d"""
    _check_divisor(a, b)
    matrix = build_matrix_on(CompatKind.DIV, divisor_profile(b).below(a))
    return permanent(matrix)


def _interval_weights(profile: DivisorProfile) -> List[Fraction]:
    a = profile.divisors
    return [Fraction(1, a[i]) - Fraction(1, a[i + 1]) for i in range(len(a) - 1)]


def _c_from_counts(profile: DivisorProfile, top_count: int, counts: Callable[[int], int]) -> float:
    terms = [math.log(top_count) / profile.b]
    for a_i, weight in zip(profile.divisors, _interval_weights(profile)):
        terms.append(float(weight) * math.log(counts(a_i)))
    return math.fsum(terms)


def c_const(b: int) -> float:
    """c(b) = log(tau(b)!)/b + sum_i (1/a_i - 1/a_{i+1}) log p(a_i, b)"""
    profile = divisor_profile(b)
    return _c_from_counts(profile, math.factorial(profile.tau), lambda a: p_lcm(a, b))


def c_d_const(b: int) -> float:
    """c_d(b) = log(p_d(b,b))/b + sum_i (1/a_i - 1/a_{i+1}) log p_d(a_i, b)"""
    profile = divisor_profile(b)
    return _c_from_counts(profile, p_div(b, b), lambda a: p_div(a, b))


def lower_bound_report(b: int) -> LowerBoundReport:
    """One lower-bound table row: c(b)alpha(b), c_d(b)alpha(b) and their exponentials"""
    if b < 2:
        raise InvalidArgumentError(f"b must be at least 2, got {b}")
    profile = divisor_profile(b)
    if profile.tau > Config.LOWER_BOUND_MAX_TAU:
        raise ResourceLimitError(
            f"tau({b}) = {profile.tau} exceeds the permanent ceiling {Config.LOWER_BOUND_MAX_TAU}"
        )

    logger.info(f"Lower-bound row for b={b} (tau={profile.tau})")
    return LowerBoundReport(
        b=b,
        divisors=list(profile.divisors),
        p_lcm=[p_lcm(a, b) for a in profile.divisors],
        p_div=[p_div(a, b) for a in profile.divisors],
        c=c_const(b),
        c_d=c_d_const(b),
        alpha=alpha(b),
        phi_ratio=Fraction(phi(b), b),
    )


# Upper bounds: the three doubly exponential series

def _yseq_term(log_half: float, log_full: float) -> float:
    return log_half + 1


def _xi_term(log_half: float, log_full: float) -> float:
    return log_half + math.log(log_full + 1) + 1


def _yi_term(log_half: float, log_full: float) -> float:
    return log_full + math.log(log_full + 1)


_SERIES = {"yseq": _yseq_term, "xi": _xi_term, "yi": _yi_term}


def series_terms(k: int, which: str, count: Optional[int] = None) -> List[float]:
    """Terms k^{-2^{i-1}} * f_i for i = 1, 2, ...

    Without `count`, stops after the first term below Config.SERIES_TOLERANCE.
    """
    if k < 2:
        raise InvalidArgumentError(f"k must be at least 2, got {k}")
    term = _SERIES[which]
    log_k = math.log(k)
    terms = []
    i = 1
    while True:
        half = 2 ** (i - 1)
        log_half = half * log_k
        value = math.exp(-log_half) * term(log_half, 2 * log_half)
        terms.append(value)
        if count is not None and len(terms) >= count:
            break
        if count is None and value < Config.SERIES_TOLERANCE:
            break
        i += 1
    return terms


def ub_yseq_const(k: int) -> float:
    """Exponent for the number of choices of the Y-set sequence"""
    return math.fsum(series_terms(k, "yseq"))


def ub_xi_const(k: int) -> float:
    """Exponent for the assignments of the X_i, i >= 1"""
    return math.fsum(series_terms(k, "xi"))


def ub_yi_const(k: int) -> float:
    """Exponent for the assignments of the Y_i"""
    return math.fsum(series_terms(k, "yi"))


# Upper bounds: the top interval (n/k, n]

def x0_densities(k: int) -> Dict[Tuple[int, int], Fraction]:
    """Density of j in (n/k, n] having a neighbour with triple shape (a, *, c).

    For coprime a, c < k the admissible b run over (n/(k min(a,c)), n/(ac)],
    giving 1/(ac) - 1/(k min(a,c)) per unit of n.
    """
    if k < 2:
        raise InvalidArgumentError(f"k must be at least 2, got {k}")
    if k > Config.X0_EXACT_MAX_K:
        raise ResourceLimitError(f"k = {k} exceeds the exact density ceiling {Config.X0_EXACT_MAX_K}")
    densities = {}
    for a in range(1, k):
        for c in range(1, k):
            if math.gcd(a, c) == 1:
                densities[(a, c)] = max(Fraction(0), Fraction(1, a * c) - Fraction(1, k * min(a, c)))
    return densities


def x0_density_total(k: int) -> float:
    """Sum of x0_densities(k) in floating point, one numpy row per a"""
    if k < 2:
        raise InvalidArgumentError(f"k must be at least 2, got {k}")
    if k > Config.X0_MAX_K:
        raise ResourceLimitError(f"k = {k} exceeds the density ceiling {Config.X0_MAX_K}")
    c = np.arange(1, k, dtype=np.int64)
    rows = []
    for a in range(1, k):
        coprime = c[np.gcd(a, c) == 1]
        values = 1.0 / (a * coprime) - 1.0 / (k * np.minimum(a, coprime))
        rows.append(float(np.maximum(values, 0.0).sum()))
    return math.fsum(rows)


def nu_const(k: int) -> float:
    """Share of j in (n/k, n] with more than one neighbour"""
    return 1 - 1 / k - float(mertens_product(k)) / 2


def x0_analytic_const(k: int) -> float:
    """AM-GM exponent nu*log(S/nu) for prod_{j in (n/k, n]} N_k(j)"""
    nu = nu_const(k)
    total = x0_density_total(k) - float(mertens_product(k)) / 2
    return nu * math.log(total / nu)


def _check_empirical_n(n: int):
    if n < Config.EMPIRICAL_N_MIN:
        raise InvalidArgumentError(f"empirical n must be at least {Config.EMPIRICAL_N_MIN}, got {n}")
    if n > Config.EMPIRICAL_N_MAX:
        raise ResourceLimitError(f"empirical n = {n} exceeds {Config.EMPIRICAL_N_MAX}")


def x0_empirical_const(k: int, n: int) -> float:
    """(1/n) * sum over j in (n/k, n] of log N_k(j), computed exactly at this n"""
    if k < 2:
        raise InvalidArgumentError(f"k must be at least 2, got {k}")
    _check_empirical_n(n)
    counts = neighbor_count_table(k, n)
    return math.fsum(np.log(counts.astype(np.float64))) / n


def x0_direct_sums(k: int, n: int) -> Dict[str, float]:
    """Brute-force counterparts of the analytic density sum and of nu*n.

    Also counts the j with a single neighbour three ways: read off the table,
    by the exact rule (j > n/2 and j/spf(j) <= n/k) and by the k-rough rule
    (j > n/2 with no prime factor below k), which only gives a lower bound.
    """
    if k < 2:
        raise InvalidArgumentError(f"k must be at least 2, got {k}")
    _check_empirical_n(n)
    counts = neighbor_count_table(k, n)
    multi = counts[counts > 1]
    mertens = float(mertens_product(k))

    spf = table_covering(n).spf
    top = np.arange(n // 2 + 1, n + 1, dtype=np.int64)
    return {
        "direct_sum": float(multi.sum()),
        "analytic_sum": n * (x0_density_total(k) - mertens / 2),
        "direct_count": float(multi.size),
        "analytic_count": nu_const(k) * n,
        "direct_ones": float(np.count_nonzero(counts == 1)),
        "exact_ones": float(np.count_nonzero(top // spf[top] <= n // k)),
        "rough_ones": float(np.count_nonzero(spf[top] >= k)),
        "analytic_ones": mertens * n / 2,
    }


def upper_bound_report(k: int, empirical_n: Optional[int] = None) -> UpperBoundReport:
    """The four exponents for cut parameter k, analytic and optionally empirical"""
    if k < 2:
        raise InvalidArgumentError(f"k must be at least 2, got {k}")
    empirical = None
    if empirical_n is not None:
        empirical = x0_empirical_const(k, empirical_n)
    report = UpperBoundReport(
        k=k,
        yseq_const=ub_yseq_const(k),
        xi_const=ub_xi_const(k),
        yi_const=ub_yi_const(k),
        x0_analytic=x0_analytic_const(k),
        x0_empirical=empirical,
        empirical_n=empirical_n,
    )
    logger.info(f"Upper bound for k={k}: analytic {report.total_analytic:.4f}")
    return report


def crude_upper_exponents(n: int) -> Tuple[float, float]:
    """(1/n) log prod N(j) and (1/n) log prod tau(j)n/j over j in [n]"""
    if n < 1:
        raise InvalidArgumentError(f"n must be positive, got {n}")
    sizes = build_matrix(CompatKind.LCM, n).row_sizes()
    exact = math.fsum(math.log(size) for size in sizes) / n
    tau_bound = math.fsum(math.log(len(divisors(j)) * n / j) for j in range(1, n + 1)) / n
    return exact, tau_bound


# Ratio #S_lcm(n) / #S_div(n)

def ratio_constants() -> RatioConstants:
    """Density and growth constants of the ratio argument, self-checked"""
    with localcontext() as ctx:
        ctx.prec = Config.DECIMAL_PRECISION
        density_lhs = mertens_product(10 ** 4) / 42
        density_rhs = Fraction(14, 10 ** 4)
        if not density_lhs > Decimal(density_rhs.numerator) / density_rhs.denominator:
            raise PrecisionError(f"density {density_lhs} does not exceed 14/10^4")

        base = Fraction(count_permutations(CompatKind.LCM, 6).count,
                        count_permutations(CompatKind.DIV, 6).count)
        exponent = Fraction(13, 10 ** 4)
        c = (Decimal(base.numerator) / base.denominator) ** (Decimal(exponent.numerator) / exponent.denominator)
        if not c > Decimal("1.00057"):
            raise PrecisionError(f"growth constant {c} does not exceed 1.00057")

    return RatioConstants(
        density_lhs=density_lhs,
        density_rhs=density_rhs,
        ratio_base=base,
        ratio_exponent=exponent,
        c=c,
    )
