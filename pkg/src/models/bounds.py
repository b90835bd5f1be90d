import math
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import List, Optional


def floor_places(value: float, places: int = 4) -> float:
    """Round down to `places` decimals (the exponential column convention)"""
    scale = 10 ** places
    return math.floor(value * scale) / scale


@dataclass(frozen=True)
class DivisorProfile:
    """An integer b with its divisors 1 = a_1 < ... < a_tau(b) = b"""
    b: int
    divisors: tuple

    @property
    def tau(self) -> int:
        return len(self.divisors)

    def below(self, a: int) -> List[int]:
        """s(a, b): divisors of b that are <= a"""
        return [d for d in self.divisors if d <= a]


@dataclass
class LowerBoundReport:
    """One row of the lower-bound table for a fixed b"""
    b: int
    divisors: List[int]
    p_lcm: List[int]
    p_div: List[int]
    c: float
    c_d: float
    alpha: Fraction
    phi_ratio: Fraction

    # Derived in __post_init__
    c_alpha: float = 0.0
    cd_alpha: float = 0.0
    exp_c_alpha: float = 0.0
    exp_cd_alpha: float = 0.0
    phi_variant: float = 0.0

    def __post_init__(self):
        self.c_alpha = self.c * float(self.alpha)
        self.cd_alpha = self.c_d * float(self.alpha)
        self.exp_c_alpha = floor_places(math.exp(self.c_alpha))
        self.exp_cd_alpha = floor_places(math.exp(self.cd_alpha))
        self.phi_variant = self.c * float(self.phi_ratio)

    def table_row(self) -> str:
        """The four published columns, e.g. '.354987,1.4261,.354987,1.4261'"""
        return ",".join([
            _strip_leading_zero(f"{self.c_alpha:.6f}"),
            f"{self.exp_c_alpha:.4f}",
            _strip_leading_zero(f"{self.cd_alpha:.6f}"),
            f"{self.exp_cd_alpha:.4f}",
        ])

    def to_dict(self):
        return {
            "b": self.b,
            "divisors": self.divisors,
            "p_lcm": [str(v) for v in self.p_lcm],
            "p_div": [str(v) for v in self.p_div],
            "c": f"{self.c:.6f}",
            "c_d": f"{self.c_d:.6f}",
            "alpha": f"{self.alpha.numerator}/{self.alpha.denominator}",
            "c_alpha": f"{self.c_alpha:.6f}",
            "exp_c_alpha": f"{self.exp_c_alpha:.4f}",
            "cd_alpha": f"{self.cd_alpha:.6f}",
            "exp_cd_alpha": f"{self.exp_cd_alpha:.4f}",
            "phi_variant": f"{self.phi_variant:.6f}",
        }


def _strip_leading_zero(text: str) -> str:
    return text[1:] if text.startswith("0.") else text


@dataclass
class UpperBoundReport:
    """Upper-bound exponents for one cut parameter k"""
    k: int
    yseq_const: float
    xi_const: float
    yi_const: float
    x0_analytic: float
    x0_empirical: Optional[float] = None
    empirical_n: Optional[int] = None
    total_analytic: float = field(init=False)
    total_empirical: Optional[float] = field(init=False)

    def __post_init__(self):
        series = math.fsum([self.yseq_const, self.xi_const, self.yi_const])
        self.total_analytic = series + self.x0_analytic
        self.total_empirical = None if self.x0_empirical is None else series + self.x0_empirical

    def to_dict(self):
        data = {
            "k": self.k,
            "yseq_const": f"{self.yseq_const:.6f}",
            "xi_const": f"{self.xi_const:.6f}",
            "yi_const": f"{self.yi_const:.6f}",
            "x0_analytic": f"{self.x0_analytic:.6f}",
            "total_analytic": f"{self.total_analytic:.6f}",
        }
        if self.x0_empirical is not None:
            data.update({
                "empirical_n": self.empirical_n,
                "x0_empirical": f"{self.x0_empirical:.6f}",
                "x0_empirical_root": f"{math.exp(self.x0_empirical):.4f}",
                "total_empirical": f"{self.total_empirical:.6f}",
            })
        return data


@dataclass(frozen=True)
class RatioConstants:
    """Constants of the geometric-growth argument for #S_lcm(n)/#S_div(n)"""
    density_lhs: Decimal
    density_rhs: Fraction
    ratio_base: Fraction
    ratio_exponent: Fraction
    c: Decimal

    def to_dict(self):
        return {
            "density_lhs": f"{self.density_lhs:.6f}",
            "density_rhs": f"{float(self.density_rhs):.6f}",
            "ratio_base": f"{self.ratio_base.numerator}/{self.ratio_base.denominator}",
            "ratio_exponent": f"{self.ratio_exponent.numerator}/{self.ratio_exponent.denominator}",
            "c": f"{self.c:.9f}",
        }
