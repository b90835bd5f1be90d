#!/usr/bin/env python3
"""
Tests for the sieve and the divisor functions
"""

import os
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.services.numtheory import (
    alpha,
    build_spf,
    divisors,
    factorize,
    mertens_product,
    phi,
    primes_below,
    sigma,
    tau,
    tau_below,
    valuation,
)
from src.utils.errors import InvalidArgumentError, OutOfRangeError
from tests.runner import run_module


def test_sieve_small_table():
    table = build_spf(100)
    assert table.smallest_factor(91) == 7
    assert table.smallest_factor(97) == 97
    assert table.is_prime(97)
    assert not table.is_prime(1)
    assert list(table.primes_below(20)) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert not table.spf.flags.writeable


def test_sieve_rejects_tiny_limit():
    with pytest.raises(InvalidArgumentError):
        build_spf(1)


def test_factorize():
    f = factorize(360)
    assert f.pairs == ((2, 3), (3, 2), (5, 1))
    assert f.value == 360
    assert f.exponent(3) == 2
    assert f.exponent(7) == 0
    assert factorize(1).pairs == ()


def test_factorize_beyond_table():
    with pytest.raises(OutOfRangeError):
        factorize(101, build_spf(100))
    with pytest.raises(InvalidArgumentError):
        factorize(0)


def test_divisor_functions():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert tau(12) == 6
    assert sigma(12) == 28
    assert phi(12) == 4
    assert tau(420) == 24
    assert tau(480) == 24
    assert valuation(48, 2) == 4
    assert valuation(45, 2) == 0


def test_alpha_values():
    assert alpha(4) == Fraction(4, 7)
    assert alpha(12) == Fraction(3, 7)
    assert alpha(2) == Fraction(2, 3)


def test_alpha_is_b_over_sigma_and_beats_phi():
    for b in range(1, 10001):
        a = alpha(b)
        assert a == Fraction(b, sigma(b))
        assert a >= Fraction(phi(b), b)


def test_tau_below():
    assert tau_below(12, 4) == 3
    assert tau_below(12, 13) == 6
    assert tau_below(7, 1) == 0


def test_restricted_divisor_count_identity():
    # sum_{j <= x} tau_z(j) = sum_{d < z} floor(x / d)
    for z in (1, 2, 7, 23.5, 50):
        running = 0
        for x in range(1, 1001):
            running += tau_below(x, z)
            d_max = int(z) if z != int(z) else int(z) - 1
            assert running == sum(x // d for d in range(1, d_max + 1))


def test_primes_and_mertens_product():
    assert primes_below(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_below(2) == []
    exact = Fraction(1021870080, 6469693230)
    assert abs(float(mertens_product(30)) - float(exact)) < 1e-15
    with pytest.raises(InvalidArgumentError):
        mertens_product(1)


if __name__ == "__main__":
    sys.exit(0 if run_module(globals(), "number theory") else 1)
