#!/usr/bin/env python3
"""
Tests for the block families behind the lcm lower bound
"""

import os
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.models.blocks import BlockFamily
from src.models.compat import CompatKind
from src.services.constructions import (
    admissible,
    build_family,
    emit_members,
    family_count,
    interval_densities,
    odd_pair_family,
    verify_member,
)
from src.services.numtheory import alpha
from src.services.permanent import count_permutations
from src.utils.errors import InvalidArgumentError
from tests.runner import run_module


def test_admissible():
    assert admissible(12, 2)
    assert not admissible(6, 2)
    assert all(admissible(1, b) for b in range(2, 50))
    assert admissible(8, 4) and not admissible(4, 4)
    with pytest.raises(InvalidArgumentError):
        admissible(0, 2)


def test_pair_family_for_eight():
    family = build_family(2, 8)
    assert [block.elements for block in family.blocks] == [(1, 2), (3, 6), (4, 8)]
    assert family.per_interval_counts == {1: 2, 2: 3}
    assert family.covered == 6
    assert family_count(family) == 8


def test_members_for_eight():
    family = build_family(2, 8)
    members = emit_members(family, 8)
    assert len(members) == 8
    assert len(set(members)) == 8
    assert all(verify_member(image) for image in members)
    assert emit_members(family, 1) == [tuple(range(1, 9))]
    # all three pairs swapped
    assert (2, 1, 6, 8, 5, 3, 7, 4) in members


def test_members_for_four_up_to_hundred():
    family = build_family(4, 100)
    members = emit_members(family, 100)
    assert len(set(members)) == 100
    assert all(verify_member(image) for image in members)


def test_blocks_are_disjoint_and_in_range():
    for b in (2, 3, 4, 12):
        for n in (b, 50, 997, 10 ** 4):
            if n < b:
                continue
            family = build_family(b, n)
            seen = set()
            for block in family.blocks:
                low, high = family.interval_bounds(block.interval)
                assert low < block.generator <= high
                assert all(1 <= e <= n for e in block.elements)
                assert seen.isdisjoint(block.elements)
                seen.update(block.elements)
            assert family.covered <= n


def test_family_count_below_exact_count():
    for n in range(2, 21):
        family = build_family(2, n)
        assert family_count(family) <= count_permutations(CompatKind.LCM, n).count


def test_small_families():
    assert family_count(BlockFamily(b=2, n=1, divisors=[1, 2])) == 1
    family = build_family(12, 12)
    assert [block.elements for block in family.blocks] == [(5, 10), (1, 2, 3, 4, 6, 12)]
    assert family_count(family) == 2 * 720
    assert family_count(odd_pair_family(2)) == 2


def test_interval_densities_approach_alpha():
    for b in (2, 4, 12):
        target = float(alpha(b))
        for i, density in interval_densities(b, 10 ** 6).items():
            assert abs(density - target) / target < 0.05, f"b={b} interval {i}"


def test_odd_pair_family():
    family = odd_pair_family(20)
    assert [block.generator for block in family.blocks] == [1, 3, 5, 7, 9]
    assert family_count(family) == 32
    assert all(verify_member(image) for image in emit_members(family, 32))
    # a quarter of [n] starts a pair, against a third for the even-valuation family
    n = 10 ** 4
    assert abs(len(odd_pair_family(n).blocks) / n - 0.25) < 1e-3
    assert abs(build_family(2, n).per_interval_counts[2] / n - float(Fraction(1, 3))) < 1e-2


def test_verify_member_rejects():
    assert not verify_member((1, 2, 2))
    assert not verify_member((1, 2, 3, 6, 5, 4))
    assert verify_member((1, 2, 3, 4, 5, 6))


def test_family_arguments():
    with pytest.raises(InvalidArgumentError):
        build_family(1, 10)
    with pytest.raises(InvalidArgumentError):
        build_family(12, 5)
    with pytest.raises(InvalidArgumentError):
        emit_members(build_family(2, 8), 0)


if __name__ == "__main__":
    sys.exit(0 if run_module(globals(), "block families") else 1)
