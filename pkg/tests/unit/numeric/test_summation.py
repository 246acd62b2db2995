"""
unit.numeric.test_summation.py
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

This module contains the unit tests for the mzvsum.numeric.summation module.
"""

import math

from hypothesis import given
from hypothesis import strategies as st

from mzvsum.numeric import summation


class TestCompensatedSum:
    def test_tenths(self):
        acc = summation.CompensatedSum()
        for _ in range(10):
            acc += 0.1
        assert acc.value == 1.0

    def test_cancellation(self):
        acc = summation.CompensatedSum()
        for value in (1.0, 1e100, 1.0, -1e100):
            acc.add(value)
        assert acc.value == 2.0

    def test_initial_value(self):
        acc = summation.CompensatedSum(3.0)
        acc.add(0.5)
        assert acc.value == 3.5
        assert repr(acc) == "CompensatedSum(3.5)"

    @given(st.lists(st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False), max_size=200))
    def test_matches_fsum(self, values):
        assert math.isclose(
            summation.compensated_total(values), math.fsum(values), rel_tol=1e-12, abs_tol=1e-6
        )


class TestRunningSums:
    def test_prefixes(self):
        assert summation.running_sums([1.0, 2.0, 3.0]) == [1.0, 3.0, 6.0]
        assert summation.running_sums([]) == []

    def test_last_matches_total(self):
        terms = [1.0 / k**2 for k in range(1, 10_001)]
        prefixes = summation.running_sums(terms)
        assert prefixes[-1] == summation.compensated_total(terms)
        assert abs(prefixes[-1] - math.fsum(terms)) <= 1e-14

    def test_monotone_for_positive_terms(self):
        prefixes = summation.running_sums([1.0 / k for k in range(1, 1000)])
        assert all(a < b for a, b in zip(prefixes, prefixes[1:]))
