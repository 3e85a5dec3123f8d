"""
Tests for partition counting and enumeration
"""
import pytest
import sympy
from hypothesis import given, strategies as st

from qtcatalan.exceptions import PreconditionError
from qtcatalan.utils.partition_numbers import (
    partition_count, partition_count_bounded, partitions, partitions_at_most,
)


class TestPartitionCount:
    """p(k) by the pentagonal recurrence"""

    def test_small_values(self):
        """p(0..10)"""
        assert [partition_count(k) for k in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

    def test_hundred(self):
        """p(100) = 190569292"""
        assert partition_count(100) == 190569292

    def test_negative(self):
        assert partition_count(-1) == 0

    @pytest.mark.parametrize("k", [17, 41, 63])
    def test_against_sympy(self, k):
        """Matches sympy's partition function"""
        assert partition_count(k) == int(sympy.npartitions(k))


class TestBoundedCount:
    """p(b, k): at most b parts"""

    def test_known_values(self):
        """p(2,4) = 3, p(3,6) = 7, p(0,3) = 0, p(0,0) = 1"""
        assert partition_count_bounded(2, 4) == 3
        assert partition_count_bounded(3, 6) == 7
        assert partition_count_bounded(0, 3) == 0
        assert partition_count_bounded(0, 0) == 1

    def test_saturates(self):
        """p(b, k) = p(k) once b >= k"""
        for k in range(12):
            assert partition_count_bounded(k, k) == partition_count(k)
            assert partition_count_bounded(k + 3, k) == partition_count(k)

    def test_negative_bound(self):
        with pytest.raises(PreconditionError):
            partition_count_bounded(-1, 2)

    @given(st.integers(0, 8), st.integers(0, 14))
    def test_matches_enumeration(self, b, k):
        """Count agrees with the enumerated list"""
        listed = partitions_at_most(b, k)
        assert len(listed) == partition_count_bounded(b, k)
        assert len(set(listed)) == len(listed)


class TestEnumeration:
    """partitions() and partitions_at_most()"""

    def test_partitions_of_four(self):
        """Reverse lex order, weakly decreasing"""
        assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_partitions_of_zero(self):
        assert list(partitions(0)) == [()]

    def test_ascending_form(self):
        """Par(2, 4) listed ascending and sorted"""
        assert partitions_at_most(2, 4) == [(1, 3), (2, 2), (4,)]

    def test_parts_sum(self):
        """Every enumerated partition sums to k"""
        for k in range(10):
            for part in partitions(k):
                assert sum(part) == k
                assert list(part) == sorted(part, reverse=True)
