"""
Partition Numbers
Counting and enumeration of integer partitions

p(k)   - number of partitions of k
p(b,k) - number of partitions of k into at most b parts

Conventions: p(0) = 1, p(b, 0) = 1 for every b >= 0, p(0, k) = 0 for k > 0.
"""
import logging
from functools import lru_cache
from typing import Iterator, List, Tuple

from qtcatalan.exceptions import PreconditionError

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def partition_count(k: int) -> int:
    """
    p(k) by Euler's pentagonal number recurrence.

    Args:
        k: Nonnegative integer

    Returns:
        Number of partitions of k
    """
    if k < 0:
        return 0
    if k == 0:
        return 1
    total = 0
    j = 1
    while True:
        first = j * (3 * j - 1) // 2
        if first > k:
            break
        sign = 1 if j % 2 else -1
        total += sign * partition_count(k - first)
        second = j * (3 * j + 1) // 2
        if second <= k:
            total += sign * partition_count(k - second)
        j += 1
    return total


@lru_cache(maxsize=None)
def partition_count_bounded(b: int, k: int) -> int:
    """p(b, k): partitions of k with at most b parts"""
    if b < 0:
        raise PreconditionError(f"part bound must be nonnegative, got {b}")
    if k < 0:
        return 0
    if k == 0:
        return 1
    if b == 0:
        return 0
    # either fewer than b parts, or exactly b parts (subtract 1 from each)
    return partition_count_bounded(b - 1, k) + partition_count_bounded(b, k - b)


def partitions(k: int, max_part: int = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of k as weakly decreasing tuples, in reverse lex order"""
    if k < 0:
        return
    if max_part is None:
        max_part = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions(k - first, first):
            yield (first,) + rest


def partitions_up_to(total: int) -> Iterator[Tuple[int, ...]]:
    """All partitions of area 0..total, grouped by area"""
    for k in range(total + 1):
        yield from partitions(k)


def partitions_at_most(b: int, k: int) -> List[Tuple[int, ...]]:
    """
    Par(b, k): partitions of k into at most b parts.

    Each partition is listed in ascending order (nu_1 <= nu_2 <= ...), the
    convention used by the rho-map; the list is sorted lexicographically.
    """
    if b < 0:
        raise PreconditionError(f"part bound must be nonnegative, got {b}")
    result = [tuple(reversed(p)) for p in partitions(k) if len(p) <= b]
    result.sort()
    return result
