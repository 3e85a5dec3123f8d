"""
Point Sets
Sets D of n distinct lattice points in N x N, listed in graded-lex order
"""
import logging
from dataclasses import dataclass
from math import comb
from typing import Iterator, List, Tuple

from qtcatalan.diagonal_ideal.multipoly import MultiPoly, Point, delta, glex_key
from qtcatalan.exceptions import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointSet:
    """
    D = {P_1, ..., P_n} with P_1 < ... < P_n in graded-lex order.

    The constructor sorts its input and rejects repeated points.
    """
    points: Tuple[Point, ...]

    def __post_init__(self):
        points = tuple(sorted(((int(a), int(b)) for a, b in self.points), key=glex_key))
        if any(a < 0 or b < 0 for a, b in points):
            raise PreconditionError(f"points must lie in N x N, got {points}")
        if len(set(points)) != len(points):
            raise PreconditionError(f"point set has repeated points: {points}")
        object.__setattr__(self, 'points', points)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def d1(self) -> int:
        return sum(a for a, _ in self.points)

    @property
    def d2(self) -> int:
        return sum(b for _, b in self.points)

    @property
    def bidegree(self) -> Tuple[int, int]:
        return self.d1, self.d2

    @property
    def k(self) -> int:
        """C(n,2) - d1 - d2 (may be negative)"""
        return comb(self.n, 2) - self.d1 - self.d2

    def level(self, j: int) -> int:
        """|P_j| = a_j + b_j for 1-based j; |P_{n+1}| = n by convention"""
        if j == self.n + 1:
            return self.n
        a, b = self.points[j - 1]
        return a + b

    @property
    def levels(self) -> Tuple[int, ...]:
        return tuple(a + b for a, b in self.points)

    def delta(self) -> MultiPoly:
        return delta(self.points)

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __str__(self) -> str:
        return "{" + ",".join(f"({a},{b})" for a, b in self.points) + "}"


def enumerate_pointsets(n: int, d1: int, d2: int) -> Iterator[PointSet]:
    """All n-point sets of bidegree exactly (d1, d2), in lexicographic order of their point lists"""
    if n < 0 or d1 < 0 or d2 < 0:
        return
    candidates: List[Point] = sorted(((a, b) for a in range(d1 + 1) for b in range(d2 + 1)), key=glex_key)

    def extend(start: int, chosen: List[Point], rest_a: int, rest_b: int) -> Iterator[Tuple[Point, ...]]:
        if len(chosen) == n:
            if rest_a == 0 and rest_b == 0:
                yield tuple(chosen)
            return
        for index in range(start, len(candidates)):
            a, b = candidates[index]
            if a > rest_a or b > rest_b:
                continue
            chosen.append((a, b))
            yield from extend(index + 1, chosen, rest_a - a, rest_b - b)
            chosen.pop()

    for points in extend(0, [], d1, d2):
        yield PointSet(points)


def count_pointsets(n: int, d1: int, d2: int) -> int:
    return sum(1 for _ in enumerate_pointsets(n, d1, d2))


def staircase_points(n: int, d1: int, d2: int) -> PointSet:
    """
    The canonical D with |P_i| = i-1 and bidegree (d1, d2).

    Levels are filled in ascending order, each point taking as much of the
    remaining x-degree as its level allows.
    """
    if d1 < 0 or d2 < 0 or d1 + d2 != comb(n, 2):
        raise PreconditionError(f"no staircase point set of bidegree ({d1}, {d2}) for n={n}")
    points = []
    remaining = d1
    for level in range(n):
        a = min(level, remaining)
        points.append((a, level - a))
        remaining -= a
    return PointSet(tuple(points))
