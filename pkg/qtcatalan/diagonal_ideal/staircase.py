"""
Staircase Forms
Structured determinants congruent to delta(D) modulo lower degrees

Column j of a staircase form carries a word over {x, y} of length |P_j|.
Entry (i, j) is zero for i <= |P_j| and otherwise the product over the
letters l = 1..|P_j| of (x_i - x_l) or (y_i - y_l). The point of column j
is (number of x letters, number of y letters).
"""
import itertools
import logging
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Sequence, Tuple

from qtcatalan.core.catalan_combinatorics import Partition
from qtcatalan.diagonal_ideal.multipoly import MultiPoly, Point, glex_key
from qtcatalan.diagonal_ideal.pointsets import PointSet, staircase_points
from qtcatalan.exceptions import PreconditionError, SearchExhaustedError
from qtcatalan.utils.determinants import cofactor_determinant

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PartitionType:
    """Partition of k collected from the blocks of a staircase form"""
    mu: Partition = Partition()

    @classmethod
    def of(cls, parts: Sequence[int]) -> 'PartitionType':
        return cls(Partition(tuple(sorted((p for p in parts if p), reverse=True))))

    @property
    def ascending(self) -> Tuple[int, ...]:
        return tuple(reversed(self.mu.parts))

    @property
    def size(self) -> int:
        return self.mu.area


@dataclass(frozen=True)
class BlockStructure:
    """(start column, size) per block, 1-based, with the derived invariants"""
    blocks: Tuple[Tuple[int, int], ...]
    partition_type: PartitionType
    is_minimal: bool

    @property
    def unit_blocks(self) -> int:
        return sum(1 for _, size in self.blocks if size == 1)


@dataclass(frozen=True)
class StaircaseForm:
    """Staircase form given by its column words"""
    words: Tuple[str, ...]

    def __post_init__(self):
        words = tuple(str(w) for w in self.words)
        object.__setattr__(self, 'words', words)
        for j, word in enumerate(words, start=1):
            if set(word) - {'x', 'y'}:
                raise PreconditionError(f"column {j} word {word!r} uses letters other than x and y")
        points = self.points
        for j in range(1, len(points)):
            if glex_key(points[j - 1]) >= glex_key(points[j]):
                raise PreconditionError(f"column points {points} are not strictly increasing in graded-lex order")

    @classmethod
    def from_points(cls, points: Sequence[Point]) -> 'StaircaseForm':
        """All x letters first, then y letters"""
        return cls(tuple('x' * a + 'y' * b for a, b in points))

    @property
    def n(self) -> int:
        return len(self.words)

    @property
    def points(self) -> Tuple[Point, ...]:
        return tuple((w.count('x'), w.count('y')) for w in self.words)

    @property
    def levels(self) -> Tuple[int, ...]:
        return tuple(len(w) for w in self.words)

    def point_set(self) -> PointSet:
        return PointSet(self.points)

    def word(self, i: int, j: int) -> Optional[str]:
        """Choice word of entry (i, j), or None where the entry is zero"""
        word = self.words[j - 1]
        return word if i > len(word) else None

    def entry(self, i: int, j: int) -> MultiPoly:
        n = self.n
        word = self.word(i, j)
        if word is None:
            return MultiPoly.zero(n)
        result = MultiPoly.constant(n)
        for l, letter in enumerate(word, start=1):
            make = MultiPoly.x if letter == 'x' else MultiPoly.y
            result = result * (make(i, n) - make(l, n))
        return result

    def matrix(self) -> List[List[MultiPoly]]:
        return [[self.entry(i, j) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]


def staircase_det(form: StaircaseForm) -> MultiPoly:
    n = form.n
    return cofactor_determinant(form.matrix(), MultiPoly.zero(n), MultiPoly.constant(n), MultiPoly.is_zero)


def block_diagonal(form: StaircaseForm) -> BlockStructure:
    """
    Blocks start at the columns j with |P_j| = j - 1. Each block contributes
    the number of nonzero entries above its diagonal; it is minimal when all
    of them sit on the first superdiagonal.
    """
    levels = form.levels
    n = form.n
    starts = [j for j in range(1, n + 1) if levels[j - 1] == j - 1]
    if not starts or starts[0] != 1:
        raise PreconditionError(f"no block starts at column 1 (levels {levels})")
    blocks = []
    counts = []
    minimal = True
    for index, start in enumerate(starts):
        end = starts[index + 1] - 1 if index + 1 < len(starts) else n
        blocks.append((start, end - start + 1))
        above = 0
        for i in range(start, end + 1):
            for j in range(i + 1, end + 1):
                if form.word(i, j) is not None:
                    above += 1
                    if j > i + 1:
                        minimal = False
        counts.append(above)
    return BlockStructure(blocks=tuple(blocks), partition_type=PartitionType.of(counts), is_minimal=minimal)


def lemma41_holds(form: StaircaseForm) -> bool:
    """At least n - 2k(D) blocks of size one"""
    k = form.point_set().k
    return block_diagonal(form).unit_blocks >= form.n - 2 * k


def _arrangements(sizes: Sequence[int]) -> List[Tuple[int, ...]]:
    return sorted(set(itertools.permutations(sizes)))


def _levels_for(arrangement: Sequence[int]) -> List[int]:
    """Levels of a staircase whose blocks are all minimal"""
    levels = []
    start = 1
    for size in arrangement:
        levels.append(start - 1)
        levels.extend(j - 2 for j in range(start + 1, start + size))
        start += size
    return levels


def _assign_x_degrees(levels: Sequence[int], d1: int) -> Optional[List[int]]:
    """
    x-degrees a_j in [0, L_j], strictly increasing on columns sharing a
    level, summing to d1; None when impossible.
    """
    n = len(levels)
    shared = [j + 1 < n and levels[j] == levels[j + 1] for j in range(n)]
    low = [0] * n
    high = list(levels)
    for j in range(n):
        if shared[j]:
            if levels[j] == 0:
                return None
            low[j + 1] = 1
            high[j] = levels[j] - 1
    if not sum(low) <= d1 <= sum(high):
        return None
    values = list(low)
    needed = d1 - sum(low)
    for j in reversed(range(n)):
        step = min(high[j] - values[j], needed)
        values[j] += step
        needed -= step
    return values


def minimal_staircase(n: int, d1: int, d2: int, mu: PartitionType) -> StaircaseForm:
    """
    A staircase form of bidegree (d1, d2) whose blocks are all minimal and
    whose partition type is mu.

    A minimal block of size s contributes s - 1 to the type, so the block
    sizes are the parts of mu plus one, padded with blocks of size one. The
    search runs over the arrangements of those blocks.

    Raises:
        PreconditionError: mu is not a partition of k = C(n,2) - d1 - d2
        SearchExhaustedError: no arrangement admits the bidegree
    """
    if not isinstance(mu, PartitionType):
        mu = PartitionType.of(mu)
    k = comb(n, 2) - d1 - d2
    if d1 < 0 or d2 < 0 or k < 0 or mu.size != k:
        raise PreconditionError(f"type {mu.mu} is not a partition of k={k} for n={n}, bidegree ({d1}, {d2})")
    sizes = [part + 1 for part in mu.mu.parts]
    if sum(sizes) > n:
        raise SearchExhaustedError(f"blocks of sizes {sizes} do not fit in {n} columns")
    sizes += [1] * (n - sum(sizes))
    for arrangement in _arrangements(sizes):
        levels = _levels_for(arrangement)
        x_degrees = _assign_x_degrees(levels, d1)
        if x_degrees is None:
            continue
        form = StaircaseForm.from_points([(a, level - a) for a, level in zip(x_degrees, levels)])
        structure = block_diagonal(form)
        if structure.is_minimal and structure.partition_type == mu:
            logger.debug(f"minimal staircase n={n} ({d1},{d2}) type {mu.mu}: blocks {arrangement}")
            return form
    raise SearchExhaustedError(f"no minimal staircase form of type {mu.mu} and bidegree ({d1}, {d2}) for n={n}")


def staircase_delta(n: int, d1: int, d2: int) -> MultiPoly:
    """f_{d1,d2}: delta of the canonical point set with |P_i| = i - 1"""
    return staircase_points(n, d1, d2).delta()
