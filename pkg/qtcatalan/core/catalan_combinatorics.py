"""
Catalan Combinatorics
Partitions, m-Dyck words and m-Dyck paths with their statistics

Provides the three combinatorial generating polynomials:
- pc_poly: partitions in the (m, n) triangle, q^{area^c} t^{c_m}
- wc_poly: m-Dyck words, q^{area} t^{dinv_m}
- dc_poly: m-Dyck paths, q^{b_m} t^{area}

plus the truncated "modified" series used to test the n -> infinity limits.

Geometry used throughout: the triangle has vertices (0,0), (0,n), (mn,n).
Row r (counted from the bottom, 0-indexed) holds m*r complete squares left
of the diagonal. A path is stored by its column heights h_1..h_mn; its row
view x_0..x_{n-1} gives the x-coordinate of the north step in row r, and
the partition above the path has rows x_{n-1} >= x_{n-2} >= ... (top first).
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from qtcatalan.core.qt_algebra import QtPoly, QtSeries
from qtcatalan.exceptions import InconsistencyError, PreconditionError
from qtcatalan.utils.partition_numbers import partitions_up_to

logger = logging.getLogger(__name__)


def higher_catalan(m: int, n: int) -> int:
    """(1/(mn+1)) * binom(mn+n, n)"""
    return comb(m * n + n, n) // (m * n + 1)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_mn(m: int, n: int):
    if m < 1 or n < 1:
        raise PreconditionError(f"m and n must be positive, got m={m}, n={n}")


# ============================================================
# Partitions
# ============================================================

@dataclass(frozen=True)
class Cell:
    """A cell of a Ferrers diagram: coarm a' (column) and coleg l' (row, top row is 0)"""
    col: int
    row: int


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of positive integers"""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for i, part in enumerate(parts):
            if part < 1:
                raise PreconditionError(f"partition parts must be positive, got {parts}")
            if i and part > parts[i - 1]:
                raise PreconditionError(f"partition parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, 'parts', parts)

    @property
    def area(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @cached_property
    def conjugate(self) -> 'Partition':
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def cells(self) -> Iterator[Cell]:
        for row, length in enumerate(self.parts):
            for col in range(length):
                yield Cell(col, row)

    def contains(self, cell: Cell) -> bool:
        return 0 <= cell.row < len(self.parts) and 0 <= cell.col < self.parts[cell.row]

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return f"({','.join(str(p) for p in self.parts)})"


def arm_leg(lam: Partition, x: Cell) -> Tuple[int, int, int, int]:
    """
    Arm, leg, coarm and coleg of a cell.

    Returns:
        (a, l, a', l') with a = row length - a' - 1, l = column height - l' - 1
    """
    if not lam.contains(x):
        raise PreconditionError(f"cell {x} lies outside the diagram of {lam}")
    arm = lam.parts[x.row] - x.col - 1
    leg = lam.conjugate.parts[x.col] - x.row - 1
    return arm, leg, x.col, x.row


def _cell_arm_legs(lam: Partition) -> Iterator[Tuple[int, int]]:
    conj = lam.conjugate.parts
    for row, length in enumerate(lam.parts):
        for col in range(length):
            yield length - col - 1, conj[col] - row - 1


def c_m_stat(lam: Partition, m: int) -> int:
    """Number of cells with m*l <= a <= m*l + m"""
    return sum(1 for a, l in _cell_arm_legs(lam) if m * l <= a <= m * l + m)


def h_plus(lam: Partition, m: Union[int, Fraction]) -> int:
    """
    Number of cells with a/(l+1) <= m < (a+1)/l.

    m may be any positive rational; for l = 0 the right inequality is vacuous.
    """
    m = Fraction(m)
    if m <= 0:
        raise PreconditionError(f"h_plus needs m > 0, got {m}")
    count = 0
    for a, l in _cell_arm_legs(lam):
        if a <= m * (l + 1) and (l == 0 or m * l < a + 1):
            count += 1
    return count


def fits_triangle(lam: Partition, m: int, n: int) -> bool:
    """True iff the row with coleg i has length <= m(n-1-i) for every row"""
    if len(lam.parts) > max(n - 1, 0):
        return False
    return all(length <= m * (n - 1 - i) for i, length in enumerate(lam.parts))


def triangle_partitions(m: int, n: int, max_area: Optional[int] = None) -> Iterator[Partition]:
    """
    Par_n^{(m)}: partitions fitting the (m, n) triangle.

    Rows are generated top-down with row i bounded by min(previous row,
    m(n-1-i)); max_area prunes the tree for truncated enumeration.
    """
    _check_mn(m, n)
    budget = float('inf') if max_area is None else max_area

    def extend(prefix: List[int], row: int, used: int) -> Iterator[Partition]:
        yield Partition(tuple(prefix))
        if row >= n - 1:
            return
        bound = m * (n - 1 - row)
        if prefix:
            bound = min(bound, prefix[-1])
        bound = min(bound, budget - used)
        for length in range(1, int(bound) + 1):
            prefix.append(length)
            yield from extend(prefix, row + 1, used + length)
            prefix.pop()

    yield from extend([], 0, 0)


def pc_poly(m: int, n: int) -> QtPoly:
    """Partition version: sum of q^{mC(n,2) - area} t^{c_m} over Par_n^{(m)}"""
    _check_mn(m, n)
    top = m * comb(n, 2)
    acc: Dict[Tuple[int, int], int] = {}
    count = 0
    for lam in triangle_partitions(m, n):
        key = (top - lam.area, c_m_stat(lam, m))
        acc[key] = acc.get(key, 0) + 1
        count += 1
    logger.debug(f"pc_poly(m={m}, n={n}): {count} partitions")
    return QtPoly(acc)


# ============================================================
# m-Dyck words
# ============================================================

@dataclass(frozen=True)
class DyckWord:
    """m-Dyck word: gamma_0 = 0, 0 <= gamma_{i+1} <= gamma_i + m"""
    entries: Tuple[int, ...]
    m: int

    def __post_init__(self):
        entries = tuple(int(g) for g in self.entries)
        object.__setattr__(self, 'entries', entries)
        if self.m < 1:
            raise PreconditionError(f"slope m must be positive, got {self.m}")
        if not entries or entries[0] != 0:
            raise PreconditionError(f"a Dyck word starts with 0, got {entries}")
        for prev, cur in zip(entries, entries[1:]):
            if cur < 0 or cur > prev + self.m:
                raise PreconditionError(f"invalid {self.m}-Dyck word {entries}")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def area(self) -> int:
        return sum(self.entries)


def sc_m(p: int, m: int) -> int:
    """Scoring function: m+1-p on [1, m], m+p on [-m, 0], else 0"""
    if 1 <= p <= m:
        return m + 1 - p
    if -m <= p <= 0:
        return m + p
    return 0


def dinv_m(gamma: DyckWord, m: int) -> int:
    """Sum over i < j of sc_m(gamma_i - gamma_j)"""
    if gamma.m != m:
        gamma = DyckWord(gamma.entries, m)
    g = gamma.entries
    return sum(sc_m(g[i] - g[j], m) for i in range(len(g)) for j in range(i + 1, len(g)))


def dyck_words(m: int, n: int) -> Iterator[DyckWord]:
    """All m-Dyck words of length n"""
    _check_mn(m, n)

    def extend(prefix: List[int]) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for value in range(prefix[-1] + m + 1):
            prefix.append(value)
            yield from extend(prefix)
            prefix.pop()

    for entries in extend([0]):
        yield DyckWord(entries, m)


def wc_poly(m: int, n: int) -> QtPoly:
    """Word version: sum of q^{area} t^{dinv_m}"""
    acc: Dict[Tuple[int, int], int] = {}
    for gamma in dyck_words(m, n):
        key = (gamma.area, dinv_m(gamma, m))
        acc[key] = acc.get(key, 0) + 1
    return QtPoly(acc)


def partition_to_word(lam: Partition, m: int, n: int) -> DyckWord:
    """gamma_i = squares right of lam and left of the diagonal in row i (from the bottom)"""
    if not fits_triangle(lam, m, n):
        raise PreconditionError(f"{lam} does not fit the (m={m}, n={n}) triangle")
    rows = _row_view_of_partition(lam, n)
    return DyckWord(tuple(m * r - x for r, x in enumerate(rows)), m)


def word_to_partition(gamma: DyckWord) -> Partition:
    """Inverse of partition_to_word"""
    rows = [gamma.m * r - g for r, g in enumerate(gamma.entries)]
    return Partition(tuple(x for x in reversed(rows) if x > 0))


def _row_view_of_partition(lam: Partition, n: int) -> List[int]:
    padded = list(lam.parts) + [0] * (n - len(lam.parts))
    return list(reversed(padded))


# ============================================================
# m-Dyck paths
# ============================================================

@dataclass(frozen=True)
class BounceData:
    v: Tuple[int, ...]
    b_m: int


@dataclass(frozen=True)
class DyckPath:
    """
    m-Dyck path from (0,0) to (mn, n) by column heights.

    heights[i-1] is the height of the east step over column [i-1, i]; the
    sequence is nondecreasing, ends at n, and h_i >= ceil(i/m).
    """
    heights: Tuple[int, ...]
    m: int
    n: int = field(init=False)

    def __post_init__(self):
        heights = tuple(int(h) for h in self.heights)
        object.__setattr__(self, 'heights', heights)
        if self.m < 1 or not heights or len(heights) % self.m:
            raise PreconditionError(f"path of {len(heights)} columns is not an m={self.m} path")
        n = len(heights) // self.m
        object.__setattr__(self, 'n', n)
        if heights[-1] != n:
            raise PreconditionError(f"path must end at height {n}, got {heights}")
        for i, h in enumerate(heights, start=1):
            if h < _ceil_div(i, self.m):
                raise PreconditionError(f"path {heights} goes below the diagonal at column {i}")
            if i > 1 and h < heights[i - 2]:
                raise PreconditionError(f"heights must be nondecreasing, got {heights}")

    @classmethod
    def from_rows(cls, rows: Sequence[int], m: int) -> 'DyckPath':
        """Build from the row view x_0..x_{n-1} (x-coordinate of each north step)"""
        n = len(rows)
        heights = tuple(sum(1 for x in rows if x < i) for i in range(1, m * n + 1))
        if any(x > m * r for r, x in enumerate(rows)) or list(rows) != sorted(rows):
            raise PreconditionError(f"row view {tuple(rows)} is not an m={m} Dyck path")
        return cls(heights, m)

    @classmethod
    def from_partition(cls, lam: Partition, m: int, n: int) -> 'DyckPath':
        if not fits_triangle(lam, m, n):
            raise PreconditionError(f"{lam} does not fit the (m={m}, n={n}) triangle")
        return cls.from_rows(_row_view_of_partition(lam, n), m)

    @classmethod
    def full_triangle(cls, m: int, n: int) -> 'DyckPath':
        """n north steps, then mn east steps"""
        return cls((n,) * (m * n), m)

    @property
    def rows(self) -> Tuple[int, ...]:
        """x_r = number of columns whose height is <= r"""
        return tuple(sum(1 for h in self.heights if h <= r) for r in range(self.n))

    @property
    def area(self) -> int:
        return sum(h - _ceil_div(i, self.m) for i, h in enumerate(self.heights, start=1))

    @property
    def steps(self) -> str:
        """North/east step string, e.g. 'NNEEEE'"""
        out = []
        level = 0
        for h in self.heights:
            out.append('N' * (h - level))
            out.append('E')
            level = h
        return ''.join(out)


def path_to_partition(pi: DyckPath) -> Partition:
    """Cells above pi inside the triangle"""
    return Partition(tuple(x for x in reversed(pi.rows) if x > 0))


def path_to_word(pi: DyckPath) -> DyckWord:
    return DyckWord(tuple(pi.m * r - x for r, x in enumerate(pi.rows)), pi.m)


def dyck_paths(m: int, n: int, max_coarea: Optional[int] = None) -> Iterator[DyckPath]:
    """All m-Dyck paths of order n (via the partition above each path)"""
    for lam in triangle_partitions(m, n, max_coarea):
        yield DyckPath.from_partition(lam, m, n)


def bounce(pi: DyckPath, m: int) -> BounceData:
    """
    m-bounce construction.

    From (u, y) move north to the east step of pi starting on x = u (that
    distance is v_i), then east v_i + ... + v_{i-m+1}. Stops at (mn, n).
    """
    if pi.m != m:
        raise PreconditionError(f"path has slope {pi.m}, bounce requested for m={m}")
    n = pi.n
    width = m * n
    u, y = 0, 0
    v: List[int] = []
    while True:
        height = pi.heights[u] if u < width else n
        step = height - y
        if step < 0:
            raise InconsistencyError(f"bounce path left the region of {pi.heights} at x={u}")
        v.append(step)
        y += step
        move = sum(v[-m:])
        if move == 0:
            if y < n:
                raise InconsistencyError(f"bounce path stalled at ({u}, {y}) on {pi.heights}")
            break
        u += move
        if u >= width and y >= n:
            break
    return BounceData(tuple(v), sum(k * vk for k, vk in enumerate(v)))


def dc_poly(m: int, n: int) -> QtPoly:
    """Path version: sum of q^{b_m} t^{area}"""
    acc: Dict[Tuple[int, int], int] = {}
    for pi in dyck_paths(m, n):
        key = (bounce(pi, m).b_m, pi.area)
        acc[key] = acc.get(key, 0) + 1
    return QtPoly(acc)


def area_polynomial(m: int, n: int) -> QtPoly:
    """Sum over m-Dyck paths of q^{area}"""
    acc: Dict[Tuple[int, int], int] = {}
    for pi in dyck_paths(m, n):
        key = (pi.area, 0)
        acc[key] = acc.get(key, 0) + 1
    return QtPoly(acc)


def stabilized_bounce_check(lam: Partition, m: int, n: int) -> bool:
    """For n >= 2*area(lam) the path embedding lam has b_m = length of lam"""
    if not fits_triangle(lam, m, n):
        raise PreconditionError(f"{lam} does not fit the (m={m}, n={n}) triangle")
    if n < 2 * lam.area:
        raise PreconditionError(f"stabilization needs n >= 2*area = {2 * lam.area}, got n={n}")
    data = bounce(DyckPath.from_partition(lam, m, n), m)
    return data.b_m == lam.length


# ============================================================
# Modified (limit-side) series
# ============================================================

def modified_pc_series(m: int, n: int, a_max: int) -> QtSeries:
    """
    q^{mC(n,2)} PC(q^{-1}, t) truncated at q-degree a_max.

    Only partitions of area <= a_max are visited.
    """
    acc: Dict[Tuple[int, int], int] = {}
    for lam in triangle_partitions(m, n, a_max):
        key = (lam.area, c_m_stat(lam, m))
        acc[key] = acc.get(key, 0) + 1
    return QtSeries(a_max, acc)


def modified_wc_series(m: int, n: int, a_max: int) -> QtSeries:
    """q^{mC(n,2)} WC(q^{-1}, t) truncated; words of co-area <= a_max"""
    acc: Dict[Tuple[int, int], int] = {}
    for lam in triangle_partitions(m, n, a_max):
        key = (lam.area, dinv_m(partition_to_word(lam, m, n), m))
        acc[key] = acc.get(key, 0) + 1
    return QtSeries(a_max, acc)


def modified_dc_series(m: int, n: int, a_max: int) -> QtSeries:
    """q^{mC(n,2)} DC(t, q^{-1}) truncated: sum of q^{area^c} t^{b_m}"""
    acc: Dict[Tuple[int, int], int] = {}
    for lam in triangle_partitions(m, n, a_max):
        key = (lam.area, bounce(DyckPath.from_partition(lam, m, n), m).b_m)
        acc[key] = acc.get(key, 0) + 1
    return QtSeries(a_max, acc)


def hplus_series(m: Union[int, Fraction], order: int) -> QtSeries:
    """Sum of q^{area} t^{h_m^+} over all partitions of area <= order"""
    acc: Dict[Tuple[int, int], int] = {}
    for parts in partitions_up_to(order):
        lam = Partition(parts)
        key = (lam.area, h_plus(lam, m))
        acc[key] = acc.get(key, 0) + 1
    return QtSeries(order, acc)
