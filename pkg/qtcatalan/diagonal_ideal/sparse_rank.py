"""
Sparse Rank
Exact incremental Gaussian elimination over the rationals

Rows are dicts {column key: Fraction}. Column keys only need to be hashable
and mutually comparable (tuples of exponents or of points).
"""
import heapq
import logging
from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Mapping, Tuple

logger = logging.getLogger(__name__)

Row = Dict[Hashable, Fraction]


def clean_row(row: Mapping[Hashable, object]) -> Row:
    return {key: Fraction(value) for key, value in row.items() if value != 0}


class SparseEchelon:
    """
    Semi-echelon basis built one row at a time.

    Each stored pivot row is reduced against the pivots inserted before it,
    so reducing a new vector in pivot-insertion order terminates. The pivot
    column of a new row is the one touched by the fewest stored rows
    (Markowitz-style, ties broken by column order).
    """

    def __init__(self):
        self._pivots: Dict[Hashable, Tuple[int, Row]] = {}
        self._order: List[Hashable] = []
        self._column_counts: Dict[Hashable, int] = {}

    def __len__(self) -> int:
        return len(self._order)

    @property
    def rank(self) -> int:
        return len(self._order)

    def rows(self) -> List[Row]:
        return [dict(self._pivots[col][1]) for col in self._order]

    def reduce(self, row: Mapping[Hashable, object]) -> Row:
        """Residue of row modulo the span of the stored pivots"""
        work = clean_row(row)
        heap = [self._pivots[col][0] for col in work if col in self._pivots]
        heapq.heapify(heap)
        scheduled = set(heap)
        while heap:
            index = heapq.heappop(heap)
            col = self._order[index]
            factor = work.get(col)
            if factor is None:
                continue
            for key, value in self._pivots[col][1].items():
                updated = work.get(key, 0) - factor * value
                if not updated:
                    work.pop(key, None)
                    continue
                work[key] = updated
                pivot = self._pivots.get(key)
                # only pivots inserted later than `col` can appear here
                if pivot is not None and pivot[0] not in scheduled:
                    scheduled.add(pivot[0])
                    heapq.heappush(heap, pivot[0])
        return work

    def add(self, row: Mapping[Hashable, object]) -> bool:
        """Insert a row; returns True iff it was independent of the stored rows"""
        residue = self.reduce(row)
        if not residue:
            return False
        col = min(residue, key=lambda key: (self._column_counts.get(key, 0), key))
        scale = residue[col]
        normalized = {key: value / scale for key, value in residue.items()}
        self._pivots[col] = (len(self._order), normalized)
        self._order.append(col)
        for key in normalized:
            self._column_counts[key] = self._column_counts.get(key, 0) + 1
        return True

    def contains(self, row: Mapping[Hashable, object]) -> bool:
        return not self.reduce(row)

    def copy(self) -> 'SparseEchelon':
        other = SparseEchelon()
        other._pivots = dict(self._pivots)
        other._order = list(self._order)
        other._column_counts = dict(self._column_counts)
        return other

    def extend(self, rows: Iterable[Mapping[Hashable, object]]) -> int:
        """Insert many rows; returns how many were independent"""
        return sum(1 for row in rows if self.add(row))


def rank_of(rows: Iterable[Mapping[Hashable, object]]) -> int:
    echelon = SparseEchelon()
    echelon.extend(rows)
    return echelon.rank
