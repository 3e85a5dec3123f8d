"""
Determinants over polynomial rings

Cofactor expansion with memoized minors: the minor built from the last
rows and a given column subset is computed once. Works for any entry type
with +, - and * (MultiPoly, RhoPoly, Fraction).
"""
from functools import lru_cache
from typing import Callable, List, Sequence, TypeVar

T = TypeVar('T')


def cofactor_determinant(matrix: Sequence[Sequence[T]], zero: T, one: T,
                         is_zero: Callable[[T], bool]) -> T:
    """
    Determinant of a square matrix.

    Rows are reordered sparsest-first before expansion (tracking the sign),
    then the expansion runs down the rows, skipping zero entries.
    """
    size = len(matrix)
    if size == 0:
        return one
    if any(len(row) != size for row in matrix):
        raise ValueError(f"matrix is not square: {size} rows")

    order = sorted(range(size), key=lambda i: sum(1 for entry in matrix[i] if not is_zero(entry)))
    sign = _permutation_sign(order)
    rows: List[Sequence[T]] = [matrix[i] for i in order]

    @lru_cache(maxsize=None)
    def minor(depth: int, used: int) -> T:
        if depth == size:
            return one
        total = zero
        parity = 0
        for col in range(size):
            if used >> col & 1:
                continue
            entry = rows[depth][col]
            if not is_zero(entry):
                rest = minor(depth + 1, used | (1 << col))
                if not is_zero(rest):
                    term = entry * rest
                    total = total - term if parity else total + term
            parity ^= 1
        return total

    result = minor(0, 0)
    minor.cache_clear()
    return -result if sign < 0 else result


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cur = perm[cur]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
