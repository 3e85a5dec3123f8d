"""
Path Generators for I^m
Point sets D_1(pi)..D_m(pi) read off an m-Dyck path, and the test that the
products prod_j delta(D_j(pi)) generate I^m

For column i of the triangle:
- a_i counts the full squares below pi and above the line my = x;
- b_i counts the cells w of the partition above pi in column i with
  m*l(w) <= a(w) <= m*(l(w)+1).
D_j(pi) collects the points (a_i, b_i) with i = j mod m.
"""
import logging
from typing import Dict, List, Tuple

from qtcatalan.core.catalan_combinatorics import Cell, DyckPath, arm_leg, dyck_paths, path_to_partition
from qtcatalan.diagonal_ideal.graded_engine import ISOTYPIC, ac_poly, get_engine, product_coordinates
from qtcatalan.diagonal_ideal.pointsets import PointSet
from qtcatalan.exceptions import PreconditionError, RepeatedPointError

logger = logging.getLogger(__name__)


def column_statistics(pi: DyckPath) -> List[Tuple[int, int]]:
    """(a_i, b_i) for i = 1..mn"""
    m = pi.m
    lam = path_to_partition(pi)
    heights_above = lam.conjugate.parts
    stats = []
    for i, h in enumerate(pi.heights, start=1):
        a = h - (-(-i // m))
        b = 0
        if i - 1 < len(heights_above):
            for row in range(heights_above[i - 1]):
                arm, leg, _, _ = arm_leg(lam, Cell(i - 1, row))
                if m * leg <= arm <= m * (leg + 1):
                    b += 1
        stats.append((a, b))
    return stats


def conjecture61_data(pi: DyckPath, m: int, n: int) -> List[PointSet]:
    """
    Raises:
        RepeatedPointError: some D_j(pi) contains a point twice
    """
    if pi.m != m or pi.n != n:
        raise PreconditionError(f"path has (m, n) = ({pi.m}, {pi.n}), expected ({m}, {n})")
    stats = column_statistics(pi)
    sets = []
    for j in range(1, m + 1):
        points = [stats[j + m * s - 1] for s in range(n)]
        if len(set(points)) != n:
            repeated = next(p for p in points if points.count(p) > 1)
            logger.error(f"D_{j} of path {pi.heights} repeats the point {repeated}")
            raise RepeatedPointError(f"D_{j}({pi.steps}) repeats {repeated}",
                                     witness={'heights': list(pi.heights), 'm': m, 'j': j,
                                              'point': list(repeated)})
        sets.append(PointSet(tuple(points)))
    return sets


def conjecture61_deficiencies(m: int, n: int) -> List[Dict]:
    """
    Bidegrees where the path generators fail to span M^{(m)}, each with the
    rank reached and the dimension required. Empty means the check passed.
    """
    engine = get_engine(n)
    by_degree: Dict[Tuple[int, int], list] = {}
    for pi in dyck_paths(m, n):
        sets = conjecture61_data(pi, m, n)
        d = (sum(D.d1 for D in sets), sum(D.d2 for D in sets))
        by_degree.setdefault(d, []).append(product_coordinates([D.points for D in sets], ISOTYPIC))

    support = set(ac_poly(m, n).terms)
    deficiencies = []
    for d in sorted(support | set(by_degree)):
        dim = engine.dim_M(m, d)
        rank = engine.rank_modulo_lower(m, d, by_degree.get(d, []))
        if rank != dim:
            logger.warning(f"path generators span rank {rank} of dim {dim} at bidegree {d} (m={m}, n={n})")
            deficiencies.append({'bidegree': list(d), 'rank': rank, 'dim': dim})
    return deficiencies


def conjecture61_check(m: int, n: int) -> bool:
    ok = not conjecture61_deficiencies(m, n)
    logger.info(f"path generators for I^{m} at n={n}: {'span' if ok else 'do not span'}")
    return ok
