"""
Lemma Checks
Finite verifications of the moves and subspace relations used to bound dim M

- transfactor: moving one point southeast and another northwest keeps the
  class of delta(D) modulo lower degrees
- grafting: swapping tails of two point sets keeps the class of the
  product delta(D1) delta(D2) in M^{(2)}
- N-subspaces of M^{(2)} and their containment relations
- the embedding M'_{d1',d2'} -> M_{d1,d2} obtained by adding one point
- spanning of M^{(m)} by minimal staircase determinants
"""
import logging
import random
from math import comb
from typing import Iterator, List, Optional, Sequence, Tuple

from qtcatalan.core.catalan_combinatorics import Partition
from qtcatalan.core.rho_map import phi
from qtcatalan.diagonal_ideal.graded_engine import (
    GradedBasis, alternant_coordinates, equiv_mod_lower, get_engine, product_coordinates,
)
from qtcatalan.diagonal_ideal.multipoly import Point
from qtcatalan.diagonal_ideal.pointsets import PointSet, staircase_points
from qtcatalan.diagonal_ideal.staircase import (
    PartitionType, StaircaseForm, minimal_staircase, staircase_det,
)
from qtcatalan.exceptions import PreconditionError, SearchExhaustedError
from qtcatalan.utils.partition_numbers import (
    partition_count, partition_count_bounded, partitions_at_most,
)

logger = logging.getLogger(__name__)

MAX_SAMPLING_ATTEMPTS = 10000


# ============================================================
# Transfactor
# ============================================================

def transfactor_move(D: PointSet, i: int, j: int) -> PointSet:
    """
    Move P_i by (1, -1) and P_j by (-1, 1).

    Requires |P_i| = i-1, |P_{i+1}| = i, |P_j| = j-1, |P_{j+1}| = j
    (|P_{n+1}| = n), b_i > 0, a_j > 0 and i != j.
    """
    n = D.n
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise PreconditionError(f"need distinct indices in 1..{n}, got i={i}, j={j}")
    for index in (i, j):
        if D.level(index) != index - 1 or D.level(index + 1) != index:
            raise PreconditionError(f"levels around index {index} of {D} are not {index - 1}, {index}")
    a_i, b_i = D.points[i - 1]
    a_j, b_j = D.points[j - 1]
    if b_i == 0:
        raise PreconditionError(f"P_{i} = {(a_i, b_i)} cannot move southeast")
    if a_j == 0:
        raise PreconditionError(f"P_{j} = {(a_j, b_j)} cannot move northwest")
    points = list(D.points)
    points[i - 1] = (a_i + 1, b_i - 1)
    points[j - 1] = (a_j - 1, b_j + 1)
    if len(set(points)) != n:
        raise PreconditionError(f"moving P_{i}, P_{j} of {D} produces a repeated point")
    return PointSet(tuple(points))


def transfactor_pairs(D: PointSet) -> List[Tuple[int, int]]:
    """All (i, j) for which the move applies"""
    pairs = []
    for i in range(1, D.n + 1):
        for j in range(1, D.n + 1):
            try:
                transfactor_move(D, i, j)
            except PreconditionError:
                continue
            pairs.append((i, j))
    return pairs


def transfactor_check(D: PointSet, i: int, j: int) -> bool:
    moved = transfactor_move(D, i, j)
    return equiv_mod_lower(D.delta(), moved.delta(), D.n)


def random_pointset(n: int, rng: random.Random, max_deficit: int = 2) -> PointSet:
    """
    A random point set near the staircase: levels start at 0..n-1 and a few
    of them are lowered by one, then each level is split at random.
    """
    for _ in range(MAX_SAMPLING_ATTEMPTS):
        levels = list(range(n))
        for _ in range(rng.randint(0, max_deficit)):
            if n < 2:
                break
            t = rng.randrange(1, n)
            levels[t] = max(levels[t] - 1, levels[t - 1])
        points = []
        for level in levels:
            a = rng.randint(0, level)
            points.append((a, level - a))
        if len(set(points)) == n:
            return PointSet(tuple(points))
    raise SearchExhaustedError(f"could not sample a point set for n={n}")


def random_transfactor_instances(n: int, count: int, seed: int) -> List[Tuple[PointSet, int, int]]:
    rng = random.Random(seed)
    instances = []
    for _ in range(MAX_SAMPLING_ATTEMPTS):
        if len(instances) == count:
            return instances
        D = random_pointset(n, rng)
        pairs = transfactor_pairs(D)
        if pairs:
            i, j = rng.choice(pairs)
            instances.append((D, i, j))
    raise SearchExhaustedError(f"found only {len(instances)} transfactor instances for n={n}")


# ============================================================
# Grafting
# ============================================================

def graft(D1: PointSet, D2: PointSet, r: int) -> Tuple[Tuple[Point, ...], Tuple[Point, ...]]:
    """Point sequences P_1..P_{r-1} Q_r..Q_n and Q_1..Q_{r-1} P_r..P_n"""
    if D1.n != D2.n:
        raise PreconditionError(f"point sets of sizes {D1.n} and {D2.n}")
    if not 1 <= r <= D1.n:
        raise PreconditionError(f"graft index {r} outside 1..{D1.n}")
    if D1.level(r) != r - 1 or D2.level(r) != r - 1:
        raise PreconditionError(f"|P_{r}| and |Q_{r}| must both equal {r - 1}")
    return (D1.points[:r - 1] + D2.points[r - 1:], D2.points[:r - 1] + D1.points[r - 1:])


def _product_row(first: Sequence[Point], second: Sequence[Point]):
    if len(set(first)) != len(first) or len(set(second)) != len(second):
        return {}
    return product_coordinates([first, second])


def grafting_check(D1: PointSet, D2: PointSet, r: int) -> bool:
    """delta(D1) delta(D2) and delta(D1') delta(D2') agree in M^{(2)}"""
    first, second = graft(D1, D2, r)
    d = (D1.d1 + D2.d1, D1.d2 + D2.d2)
    diff = dict(_product_row(D1.points, D2.points))
    for key, value in _product_row(first, second).items():
        diff[key] = diff.get(key, 0) - value
    return get_engine(D1.n).in_lower(2, d, diff)


def graft_forms(S1: StaircaseForm, S2: StaircaseForm, r: int) -> Tuple[StaircaseForm, StaircaseForm]:
    """Swap the column words from column r on"""
    if S1.n != S2.n:
        raise PreconditionError(f"staircase forms of sizes {S1.n} and {S2.n}")
    if S1.levels[r - 1] != r - 1 or S2.levels[r - 1] != r - 1:
        raise PreconditionError(f"column {r} does not start a block in both forms")
    return (StaircaseForm(S1.words[:r - 1] + S2.words[r - 1:]),
            StaircaseForm(S2.words[:r - 1] + S1.words[r - 1:]))


def grafting_staircase_identity(S1: StaircaseForm, S2: StaircaseForm, r: int) -> bool:
    """det(S1) det(S2) == det(S1') det(S2') as polynomials"""
    T1, T2 = graft_forms(S1, S2, r)
    return staircase_det(S1) * staircase_det(S2) == staircase_det(T1) * staircase_det(T2)


def random_grafting_instances(n: int, count: int, seed: int) -> List[Tuple[PointSet, PointSet, int]]:
    rng = random.Random(seed)
    instances = []
    for _ in range(MAX_SAMPLING_ATTEMPTS):
        if len(instances) == count:
            return instances
        D1 = random_pointset(n, rng)
        D2 = random_pointset(n, rng)
        common = [r for r in range(1, n + 1) if D1.level(r) == r - 1 and D2.level(r) == r - 1]
        if common:
            instances.append((D1, D2, rng.choice(common)))
    raise SearchExhaustedError(f"found only {len(instances)} grafting instances for n={n}")


# ============================================================
# N-subspaces of M^{(2)}
# ============================================================

def _products_with(n: int, base: Tuple[int, int], multiplier: PointSet) -> Iterator[dict]:
    if base[0] < 0 or base[1] < 0:
        return
    for (D,) in get_engine(n).representatives(1, base):
        yield product_coordinates([D.points, multiplier.points])


def _image_basis(n: int, d: Tuple[int, int], rows) -> GradedBasis:
    echelon = get_engine(n).lower(2, d).copy()
    kept = [row for row in rows if echelon.add(row)]
    return GradedBasis(bidegree=d, rows=kept)


def n_subspace(n: int, d1: int, d2: int, k: int) -> GradedBasis:
    """
    N_{d1,d2} inside M^{(2)}_{d1,d2}, as rows independent modulo (mI^2)_d.

        d2 <= k:   M_{d1-C, d2} * f_{C,0}
        d1 <= k:   M_{d1, d2-C} * f_{0,C}
        otherwise: M_{d1+d2-C-k, k} * f_{C-d2+k, d2-k}

    with C = C(n,2).
    """
    C = comb(n, 2)
    if k < 0 or k > n - 4 or d1 + d2 + k != 2 * C:
        raise PreconditionError(f"N-subspace needs 0 <= k <= n-4 and d1+d2+k = 2C(n,2); got n={n}, "
                                f"({d1},{d2}), k={k}")
    if d2 <= k:
        base, multiplier = (d1 - C, d2), (C, 0)
    elif d1 <= k:
        base, multiplier = (d1, d2 - C), (0, C)
    else:
        base, multiplier = (d1 + d2 - C - k, k), (C - d2 + k, d2 - k)
    f = staircase_points(n, *multiplier)
    return _image_basis(n, (d1, d2), _products_with(n, base, f))


def higher_transfactor_check(n: int, d1: int, d2: int, k: int) -> bool:
    """
    Every M_{d1',d2'} * f_{d1-d1', d2-d2'} lies in N_{d1,d2}, with equality
    when d1', d2' >= k.
    """
    C = comb(n, 2)
    N = n_subspace(n, d1, d2, k)
    engine = get_engine(n)
    with_N = engine.lower(2, (d1, d2)).copy()
    with_N.extend(N.rows)
    for d1p in range(0, d1 + 1):
        d2p = d1 + d2 - C - d1p
        if d2p < 0 or d2p > d2:
            continue
        f = staircase_points(n, d1 - d1p, d2 - d2p)
        rows = list(_products_with(n, (d1p, d2p), f))
        if not all(with_N.contains(row) for row in rows):
            logger.warning(f"M_({d1p},{d2p}) * f is not inside N_({d1},{d2}) at n={n}")
            return False
        if d1p >= k and d2p >= k and _image_basis(n, (d1, d2), rows).rank != N.rank:
            logger.warning(f"M_({d1p},{d2p}) * f is a proper subspace of N_({d1},{d2}) at n={n}")
            return False
    return True


def product_containment_check(n: int, first: Tuple[int, int], second: Tuple[int, int]) -> bool:
    """M_{d1',d2'} * M_{d1'',d2''} lies in N_{d1,d2}, for k' + k'' <= n - 6"""
    C = comb(n, 2)
    k1 = C - sum(first)
    k2 = C - sum(second)
    if n < 6 or k1 < 0 or k2 < 0 or k1 + k2 > n - 6:
        raise PreconditionError(f"product containment needs n >= 6 and 0 <= k' + k'' <= n-6; "
                                f"got n={n}, k'={k1}, k''={k2}")
    d = (first[0] + second[0], first[1] + second[1])
    N = n_subspace(n, d[0], d[1], k1 + k2)
    engine = get_engine(n)
    with_N = engine.lower(2, d).copy()
    with_N.extend(N.rows)
    for (D1,) in engine.representatives(1, first):
        for (D2,) in engine.representatives(1, second):
            if not with_N.contains(product_coordinates([D1.points, D2.points])):
                logger.warning(f"product of {D1} and {D2} escapes N_{d} at n={n}")
                return False
    return True


# ============================================================
# Embedding M' -> M by one extra point
# ============================================================

def embedding_injectivity_check(n: int, d1: int, d2: int, d1p: int) -> bool:
    """
    delta(D') -> delta(D' + {P}), P = (d1-d1', n-1-d1+d1'), is injective from
    M'_{d1',d2'} (n-1 pairs of variables) to M_{d1,d2}, and
    phi'(D') = phi(D' + {P}) up to the sign of sorting P into place.
    """
    d2p = d1 + d2 - (n - 1) - d1p
    kp = comb(n - 1, 2) - d1p - d2p
    if n < 2 or not (0 <= kp <= n - 4) or not (0 <= d1p <= d1) or not (0 <= d2p <= d2):
        raise PreconditionError(f"embedding needs 0 <= k <= n-4, d1' <= d1, d2' <= d2; "
                                f"got n={n}, ({d1},{d2}), ({d1p},{d2p})")
    extra = (d1 - d1p, n - 1 - d1 + d1p)
    reps = get_engine(n - 1).representatives(1, (d1p, d2p))
    images = []
    for (Dp,) in reps:
        if extra in Dp.points:
            logger.warning(f"extra point {extra} already lies in {Dp}")
            return False
        coords = alternant_coordinates(Dp.points + (extra,))
        images.append(coords)
        (key, sign), = coords.items()
        if phi(Dp) != phi(PointSet(key)) * int(sign):
            logger.warning(f"phi'({Dp}) differs from phi of {key}")
            return False
    rank = get_engine(n).rank_modulo_lower(1, (d1, d2), images)
    logger.info(f"embedding n={n - 1}->{n}, ({d1p},{d2p})->({d1},{d2}): rank {rank} of {len(reps)}")
    return rank == len(reps)


# ============================================================
# Spanning by minimal staircase forms
# ============================================================

def staircase_spanning_check(m: int, n: int, d1: int, d2: int) -> bool:
    """
    The elements det(S_mu) * prod_{i<j} (x_i - x_j)^{m-1}, mu in Par(d2, k),
    span M^{(m)}_{d1,d2}.

    det(S_mu) is congruent to delta of its point set, so the check uses the
    alternants directly.
    """
    C = comb(n, 2)
    k = m * C - d1 - d2
    if n < 3 or m < 1 or k < 0 or not (k < n / 2 - 1 and d2 < n / 2 - 1):
        raise PreconditionError(f"staircase spanning needs n >= 3, k < n/2-1, d2 < n/2-1; "
                                f"got m={m}, n={n}, ({d1},{d2})")
    base_d1 = d1 - (m - 1) * C
    vandermonde = tuple((i, 0) for i in range(n))
    rows = []
    for parts in partitions_at_most(d2, k):
        mu = PartitionType(Partition(tuple(reversed(parts))))
        form = minimal_staircase(n, base_d1, d2, mu)
        rows.append(product_coordinates([form.points] + [vandermonde] * (m - 1)))
    engine = get_engine(n)
    rank = engine.rank_modulo_lower(m, (d1, d2), rows)
    dim = engine.dim_M(m, (d1, d2))
    logger.info(f"staircase spanning m={m} n={n} ({d1},{d2}): rank {rank}, dim M {dim}, "
                f"p(d2,k) = {partition_count_bounded(d2, k)}")
    return rank == dim


# ============================================================
# Partition identity
# ============================================================

def lemma44_holds(a_max: int) -> bool:
    """sum_{i=0}^{a} p(i, a-i) = p(a) for every a <= a_max"""
    return first_lemma44_failure(a_max) is None


def first_lemma44_failure(a_max: int) -> Optional[int]:
    for a in range(a_max + 1):
        if sum(partition_count_bounded(i, a - i) for i in range(a + 1)) != partition_count(a):
            return a
    return None
