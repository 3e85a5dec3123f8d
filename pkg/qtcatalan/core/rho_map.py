"""
Rho Map
The weight-graded ring C[rho_1, rho_2, ...] and the determinant map phi

phi(D) = (-1)^{k(D)} det[ h(b_i, j-1-|P_i|) ]_{i,j}, where
h(b, w) is the weight-w part of (1 + rho_1 + rho_2 + ...)^b. Its linear
extension factors through M_{d1,d2}; the checks below verify that and the
injectivity of the induced map by exact rank computations.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from qtcatalan.diagonal_ideal.graded_engine import ISOTYPIC, get_engine
from qtcatalan.diagonal_ideal.pointsets import PointSet
from qtcatalan.diagonal_ideal.sparse_rank import SparseEchelon
from qtcatalan.exceptions import InconsistencyError, PreconditionError
from qtcatalan.utils.determinants import cofactor_determinant
from qtcatalan.utils.partition_numbers import partitions

logger = logging.getLogger(__name__)

Nu = Tuple[int, ...]


def _normalize(nu: Iterable[int]) -> Nu:
    """Partition normal form; rho_0 = 1 is dropped"""
    parts = []
    for index in nu:
        index = int(index)
        if index < 0:
            raise PreconditionError(f"rho index must be nonnegative, got {index}")
        if index:
            parts.append(index)
    return tuple(sorted(parts, reverse=True))


class RhoPoly:
    """Integer polynomial in rho_1, rho_2, ... keyed by partitions"""

    __slots__ = ('_terms',)

    def __init__(self, terms: Optional[Mapping[Iterable[int], int]] = None):
        acc: Dict[Nu, int] = {}
        for nu, coeff in (terms or {}).items():
            key = _normalize(nu)
            acc[key] = acc.get(key, 0) + int(coeff)
        self._terms = {key: c for key, c in acc.items() if c}

    @classmethod
    def zero(cls) -> 'RhoPoly':
        return cls()

    @classmethod
    def one(cls) -> 'RhoPoly':
        return cls({(): 1})

    @classmethod
    def rho(cls, index: int) -> 'RhoPoly':
        return cls({(index,): 1})

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> 'RhoPoly':
        return cls({tuple(r['nu']): int(r['c']) for r in records})

    @property
    def terms(self) -> Dict[Nu, int]:
        return dict(self._terms)

    def coefficient(self, nu: Iterable[int]) -> int:
        return self._terms.get(_normalize(nu), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def weight_part(self, w: int) -> 'RhoPoly':
        """{f}_w"""
        return RhoPoly({nu: c for nu, c in self._terms.items() if sum(nu) == w})

    @property
    def weights(self) -> List[int]:
        return sorted({sum(nu) for nu in self._terms})

    def homogeneous_weight(self) -> Optional[int]:
        weights = self.weights
        return weights[0] if len(weights) == 1 else None

    def _coerce(self, other) -> 'RhoPoly':
        if isinstance(other, RhoPoly):
            return other
        if isinstance(other, int):
            return RhoPoly({(): other})
        return NotImplemented

    def __add__(self, other) -> 'RhoPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for nu, c in other._terms.items():
            acc[nu] = acc.get(nu, 0) + c
        return RhoPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> 'RhoPoly':
        return RhoPoly({nu: -c for nu, c in self._terms.items()})

    def __sub__(self, other) -> 'RhoPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'RhoPoly':
        return (-self) + other

    def __mul__(self, other) -> 'RhoPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: Dict[Nu, int] = {}
        for nu1, c1 in self._terms.items():
            for nu2, c2 in other._terms.items():
                key = tuple(sorted(nu1 + nu2, reverse=True))
                acc[key] = acc.get(key, 0) + c1 * c2
        return RhoPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'RhoPoly':
        result = RhoPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def to_records(self) -> List[Dict]:
        """JSON form: [{"nu": [...], "c": int}] in a fixed order"""
        return [{'nu': list(nu), 'c': c} for nu, c in sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for nu, c in sorted(self._terms.items(), key=lambda kv: (-sum(kv[0]), kv[0])):
            counts: Dict[int, int] = {}
            for index in nu:
                counts[index] = counts.get(index, 0) + 1
            body = "*".join(f"rho{i}" + (f"^{e}" if e > 1 else "") for i, e in sorted(counts.items(), reverse=True))
            if not body:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(body)
            elif c == -1:
                pieces.append(f"-{body}")
            else:
                pieces.append(f"{c}*{body}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"RhoPoly({self})"


@lru_cache(maxsize=None)
def h_poly(b: int, w: int) -> RhoPoly:
    """
    Weight-w part of (1 + rho_1 + rho_2 + ...)^b.

    The coefficient of rho_nu is the number of ways to place the parts of nu
    into b ordered slots: b! / ((b - len(nu))! * prod of part multiplicities!).
    """
    if b < 0:
        raise PreconditionError(f"h(b, w) needs b >= 0, got {b}")
    if w < 0:
        return RhoPoly.zero()
    if w == 0:
        return RhoPoly.one()
    terms = {}
    for nu in partitions(w):
        if len(nu) > b:
            continue
        multiplicities = 1
        for part in set(nu):
            multiplicities *= factorial(nu.count(part))
        terms[nu] = factorial(b) // (factorial(b - len(nu)) * multiplicities)
    return RhoPoly(terms)


def phi_matrix(D: PointSet) -> List[List[RhoPoly]]:
    levels = D.levels
    return [[h_poly(b, j - levels[i]) for j in range(D.n)] for i, (_, b) in enumerate(D.points)]


@lru_cache(maxsize=4096)
def phi(D: PointSet) -> RhoPoly:
    """
    phi(D), homogeneous of weight k(D) or zero.

    Raises:
        InconsistencyError: nonzero result of the wrong weight, or a nonzero
            determinant when k(D) < 0
    """
    det = cofactor_determinant(phi_matrix(D), RhoPoly.zero(), RhoPoly.one(), RhoPoly.is_zero)
    k = D.k
    if det.is_zero():
        return det
    if k < 0:
        logger.error(f"phi({D}) is nonzero although k(D)={k}")
        raise InconsistencyError(f"phi determinant of {D} must vanish for negative k")
    if det.homogeneous_weight() != k:
        logger.error(f"phi({D}) has weights {det.weights}, expected {k}")
        raise InconsistencyError(f"phi({D}) is not homogeneous of weight {k}")
    return -det if k % 2 else det


def _combination(coefficients: Mapping[Tuple, Fraction]) -> Dict[Nu, Fraction]:
    acc: Dict[Nu, Fraction] = {}
    for points, c in coefficients.items():
        for nu, value in phi(PointSet(points)).terms.items():
            acc[nu] = acc.get(nu, Fraction(0)) + c * value
    return {nu: value for nu, value in acc.items() if value}


def phi_welldefined_check(n: int, d1: int, d2: int) -> bool:
    """
    The linear extension of phi kills every relation among the delta(D)
    in M_{d1,d2}; relations are spanned by the generating rows of (mI)_d.
    """
    engine = get_engine(n)
    for row in engine.lower_generators(1, (d1, d2), ISOTYPIC):
        image = _combination(row)
        if image:
            logger.warning(f"phi is not well defined at n={n} ({d1},{d2}): relation {row} maps to {image}")
            return False
    logger.info(f"phi well defined at n={n} ({d1},{d2})")
    return True


def phi_rank(n: int, d1: int, d2: int) -> Tuple[int, int]:
    """(rank of phi on a basis of M_{d1,d2}, dim M_{d1,d2})"""
    reps = get_engine(n).representatives(1, (d1, d2))
    echelon = SparseEchelon()
    for (D,) in reps:
        echelon.add(phi(D).terms)
    return echelon.rank, len(reps)


def phi_injectivity_check(n: int, d1: int, d2: int) -> bool:
    """
    Raises:
        PreconditionError: k = C(n,2) - d1 - d2 exceeds n - 3
    """
    k = n * (n - 1) // 2 - d1 - d2
    if k > n - 3:
        raise PreconditionError(f"injectivity is only claimed for k <= n-3, got k={k} at n={n}")
    rank, dim = phi_rank(n, d1, d2)
    logger.info(f"phi at n={n} ({d1},{d2}): rank {rank}, dim M {dim}")
    return rank == dim
