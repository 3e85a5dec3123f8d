"""
Graded Engine
Bigraded pieces of I^m and mI^m, dim M^{(m)} and AC_n^{(m)}(q,t)

I is the ideal generated by the alternating polynomials in x_1..x_n,
y_1..y_n, m its maximal homogeneous ideal and M^{(m)} = I^m / mI^m.

Two column models share one elimination routine:

- isotypic: the sign^m-isotypic part. Columns are graded-lex sorted point
  tuples (strict for odd m, weak for even m). Rows are products of
  M^{(1)} representatives plus p_{a,b} * (basis of the lower piece) for
  1 <= a+b <= n; the p_{a,b} generate the diagonal invariants.
- monomial: columns are monomials, rows are products of alternants plus
  every variable times the basis of the piece one degree lower.

M^{(m)} is sign^m-isotypic, so both models give the same dimensions. The
isotypic one is far smaller and is the default.
"""
import itertools
import logging
import sys
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from tqdm import tqdm

from qtcatalan.config.budgets import BudgetConfig
from qtcatalan.config.settings import settings
from qtcatalan.core.catalan_combinatorics import higher_catalan
from qtcatalan.core.qt_algebra import QtPoly
from qtcatalan.diagonal_ideal.multipoly import (
    Key, MultiPoly, Point, delta, power_sum_action, sort_with_sign,
)
from qtcatalan.diagonal_ideal.pointsets import PointSet, enumerate_pointsets
from qtcatalan.diagonal_ideal.sparse_rank import Row, SparseEchelon
from qtcatalan.exceptions import InconsistencyError, PreconditionError

logger = logging.getLogger(__name__)

ISOTYPIC = 'isotypic'
MONOMIAL = 'monomial'
MODELS = (ISOTYPIC, MONOMIAL)

Bidegree = Tuple[int, int]


@dataclass
class GradedBasis:
    """Echelon basis of one bigraded piece"""
    bidegree: Bidegree
    rows: List[Row]
    model: str = ISOTYPIC

    @property
    def rank(self) -> int:
        return len(self.rows)


@dataclass
class _Piece:
    lower: SparseEchelon
    full: SparseEchelon
    representatives: List[Tuple[PointSet, ...]] = field(default_factory=list)


def alternant_coordinates(points: Sequence[Point]) -> Dict[Key, Fraction]:
    """Isotypic coordinates of the alternant with columns in the given order"""
    key, sign = sort_with_sign(points)
    return {key: Fraction(sign)} if sign else {}


def product_polynomial(factors: Sequence[Sequence[Point]]) -> MultiPoly:
    """prod_i delta(D_i)"""
    result = None
    for points in factors:
        current = delta(points)
        result = current if result is None else result * current
    return result


def product_coordinates(factors: Sequence[Sequence[Point]], model: str = ISOTYPIC) -> Dict[Key, Fraction]:
    """Row of prod_i delta(D_i) in the given column model"""
    if model == ISOTYPIC and len(factors) == 1:
        return alternant_coordinates(factors[0])
    poly = product_polynomial(factors)
    if model == ISOTYPIC:
        return poly.isotypic_coordinates(len(factors) % 2)
    return poly.terms


def _times_variable(row: Row, var: int, y_side: bool) -> Row:
    out = {}
    for key, value in row.items():
        moved = list(key)
        a, b = moved[var]
        moved[var] = (a, b + 1) if y_side else (a + 1, b)
        out[tuple(moved)] = value
    return out


class IdealEngine:
    """
    Rank engine for one value of n.

    Pieces are cached per (m, model, bidegree); the cache is guarded by a
    lock so that checks for different bidegrees can share one engine.
    """

    def __init__(self, n: int):
        if n < 1:
            raise PreconditionError(f"n must be positive, got {n}")
        self.n = n
        self._lock = threading.Lock()
        self._cache: Dict[Hashable, object] = {}

    def _cached(self, key: Hashable, compute: Callable[[], object]):
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = compute()
        with self._lock:
            return self._cache.setdefault(key, value)

    # ----- generators -----

    def _representative_pool(self) -> List[Tuple[PointSet, Bidegree]]:
        """All M^{(1)} representatives, over every bidegree of total <= C(n,2)"""
        def compute():
            pool = []
            top = comb(self.n, 2)
            for total in range(top + 1):
                for d1 in range(total + 1):
                    for reps in self.representatives(1, (d1, total - d1)):
                        pool.append((reps[0], (d1, total - d1)))
            return pool
        return self._cached(('pool',), compute)

    def generators(self, m: int, d: Bidegree, model: str) -> List[Tuple[Tuple[PointSet, ...], Row]]:
        """Spanning rows of (I^m)_d modulo mI^m, each with its factor sets"""
        if m == 1:
            out = []
            for D in enumerate_pointsets(self.n, d[0], d[1]):
                row = {D.points: Fraction(1)} if model == ISOTYPIC else delta(D.points).terms
                out.append(((D,), row))
            return out
        pool = self._representative_pool()
        out = []
        for combo in itertools.combinations_with_replacement(range(len(pool)), m):
            d1 = sum(pool[i][1][0] for i in combo)
            d2 = sum(pool[i][1][1] for i in combo)
            if (d1, d2) != tuple(d):
                continue
            factors = tuple(pool[i][0] for i in combo)
            out.append((factors, product_coordinates([D.points for D in factors], model)))
        return out

    # ----- pieces -----

    def _full_rows(self, m: int, model: str, e: Bidegree) -> List[Row]:
        if e[0] < 0 or e[1] < 0:
            return []
        if m == 1 and model == ISOTYPIC:
            return [{D.points: Fraction(1)} for D in enumerate_pointsets(self.n, e[0], e[1])]
        return self.piece(m, model, e).full.rows()

    def lower_generators(self, m: int, d: Bidegree, model: str = ISOTYPIC):
        """Spanning rows of (mI^m)_d"""
        d1, d2 = d
        if model == ISOTYPIC:
            parity = m % 2
            for total in range(1, self.n + 1):
                for a in range(total + 1):
                    b = total - a
                    if a > d1 or b > d2:
                        continue
                    for row in self._full_rows(m, model, (d1 - a, d2 - b)):
                        yield power_sum_action(a, b, row, parity)
        else:
            for y_side, e in ((False, (d1 - 1, d2)), (True, (d1, d2 - 1))):
                for row in self._full_rows(m, model, e):
                    for var in range(self.n):
                        yield _times_variable(row, var, y_side)

    def piece(self, m: int, model: str, d: Bidegree) -> _Piece:
        if m < 1:
            raise PreconditionError(f"m must be positive, got {m}")
        if model not in MODELS:
            raise PreconditionError(f"unknown rank model {model!r}")
        d = (int(d[0]), int(d[1]))

        def compute() -> _Piece:
            lower = SparseEchelon()
            lower.extend(self.lower_generators(m, d, model))
            full = lower.copy()
            reps = [factors for factors, row in self.generators(m, d, model) if full.add(row)]
            logger.debug(f"n={self.n} m={m} {model} d={d}: lower rank {lower.rank}, dim M {len(reps)}")
            return _Piece(lower=lower, full=full, representatives=reps)

        return self._cached((m, model, d), compute)

    def representatives(self, m: int, d: Bidegree, model: str = ISOTYPIC) -> List[Tuple[PointSet, ...]]:
        """Factor sets whose products map to a basis of M^{(m)}_d"""
        return self.piece(m, model, d).representatives

    def dim_M(self, m: int, d: Bidegree, model: str = ISOTYPIC) -> int:
        return len(self.piece(m, model, d).representatives)

    def lower(self, m: int, d: Bidegree, model: str = ISOTYPIC) -> SparseEchelon:
        return self.piece(m, model, d).lower

    def rank_modulo_lower(self, m: int, d: Bidegree, rows, model: str = ISOTYPIC) -> int:
        """dim of the image of span(rows) in M^{(m)}_d"""
        echelon = self.lower(m, d, model).copy()
        return echelon.extend(rows)

    def in_lower(self, m: int, d: Bidegree, row, model: str = ISOTYPIC) -> bool:
        return self.lower(m, d, model).contains(row)


_engines: Dict[int, IdealEngine] = {}
_engines_lock = threading.Lock()


def get_engine(n: int) -> IdealEngine:
    """Shared engine per n"""
    with _engines_lock:
        engine = _engines.get(n)
        if engine is None:
            engine = IdealEngine(n)
            _engines[n] = engine
        return engine


def graded_piece_I_power(n: int, m: int, d1: int, d2: int, lower_only: bool = False,
                         model: str = ISOTYPIC) -> GradedBasis:
    """Echelon basis of (I^m)_{d1,d2}, or of (mI^m)_{d1,d2} when lower_only"""
    piece = get_engine(n).piece(m, model, (d1, d2))
    echelon = piece.lower if lower_only else piece.full
    return GradedBasis(bidegree=(d1, d2), rows=echelon.rows(), model=model)


def dim_M(n: int, m: int, d1: int, d2: int, model: str = ISOTYPIC) -> int:
    """dim M^{(m)}_{d1,d2} = rank (I^m)_d - rank (mI^m)_d"""
    if d1 < 0 or d2 < 0:
        return 0
    return get_engine(n).dim_M(m, (d1, d2), model)


def _progress_enabled() -> bool:
    return settings.SHOW_PROGRESS and sys.stderr.isatty()


def ac_poly(m: int, n: int, model: str = ISOTYPIC) -> QtPoly:
    """
    sum q^{d1} t^{d2} dim M^{(m)}_{d1,d2}.

    Total degrees are scanned upward until the coefficient sum reaches the
    higher Catalan number; reaching degree mC(n,2) short of it, or passing
    it, raises InconsistencyError.
    """
    if m < 1 or n < 1:
        raise PreconditionError(f"m and n must be positive, got m={m}, n={n}")
    engine = get_engine(n)
    target = higher_catalan(m, n)
    top = m * comb(n, 2)
    terms: Dict[Bidegree, int] = {}
    total = 0
    bar = tqdm(total=target, desc=f"AC m={m} n={n}", disable=not _progress_enabled(), file=sys.stderr)
    try:
        for degree in range(top + 1):
            for d1 in range(degree + 1):
                dim = engine.dim_M(m, (d1, degree - d1), model)
                if dim:
                    terms[(d1, degree - d1)] = dim
                    total += dim
                    bar.update(dim)
                if total >= target:
                    break
            if total >= target:
                break
    finally:
        bar.close()
    if total != target:
        logger.error(f"ac_poly(m={m}, n={n}): coefficient sum {total}, expected {target}")
        raise InconsistencyError(f"AC coefficient sum {total} differs from the Catalan number {target}")
    result = QtPoly(terms)
    logger.info(f"ac_poly(m={m}, n={n}): {len(result)} terms")
    return result


def equiv_mod_lower(f: MultiPoly, g: MultiPoly, n: Optional[int] = None,
                    budgets: Optional[BudgetConfig] = None) -> bool:
    """
    True iff f - g lies in I_{<d}, the ideal generated by elements of I of
    total degree below d, within the bidegree of f and g.

    In a fixed bidegree that subspace is (mI)_d. Alternating differences are
    decided in the isotypic model, anything else in the monomial model.
    """
    n = f.n if n is None else n
    if f.n != n or g.n != n:
        raise PreconditionError(f"polynomials in {f.n} and {g.n} variable pairs, expected {n}")
    if not f.is_zero() and not g.is_zero() and f.bidegree != g.bidegree:
        raise PreconditionError(f"bidegree mismatch: {f.bidegree} vs {g.bidegree}")
    diff = f - g
    if diff.is_zero():
        return True
    d = diff.bidegree
    if d is None:
        raise PreconditionError("f and g must be bihomogeneous of one bidegree")
    engine = get_engine(n)
    if diff.isotypic_parity() == 1:
        return engine.in_lower(1, d, diff.isotypic_coordinates(1))
    budgets = budgets or BudgetConfig()
    if n > budgets.max_n('full_model'):
        raise PreconditionError(f"non-alternating difference at n={n} exceeds the monomial model budget "
                                f"({budgets.max_n('full_model')})")
    return engine.in_lower(1, d, diff.terms, model=MONOMIAL)


def coefficient_table(poly: QtPoly) -> List[Tuple[int, int, int]]:
    """Rows (d1, d2, coeff) sorted by bidegree"""
    return sorted(poly.to_rows())
