"""
Rational Formula
RC_n^{(m)}(q,t) from the rational-function sum over partitions of n

    RC = sum_{mu |- n} (1-q)(1-t) T_mu^{m+1} B_mu Pi_mu / w_mu

The sum is a polynomial of degree <= mC(n,2) in each variable, so it is
recovered by evaluating exactly on a grid of integer points and
interpolating one variable at a time. The interpolant is then certified
at fresh points before being returned.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from qtcatalan.config.settings import settings
from qtcatalan.core.catalan_combinatorics import Partition, arm_leg
from qtcatalan.core.qt_algebra import QtPoly, q_binomial, q_int
from qtcatalan.exceptions import InterpolationError, PreconditionError
from qtcatalan.utils.partition_numbers import partitions

logger = logging.getLogger(__name__)

GRID_START = 2  # q, t in {0, 1} are zeros of every w_mu
CERTIFY_POINTS = 3


@dataclass(frozen=True)
class MuData:
    mu: Partition
    T: QtPoly
    B: QtPoly
    Pi: QtPoly
    w: QtPoly


@dataclass
class EvalGrid:
    """Sample abscissae and the exact values of the summed expression"""
    q_values: List[int]
    t_values: List[int]
    table: List[List[Fraction]]  # table[j][i] = RC(q_values[i], t_values[j])


def mu_data(mu: Partition) -> MuData:
    """T, B, Pi and w of a nonempty partition, from its cell statistics"""
    if not mu.parts:
        raise PreconditionError("mu_data needs a nonempty partition")
    q = QtPoly.q()
    t = QtPoly.t()
    sum_arm = sum_leg = 0
    B = QtPoly.zero()
    Pi = QtPoly.one()
    w = QtPoly.one()
    for cell in mu.cells():
        a, l, a_co, l_co = arm_leg(mu, cell)
        sum_arm += a
        sum_leg += l
        B = B + QtPoly.monomial(a_co, l_co)
        if (a_co, l_co) != (0, 0):
            Pi = Pi * (1 - QtPoly.monomial(a_co, l_co))
        w = w * (q ** a - t ** (l + 1)) * (t ** l - q ** (a + 1))
    return MuData(mu=mu, T=QtPoly.monomial(sum_arm, sum_leg), B=B, Pi=Pi, w=w)


def _factors(m: int, mu: Partition) -> Tuple[List[QtPoly], List[QtPoly]]:
    """Numerator and denominator of one summand as lists of small factors"""
    q = QtPoly.q()
    t = QtPoly.t()
    data = mu_data(mu)
    numerator = [1 - q, 1 - t, data.T ** (m + 1), data.B]
    denominator = []
    for cell in mu.cells():
        a, l, a_co, l_co = arm_leg(mu, cell)
        if (a_co, l_co) != (0, 0):
            numerator.append(1 - QtPoly.monomial(a_co, l_co))
        denominator.append(q ** a - t ** (l + 1))
        denominator.append(t ** l - q ** (a + 1))
    return numerator, denominator


def _summands(m: int, n: int) -> List[Tuple[List[QtPoly], List[QtPoly]]]:
    return [_factors(m, Partition(parts)) for parts in partitions(n)]


def _value(factors: List[QtPoly], q_value: int, t_value: int) -> Fraction:
    result = Fraction(1)
    for factor in factors:
        result *= factor.evaluate(q_value, t_value)
    return result


def _is_clear(summands, q_value: int, t_value: int) -> bool:
    return all(factor.evaluate(q_value, t_value) != 0 for _, den in summands for factor in den)


def _evaluate(summands, q_value: int, t_value: int) -> Fraction:
    return sum((_value(num, q_value, t_value) / _value(den, q_value, t_value) for num, den in summands),
               Fraction(0))


def _choose_abscissae(summands, size: int, retry_budget: int) -> Tuple[List[int], List[int]]:
    """
    Pick q-values GRID_START.. and then t-values that avoid every zero of
    every w_mu on the chosen q-values, bumping a t candidate by +1 on a hit.
    """
    q_values = list(range(GRID_START, GRID_START + size))
    t_values: List[int] = []
    candidate = GRID_START
    while len(t_values) < size:
        for attempt in range(retry_budget + 1):
            if all(_is_clear(summands, qv, candidate) for qv in q_values):
                break
            logger.warning(f"Grid abscissa t={candidate} hits a zero of some w_mu, perturbing")
            candidate += 1
        else:
            raise InterpolationError(f"no admissible t abscissa within {retry_budget} perturbations")
        t_values.append(candidate)
        candidate += 1
    return q_values, t_values


def interpolate_1d(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> List[Fraction]:
    """
    Coefficients c_0..c_{k-1} of the unique polynomial through (xs, ys).

    Lagrange form in coefficient representation: the master polynomial
    prod (X - x_i) is divided by each (X - x_i) synthetically.
    """
    k = len(xs)
    master = [Fraction(1)]
    for x in xs:
        shifted = [Fraction(0)] + master
        for i, c in enumerate(master):
            shifted[i] -= x * c
        master = shifted
    coeffs = [Fraction(0)] * k
    for i, xi in enumerate(xs):
        # quotient of master by (X - xi), highest degree first
        basis = [Fraction(0)] * k
        carry = Fraction(0)
        for deg in range(k, 0, -1):
            carry = master[deg] + carry * xi if deg < k else master[deg]
            basis[deg - 1] = carry
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                denom *= xi - xj
        scale = Fraction(ys[i]) / denom
        for deg in range(k):
            coeffs[deg] += scale * basis[deg]
    return coeffs


def build_grid(m: int, n: int, retry_budget: Optional[int] = None) -> Tuple[EvalGrid, list]:
    """Evaluate the rational sum exactly on a (mC(n,2)+1)^2 grid"""
    retry_budget = settings.RC_RETRY_BUDGET if retry_budget is None else retry_budget
    summands = _summands(m, n)
    size = m * comb(n, 2) + 1
    q_values, t_values = _choose_abscissae(summands, size, retry_budget)
    table = [[_evaluate(summands, qv, tv) for qv in q_values] for tv in t_values]
    return EvalGrid(q_values, t_values, table), summands


def rc_poly(m: int, n: int, retry_budget: Optional[int] = None) -> QtPoly:
    """
    RC_n^{(m)} by exact evaluation and bivariate interpolation.

    Raises:
        InterpolationError: non-integer or negative coefficients, or a
            mismatch at the certification points

    The grid size fixes the degree bound mC(n,2) in each variable.
    """
    if m < 1 or n < 1:
        raise PreconditionError(f"m and n must be positive, got m={m}, n={n}")
    grid, summands = build_grid(m, n, retry_budget)
    degree = m * comb(n, 2)
    size = degree + 1

    # interpolate in q for each t row, then in t for each q-exponent
    by_row = [interpolate_1d(grid.q_values, row) for row in grid.table]
    terms: Dict[Tuple[int, int], int] = {}
    for e_q in range(size):
        column = interpolate_1d(grid.t_values, [by_row[j][e_q] for j in range(size)])
        for e_t, value in enumerate(column):
            if value == 0:
                continue
            if value.denominator != 1 or value < 0:
                logger.error(f"rc_poly(m={m}, n={n}): coefficient {value} at q^{e_q} t^{e_t}")
                raise InterpolationError(f"interpolated coefficient {value} at q^{e_q} t^{e_t} is not a nonnegative integer")
            terms[(e_q, e_t)] = int(value)
    result = QtPoly(terms)

    certified = certify_interpolant(result, summands, max(grid.q_values) + 1, max(grid.t_values) + 1,
                                    retry_budget=settings.RC_RETRY_BUDGET if retry_budget is None else retry_budget)
    logger.info(f"rc_poly(m={m}, n={n}): {len(result)} terms, total {result.total()}, "
                f"certified at {certified} points")
    return result


def certify_interpolant(result: QtPoly, summands, q_start: int, t_start: int,
                        points: int = CERTIFY_POINTS, retry_budget: int = 10) -> int:
    """
    Compare the interpolant with the rational sum at points off the grid.

    Points that hit a zero of some w_mu are stepped over; at most
    points + retry_budget candidates are tried. Returns how many points
    were certified and warns when that falls short of points.

    Raises:
        InterpolationError: the interpolant disagrees at a usable point
    """
    certified = 0
    for offset in range(points + retry_budget):
        if certified == points:
            break
        qv, tv = q_start + offset, t_start + 2 * offset
        if not _is_clear(summands, qv, tv):
            logger.debug(f"Certification point ({qv}, {tv}) hits a zero of some w_mu, stepping on")
            continue
        if result.evaluate(qv, tv) != _evaluate(summands, qv, tv):
            logger.error(f"Interpolant failed certification at q={qv}, t={tv}")
            raise InterpolationError(f"interpolant disagrees with the rational sum at ({qv}, {tv})")
        certified += 1
    if certified < points:
        logger.warning(f"Interpolant certified at only {certified} of {points} points "
                       f"after {points + retry_budget} candidates")
    return certified


def rc_specialize_t1(m: int, n: int, rc: Optional[QtPoly] = None) -> QtPoly:
    """RC(q, 1) as a polynomial in q"""
    rc = rc_poly(m, n) if rc is None else rc
    return rc.at_t_one()


def rc_specialize_t_qinv(m: int, n: int, rc: Optional[QtPoly] = None) -> QtPoly:
    """q^{mC(n,2)} RC(q, 1/q)"""
    rc = rc_poly(m, n) if rc is None else rc
    return rc.at_t_inverse_q().shift_q(m * comb(n, 2))


def gaussian_specialization(m: int, n: int) -> QtPoly:
    """[mn+n choose n]_q / [mn+1]_q, by exact division"""
    return q_binomial(m * n + n, n).divide_exact(q_int(m * n + 1))
