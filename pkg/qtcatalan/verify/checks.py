"""
Verification Checks
Every check returns a CheckReport. Requests beyond the configured budgets
come back as 'skipped'; a 'fail' always carries witnesses that replay it.
"""
import logging
import random
import time
from fractions import Fraction
from math import comb
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from qtcatalan.config.budgets import BudgetConfig
from qtcatalan.config.settings import settings
from qtcatalan.core.catalan_combinatorics import (
    area_polynomial, dc_poly, hplus_series, modified_dc_series, modified_pc_series,
    modified_wc_series, pc_poly, wc_poly,
)
from qtcatalan.core.qt_algebra import QtPoly, QtSeries, partition_product_series
from qtcatalan.core.rational_formula import gaussian_specialization, rc_poly
from qtcatalan.core.rho_map import phi, phi_injectivity_check, phi_rank, phi_welldefined_check
from qtcatalan.diagonal_ideal.conjecture import conjecture61_deficiencies
from qtcatalan.diagonal_ideal.graded_engine import ac_poly, dim_M, equiv_mod_lower
from qtcatalan.diagonal_ideal.lemmas import (
    first_lemma44_failure, grafting_check, grafting_staircase_identity, higher_transfactor_check,
    embedding_injectivity_check, product_containment_check, random_grafting_instances,
    random_pointset, random_transfactor_instances, staircase_spanning_check, transfactor_check,
)
from qtcatalan.diagonal_ideal.pointsets import enumerate_pointsets
from qtcatalan.diagonal_ideal.staircase import (
    StaircaseForm, block_diagonal, lemma41_holds, staircase_det,
)
from qtcatalan.exceptions import PreconditionError, RepeatedPointError, SearchExhaustedError
from qtcatalan.schemas import CheckReport
from qtcatalan.utils.partition_numbers import partition_count_bounded
from qtcatalan.utils.result_cache import ResultCache

logger = logging.getLogger(__name__)

DEFINITIONS = ('pc', 'wc', 'dc', 'rc', 'ac')
REGIONS = ('thm35', 'cor46', 'thm14', 'thm43', 'conj56')

# Two staircase forms of n = 5 grafted at column 3; the products agree exactly
EXAMPLE_GRAFT = (('', 'x', 'xy', 'xx', 'xxx'), ('', 'y', 'yy', 'xy', 'xx'), 3)

_COMPUTE: Dict[str, Callable[[int, int], QtPoly]] = {
    'pc': pc_poly,
    'wc': wc_poly,
    'dc': dc_poly,
    'rc': rc_poly,
    'ac': ac_poly,
}


def _report(check: str, parameters: Dict, started: float, witnesses: Optional[List[Dict]] = None,
            seed: Optional[int] = None, message: str = '', skipped: bool = False) -> CheckReport:
    if skipped:
        verdict = 'skipped'
    else:
        verdict = 'fail' if witnesses else 'pass'
    report = CheckReport(check=check, parameters=parameters, verdict=verdict, witnesses=witnesses or [],
                         seed=seed, wall_time=round(time.perf_counter() - started, 6), message=message)
    log = logger.warning if report.failed else logger.info
    log(report.summary())
    return report


def compute_definition(which: str, m: int, n: int, cache: Optional[ResultCache] = None) -> QtPoly:
    """One of the five definitions, read through the result cache when given"""
    if which not in _COMPUTE:
        raise PreconditionError(f"unknown definition {which!r}; expected one of {', '.join(DEFINITIONS)}")
    if cache is None:
        return _COMPUTE[which](m, n)
    records = cache.get_or_compute(which, {'m': m, 'n': n}, lambda: _COMPUTE[which](m, n).to_records())
    return QtPoly.from_records(records)


def _series_mismatches(label: str, n: int, got: QtSeries, expected: QtSeries) -> List[Dict]:
    witnesses = []
    for key in sorted(set(got.terms) | set(expected.terms)):
        if got.coefficient(*key) != expected.coefficient(*key):
            witnesses.append({'series': label, 'n': n, 'q': key[0], 't': key[1],
                              'got': got.coefficient(*key), 'expected': expected.coefficient(*key)})
    return witnesses


# ============================================================
# Cross-definition equalities
# ============================================================

def compare_definitions(m: int, n: int, which: Sequence[str] = DEFINITIONS,
                        budgets: Optional[BudgetConfig] = None,
                        cache: Optional[ResultCache] = None) -> CheckReport:
    """Pairwise exact equality of the requested definitions"""
    started = time.perf_counter()
    budgets = budgets or BudgetConfig()
    which = list(dict.fromkeys(which))
    unknown = [w for w in which if w not in _COMPUTE]
    if unknown or len(which) < 2:
        raise PreconditionError(f"compare needs two or more of {', '.join(DEFINITIONS)}, got {which}")
    params = {'m': m, 'n': n, 'which': which}
    over = [w for w in which if not budgets.allows(w, m, n)]
    if over:
        return _report('compare', params, started, skipped=True,
                       message=f"over budget: {', '.join(over)}")

    polys = {w: compute_definition(w, m, n, cache) for w in which}
    witnesses = []
    base = which[0]
    for other in which[1:]:
        if polys[other] != polys[base]:
            witnesses.append({'first': base, 'second': other,
                              'difference': (polys[base] - polys[other]).to_records()})
    message = f"{' = '.join(which)} = {polys[base]}" if not witnesses else f"{len(witnesses)} disagreements"
    return _report('compare', params, started, witnesses, message=message)


def specialization_check(m: int, n: int, budgets: Optional[BudgetConfig] = None,
                         cache: Optional[ResultCache] = None) -> CheckReport:
    """
    RC(q,1) is the area generating function, PC(q,1) = DC(1,q), and every
    enumerative definition and RC give the Gaussian quotient at t = 1/q.
    """
    started = time.perf_counter()
    budgets = budgets or BudgetConfig()
    params = {'m': m, 'n': n}
    if not all(budgets.allows(w, m, n) for w in ('pc', 'wc', 'dc', 'rc')):
        return _report('specialization', params, started, skipped=True)

    polys = {w: compute_definition(w, m, n, cache) for w in ('pc', 'wc', 'dc', 'rc')}
    witnesses = []
    areas = area_polynomial(m, n)
    if polys['rc'].at_t_one() != areas:
        witnesses.append({'identity': 'rc(q,1) = area', 'got': polys['rc'].at_t_one().to_records(),
                          'expected': areas.to_records()})
    if polys['pc'].at_t_one() != polys['dc'].at_q_one():
        witnesses.append({'identity': 'pc(q,1) = dc(1,q)', 'got': polys['pc'].at_t_one().to_records(),
                          'expected': polys['dc'].at_q_one().to_records()})
    gaussian = gaussian_specialization(m, n)
    shift = m * comb(n, 2)
    for w, poly in polys.items():
        value = poly.at_t_inverse_q().shift_q(shift)
        if value != gaussian:
            witnesses.append({'identity': f"{w}(q,1/q) = gaussian", 'got': value.to_records(),
                              'expected': gaussian.to_records()})
    return _report('specialization', params, started, witnesses, message=f"t=1/q value {gaussian}")


# ============================================================
# Limits
# ============================================================

def limit_check(m: int, a_max: int, n_list: Sequence[int],
                budgets: Optional[BudgetConfig] = None) -> CheckReport:
    """
    Truncated modified PC, WC and DC at every n of n_list against
    prod_i (1 - t q^i)^{-1}; AC joins (against PC) where its budget allows.
    """
    started = time.perf_counter()
    budgets = budgets or BudgetConfig()
    params = {'m': m, 'a_max': a_max, 'n_list': list(n_list)}
    if a_max < 0 or not n_list:
        raise PreconditionError(f"limit check needs a_max >= 0 and some n, got a_max={a_max}, n_list={n_list}")
    if not all(budgets.allows('limit', m, n) for n in n_list):
        return _report('limit', params, started, skipped=True)

    oracle = partition_product_series(a_max)
    witnesses = []
    for n in n_list:
        pc = modified_pc_series(m, n, a_max)
        witnesses += _series_mismatches('pc', n, pc, oracle)
        witnesses += _series_mismatches('wc', n, modified_wc_series(m, n, a_max), oracle)
        witnesses += _series_mismatches('dc', n, modified_dc_series(m, n, a_max), oracle)
        if n <= budgets.max_n('ac', m):
            ac = QtSeries.from_poly(ac_poly(m, n).modify(m * comb(n, 2)), a_max)
            witnesses += _series_mismatches('ac', n, ac, pc)
    return _report('limit', params, started, witnesses, message=f"{len(oracle.terms)} oracle terms")


def hplus_limit_check(m: Union[int, Fraction], order: int) -> CheckReport:
    """Sum of q^{area} t^{h_m^+} over all partitions equals the partition product"""
    started = time.perf_counter()
    m = Fraction(m)
    params = {'m': str(m), 'order': order}
    witnesses = _series_mismatches('hplus', 0, hplus_series(m, order), partition_product_series(order))
    return _report('hplus', params, started, witnesses)


# ============================================================
# Dimension theorems
# ============================================================

def _bidegrees_for(region: str, m: int, n: int) -> List[Tuple[int, int]]:
    C = comb(n, 2)
    top = m * C
    if region in ('thm35', 'conj56'):
        return [(d1, total - d1) for total in range(top + 1) for d1 in range(total + 1)]
    if region == 'thm14':
        return [(d1, top - k - d1) for k in range(0, n - 5) for d1 in range(top - k + 1)]
    # cor46, thm43: k + d2 < n/2 - 1 (thm43 only needs each below n/2 - 1)
    out = []
    for k in range(top + 1):
        for d2 in range(top - k + 1):
            if region == 'cor46' and not k + d2 < n / 2 - 1:
                continue
            if region == 'thm43' and not (k < n / 2 - 1 and d2 < n / 2 - 1):
                continue
            out.append((top - k - d2, d2))
    return out


def _region_precondition(region: str, m: int, n: int):
    if region not in REGIONS:
        raise PreconditionError(f"unknown region {region!r}; expected one of {', '.join(REGIONS)}")
    if region == 'thm35' and m != 1:
        raise PreconditionError(f"thm35 concerns m = 1, got m={m}")
    if region == 'conj56' and m < 2:
        raise PreconditionError(f"conj56 concerns m >= 2, got m={m}")
    if region == 'thm14' and n < 6:
        raise PreconditionError(f"thm14 needs n >= 6, got n={n}")
    if region in ('cor46', 'thm43') and n < 3:
        raise PreconditionError(f"{region} needs n >= 3, got n={n}")


def _region_witness(region: str, m: int, n: int, d: Tuple[int, int]) -> Optional[Dict]:
    """None when the bidegree behaves as the region claims"""
    d1, d2 = d
    k = m * comb(n, 2) - d1 - d2
    delta = min(d1, d2)
    dim = dim_M(n, m, d1, d2)
    witness = {'bidegree': [d1, d2], 'k': k, 'dim': dim}
    if region == 'thm35':
        bound = partition_count_bounded(delta, k)
        equal = k <= n - 3 or (k == n - 2 and delta == 1) or delta == 0
        ok = dim == bound if equal else dim < bound
        witness.update(bound=bound, expected='equal' if equal else 'strict')
    elif region == 'conj56':
        if min(d1, d2, k) < 1:
            return None
        bound = partition_count_bounded(delta, k)
        equal = k <= n - 2
        ok = dim == bound if equal else dim < bound
        witness.update(bound=bound, expected='equal' if equal else 'strict')
    elif region == 'thm14':
        bound = partition_count_bounded(delta, k)
        ok = dim == bound
        witness.update(bound=bound, expected='equal')
    elif region == 'cor46':
        bound = partition_count_bounded(d2, k)
        ok = dim == bound
        witness.update(bound=bound, expected='equal')
    else:
        bound = partition_count_bounded(d2, k)
        try:
            spans = staircase_spanning_check(m, n, d1, d2)
        except SearchExhaustedError as e:
            witness.update(bound=bound, error=str(e))
            return witness
        ok = spans and dim <= bound
        witness.update(bound=bound, spans=spans, expected='spanning, dim <= bound')
    return None if ok else witness


def coefficient_theorem_check(n: int, m: int, region: str, budgets: Optional[BudgetConfig] = None,
                              bidegrees: Optional[Iterable[Tuple[int, int]]] = None) -> CheckReport:
    """
    dim M^{(m)}_{d1,d2} against the partition numbers p(delta, k) or
    p(d2, k) over the bidegrees a region covers.

    thm35 and conj56 scan every bidegree and are budgeted like AC; the
    other regions touch a handful of bidegrees and use the lemma budget.
    """
    started = time.perf_counter()
    budgets = budgets or BudgetConfig()
    _region_precondition(region, m, n)
    params = {'n': n, 'm': m, 'region': region}
    verb = 'ac' if region in ('thm35', 'conj56') else 'lemma'
    if not budgets.allows(verb, m, n):
        return _report('coefficients', params, started, skipped=True)

    allowed = set(_bidegrees_for(region, m, n))
    if bidegrees is None:
        chosen = sorted(allowed)
    else:
        chosen = sorted({tuple(d) for d in bidegrees})
        outside = [d for d in chosen if d not in allowed]
        if outside:
            raise PreconditionError(f"bidegrees {outside} lie outside region {region} for m={m}, n={n}")
        params['bidegrees'] = [list(d) for d in chosen]

    witnesses = []
    strict = 0
    for d in chosen:
        witness = _region_witness(region, m, n, d)
        if witness is not None:
            witnesses.append(witness)
        elif region in ('thm35', 'conj56'):
            k = m * comb(n, 2) - sum(d)
            if dim_M(n, m, *d) < partition_count_bounded(min(d), k):
                strict += 1
    message = f"{len(chosen)} bidegrees"
    if region in ('thm35', 'conj56'):
        message += f", {strict} strict"
    return _report('coefficients', params, started, witnesses, message=message)


# ============================================================
# Lemma suites
# ============================================================

def transfactor_suite(n: int, count: int = 50, seed: Optional[int] = None,
                      budgets: Optional[BudgetConfig] = None) -> CheckReport:
    started = time.perf_counter()
    budgets = budgets or BudgetConfig()
    seed = settings.DEFAULT_SEED if seed is None else seed
    params = {'n': n, 'count': count}
    if not budgets.allows('lemma', 1, n):
        return _report('transfactor', params, started, seed=seed, skipped=True)
    witnesses = []
    for D, i, j in random_transfactor_instances(n, count, seed):
        if not transfactor_check(D, i, j):
            witnesses.append({'points': [list(p) for p in D.points], 'i': i, 'j': j})
    return _report('transfactor', params, started, witnesses, seed=seed)


def example_grafting_identity() -> bool:
    first, second, r = EXAMPLE_GRAFT
    return grafting_staircase_identity(StaircaseForm(first), StaircaseForm(second), r)


def grafting_suite(n: int, count: int = 20, seed: Optional[int] = None,
                   budgets: Optional[BudgetConfig] = None) -> CheckReport:
    """The fixed grafting identity, then seeded random grafts"""
    started = time.perf_counter()
    budgets = budgets or BudgetConfig()
    seed = settings.DEFAULT_SEED if seed is None else seed
    params = {'n': n, 'count': count}
    witnesses = []
    if not example_grafting_identity():
        first, second, r = EXAMPLE_GRAFT
        witnesses.append({'words': [list(first), list(second)], 'r': r})
    if not budgets.allows('ac', 2, n):
        return _report('grafting', params, started, witnesses, seed=seed, skipped=not witnesses,
                       message="random instances over budget")
    for D1, D2, r in random_grafting_instances(n, count, seed):
        if not grafting_check(D1, D2, r):
            witnesses.append({'first': [list(p) for p in D1.points],
                              'second': [list(p) for p in D2.points], 'r': r})
    return _report('grafting', params, started, witnesses, seed=seed)


def _random_form(n: int, rng: random.Random) -> StaircaseForm:
    words = []
    for a, b in random_pointset(n, rng).points:
        letters = ['x'] * a + ['y'] * b
        rng.shuffle(letters)
        words.append(''.join(letters))
    return StaircaseForm(tuple(words))


def staircase_suite(n: int, count: int = 20, seed: Optional[int] = None,
                    budgets: Optional[BudgetConfig] = None) -> CheckReport:
    """
    Random staircase forms: the unit block bound always, and det(S) = delta(D)
    modulo lower degrees while the monomial model is within budget.
    """
    started = time.perf_counter()
    budgets = budgets or BudgetConfig()
    seed = settings.DEFAULT_SEED if seed is None else seed
    params = {'n': n, 'count': count}
    rng = random.Random(seed)
    congruence = n <= budgets.max_n('full_model')
    witnesses = []
    for _ in range(count):
        form = _random_form(n, rng)
        if not lemma41_holds(form):
            witnesses.append({'words': list(form.words), 'property': 'unit blocks',
                              'blocks': [list(b) for b in block_diagonal(form).blocks]})
        elif congruence and not equiv_mod_lower(staircase_det(form), form.point_set().delta(), n, budgets):
            witnesses.append({'words': list(form.words), 'property': 'det = delta'})
    message = '' if congruence else "congruence over budget, block bound only"
    return _report('staircase', params, started, witnesses, seed=seed, message=message)


def lemma44_check(a_max: int) -> CheckReport:
    started = time.perf_counter()
    failure = first_lemma44_failure(a_max)
    witnesses = [] if failure is None else [{'a': failure}]
    return _report('lemma44', {'a_max': a_max}, started, witnesses)


def conjecture61_check(m: int, n: int, budgets: Optional[BudgetConfig] = None) -> CheckReport:
    """A genuine counterexample is a reportable outcome: the witness names it"""
    started = time.perf_counter()
    budgets = budgets or BudgetConfig()
    params = {'m': m, 'n': n}
    if not budgets.allows('ac', m, n):
        return _report('conj61', params, started, skipped=True)
    try:
        witnesses = conjecture61_deficiencies(m, n)
    except RepeatedPointError as e:
        witnesses = [dict(e.witness, error='repeated point')]
    return _report('conj61', params, started, witnesses)


def phi_check(n: int, d1: int, d2: int, mode: str = 'injectivity',
              budgets: Optional[BudgetConfig] = None) -> CheckReport:
    """
    Modes: 'homogeneity' evaluates phi on every point set of the bidegree,
    'welldefined' pushes the lower relations through phi, 'injectivity'
    compares the rank of phi on a basis with dim M.
    """
    started = time.perf_counter()
    budgets = budgets or BudgetConfig()
    params = {'n': n, 'd1': d1, 'd2': d2, 'mode': mode}
    if mode not in ('homogeneity', 'welldefined', 'injectivity'):
        raise PreconditionError(f"unknown phi mode {mode!r}")
    if not budgets.allows('phi', 1, n):
        return _report('phi', params, started, skipped=True)
    witnesses = []
    if mode == 'homogeneity':
        count = 0
        for D in enumerate_pointsets(n, d1, d2):
            phi(D)
            count += 1
        message = f"{count} point sets"
    elif mode == 'welldefined':
        if not phi_welldefined_check(n, d1, d2):
            witnesses.append({'bidegree': [d1, d2]})
        message = ''
    else:
        ok = phi_injectivity_check(n, d1, d2)
        rank, dim = phi_rank(n, d1, d2)
        if not ok:
            witnesses.append({'bidegree': [d1, d2], 'rank': rank, 'dim': dim})
        message = f"rank {rank} of {dim}"
    return _report('phi', params, started, witnesses, message=message)


def embedding_check(n: int, d1: int, d2: int, d1p: int,
                    budgets: Optional[BudgetConfig] = None) -> CheckReport:
    started = time.perf_counter()
    budgets = budgets or BudgetConfig()
    params = {'n': n, 'd1': d1, 'd2': d2, 'd1p': d1p}
    if not budgets.allows('lemma', 1, n):
        return _report('embedding', params, started, skipped=True)
    witnesses = [] if embedding_injectivity_check(n, d1, d2, d1p) else [dict(params)]
    return _report('embedding', params, started, witnesses)


def higher_transfactor_report(n: int, d1: int, d2: int, k: int,
                              budgets: Optional[BudgetConfig] = None) -> CheckReport:
    started = time.perf_counter()
    budgets = budgets or BudgetConfig()
    params = {'n': n, 'd1': d1, 'd2': d2, 'k': k}
    if not budgets.allows('lemma', 2, n):
        return _report('higher-transfactor', params, started, skipped=True)
    witnesses = [] if higher_transfactor_check(n, d1, d2, k) else [dict(params)]
    return _report('higher-transfactor', params, started, witnesses)


def product_containment_report(n: int, first: Tuple[int, int], second: Tuple[int, int],
                               budgets: Optional[BudgetConfig] = None) -> CheckReport:
    started = time.perf_counter()
    budgets = budgets or BudgetConfig()
    params = {'n': n, 'first': list(first), 'second': list(second)}
    if not budgets.allows('lemma', 2, n):
        return _report('product-containment', params, started, skipped=True)
    witnesses = [] if product_containment_check(n, tuple(first), tuple(second)) else [dict(params)]
    return _report('product-containment', params, started, witnesses)


def staircase_span_report(m: int, n: int, d1: int, d2: int,
                          budgets: Optional[BudgetConfig] = None) -> CheckReport:
    started = time.perf_counter()
    budgets = budgets or BudgetConfig()
    params = {'m': m, 'n': n, 'd1': d1, 'd2': d2}
    if not budgets.allows('lemma', m, n):
        return _report('staircase-span', params, started, skipped=True)
    witnesses = [] if staircase_spanning_check(m, n, d1, d2) else [dict(params)]
    return _report('staircase-span', params, started, witnesses)
