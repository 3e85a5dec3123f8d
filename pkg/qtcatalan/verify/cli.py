"""
qtcat command line
Computes the five q,t-Catalan definitions, dimensions and statistics, and runs
the verification checks. Results go to stdout (text, CSV or JSON); logs go to
stderr and the log file.

Exit codes: 0 success, 1 some check failed, 2 bad parameters.
"""
import argparse
import csv
import json
import logging
import sys
from fractions import Fraction
from itertools import product
from math import comb
from pathlib import Path
from typing import List, Optional, Sequence

from qtcatalan.config.budgets import BudgetConfig
from qtcatalan.config.settings import settings
from qtcatalan.core.catalan_combinatorics import (
    DyckPath, DyckWord, Partition, bounce, c_m_stat, dinv_m, h_plus, partition_to_word,
    path_to_partition, word_to_partition,
)
from qtcatalan.core.rho_map import phi
from qtcatalan.diagonal_ideal.graded_engine import MODELS, ISOTYPIC, ac_poly, coefficient_table, dim_M
from qtcatalan.diagonal_ideal.pointsets import enumerate_pointsets
from qtcatalan.exceptions import PreconditionError
from qtcatalan.schemas import CheckReport
from qtcatalan.utils.result_cache import ResultCache
from qtcatalan.verify import checks
from qtcatalan.verify.runner import CheckJob, run_checks

logger = logging.getLogger(__name__)

CHECKS = ('transfactor', 'grafting', 'staircase', 'lemma44', 'conj61', 'staircase-span',
          'higher-transfactor', 'product-containment', 'embedding', 'coefficients',
          'specialization', 'hplus')
# the only checks whose result depends on --m; the rest run once per n
SLOPED_CHECKS = ('conj61', 'staircase-span', 'coefficients', 'specialization')


def setup_logging(level: str):
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format='%(asctime)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler(settings.LOG_FILE),
            logging.StreamHandler(sys.stderr)  # stdout carries results only
        ]
    )


def int_list(text: str) -> List[int]:
    """'1,2,3' -> [1, 2, 3]"""
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def json_list(text: str) -> List[int]:
    """'[7,5,4]' or '7,5,4' -> [7, 5, 4]"""
    text = text.strip()
    if not text.startswith('['):
        return int_list(text)
    try:
        values = json.loads(text)
    except json.JSONDecodeError as e:
        raise argparse.ArgumentTypeError(f"invalid JSON list {text!r}: {e}")
    if not isinstance(values, list) or not all(isinstance(v, int) for v in values):
        raise argparse.ArgumentTypeError(f"expected a JSON list of integers, got {text!r}")
    return values


def pair(text: str) -> tuple:
    values = int_list(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"expected a pair 'a,b', got {text!r}")
    return tuple(values)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='qtcat', description="Higher q,t-Catalan polynomials")
    parser.add_argument('--cache-dir', type=Path, default=None, help="result cache directory")
    parser.add_argument('--workers', type=int, default=None, help="concurrent checks")
    parser.add_argument('--json', action='store_true', help="machine-readable output")
    parser.add_argument('--budget-file', type=Path, default=None, help="KEY=VALUE budget file")
    parser.add_argument('--log-level', default=None)
    sub = parser.add_subparsers(dest='verb', required=True)

    for verb in checks.DEFINITIONS:
        p = sub.add_parser(verb, help=f"compute the {verb.upper()} polynomial")
        p.add_argument('--m', type=int, required=True)
        p.add_argument('--n', type=int, required=True)
        p.add_argument('--csv', action='store_true', help="d1,d2,coeff rows")
        if verb == 'ac':
            p.add_argument('--model', choices=MODELS, default=ISOTYPIC)
        if verb == 'rc':
            p.add_argument('--check-specializations', action='store_true',
                           help="also verify the t=1 and t=1/q specializations")

    p = sub.add_parser('dims', help="dim M^(m) in one bidegree")
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--m', type=int, default=1)
    p.add_argument('--d1', type=int, required=True)
    p.add_argument('--d2', type=int, required=True)
    p.add_argument('--model', choices=MODELS, default=ISOTYPIC)

    p = sub.add_parser('stats', help="statistics of a partition, word or path")
    p.add_argument('kind', choices=('partition', 'word', 'path'))
    p.add_argument('value', type=json_list, help="JSON list: parts, word entries or column heights")
    p.add_argument('--m', type=int, required=True)
    p.add_argument('--n', type=int, default=None, help="triangle size, for partitions")

    p = sub.add_parser('phi', help="the phi map on one bidegree")
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--d1', type=int, required=True)
    p.add_argument('--d2', type=int, required=True)
    p.add_argument('--mode', choices=('values', 'homogeneity', 'welldefined', 'injectivity'),
                   default='values')
    p.add_argument('--injectivity', dest='mode', action='store_const', const='injectivity')
    p.add_argument('--welldefined', dest='mode', action='store_const', const='welldefined')

    p = sub.add_parser('limit', help="stabilization of the modified polynomials")
    p.add_argument('--m', type=int_list, required=True)
    p.add_argument('--a-max', type=int, required=True)
    p.add_argument('--n-list', type=int_list, required=True)

    p = sub.add_parser('compare', help="cross-definition equality")
    p.add_argument('--m', type=int_list, required=True)
    p.add_argument('--n', type=int_list, required=True)
    p.add_argument('--which', type=lambda s: [w for w in s.split(',') if w], default=list(checks.DEFINITIONS))

    p = sub.add_parser('check', help="lemma and theorem verifications")
    p.add_argument('name', choices=CHECKS)
    p.add_argument('--n', type=int_list, default=[4])
    p.add_argument('--m', type=int_list, default=[1])
    p.add_argument('--d1', type=int, default=None)
    p.add_argument('--d2', type=int, default=None)
    p.add_argument('--d1p', type=int, default=None)
    p.add_argument('--k', type=int, default=None)
    p.add_argument('--first', type=pair, default=None)
    p.add_argument('--second', type=pair, default=None)
    p.add_argument('--region', choices=checks.REGIONS, default='thm35')
    p.add_argument('--count', type=int, default=None)
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--a-max', type=int, default=30)
    p.add_argument('--order', type=int, default=10)
    p.add_argument('--slope', type=Fraction, default=Fraction(1), help="rational m for hplus")
    return parser


# ============================================================
# Output
# ============================================================

def emit(payload, as_json: bool, text: str):
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def emit_reports(reports: Sequence[CheckReport], as_json: bool) -> int:
    if as_json:
        print(json.dumps([r.model_dump() for r in reports], sort_keys=True))
    else:
        for report in reports:
            print(report.summary())
            for witness in report.witnesses:
                print(f"    witness: {json.dumps(witness, sort_keys=True)}")
    return 1 if any(r.failed for r in reports) else 0


def emit_csv(rows):
    writer = csv.writer(sys.stdout, lineterminator='\n')
    writer.writerow(['d1', 'd2', 'coeff'])
    writer.writerows(rows)


# ============================================================
# Verbs
# ============================================================

def run_polynomial(args, budgets: BudgetConfig, cache: ResultCache) -> int:
    monomial = args.verb == 'ac' and args.model != ISOTYPIC
    if not budgets.allows(args.verb, args.m, args.n) or (monomial and not budgets.allows('full_model', args.m, args.n)):
        emit({'verb': args.verb, 'm': args.m, 'n': args.n, 'verdict': 'skipped'}, args.json,
             f"skipped: {args.verb} with m={args.m}, n={args.n} is over budget")
        return 0
    if monomial:
        poly = ac_poly(args.m, args.n, args.model)
    else:
        poly = checks.compute_definition(args.verb, args.m, args.n, cache)
    if args.csv:
        emit_csv(coefficient_table(poly))
    else:
        emit(poly.to_records(), args.json, str(poly))
    if getattr(args, 'check_specializations', False):
        return emit_reports([checks.specialization_check(args.m, args.n, budgets, cache)], args.json)
    return 0


def run_stats(args) -> int:
    m = args.m
    if args.kind == 'partition':
        lam = Partition(tuple(args.value))
        stats = {'partition': list(lam.parts), 'area': lam.area, 'length': lam.length,
                 'c_m': c_m_stat(lam, m), 'h_plus': h_plus(lam, m)}
        if args.n is not None:
            pi = DyckPath.from_partition(lam, m, args.n)
            data = bounce(pi, m)
            stats.update(coarea=m * comb(args.n, 2) - lam.area,
                         word=list(partition_to_word(lam, m, args.n).entries),
                         heights=list(pi.heights), steps=pi.steps, bounce=list(data.v), b_m=data.b_m)
    elif args.kind == 'word':
        gamma = DyckWord(tuple(args.value), m)
        stats = {'word': list(gamma.entries), 'area': gamma.area, 'dinv': dinv_m(gamma, m),
                 'partition': list(word_to_partition(gamma).parts)}
    else:
        pi = DyckPath(tuple(args.value), m)
        data = bounce(pi, m)
        stats = {'heights': list(pi.heights), 'steps': pi.steps, 'area': pi.area,
                 'bounce': list(data.v), 'b_m': data.b_m,
                 'partition': list(path_to_partition(pi).parts)}
    emit(stats, args.json, "\n".join(f"{key}: {value}" for key, value in stats.items()))
    return 0


def run_phi(args, budgets: BudgetConfig) -> int:
    if args.mode != 'values':
        return emit_reports([checks.phi_check(args.n, args.d1, args.d2, args.mode, budgets)], args.json)
    if not budgets.allows('phi', 1, args.n):
        emit([], args.json, f"skipped: phi at n={args.n} is over budget")
        return 0
    values = [(D, phi(D)) for D in enumerate_pointsets(args.n, args.d1, args.d2)]
    emit([{'points': [list(p) for p in D.points], 'phi': value.to_records()} for D, value in values],
         args.json, "\n".join(f"{D}: {value}" for D, value in values))
    return 0


def check_jobs(args, budgets: BudgetConfig, cache: ResultCache) -> List[CheckJob]:
    name = args.name
    jobs = []
    slopes = args.m if name in SLOPED_CHECKS else [None]
    for m, n in product(slopes, args.n):
        params = {'n': n} if m is None else {'m': m, 'n': n}
        if name == 'transfactor':
            fn = lambda n=n: checks.transfactor_suite(n, args.count or 50, args.seed, budgets)
        elif name == 'grafting':
            fn = lambda n=n: checks.grafting_suite(n, args.count or 20, args.seed, budgets)
        elif name == 'staircase':
            fn = lambda n=n: checks.staircase_suite(n, args.count or 20, args.seed, budgets)
        elif name == 'lemma44':
            fn = lambda: checks.lemma44_check(args.a_max)
        elif name == 'conj61':
            fn = lambda m=m, n=n: checks.conjecture61_check(m, n, budgets)
        elif name == 'staircase-span':
            fn = lambda m=m, n=n: checks.staircase_span_report(m, n, args.d1, args.d2, budgets)
        elif name == 'higher-transfactor':
            fn = lambda n=n: checks.higher_transfactor_report(n, args.d1, args.d2, args.k, budgets)
        elif name == 'product-containment':
            fn = lambda n=n: checks.product_containment_report(n, args.first, args.second, budgets)
        elif name == 'embedding':
            fn = lambda n=n: checks.embedding_check(n, args.d1, args.d2, args.d1p, budgets)
        elif name == 'coefficients':
            bidegrees = None if args.d1 is None else [(args.d1, args.d2)]
            fn = lambda m=m, n=n: checks.coefficient_theorem_check(n, m, args.region, budgets, bidegrees)
        elif name == 'specialization':
            fn = lambda m=m, n=n: checks.specialization_check(m, n, budgets, cache)
        else:
            fn = lambda: checks.hplus_limit_check(args.slope, args.order)
        jobs.append(CheckJob(name=name, fn=fn, parameters=params))
    if name in ('lemma44', 'hplus'):
        jobs = jobs[:1]
    return jobs


def _require(args, *names: str):
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        raise PreconditionError(f"check {args.name} needs --{', --'.join(missing)}")


def run(args) -> int:
    budgets = BudgetConfig.from_file(args.budget_file or settings.BUDGET_FILE)
    cache = ResultCache(args.cache_dir or settings.CACHE_DIR)
    workers = args.workers or settings.WORKERS

    if args.verb in checks.DEFINITIONS:
        return run_polynomial(args, budgets, cache)
    if args.verb == 'dims':
        monomial = args.model != ISOTYPIC
        if not budgets.allows('ac', args.m, args.n) or (monomial and not budgets.allows('full_model', args.m, args.n)):
            emit({'n': args.n, 'm': args.m, 'verdict': 'skipped'}, args.json,
                 f"skipped: dims with m={args.m}, n={args.n} is over budget")
            return 0
        value = dim_M(args.n, args.m, args.d1, args.d2, args.model)
        emit({'n': args.n, 'm': args.m, 'd1': args.d1, 'd2': args.d2, 'dim': value}, args.json, str(value))
        return 0
    if args.verb == 'stats':
        return run_stats(args)
    if args.verb == 'phi':
        return run_phi(args, budgets)
    if args.verb == 'limit':
        jobs = [CheckJob('limit', lambda m=m: checks.limit_check(m, args.a_max, args.n_list, budgets), {'m': m})
                for m in args.m]
        return emit_reports(run_checks(jobs, workers), args.json)
    if args.verb == 'compare':
        jobs = [CheckJob('compare', lambda m=m, n=n: checks.compare_definitions(m, n, args.which, budgets, cache),
                         {'m': m, 'n': n})
                for m, n in product(args.m, args.n)]
        return emit_reports(run_checks(jobs, workers), args.json)

    needs = {
        'staircase-span': ('d1', 'd2'),
        'higher-transfactor': ('d1', 'd2', 'k'),
        'product-containment': ('first', 'second'),
        'embedding': ('d1', 'd2', 'd1p'),
    }
    _require(args, *needs.get(args.name, ()))
    if args.name == 'coefficients' and (args.d1 is None) != (args.d2 is None):
        raise PreconditionError("give both --d1 and --d2 or neither")
    return emit_reports(run_checks(check_jobs(args, budgets, cache), workers), args.json)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level or settings.LOG_LEVEL)
    try:
        return run(args)
    except PreconditionError as e:
        logger.error(f"Invalid parameters: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        logger.info("Output pipe closed")
        return 0


if __name__ == '__main__':
    sys.exit(main())
