"""
Check Runner
Runs independent checks on a thread pool and returns the reports in job order
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Sequence

from qtcatalan.exceptions import (
    InconsistencyError, InterpolationError, PreconditionError, SearchExhaustedError,
)
from qtcatalan.schemas import CheckReport

logger = logging.getLogger(__name__)


@dataclass
class CheckJob:
    """A named check; fn returns its CheckReport"""
    name: str
    fn: Callable[[], CheckReport]
    parameters: Dict[str, Any] = field(default_factory=dict)


def _run_one(job: CheckJob) -> CheckReport:
    started = time.perf_counter()
    logger.info(f"Starting {job.name} {job.parameters}")
    try:
        return job.fn()
    except PreconditionError:
        raise
    except (InconsistencyError, InterpolationError, SearchExhaustedError) as e:
        logger.error(f"{job.name} raised {type(e).__name__}: {e}")
        return CheckReport(check=job.name, parameters=job.parameters, verdict='fail',
                           witnesses=[{'error': type(e).__name__, 'message': str(e)}],
                           wall_time=round(time.perf_counter() - started, 6), message=str(e))


def run_checks(jobs: Sequence[CheckJob], workers: int = 1) -> List[CheckReport]:
    """
    Run jobs with up to `workers` threads.

    Reports come back in the order of `jobs`. A PreconditionError in any job
    is re-raised after every job has finished.
    """
    if workers < 1:
        raise PreconditionError(f"workers must be positive, got {workers}")
    if workers == 1 or len(jobs) <= 1:
        return [_run_one(job) for job in jobs]

    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(_run_one, job) for job in jobs]
    # the executor context joins every future before this point
    reports = [future.result() for future in futures]
    failed = sum(1 for r in reports if r.failed)
    logger.info(f"Finished {len(reports)} checks on {workers} workers, {failed} failed")
    return reports
