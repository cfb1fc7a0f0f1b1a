"""
Concurrent fan-out of independent pure computations.

Per-prime smoothness checks and per-e colength samples share no state, so they
can run in worker processes. Results always come back in input order, which
keeps every report byte-identical regardless of the job count.

Responsibility: Bounded process-pool fan-out with ordered results
"""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from ..config import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def resolve_jobs(jobs: Optional[int]) -> int:
    """Explicit job count, or the HKLAB_JOBS default"""
    value = settings.compute.jobs if jobs is None else jobs
    if value < 1:
        raise ValueError(f"jobs must be >= 1, got {value}")
    return value


async def run_fanout(
    func: Callable[[T], R],
    items: Iterable[T],
    jobs: Optional[int] = None,
) -> List[R]:
    """
    Apply ``func`` to every item, concurrently when jobs > 1.

    ``func`` must be a picklable module-level function. With one job the
    calls run in-process, in order.

    Args:
        func: Pure function of one argument
        items: Task inputs
        jobs: Worker count (defaults to settings)

    Returns:
        Results in the order of ``items``
    """
    items = list(items)
    jobs = resolve_jobs(jobs)
    if jobs == 1 or len(items) <= 1:
        return [func(item) for item in items]

    logger.info(f"Fanning out {len(items)} tasks over {jobs} workers")
    loop = asyncio.get_running_loop()
    semaphore = asyncio.Semaphore(jobs)

    with ProcessPoolExecutor(max_workers=jobs) as executor:

        async def _run_with_limit(item: T) -> R:
            async with semaphore:
                return await loop.run_in_executor(executor, func, item)

        return list(await asyncio.gather(*(_run_with_limit(item) for item in items)))


def fanout_map(
    func: Callable[[T], R],
    items: Iterable[T],
    jobs: Optional[int] = None,
) -> List[R]:
    """
    Synchronous front for ``run_fanout``.

    Blocks the calling thread. Inside a running event loop the fan-out gets its
    own loop on a helper thread; async code should await ``run_fanout`` instead.
    """
    items = list(items)
    if resolve_jobs(jobs) == 1:
        return [func(item) for item in items]
    try:
        asyncio.get_running_loop()
    except RuntimeError:
        return asyncio.run(run_fanout(func, items, jobs))
    logger.debug("Event loop already running; fanning out from a helper thread")
    with ThreadPoolExecutor(max_workers=1) as helper:
        return helper.submit(asyncio.run, run_fanout(func, items, jobs)).result()
