import pytest

from src.config import settings
from src.orchestration.fanout import fanout_map, resolve_jobs, run_fanout


def test_resolve_jobs_defaults_to_settings() -> None:
    assert resolve_jobs(None) == settings.compute.jobs
    assert resolve_jobs(3) == 3


def test_resolve_jobs_rejects_zero() -> None:
    with pytest.raises(ValueError):
        resolve_jobs(0)


def test_fanout_map_single_job_runs_in_process() -> None:
    seen: list[int] = []

    def record(item: int) -> int:
        seen.append(item)
        return item * item

    # a closure cannot be pickled, so this only works without workers
    assert fanout_map(record, [3, 1, 2], jobs=1) == [9, 1, 4]
    assert seen == [3, 1, 2]


def test_fanout_map_keeps_input_order_with_workers() -> None:
    items = [-5, 4, -3, 2, -1, 0]

    assert fanout_map(abs, items, jobs=2) == [5, 4, 3, 2, 1, 0]


@pytest.mark.asyncio
async def test_run_fanout_matches_serial_results() -> None:
    items = list(range(-6, 6))

    parallel = await run_fanout(abs, items, jobs=3)

    assert parallel == [abs(i) for i in items]


@pytest.mark.asyncio
async def test_run_fanout_empty_input() -> None:
    assert await run_fanout(abs, [], jobs=4) == []


@pytest.mark.asyncio
async def test_fanout_map_works_inside_running_loop() -> None:
    items = [-3, 2, -1]

    assert fanout_map(abs, items, jobs=2) == [3, 2, 1]
