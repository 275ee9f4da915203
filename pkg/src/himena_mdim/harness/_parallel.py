from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
import logging
import os
from typing import Any, Callable, Sequence, TypeVar

from himena_mdim.consts import JOBS_ENV_VAR

logger = logging.getLogger(__name__)

_R = TypeVar("_R")


def resolve_jobs(jobs: int | None = None) -> int:
    """Worker count: ``MDIM_JOBS`` wins over ``jobs``, which defaults to the core count."""
    env = os.environ.get(JOBS_ENV_VAR)
    if env:
        try:
            jobs = int(env)
        except ValueError:
            raise ValueError(f"{JOBS_ENV_VAR} must be an integer, got {env!r}.") from None
    if jobs is None:
        jobs = os.cpu_count() or 1
    return max(1, jobs)


def _apply(payload: tuple[Callable[..., Any], tuple[Any, ...]]) -> Any:
    func, args = payload
    return func(*args)


def map_ordered(
    func: Callable[..., _R],
    items: Sequence[tuple[Any, ...]],
    jobs: int | None = None,
) -> list[_R]:
    """``[func(*args) for args in items]``, in a process pool when ``jobs > 1``.

    Results come back in item order whatever the completion order.
    """
    jobs = resolve_jobs(jobs)
    if jobs == 1 or len(items) <= 1:
        return [func(*args) for args in items]
    logger.debug("running %d work items on %d processes", len(items), jobs)
    with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as executor:
        return list(executor.map(_apply, [(func, tuple(args)) for args in items]))
