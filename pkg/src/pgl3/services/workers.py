# src/pgl3/services/workers.py
import logging
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Dict, Iterable, List, Optional, TypeVar

from pgl3.core.config import settings


logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def install_settings(values: Dict[str, Any]) -> None:
    """Worker initializer: copy the parent's effective settings into this process."""
    for name, value in values.items():
        setattr(settings, name, value)


def run_parallel(
    fn: Callable[[T], R],
    items: Iterable[T],
    jobs: Optional[int] = None,
    start_method: Optional[str] = None,
) -> List[R]:
    """Map ``fn`` over ``items``; results keep input order.

    ``fn`` must be a module-level function when ``jobs > 1``. Workers see the
    settings of the calling process, CLI overrides included, whatever the start
    method.
    """
    items = list(items)
    jobs = settings.JOBS if jobs is None else jobs
    if jobs <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    logger.debug("dispatching %d items to %d workers", len(items), jobs)
    context = multiprocessing.get_context(start_method) if start_method else None
    with ProcessPoolExecutor(
        max_workers=jobs,
        mp_context=context,
        initializer=install_settings,
        initargs=(settings.model_dump(),),
    ) as pool:
        chunksize = max(1, len(items) // (4 * jobs))
        return list(pool.map(fn, items, chunksize=chunksize))
