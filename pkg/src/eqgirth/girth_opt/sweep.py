"""Thread-parallel block sweeps with a deterministic reduction order."""

import logging
import os
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor

from eqgirth.conf import settings

logger = logging.getLogger(__name__)


def worker_count(threads: int | None = None) -> int:
    """Number of worker threads, capped by the THREADS setting."""
    if threads is not None:
        return max(1, threads)
    if settings.THREADS is not None:
        return settings.THREADS
    return os.cpu_count() or 1


def map_blocks[B, R](func: Callable[[B], R], blocks: Sequence[B], threads: int | None = None) -> list[R]:
    """Apply ``func`` to every block, possibly in parallel.

    Results come back in block order regardless of completion order, so any
    reduction over them is reproducible.

    Args:
        func: Work function for one block; must not mutate shared state.
        blocks: The blocks, in row-major order.
        threads: Worker cap (defaults to the THREADS setting).

    Returns:
        The per-block results in the order of ``blocks``.
    """
    workers = min(worker_count(threads), len(blocks))
    logger.debug("sweeping %d blocks on %d worker(s)", len(blocks), workers)
    if workers <= 1:
        return [func(block) for block in blocks]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, blocks))
