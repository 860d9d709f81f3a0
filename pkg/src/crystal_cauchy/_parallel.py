import os
from concurrent.futures import ProcessPoolExecutor

THREADS_ENV = "CRYSTAL_CAUCHY_THREADS"


def worker_count() -> int:
    """Worker cap from ``CRYSTAL_CAUCHY_THREADS``; serial when unset."""
    raw = os.environ.get(THREADS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parallel_map(fn, items) -> list:
    """Order-preserving map, fanned out to processes when the cap allows."""
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
