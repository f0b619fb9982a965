"""Deterministic worker-pool mapping for exhaustive sweeps."""

from __future__ import annotations


def parallel_map(fn, items, jobs=1):
    """Map fn over items, optionally across processes.

    Results come back in input order whatever the job count, so sweep
    reports assemble identically.  ``fn`` and the items must be picklable
    when jobs > 1.
    """
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    from concurrent.futures import ProcessPoolExecutor

    chunk = max(1, len(items) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=chunk))
