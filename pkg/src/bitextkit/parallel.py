"""Order-preserving parallel map used by the data-parallel stages.

Workers must not change any result: the mapped functions are pure, and
``parallel_map`` returns results in input order, so output is identical
for any worker count.
"""

from __future__ import annotations

import multiprocessing
from typing import Callable, Sequence


def parallel_map(
    fn: Callable,
    items: Sequence,
    workers: int = 1,
    chunksize: int = 256,
    initializer: Callable | None = None,
    initargs: tuple = (),
) -> list:
    """Map ``fn`` over ``items``, in-process when ``workers <= 1``."""
    if workers <= 1 or len(items) <= 1:
        if initializer is not None:
            initializer(*initargs)
        return [fn(item) for item in items]
    with multiprocessing.Pool(workers, initializer=initializer, initargs=initargs) as pool:
        return list(pool.imap(fn, items, chunksize=chunksize))
