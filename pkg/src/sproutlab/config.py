"""Exhaustive-search caps and the worker pool helper."""

import os
from concurrent.futures import ProcessPoolExecutor

from .errors import SizeLimitError

DEFAULT_CAP = 11
BNB_CAP = 16
CAP_ENV = "SPROUTLAB_CAP"


def order_cap(cap=None) -> int:
    """Explicit cap, else ``$SPROUTLAB_CAP``, else :data:`DEFAULT_CAP`."""
    if cap is not None:
        return int(cap)
    env = os.environ.get(CAP_ENV)
    if env:
        return int(env)
    return DEFAULT_CAP


def check_order(order, cap=None, force=False, what="exhaustive search"):
    limit = order_cap(cap)
    if order > limit and not force:
        raise SizeLimitError(order, limit, what)


def parallel_map(func, items, jobs=1):
    """``list(map(func, items))``, spread over ``jobs`` processes when jobs > 1.

    Result order always follows ``items``, so output never depends on jobs.
    """
    items = list(items)
    if jobs is None or jobs <= 1 or len(items) <= 1:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items, chunksize=max(1, len(items) // (4 * jobs))))
