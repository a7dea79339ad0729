"""
Order-independent summation of large float arrays.

The array is cut into chunks of a fixed length, each chunk is reduced with
numpy's pairwise summation and the chunk partials are combined with
``math.fsum``. Chunk boundaries never depend on the worker count, so the
result is bit-identical whether one thread or eight do the work.
"""
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional

import numpy as np

from onticlab.sdk.common.config.configManager import config

DEFAULT_CHUNK_SIZE = 65536


def _chunk_size() -> int:
    size = config().get("numerics", {}).get("chunk_size", DEFAULT_CHUNK_SIZE)
    return max(int(size), 1)


def chunk_bounds(length: int, chunk_size: Optional[int] = None) -> List[tuple]:
    size = chunk_size or _chunk_size()
    return [(start, min(start + size, length)) for start in range(0, length, size)]


def deterministic_sum(values: np.ndarray, workers: int = 1, chunk_size: Optional[int] = None) -> float:
    """
    Sum a 1-D float array reproducibly.

    :param values: Array to reduce
    :param workers: Threads used for the chunk reductions
    :param chunk_size: Override for the configured chunk length
    :return: The sum as a Python float
    """
    return chunked_reduce(lambda lo, hi: float(np.sum(values[lo:hi])),
                          len(values), workers=workers, chunk_size=chunk_size)


def chunked_reduce(partial: Callable[[int, int], float], length: int, workers: int = 1,
                   chunk_size: Optional[int] = None) -> float:
    """
    Evaluate ``partial(lo, hi)`` over fixed chunks and fsum the partials.

    ``partial`` must depend only on its slice, which holds for the
    elementwise products used in quadrature.
    """
    bounds = chunk_bounds(length, chunk_size)
    if not bounds:
        return 0.0

    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(lambda b: partial(*b), bounds))
    else:
        partials = [partial(lo, hi) for lo, hi in bounds]

    return math.fsum(partials)
