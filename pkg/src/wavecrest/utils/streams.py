"""
Seeded random streams
Reproducible block-parallel sampling on counter-based generators
"""

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Tuple

import numpy as np

GENERATOR_NAME = 'numpy Philox + ziggurat normals'

# Elements (rows x width) drawn per block. The block layout depends only on
# the request, never on the worker count.
BLOCK_ELEMENTS = 1 << 20


def resolve_threads(threads: Optional[int]) -> int:
    """Worker count; None or 0 means machine parallelism"""
    if not threads:
        return os.cpu_count() or 1
    return max(1, int(threads))


def block_layout(count: int, width: int = 1) -> List[Tuple[int, int]]:
    """
    Split count rows into (start, size) blocks of about BLOCK_ELEMENTS elements

    Example:
        >>> block_layout(10, width=1 << 19)
        [(0, 2), (2, 2), (4, 2), (6, 2), (8, 2)]
    """
    rows = max(1, BLOCK_ELEMENTS // max(1, width))
    return [(start, min(rows, count - start)) for start in range(0, count, rows)]


def generators(seed: int, n_streams: int) -> List[np.random.Generator]:
    """One independent Philox generator per stream index, spawned from seed"""
    children = np.random.SeedSequence(seed).spawn(n_streams)
    return [np.random.Generator(np.random.Philox(child)) for child in children]


def sample_blocks(
    seed: int,
    count: int,
    width: int,
    draw: Callable[[np.random.Generator, int], np.ndarray],
    threads: Optional[int] = 1
) -> np.ndarray:
    """
    Draw count rows block by block and concatenate them in block order

    Args:
        seed: Root seed
        count: Total number of rows
        width: Random numbers consumed per row (sets the block size)
        draw: draw(rng, rows) returns an array whose first axis has length rows
        threads: Worker threads (results do not depend on it)

    Returns:
        Concatenated draws
    """
    layout = block_layout(count, width)
    rngs = generators(seed, len(layout))
    workers = min(resolve_threads(threads), len(layout))
    logging.debug(f"Sampling {count} rows in {len(layout)} blocks on {workers} threads")

    def run(index: int) -> np.ndarray:
        return draw(rngs[index], layout[index][1])

    if workers <= 1:
        parts = [run(i) for i in range(len(layout))]
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            parts = list(executor.map(run, range(len(layout))))
    return np.concatenate(parts, axis=0)
