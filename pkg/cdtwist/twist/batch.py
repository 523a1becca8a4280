"""
Vectorised basis products with numpy.

Runs the same level-by-level sign walk as cdtwist.twist.core, but over whole
arrays of index pairs at once, one pass per level.
"""
import logging
import time
from functools import lru_cache
from typing import Tuple

import numpy as np
from pydantic import BaseModel
from tqdm import tqdm

from cdtwist.errors import InvalidParameterError, LevelMismatchError
from cdtwist.twist.core import MAX_LEVEL

logger = logging.getLogger(__name__)

MEMO_MAX_LEVEL = 8


class BenchReport(BaseModel):
    t: int
    n: int
    seed: int
    seconds: float
    products_per_second: float
    checksum: int


def basis_products_batch(
        t: int,
        p: np.ndarray,
        q: np.ndarray
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Multiply many basis vector pairs of the level-t tower at once

    Args:
        t: Tower level (at most 62)
        p: Left indices
        q: Right indices, same shape as p

    Returns:
        Tuple containing:
            - signs: int8 array of +1/-1
            - masks: g-monomial bitmasks (p AND q)
            - indices: result indices (p XOR q)
    """
    if t < 0 or t > MAX_LEVEL:
        raise InvalidParameterError(f"Level must be in [0, {MAX_LEVEL}], got {t}")
    p = np.asarray(p, dtype=np.int64)
    q = np.asarray(q, dtype=np.int64)
    if p.shape != q.shape:
        raise LevelMismatchError(f"Index arrays differ in shape: {p.shape} vs {q.shape}")
    limit = 1 << t
    if p.size and (p.min() < 0 or q.min() < 0 or p.max() >= limit or q.max() >= limit):
        raise LevelMismatchError(f"Indices out of range [0, {limit}) for level {t}")

    masks = p & q
    indices = p ^ q
    signs = np.ones(p.shape, dtype=np.int8)
    cur_p = p.copy()
    cur_q = q.copy()

    for m in range(t, 0, -1):
        active = (cur_p != 0) & (cur_q != 0)
        if not active.any():
            break
        h = np.int64(1 << (m - 1))
        low = np.int64((1 << (m - 1)) - 1)
        p_high = (cur_p & h) != 0
        q_high = (cur_q & h) != 0
        r = cur_p & low
        s = cur_q & low

        both = active & p_high & q_high
        only_q = active & ~p_high & q_high
        only_p = active & p_high & ~q_high

        flip = (
            (both & (s != 0) & ((r == 0) | (r == s)))
            | (only_q & (s != 0) & (s != cur_p))
            | only_p
        )
        signs = np.where(flip, -signs, signs).astype(np.int8)
        cur_q = np.where(both | only_q, s, cur_q)
        cur_p = np.where(both | only_p, r, cur_p)

    return signs, masks, indices


@lru_cache(maxsize=MEMO_MAX_LEVEL + 1)
def sign_table(t: int) -> np.ndarray:
    """
    Memoized 2^t x 2^t table of theta_t, for exhaustive checks at small t

    Args:
        t: Tower level, at most MEMO_MAX_LEVEL

    Returns:
        Read-only int8 array with table[p, q] = theta_t(p, q)
    """
    if t > MEMO_MAX_LEVEL:
        raise InvalidParameterError(f"Sign tables are only memoized up to level {MEMO_MAX_LEVEL}")
    n = 1 << t
    p, q = np.meshgrid(np.arange(n, dtype=np.int64), np.arange(n, dtype=np.int64), indexing="ij")
    signs, _, _ = basis_products_batch(t, p, q)
    signs.setflags(write=False)
    logger.debug(f"Built memoized sign table for level {t}")
    return signs


def random_pairs(t: int, n: int, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    """Uniform random index pairs for the level-t tower"""
    high = 1 << t
    p = rng.integers(0, high, size=n, dtype=np.int64)
    q = rng.integers(0, high, size=n, dtype=np.int64)
    return p, q


def run_bench(
        t: int,
        n: int,
        seed: int = 0,
        chunk_size: int = 1 << 18,
        progress: bool = False
) -> BenchReport:
    """
    Time n random basis products through the vectorised path

    Args:
        t: Tower level
        n: Number of products
        seed: Seed for the index generator
        chunk_size: Products per numpy batch
        progress: Show a progress bar on stderr

    Returns:
        BenchReport with the timing and a checksum of the results
    """
    if n < 0:
        raise InvalidParameterError(f"Product count must be non-negative, got {n}")
    rng = np.random.default_rng(seed)
    logger.info(f"Benchmarking {n} basis products at level {t}")

    checksum = 0
    elapsed = 0.0
    chunks = range(0, n, chunk_size)
    for start in tqdm(chunks, desc=f"bench t={t}", disable=not progress):
        size = min(chunk_size, n - start)
        p, q = random_pairs(t, size, rng)
        began = time.perf_counter()
        signs, masks, indices = basis_products_batch(t, p, q)
        elapsed += time.perf_counter() - began
        checksum = (checksum + int(signs.sum()) + int(indices.sum() % 1000003)) % 1000003

    rate = n / elapsed if elapsed > 0 else float("inf")
    logger.info(f"Level {t}: {n} products in {elapsed:.3f}s ({rate:.0f}/s)")
    return BenchReport(
        t=t,
        n=n,
        seed=seed,
        seconds=elapsed,
        products_per_second=rate,
        checksum=checksum
    )
