"""Vectorized brute force over every k-vector for a fixed (ell, r).

Used for exhaustive sweeps where a Python loop per spec is too slow (F_9 with
ell = 8 has 8^8 canonical specs). The oracle side builds actual image tables
from the field's exp/log tables; the criterion side evaluates the coprimality
and coset-permutation test on the same k-grid.
"""

from __future__ import annotations

from math import gcd
from typing import Iterator, Sequence

import numpy as np

from .cyclo import check_ell
from .gf_core import FieldCtx


def k_blocks(n: int, ell: int, chunk: int = 1 << 18) -> Iterator[np.ndarray]:
    """All of [0, n)^ell in lex order, as int64 arrays of at most ``chunk`` rows."""
    total = n**ell
    weights = np.array([n ** (ell - 1 - i) for i in range(ell)], dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield (idx[:, None] // weights[None, :]) % n


def image_tables(ctx: FieldCtx, ell: int, r: Sequence[int], K: np.ndarray) -> np.ndarray:
    """Row t holds the images of the nonzero elements 1..q-1 under spec (ell, r, K[t])."""
    check_ell(ctx.q, ell)
    n = ctx.order
    exp = np.asarray(ctx.exp_table, dtype=np.int64)
    logs = np.asarray(ctx.log_table[1:], dtype=np.int64)
    cos = logs % ell
    shift = (logs * np.asarray(r, dtype=np.int64)[cos]) % n
    return exp[(K[:, cos] + shift[None, :]) % n]


def tables_bijective(tables: np.ndarray) -> np.ndarray:
    """Per row: do the q-1 nonzero-point images hit q-1 distinct values?"""
    srt = np.sort(tables, axis=1)
    return np.all(srt[:, 1:] != srt[:, :-1], axis=1)


def criterion(q: int, ell: int, r: Sequence[int], K: np.ndarray) -> np.ndarray:
    s = check_ell(q, ell)
    if any(gcd(ri, s) != 1 for ri in r):
        return np.zeros(len(K), dtype=bool)
    offs = np.arange(ell, dtype=np.int64) * np.asarray(r, dtype=np.int64)
    phi = (K + offs[None, :]) % ell
    seen = np.bitwise_or.reduce(np.left_shift(np.int64(1), phi), axis=1)
    return seen == (1 << ell) - 1
