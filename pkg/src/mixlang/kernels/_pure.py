"""Pure-Python kernels, used when the compiled extension is unavailable.

Mirrors ``mixlang.kernels._native`` exactly: both accumulate in IEEE-754
doubles in the same order, so outputs are bit-identical across backends
(the parity tests assert this).
"""

from __future__ import annotations

import math

import numpy as np

from mixlang.errors import DimMismatchError, ZeroVectorError

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_U64 = (1 << 64) - 1

_NORM_EPS = 1e-12


def fnv1a_64(data: bytes) -> int:
    """64-bit FNV-1a hash of a byte string."""
    h = _FNV_OFFSET
    for byte in data:
        h = ((h ^ byte) * _FNV_PRIME) & _U64
    return h


def hash_embed(text: str, dim: int, seed: int) -> np.ndarray:
    """Signed feature-hashing embedding over padded character trigrams.

    The text is wrapped in single "^"/"$" markers, each trigram is hashed
    with FNV-1a-64 (XORed with the seed), and +/-1 (sign = top hash bit)
    is added to bucket ``hash % dim``.  The result is L2-normalized.
    Empty text has no trigrams and yields the zero vector, unnormalized.
    """
    vec = np.zeros(dim, dtype=np.float64)
    padded = "^" + text + "$"
    seed &= _U64
    for i in range(len(padded) - 2):
        h = fnv1a_64(padded[i : i + 3].encode("utf-8")) ^ seed
        if h >> 63 == 0:
            vec[h % dim] += 1.0
        else:
            vec[h % dim] -= 1.0
    sq = 0.0
    for i in range(dim):
        sq += vec[i] * vec[i]
    norm = math.sqrt(sq)
    if norm > 0.0:
        for i in range(dim):
            vec[i] /= norm
    return vec


def _row_cosine(u, row, u_norm: float, dim: int) -> float:
    dot = 0.0
    sq = 0.0
    for i in range(dim):
        dot += u[i] * row[i]
        sq += row[i] * row[i]
    r_norm = math.sqrt(sq)
    if r_norm < _NORM_EPS:
        raise ZeroVectorError("cosine undefined for zero vector")
    c = dot / (u_norm * r_norm)
    if c > 1.0:
        return 1.0
    if c < -1.0:
        return -1.0
    return c


def _u_norm(u, dim: int) -> float:
    sq = 0.0
    for i in range(dim):
        sq += u[i] * u[i]
    norm = math.sqrt(sq)
    if norm < _NORM_EPS:
        raise ZeroVectorError("cosine undefined for zero vector")
    return norm


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    """Cosine similarity of two vectors, clamped to [-1, 1]."""
    if u.shape[0] != v.shape[0]:
        raise DimMismatchError(f"dim {u.shape[0]} vs {v.shape[0]}")
    dim = u.shape[0]
    return _row_cosine(u, v, _u_norm(u, dim), dim)


def mean_cosine(u: np.ndarray, rows: np.ndarray) -> float:
    """Mean of clamped cosine similarities between ``u`` and each row."""
    if rows.shape[1] != u.shape[0]:
        raise DimMismatchError(f"dim {u.shape[0]} vs {rows.shape[1]}")
    if rows.shape[0] == 0:
        raise ZeroDivisionError("empty row set")
    dim = u.shape[0]
    u_norm = _u_norm(u, dim)
    total = 0.0
    for r in range(rows.shape[0]):
        total += _row_cosine(u, rows[r], u_norm, dim)
    return total / rows.shape[0]


def max_cosine(u: np.ndarray, rows: np.ndarray) -> float:
    """Maximum of clamped cosine similarities between ``u`` and each row."""
    if rows.shape[1] != u.shape[0]:
        raise DimMismatchError(f"dim {u.shape[0]} vs {rows.shape[1]}")
    if rows.shape[0] == 0:
        raise ZeroDivisionError("empty row set")
    dim = u.shape[0]
    u_norm = _u_norm(u, dim)
    best = -1.0
    for r in range(rows.shape[0]):
        c = _row_cosine(u, rows[r], u_norm, dim)
        if c > best:
            best = c
    return best
