# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: FNV-1a trigram hashing and batched cosine similarity.

Must stay numerically identical to mixlang.kernels._pure: same accumulation
order, same clamping, same exceptions.  The parity tests compare outputs
bit for bit.
"""

import numpy as np

from libc.math cimport sqrt
from libc.stdint cimport uint8_t, uint64_t

from mixlang.errors import DimMismatchError, ZeroVectorError

cdef uint64_t FNV_OFFSET = 14695981039346656037ULL
cdef uint64_t FNV_PRIME = 1099511628211ULL

cdef double NORM_EPS = 1e-12


cdef uint64_t _fnv1a(const uint8_t* data, Py_ssize_t n) nogil:
    cdef uint64_t h = FNV_OFFSET
    cdef Py_ssize_t i
    for i in range(n):
        h ^= data[i]
        h *= FNV_PRIME
    return h


def fnv1a_64(data: bytes) -> int:
    """64-bit FNV-1a hash of a byte string."""
    cdef const uint8_t[:] view = data
    if view.shape[0] == 0:
        return FNV_OFFSET
    return _fnv1a(&view[0], view.shape[0])


def hash_embed(text: str, dim: int, seed: int) -> np.ndarray:
    """Signed feature-hashing embedding over padded character trigrams.

    Same contract as the pure backend: single "^"/"$" padding, FNV-1a-64
    XOR seed per trigram, sign from the top hash bit, bucket = hash % dim,
    L2 normalization.  Empty text yields the unnormalized zero vector.
    """
    cdef uint64_t s = <uint64_t> (seed & 0xFFFFFFFFFFFFFFFF)
    cdef int d = dim
    out = np.zeros(d, dtype=np.float64)
    cdef double[::1] vec = out

    padded = "^" + text + "$"
    cdef Py_ssize_t nchars = len(padded)
    cdef Py_ssize_t ngrams = nchars - 2
    if ngrams <= 0:
        return out

    data = padded.encode("utf-8")
    cdef const uint8_t[:] buf = data
    cdef Py_ssize_t nbytes = buf.shape[0]

    # Byte offset where each character starts (UTF-8 continuation bytes
    # carry the 10xxxxxx prefix), so trigrams hash exact byte ranges.
    offs = np.empty(nchars + 1, dtype=np.intp)
    cdef Py_ssize_t[::1] off = offs
    cdef Py_ssize_t i, ci = 0
    for i in range(nbytes):
        if (buf[i] & 0xC0) != 0x80:
            off[ci] = i
            ci += 1
    off[nchars] = nbytes

    cdef uint64_t h
    cdef Py_ssize_t b
    for i in range(ngrams):
        h = FNV_OFFSET
        for b in range(off[i], off[i + 3]):
            h ^= buf[b]
            h *= FNV_PRIME
        h ^= s
        if h >> 63 == 0:
            vec[<Py_ssize_t> (h % <uint64_t> d)] += 1.0
        else:
            vec[<Py_ssize_t> (h % <uint64_t> d)] -= 1.0

    cdef double sq = 0.0
    for i in range(d):
        sq += vec[i] * vec[i]
    cdef double norm = sqrt(sq)
    if norm > 0.0:
        for i in range(d):
            vec[i] /= norm
    return out


cdef double _row_cosine(const double[:] u, const double[:] row,
                        double u_norm, Py_ssize_t dim) except? -2.0:
    cdef double dot = 0.0
    cdef double sq = 0.0
    cdef Py_ssize_t i
    for i in range(dim):
        dot += u[i] * row[i]
        sq += row[i] * row[i]
    cdef double r_norm = sqrt(sq)
    if r_norm < NORM_EPS:
        raise ZeroVectorError("cosine undefined for zero vector")
    cdef double c = dot / (u_norm * r_norm)
    if c > 1.0:
        return 1.0
    if c < -1.0:
        return -1.0
    return c


cdef double _u_norm(const double[:] u, Py_ssize_t dim) except? -2.0:
    cdef double sq = 0.0
    cdef Py_ssize_t i
    for i in range(dim):
        sq += u[i] * u[i]
    cdef double norm = sqrt(sq)
    if norm < NORM_EPS:
        raise ZeroVectorError("cosine undefined for zero vector")
    return norm


def cosine(u, v) -> float:
    """Cosine similarity of two vectors, clamped to [-1, 1]."""
    cdef const double[:] uu = u
    cdef const double[:] vv = v
    if uu.shape[0] != vv.shape[0]:
        raise DimMismatchError(f"dim {uu.shape[0]} vs {vv.shape[0]}")
    return _row_cosine(uu, vv, _u_norm(uu, uu.shape[0]), uu.shape[0])


def mean_cosine(u, rows) -> float:
    """Mean of clamped cosine similarities between ``u`` and each row."""
    cdef const double[:] uu = u
    cdef const double[:, :] m = rows
    if m.shape[1] != uu.shape[0]:
        raise DimMismatchError(f"dim {uu.shape[0]} vs {m.shape[1]}")
    if m.shape[0] == 0:
        raise ZeroDivisionError("empty row set")
    cdef Py_ssize_t dim = uu.shape[0]
    cdef double u_norm = _u_norm(uu, dim)
    cdef double total = 0.0
    cdef Py_ssize_t r
    for r in range(m.shape[0]):
        total += _row_cosine(uu, m[r], u_norm, dim)
    return total / m.shape[0]


def max_cosine(u, rows) -> float:
    """Maximum of clamped cosine similarities between ``u`` and each row."""
    cdef const double[:] uu = u
    cdef const double[:, :] m = rows
    if m.shape[1] != uu.shape[0]:
        raise DimMismatchError(f"dim {uu.shape[0]} vs {m.shape[1]}")
    if m.shape[0] == 0:
        raise ZeroDivisionError("empty row set")
    cdef Py_ssize_t dim = uu.shape[0]
    cdef double u_norm = _u_norm(uu, dim)
    cdef double best = -1.0
    cdef double c
    cdef Py_ssize_t r
    for r in range(m.shape[0]):
        c = _row_cosine(uu, m[r], u_norm, dim)
        if c > best:
            best = c
    return best
