"""Embedding providers, cosine similarity, and the JSONL vector cache.

This is the seam between the pipeline and whatever produces vectors.
Two providers ship here: a deterministic feature-hashing backend (good
for tests and as a fallback) and a file-backed cache of vectors produced
by the external exporter tool.  The pipeline itself never loads a neural
model.

Cache file format (shared with the exporter): UTF-8, one JSON object per
line with fields exactly ``text``, ``lang``, ``dim``, ``vec``.  Vector
components are stored at 32-bit float precision and serialized as the
shortest decimal that round-trips, so save -> load is exact.  The
companion manifest format is one JSON object per line with fields
``text`` and ``lang``.
"""

from __future__ import annotations

import json
from typing import Iterator, Protocol

import numpy as np

from mixlang import kernels
from mixlang.errors import (
    BadConfigError,
    CacheMissError,
    DimMismatchError,
    ParseError,
)


class EmbeddingProvider(Protocol):
    """Deterministic source of fixed-dimension vectors keyed by (text, lang)."""

    name: str
    dim: int

    def embed(self, text: str, lang: str) -> np.ndarray: ...


def hash_embed(text: str, dim: int, seed: int = 0) -> np.ndarray:
    """Feature-hashing embedding: signed FNV-1a buckets over padded trigrams.

    Unit L2 norm for non-empty text; empty text yields the zero vector.
    Deterministic in (text, dim, seed) and bit-reproducible across the
    compiled and pure kernel backends.
    """
    if dim < 2:
        raise BadConfigError(f"embedding dim must be >= 2, got {dim}")
    return kernels.hash_embed(text, int(dim), int(seed))


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    """Cosine similarity, clamped to [-1, 1] against rounding."""
    return kernels.cosine(_as_f64(u), _as_f64(v))


def _as_f64(vec) -> np.ndarray:
    return np.ascontiguousarray(vec, dtype=np.float64)


class HashingProvider:
    """Provider wrapper around ``hash_embed``; ignores the language key."""

    def __init__(self, dim: int, seed: int = 0):
        if dim < 2:
            raise BadConfigError(f"embedding dim must be >= 2, got {dim}")
        self.name = f"hash(dim={dim},seed={seed})"
        self.dim = int(dim)
        self.seed = int(seed)

    def embed(self, text: str, lang: str) -> np.ndarray:
        return kernels.hash_embed(text, self.dim, self.seed)


class EmbeddingCache:
    """In-memory mapping from (text, lang) to a vector, all sharing one dim.

    Components are quantized to float32 on insert, matching the file
    serialization, so what you get back after save -> load is exactly
    what ``get`` returned before.
    """

    def __init__(self, dim: int):
        if dim < 1:
            raise BadConfigError(f"cache dim must be >= 1, got {dim}")
        self.dim = int(dim)
        self._entries: dict[tuple[str, str], np.ndarray] = {}

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key: tuple[str, str]) -> bool:
        return key in self._entries

    def items(self) -> Iterator[tuple[tuple[str, str], np.ndarray]]:
        return iter(self._entries.items())

    def put(self, text: str, lang: str, vec) -> None:
        arr = np.asarray(vec, dtype=np.float64)
        if arr.ndim != 1 or arr.shape[0] != self.dim:
            raise DimMismatchError(f"expected dim {self.dim}, got shape {arr.shape}")
        quantized = arr.astype(np.float32).astype(np.float64)
        if not np.all(np.isfinite(quantized)):
            raise ValueError("vector has non-finite components at float32 precision")
        self._entries[(text, lang)] = quantized

    def get(self, text: str, lang: str) -> np.ndarray | None:
        """The cached vector, or None — a miss is a signal, not an error."""
        return self._entries.get((text, lang))


def load_cache(path) -> EmbeddingCache:
    """Read a cache file; duplicate (text, lang) keys keep the last record."""
    cache: EmbeddingCache | None = None
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(path, lineno, f"invalid JSON: {exc.msg}") from exc
            if not isinstance(record, dict):
                raise ParseError(path, lineno, "record is not a JSON object")
            missing = {"text", "lang", "dim", "vec"} - set(record)
            if missing:
                raise ParseError(path, lineno, f"missing fields {sorted(missing)}")
            text, lang, dim, vec = record["text"], record["lang"], record["dim"], record["vec"]
            if not isinstance(text, str) or not isinstance(lang, str):
                raise ParseError(path, lineno, "text and lang must be strings")
            if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
                raise ParseError(path, lineno, "dim must be a positive integer")
            if not isinstance(vec, list) or len(vec) != dim:
                raise ParseError(path, lineno, f"vec must be a list of {dim} numbers")
            if not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in vec):
                raise ParseError(path, lineno, "vec has a non-numeric entry")
            if cache is None:
                cache = EmbeddingCache(dim)
            elif dim != cache.dim:
                raise DimMismatchError(
                    f"{path}:{lineno}: record dim {dim} disagrees with {cache.dim}"
                )
            try:
                cache.put(text, lang, np.asarray(vec, dtype=np.float64))
            except ValueError as exc:
                raise ParseError(path, lineno, str(exc)) from exc
    if cache is None:
        raise ParseError(path, 0, "cache file has no records")
    return cache


def save_cache(cache: EmbeddingCache, path) -> None:
    """Write the cache in the JSONL format ``load_cache`` reads."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for (text, lang), vec in cache.items():
            fh.write(format_cache_record(text, lang, vec) + "\n")


def format_cache_record(text: str, lang: str, vec) -> str:
    """One cache line; components pass through float32 for a stable,
    shortest-decimal serialization."""
    components = [float(np.float32(x)) for x in np.asarray(vec, dtype=np.float64)]
    record = {"text": text, "lang": lang, "dim": len(components), "vec": components}
    return json.dumps(record, ensure_ascii=False, separators=(",", ":"))


def format_manifest_record(text: str, lang: str) -> str:
    """One manifest line: the (text, lang) pair an embedding is needed for."""
    return json.dumps({"text": text, "lang": lang}, ensure_ascii=False, separators=(",", ":"))


def load_manifest(path) -> list[tuple[str, str]]:
    """Read a manifest file into (text, lang) pairs, in file order."""
    entries: list[tuple[str, str]] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(path, lineno, f"invalid JSON: {exc.msg}") from exc
            if (
                not isinstance(record, dict)
                or not isinstance(record.get("text"), str)
                or not isinstance(record.get("lang"), str)
            ):
                raise ParseError(path, lineno, "expected fields text and lang")
            entries.append((record["text"], record["lang"]))
    return entries


class CacheProvider:
    """Provider backed by an ``EmbeddingCache`` with an optional fallback.

    A miss delegates to the fallback when present, otherwise raises
    ``CacheMissError``.
    """

    def __init__(self, cache: EmbeddingCache, fallback: EmbeddingProvider | None = None):
        if fallback is not None and fallback.dim != cache.dim:
            raise DimMismatchError(
                f"fallback dim {fallback.dim} disagrees with cache dim {cache.dim}"
            )
        self.name = f"cache({len(cache)} entries)" + (f"+{fallback.name}" if fallback else "")
        self.dim = cache.dim
        self.cache = cache
        self.fallback = fallback

    def embed(self, text: str, lang: str) -> np.ndarray:
        vec = self.cache.get(text, lang)
        if vec is not None:
            return vec
        if self.fallback is not None:
            return self.fallback.embed(text, lang)
        raise CacheMissError(text, lang)
