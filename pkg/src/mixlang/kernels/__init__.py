"""Hot numeric kernels with a compiled core and a pure-Python fallback.

The Cython extension (``mixlang.kernels._native``) is used when available;
otherwise the pure-Python twin takes over with identical results.  Set
``MIXLANG_KERNELS=pure`` to force the fallback (the benchmark and the
parity tests import both backends directly).
"""

from __future__ import annotations

import os

from mixlang.kernels import _pure

if os.environ.get("MIXLANG_KERNELS", "").strip().lower() == "pure":
    _impl = _pure
else:
    try:
        from mixlang.kernels import _native as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND: str = "pure" if _impl is _pure else "native"

fnv1a_64 = _impl.fnv1a_64
hash_embed = _impl.hash_embed
cosine = _impl.cosine
mean_cosine = _impl.mean_cosine
max_cosine = _impl.max_cosine

__all__ = [
    "BACKEND",
    "fnv1a_64",
    "hash_embed",
    "cosine",
    "mean_cosine",
    "max_cosine",
]
