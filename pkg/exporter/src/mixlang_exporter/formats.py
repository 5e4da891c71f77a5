"""The manifest/cache JSONL contracts, from the exporter's side.

Manifest: one JSON object per line, fields ``text`` and ``lang``.
Cache: one JSON object per line, fields exactly ``text``, ``lang``,
``dim``, ``vec``; components serialized at 32-bit float precision with
shortest round-trip decimals.  These formats are the only coupling to the
pipeline that consumes the cache.
"""

from __future__ import annotations

import json

import numpy as np

from mixlang_exporter.errors import ManifestError


def read_manifest(path) -> list[tuple[str, str]]:
    """(text, lang) pairs in file order; blank lines skipped."""
    entries: list[tuple[str, str]] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ManifestError(path, lineno, f"invalid JSON: {exc.msg}") from exc
            if (
                not isinstance(record, dict)
                or not isinstance(record.get("text"), str)
                or not isinstance(record.get("lang"), str)
            ):
                raise ManifestError(path, lineno, "expected fields text and lang")
            entries.append((record["text"], record["lang"]))
    return entries


def cache_line(text: str, lang: str, vec: np.ndarray) -> str:
    """One cache record, serialized."""
    components = [float(np.float32(x)) for x in np.asarray(vec).ravel()]
    record = {"text": text, "lang": lang, "dim": len(components), "vec": components}
    return json.dumps(record, ensure_ascii=False, separators=(",", ":"))
