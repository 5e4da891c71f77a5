"""The export run: manifest in, deduplicated vector cache out."""

from __future__ import annotations

import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from mixlang_exporter.encoders import Encoder, load_encoder
from mixlang_exporter.formats import cache_line, read_manifest

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExportJob:
    manifest_path: Path
    output_path: Path
    model_id: str
    batch_size: int = 32

    def __post_init__(self):
        if self.batch_size < 1:
            raise ValueError(f"batch size must be >= 1, got {self.batch_size}")


@dataclass(frozen=True)
class ExportSummary:
    records_written: int
    dim: int


def run_export(job: ExportJob, encoder: Encoder | None = None) -> ExportSummary:
    """Embed every distinct manifest (text, lang) pair into the cache file.

    Duplicate manifest entries collapse to one record; each distinct text
    is encoded once even when it appears under several languages.  The
    output is written to a temp file and renamed into place, so a failed
    run leaves no partial cache behind.
    """
    entries = read_manifest(job.manifest_path)
    unique: list[tuple[str, str]] = []
    seen: set[tuple[str, str]] = set()
    for key in entries:
        if key not in seen:
            seen.add(key)
            unique.append(key)

    # Resolve the encoder before touching the output path: an unknown or
    # unloadable model must not leave a file behind.
    if encoder is None:
        encoder = load_encoder(job.model_id)

    texts = list(dict.fromkeys(text for text, _ in unique))
    vectors = {}
    for start in range(0, len(texts), job.batch_size):
        batch = texts[start : start + job.batch_size]
        encoded = encoder.encode(batch)
        for text, vec in zip(batch, encoded):
            vectors[text] = vec

    out_dir = Path(job.output_path).parent
    fd, tmp_name = tempfile.mkstemp(prefix=".export-", suffix=".jsonl", dir=out_dir or ".")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            for text, lang in unique:
                fh.write(cache_line(text, lang, vectors[text]) + "\n")
        os.replace(tmp_name, job.output_path)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise

    logger.info(
        "exported %d records (dim %d, model %s) -> %s",
        len(unique), encoder.dim, job.model_id, job.output_path,
    )
    return ExportSummary(records_written=len(unique), dim=int(encoder.dim))
