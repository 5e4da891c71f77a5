"""Batch embedding exporter for the mixlang pipeline.

Reads a manifest of (text, lang) pairs, embeds every distinct entry with
a pretrained multilingual sentence encoder, and writes the vector cache
the pipeline consumes.  The two packages share only the JSONL file
formats, nothing in-process.
"""

__version__ = "0.1.0"

from mixlang_exporter.encoders import ENCODER_FACTORIES, load_encoder
from mixlang_exporter.errors import ExporterError, ManifestError, UnknownModelError
from mixlang_exporter.export import ExportJob, ExportSummary, run_export

__all__ = [
    "__version__",
    "ENCODER_FACTORIES",
    "load_encoder",
    "ExporterError",
    "ManifestError",
    "UnknownModelError",
    "ExportJob",
    "ExportSummary",
    "run_export",
]
