"""Exporter error types."""

from __future__ import annotations


class ExporterError(Exception):
    """Base class for exporter failures."""


class UnknownModelError(ExporterError):
    """The requested model id has no registered encoder."""

    def __init__(self, model_id: str, known: tuple[str, ...]):
        super().__init__(f"unknown model {model_id!r}; supported: {', '.join(known)}")
        self.model_id = model_id


class ManifestError(ExporterError):
    """A manifest line could not be parsed."""

    def __init__(self, path, line_number: int, reason: str):
        super().__init__(f"{path}:{line_number}: {reason}")
        self.path = path
        self.line_number = line_number
