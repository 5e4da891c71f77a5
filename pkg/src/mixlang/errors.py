"""Exception types shared across the pipeline.

Everything raised on purpose derives from :class:`MixlangError`.
:class:`BadConfigError` marks usage/configuration mistakes (CLI exit code 2);
every other subclass is a runtime/data error (CLI exit code 1).
"""

from __future__ import annotations


class MixlangError(Exception):
    """Base class for all pipeline errors."""


class BadConfigError(MixlangError):
    """Invalid parameter or configuration value (usage error, exit code 2)."""


class EmptyCorpusError(MixlangError):
    """A declared language has no training tokens."""

    def __init__(self, language: str):
        super().__init__(f"no training tokens for language {language!r}")
        self.language = language


class EmptyTokenError(MixlangError):
    """A classifier query token was empty."""


class LengthMismatchError(MixlangError):
    """Token and label sequences have different lengths."""


class DimMismatchError(MixlangError):
    """Vectors (or vector sets) disagree on dimension."""


class ZeroVectorError(MixlangError):
    """Cosine similarity is undefined for a (near-)zero vector."""


class ParseError(MixlangError):
    """A data file line could not be parsed."""

    def __init__(self, path, line_number: int, reason: str):
        super().__init__(f"{path}:{line_number}: {reason}")
        self.path = path
        self.line_number = line_number
        self.reason = reason


class CacheMissError(MixlangError):
    """A (text, lang) key was absent from the embedding cache with no fallback."""

    def __init__(self, text: str, lang: str, where: str | None = None):
        detail = f" while embedding {where}" if where else ""
        super().__init__(f"no cached vector for ({text!r}, {lang!r}){detail}")
        self.text = text
        self.lang = lang


class EmptyLexiconError(MixlangError):
    """A sentiment word list (or vector set) is empty."""

    def __init__(self, side: str):
        super().__init__(f"empty {side} lexicon")
        self.side = side


class MissingLexiconError(MixlangError):
    """A segment's language has no embedded lexicon."""

    def __init__(self, language: str):
        super().__init__(f"no sentiment lexicon for language {language!r}")
        self.language = language


class IdMismatchError(MixlangError):
    """Prediction ids are not a permutation of gold ids."""

    def __init__(self, missing: list[str], extra: list[str]):
        parts = []
        if missing:
            parts.append(f"missing from predictions: {sorted(missing)}")
        if extra:
            parts.append(f"extra in predictions: {sorted(extra)}")
        super().__init__("; ".join(parts) or "id mismatch")
        self.missing = missing
        self.extra = extra


class EmptyMatrixError(MixlangError):
    """A confusion matrix with zero total has no defined metrics."""
