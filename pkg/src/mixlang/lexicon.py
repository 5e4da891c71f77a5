"""Per-language positive/negative sentiment word lists and their embeddings."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from mixlang.embeddings import EmbeddingProvider
from mixlang.errors import CacheMissError, EmptyLexiconError
from mixlang.textprep import normalize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SentimentLexicon:
    language: str
    positive: tuple[str, ...]
    negative: tuple[str, ...]


@dataclass(frozen=True)
class EmbeddedLexicon:
    """A lexicon plus its word vectors, row-aligned with the word lists."""

    lexicon: SentimentLexicon
    positive_vecs: np.ndarray  # (len(positive), dim)
    negative_vecs: np.ndarray  # (len(negative), dim)

    @property
    def language(self) -> str:
        return self.lexicon.language

    @property
    def dim(self) -> int:
        return self.positive_vecs.shape[1]


def _read_wordlist(path, side: str) -> list[str]:
    """One word per line, lowercased, first occurrence kept; blank lines and
    '#'-comments skipped.  Words that normalization would alter are dropped
    with a warning rather than silently rewritten — lexicon files are curated
    inputs and must stay in sync with any exporter-produced cache."""
    words: list[str] = []
    seen: set[str] = set()
    rejected: list[str] = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            word = raw.strip().lower()
            if not word or word.startswith("#"):
                continue
            if normalize(word) != word:
                rejected.append(word)
                continue
            if word not in seen:
                seen.add(word)
                words.append(word)
    if rejected:
        logger.warning(
            "%s: dropped %d %s word(s) that do not survive normalization: %s",
            path,
            len(rejected),
            side,
            ", ".join(repr(w) for w in rejected),
        )
    return words


def load_lexicon(positive_path, negative_path, language: str) -> SentimentLexicon:
    """Load the two word-list files for one language."""
    positive = _read_wordlist(positive_path, "positive")
    negative = _read_wordlist(negative_path, "negative")
    if not positive:
        raise EmptyLexiconError("positive")
    if not negative:
        raise EmptyLexiconError("negative")
    return SentimentLexicon(language, tuple(positive), tuple(negative))


def embed_lexicon(provider: EmbeddingProvider, lexicon: SentimentLexicon) -> EmbeddedLexicon:
    """Embed every lexicon word with the provider, keeping row alignment."""

    def rows(words: tuple[str, ...], side: str) -> np.ndarray:
        out = np.empty((len(words), provider.dim), dtype=np.float64)
        for i, word in enumerate(words):
            try:
                out[i] = provider.embed(word, lexicon.language)
            except CacheMissError as exc:
                raise CacheMissError(word, lexicon.language, where=f"{side} lexicon") from exc
        return out

    return EmbeddedLexicon(
        lexicon=lexicon,
        positive_vecs=rows(lexicon.positive, "positive"),
        negative_vecs=rows(lexicon.negative, "negative"),
    )
