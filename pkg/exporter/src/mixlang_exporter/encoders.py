"""Sentence-encoder registry.

An encoder exposes ``dim`` and ``encode(texts) -> (n, dim) array`` and
must be deterministic for a fixed model version (inference mode, no
sampling).  Encoders see text only; the manifest's language field is a
cache key carried through unchanged, never an encoder input.

The heavyweight model libraries are imported lazily so the exporter can
parse manifests and report usage errors without them installed.
"""

from __future__ import annotations

from typing import Callable, Protocol

import numpy as np

from mixlang_exporter.errors import ExporterError, UnknownModelError


class Encoder(Protocol):
    dim: int

    def encode(self, texts: list[str]) -> np.ndarray: ...


class _SentenceTransformerEncoder:
    """SBERT-style multilingual encoder (XLM-R backbone)."""

    MODEL_NAME = "paraphrase-xlm-r-multilingual-v1"

    def __init__(self):
        try:
            from sentence_transformers import SentenceTransformer
        except ImportError as exc:
            raise ExporterError(
                "sentence-transformers is not installed; "
                "install the exporter with the [xlmr] extra"
            ) from exc
        self._model = SentenceTransformer(self.MODEL_NAME)
        self.dim = int(self._model.get_sentence_embedding_dimension())

    def encode(self, texts: list[str]) -> np.ndarray:
        return np.asarray(
            self._model.encode(texts, convert_to_numpy=True, show_progress_bar=False)
        )


class _UniversalSentenceEncoder:
    """Multilingual Universal Sentence Encoder from TF-Hub."""

    MODULE_URL = "https://tfhub.dev/google/universal-sentence-encoder-multilingual/3"

    def __init__(self):
        try:
            import tensorflow_hub as hub
        except ImportError as exc:
            raise ExporterError(
                "tensorflow-hub is not installed; "
                "install the exporter with the [use] extra"
            ) from exc
        self._embed = hub.load(self.MODULE_URL)
        self.dim = int(np.asarray(self._embed([""])).shape[1])

    def encode(self, texts: list[str]) -> np.ndarray:
        return np.asarray(self._embed(texts))


ENCODER_FACTORIES: dict[str, Callable[[], Encoder]] = {
    "xlmr": _SentenceTransformerEncoder,
    "use": _UniversalSentenceEncoder,
}


def load_encoder(model_id: str) -> Encoder:
    factory = ENCODER_FACTORIES.get(model_id)
    if factory is None:
        raise UnknownModelError(model_id, tuple(sorted(ENCODER_FACTORIES)))
    return factory()
