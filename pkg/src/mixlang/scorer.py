"""Polarity scoring: segments vs language-matched lexicon embeddings.

Each monolingual segment is embedded as one string and compared against
its language's positive and negative word vectors; per-segment similarity
scores are summed across segments into the two totals that decide the
label.  Positive wins strictly greater totals; ties are Negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from mixlang import kernels
from mixlang.embeddings import EmbeddingProvider, _as_f64
from mixlang.errors import BadConfigError, EmptyLexiconError, MissingLexiconError
from mixlang.langid import NgramLanguageModel
from mixlang.lexicon import EmbeddedLexicon
from mixlang.segmenter import Segment, segment
from mixlang.textprep import RawText, normalize, tokenize

POSITIVE = "Positive"
NEGATIVE = "Negative"

AGGREGATIONS = ("mean", "max")


@dataclass(frozen=True)
class SegmentScore:
    segment: Segment
    positive: float
    negative: float


@dataclass(frozen=True)
class PolarityScore:
    pos_total: float
    neg_total: float
    label: str
    per_segment: tuple[SegmentScore, ...]


def set_similarity(seg_vec: np.ndarray, lex_vecs: np.ndarray, aggregation: str = "mean") -> float:
    """Similarity of one vector to a word-vector set.

    The contractual default is the mean of the pairwise cosines, which is
    invariant to lexicon size; "max" is available for experimentation.
    """
    lex_vecs = np.ascontiguousarray(lex_vecs, dtype=np.float64)
    if lex_vecs.ndim != 2 or lex_vecs.shape[0] == 0:
        raise EmptyLexiconError("similarity")
    if aggregation == "mean":
        return kernels.mean_cosine(_as_f64(seg_vec), lex_vecs)
    if aggregation == "max":
        return kernels.max_cosine(_as_f64(seg_vec), lex_vecs)
    raise BadConfigError(f"unknown aggregation {aggregation!r}, expected one of {AGGREGATIONS}")


def classify_text(
    raw: RawText,
    model: NgramLanguageModel,
    provider: EmbeddingProvider,
    lexicons: Mapping[str, EmbeddedLexicon],
    aggregation: str = "mean",
) -> PolarityScore:
    """Run the full pipeline on one input text.

    normalize -> tokenize -> label -> segment, then per segment the
    positive/negative set similarities against that segment's language
    lexicon.  Totals are fsum'd over segments (order-invariant).  A text
    with no tokens left after normalization scores 0/0 and is Negative.
    """
    tokens = tokenize(normalize(raw.content))
    if not tokens:
        return PolarityScore(0.0, 0.0, NEGATIVE, ())

    labels = model.label_tokens(tokens)
    segments = segment(tokens, labels)

    scored: list[SegmentScore] = []
    for seg in segments:
        lex = lexicons.get(seg.language)
        if lex is None:
            raise MissingLexiconError(seg.language)
        seg_vec = provider.embed(seg.text, seg.language)
        scored.append(
            SegmentScore(
                segment=seg,
                positive=set_similarity(seg_vec, lex.positive_vecs, aggregation),
                negative=set_similarity(seg_vec, lex.negative_vecs, aggregation),
            )
        )

    pos_total = math.fsum(s.positive for s in scored)
    neg_total = math.fsum(s.negative for s in scored)
    label = POSITIVE if pos_total > neg_total else NEGATIVE
    return PolarityScore(pos_total, neg_total, label, tuple(scored))


def score_record(raw: RawText, score: PolarityScore) -> dict:
    """The JSON-serializable classification record for one input."""
    return {
        "id": raw.id,
        "label": score.label,
        "pos": score.pos_total,
        "neg": score.neg_total,
        "segments": [
            {
                "lang": s.segment.language,
                "text": s.segment.text,
                "pos": s.positive,
                "neg": s.negative,
            }
            for s in score.per_segment
        ],
    }
