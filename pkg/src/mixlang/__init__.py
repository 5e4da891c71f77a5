"""mixlang: code-switch detection and lexicon-based sentiment polarity.

Pipeline: normalize -> tokenize -> per-token language id (character
n-gram Naive Bayes) -> maximal monolingual segments -> per-segment
cosine similarity against per-language positive/negative lexicon
embeddings -> summed totals -> polarity label.  An evaluation module
computes accuracy and macro precision/recall/F1 from binary confusion
matrices.
"""

__version__ = "0.1.0"

from mixlang.embeddings import (
    CacheProvider,
    EmbeddingCache,
    HashingProvider,
    cosine,
    hash_embed,
    load_cache,
    save_cache,
)
from mixlang.evaluation import (
    ConfusionMatrix,
    EvalReport,
    LabeledExample,
    compare_reports,
    evaluate_run,
    metrics_from_matrix,
)
from mixlang.langid import NgramLanguageModel, TokenLabel, switch_points
from mixlang.lexicon import EmbeddedLexicon, SentimentLexicon, embed_lexicon, load_lexicon
from mixlang.scorer import NEGATIVE, POSITIVE, PolarityScore, classify_text, set_similarity
from mixlang.segmenter import Segment, segment
from mixlang.textprep import RawText, normalize, tokenize

__all__ = [
    "__version__",
    "CacheProvider",
    "EmbeddingCache",
    "HashingProvider",
    "cosine",
    "hash_embed",
    "load_cache",
    "save_cache",
    "ConfusionMatrix",
    "EvalReport",
    "LabeledExample",
    "compare_reports",
    "evaluate_run",
    "metrics_from_matrix",
    "NgramLanguageModel",
    "TokenLabel",
    "switch_points",
    "EmbeddedLexicon",
    "SentimentLexicon",
    "embed_lexicon",
    "load_lexicon",
    "NEGATIVE",
    "POSITIVE",
    "PolarityScore",
    "classify_text",
    "set_similarity",
    "Segment",
    "segment",
    "RawText",
    "normalize",
    "tokenize",
]
