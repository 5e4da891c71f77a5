"""Social-media text normalization and whitespace tokenization.

``normalize`` lowercases and strips URLs, emails, mentions, hashtags,
emoji, digit runs, and punctuation — in that order, because the URL and
email patterns contain punctuation and must be matched before the
punctuation pass turns it into spaces.  Removed spans become a single
space so adjacent words never fuse; a final pass collapses whitespace.

The output ("clean text") contains only lowercase words separated by
single spaces, with no leading or trailing whitespace.  Non-ASCII letters
(ñ, á, ...) survive, so Spanish text comes through intact.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass

# Tokens at this stage are non-space runs of the raw text; the lookarounds
# anchor each pattern to whole runs.
URL_RE = re.compile(r"(?<!\S)(?:https?://|www\.)\S*")
EMAIL_RE = re.compile(r"(?<!\S)[^\s@]+@[^\s@]*\.[^\s@]*(?!\S)")
MENTION_RE = re.compile(r"(?<!\S)@\S*")
HASHTAG_RE = re.compile(r"(?<!\S)#\S*")
DIGIT_RE = re.compile(r"\d+")
EMOJI_RE = re.compile("[\U0001F300-\U0001FAFF☀-➿️‍]")

# The 32 ASCII punctuation characters plus inverted marks, curly quotes,
# and em/en dashes.
PUNCTUATION = string.punctuation + "¿¡“”‘’—–"
_PUNCT_TABLE = {ord(c): " " for c in PUNCTUATION}


@dataclass(frozen=True)
class RawText:
    """One input record: an opaque id plus the text as read from source."""

    id: str
    content: str


def normalize(text: str) -> str:
    """Normalize raw text to clean, lowercase, single-spaced words.

    Idempotent: normalizing an already-clean string returns it unchanged.
    Degenerate inputs (all noise) yield the empty string.
    """
    text = text.lower()
    text = URL_RE.sub(" ", text)
    text = EMAIL_RE.sub(" ", text)
    text = MENTION_RE.sub(" ", text)
    text = HASHTAG_RE.sub(" ", text)
    text = EMOJI_RE.sub(" ", text)
    text = DIGIT_RE.sub(" ", text)
    text = text.translate(_PUNCT_TABLE)
    return " ".join(text.split())


def tokenize(clean: str) -> list[str]:
    """Split clean text on spaces; joining the result with spaces round-trips."""
    return clean.split()
