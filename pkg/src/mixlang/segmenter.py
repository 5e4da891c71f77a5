"""Grouping of consecutive same-language tokens into maximal segments."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from mixlang.errors import LengthMismatchError
from mixlang.langid import TokenLabel


@dataclass(frozen=True)
class Segment:
    """A maximal run of same-language tokens.

    ``start``/``end`` are token indices (end exclusive) into the original
    token list, so scores can be traced back to source positions.
    """

    language: str
    start: int
    end: int
    text: str


def segment(tokens: Sequence[str], labels: Sequence[TokenLabel]) -> list[Segment]:
    """Partition tokens into maximal same-language segments, in order.

    Adjacent segments always differ in language; empty input yields an
    empty list (the scorer handles that case downstream).
    """
    if len(tokens) != len(labels):
        raise LengthMismatchError(f"{len(tokens)} tokens vs {len(labels)} labels")
    segments: list[Segment] = []
    start = 0
    for i in range(1, len(tokens) + 1):
        if i == len(tokens) or labels[i].language != labels[start].language:
            segments.append(
                Segment(
                    language=labels[start].language,
                    start=start,
                    end=i,
                    text=" ".join(tokens[start:i]),
                )
            )
            start = i
    return segments
