"""Binary polarity evaluation: confusion matrix, accuracy, macro P/R/F1.

Matrix cells follow a rows-are-predictions, columns-are-gold layout:
``pp_tn`` counts predicted-Positive/gold-Negative, ``pn_tp`` counts
predicted-Negative/gold-Positive, and so on.  Undefined precision/recall/
F1 (zero denominator) is reported as 0, the usual toolkit convention, so
degenerate all-one-class runs still produce a report.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from mixlang.errors import EmptyMatrixError, IdMismatchError, ParseError
from mixlang.scorer import NEGATIVE, POSITIVE


@dataclass(frozen=True)
class LabeledExample:
    id: str
    text: str
    gold: str


@dataclass(frozen=True)
class ConfusionMatrix:
    pp_tp: int  # predicted Positive, gold Positive
    pp_tn: int  # predicted Positive, gold Negative
    pn_tp: int  # predicted Negative, gold Positive
    pn_tn: int  # predicted Negative, gold Negative

    def __post_init__(self):
        if min(self.pp_tp, self.pp_tn, self.pn_tp, self.pn_tn) < 0:
            raise ValueError("confusion matrix cells must be non-negative")

    @property
    def total(self) -> int:
        return self.pp_tp + self.pp_tn + self.pn_tp + self.pn_tn


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class EvalReport:
    matrix: ConfusionMatrix
    accuracy: float
    macro_f1: float
    macro_precision: float
    macro_recall: float
    per_class: Mapping[str, ClassMetrics]


@dataclass(frozen=True)
class ReportDelta:
    """Candidate-minus-baseline metric deltas, in percentage points."""

    accuracy_pp: float
    macro_f1_pp: float


def _ratio(num: float, den: float) -> float:
    return num / den if den > 0 else 0.0


def _f1(precision: float, recall: float) -> float:
    return _ratio(2 * precision * recall, precision + recall)


def metrics_from_matrix(matrix: ConfusionMatrix) -> EvalReport:
    """All report metrics from the four matrix cells."""
    if matrix.total == 0:
        raise EmptyMatrixError("confusion matrix has zero total")
    precision_p = _ratio(matrix.pp_tp, matrix.pp_tp + matrix.pp_tn)
    recall_p = _ratio(matrix.pp_tp, matrix.pp_tp + matrix.pn_tp)
    precision_n = _ratio(matrix.pn_tn, matrix.pn_tp + matrix.pn_tn)
    recall_n = _ratio(matrix.pn_tn, matrix.pp_tn + matrix.pn_tn)
    pos = ClassMetrics(precision_p, recall_p, _f1(precision_p, recall_p))
    neg = ClassMetrics(precision_n, recall_n, _f1(precision_n, recall_n))
    return EvalReport(
        matrix=matrix,
        accuracy=(matrix.pp_tp + matrix.pn_tn) / matrix.total,
        macro_f1=(pos.f1 + neg.f1) / 2,
        macro_precision=(pos.precision + neg.precision) / 2,
        macro_recall=(pos.recall + neg.recall) / 2,
        per_class={POSITIVE: pos, NEGATIVE: neg},
    )


def evaluate_run(
    predictions: Iterable[tuple[str, str]], gold: Sequence[LabeledExample]
) -> EvalReport:
    """Join predictions to gold by id and score the run."""
    pred_map: dict[str, str] = {}
    duplicates: list[str] = []
    for pred_id, label in predictions:
        if pred_id in pred_map:
            duplicates.append(pred_id)
        pred_map[pred_id] = label
    gold_map = {ex.id: ex.gold for ex in gold}
    if duplicates or set(pred_map) != set(gold_map):
        raise IdMismatchError(
            missing=sorted(set(gold_map) - set(pred_map)),
            extra=sorted((set(pred_map) - set(gold_map)) | set(duplicates)),
        )
    cells = {(POSITIVE, POSITIVE): 0, (POSITIVE, NEGATIVE): 0,
             (NEGATIVE, POSITIVE): 0, (NEGATIVE, NEGATIVE): 0}
    for ex_id, gold_label in gold_map.items():
        cells[(pred_map[ex_id], gold_label)] += 1
    return metrics_from_matrix(
        ConfusionMatrix(
            pp_tp=cells[(POSITIVE, POSITIVE)],
            pp_tn=cells[(POSITIVE, NEGATIVE)],
            pn_tp=cells[(NEGATIVE, POSITIVE)],
            pn_tn=cells[(NEGATIVE, NEGATIVE)],
        )
    )


def compare_reports(candidate, baseline) -> ReportDelta:
    """Metric deltas (candidate minus baseline) in percentage points.

    Only ``accuracy`` and ``macro_f1`` are read, so published baseline
    numbers can be wrapped in any object carrying those attributes.
    """
    return ReportDelta(
        accuracy_pp=100.0 * (candidate.accuracy - baseline.accuracy),
        macro_f1_pp=100.0 * (candidate.macro_f1 - baseline.macro_f1),
    )


# ----------------------------------------------------------------------
# file interfaces
# ----------------------------------------------------------------------

_LABELS = {"positive": POSITIVE, "negative": NEGATIVE}


def _parse_label(value: str, path, lineno: int) -> str:
    label = _LABELS.get(value.strip().lower())
    if label is None:
        raise ParseError(path, lineno, f"label must be positive or negative, got {value!r}")
    return label


def read_gold_csv(path) -> list[LabeledExample]:
    """Gold corpus: CSV with header id,text,label (RFC 4180 quoting)."""
    rows = _read_corpus_rows(path, require_label=True)
    return [LabeledExample(id=r[0], text=r[1], gold=r[2]) for r in rows]


def read_input_csv(path) -> list[tuple[str, str]]:
    """Classification input: same CSV schema, label column optional/ignored."""
    return [(r[0], r[1]) for r in _read_corpus_rows(path, require_label=False)]


def _read_corpus_rows(path, require_label: bool) -> list[tuple[str, str, str | None]]:
    rows: list[tuple[str, str, str | None]] = []
    seen_ids: set[str] = set()
    # utf-8-sig: tolerate a BOM from spreadsheet exports
    with open(path, encoding="utf-8-sig", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError(path, 1, "missing header row") from None
        if require_label and header != ["id", "text", "label"]:
            raise ParseError(path, 1, f"expected header id,text,label, got {header}")
        if not require_label and header not in (["id", "text", "label"], ["id", "text"]):
            raise ParseError(path, 1, f"expected header id,text[,label], got {header}")
        has_label = header == ["id", "text", "label"]
        for row in reader:
            lineno = reader.line_num
            if not row:
                continue
            if len(row) != len(header):
                raise ParseError(path, lineno, f"expected {len(header)} fields, got {len(row)}")
            row_id = row[0]
            if not row_id:
                raise ParseError(path, lineno, "empty id")
            if row_id in seen_ids:
                raise ParseError(path, lineno, f"duplicate id {row_id!r}")
            seen_ids.add(row_id)
            label = _parse_label(row[2], path, lineno) if has_label else None
            rows.append((row_id, row[1], label))
    return rows


def read_predictions_jsonl(path) -> list[tuple[str, str]]:
    """(id, label) pairs from a classification JSONL file."""
    preds: list[tuple[str, str]] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(path, lineno, f"invalid JSON: {exc.msg}") from exc
            if not isinstance(record, dict) or "id" not in record or "label" not in record:
                raise ParseError(path, lineno, "expected fields id and label")
            label = record["label"]
            if label not in (POSITIVE, NEGATIVE):
                raise ParseError(path, lineno, f"unknown label {label!r}")
            preds.append((str(record["id"]), label))
    return preds


def report_to_dict(report: EvalReport) -> dict:
    return {
        "matrix": {
            "pp_tp": report.matrix.pp_tp,
            "pp_tn": report.matrix.pp_tn,
            "pn_tp": report.matrix.pn_tp,
            "pn_tn": report.matrix.pn_tn,
        },
        "accuracy": report.accuracy,
        "macro_f1": report.macro_f1,
        "macro_precision": report.macro_precision,
        "macro_recall": report.macro_recall,
        "per_class": {
            label: {"precision": m.precision, "recall": m.recall, "f1": m.f1}
            for label, m in report.per_class.items()
        },
    }


def report_from_dict(data: Mapping) -> EvalReport:
    """Rebuild a report from its JSON form.

    Only accuracy and macro_f1 are required, so hand-written baseline
    files (published numbers without a matrix) compare fine.
    """
    matrix = ConfusionMatrix(
        **{k: int(data.get("matrix", {}).get(k, 0)) for k in ("pp_tp", "pp_tn", "pn_tp", "pn_tn")}
    )
    per_class = {
        label: ClassMetrics(
            precision=float(m.get("precision", 0.0)),
            recall=float(m.get("recall", 0.0)),
            f1=float(m.get("f1", 0.0)),
        )
        for label, m in data.get("per_class", {}).items()
    }
    return EvalReport(
        matrix=matrix,
        accuracy=float(data["accuracy"]),
        macro_f1=float(data["macro_f1"]),
        macro_precision=float(data.get("macro_precision", 0.0)),
        macro_recall=float(data.get("macro_recall", 0.0)),
        per_class=per_class,
    )
