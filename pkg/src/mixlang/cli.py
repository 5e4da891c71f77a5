"""Command-line entry point wiring all pipeline stages.

Subcommands:

  train-langid    train the token language model from per-language word files
  emit-manifest   list every (text, lang) the classify step will need vectors
                  for — the handshake with the external embedding exporter
  classify        label a corpus, one JSON record per input line
  evaluate        score predictions against a gold CSV
  report-compare  metric deltas between two evaluation reports

Exit codes: 0 success, 1 runtime/data error, 2 usage or configuration
error.  Log level comes from MIXLANG_LOG (error, warn, info, debug).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Sequence

from mixlang import __version__
from mixlang.config import (
    build_provider,
    load_config,
    load_embedded_lexicons,
    load_lexicons,
    load_model,
)
from mixlang.embeddings import format_manifest_record
from mixlang.errors import BadConfigError, MixlangError
from mixlang.evaluation import (
    compare_reports,
    evaluate_run,
    read_gold_csv,
    read_input_csv,
    read_predictions_jsonl,
    report_from_dict,
    report_to_dict,
)
from mixlang.langid import NgramLanguageModel
from mixlang.scorer import classify_text, score_record
from mixlang.segmenter import segment
from mixlang.textprep import RawText, normalize, tokenize

logger = logging.getLogger(__name__)

_LOG_LEVELS = {
    "error": logging.ERROR,
    "warn": logging.WARNING,
    "info": logging.INFO,
    "debug": logging.DEBUG,
}


def _configure_logging() -> None:
    level_name = os.environ.get("MIXLANG_LOG", "warn").strip().lower()
    level = _LOG_LEVELS.get(level_name, logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    if level_name not in _LOG_LEVELS:
        logger.warning("unknown MIXLANG_LOG value %r, using warn", level_name)


def _read_tokens_file(path: Path) -> list[str]:
    with open(path, encoding="utf-8") as fh:
        return [line.strip() for line in fh if line.strip()]


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------


def _cmd_train_langid(args) -> int:
    cfg = load_config(args.config)
    missing = [lang for lang in cfg.languages if lang not in cfg.train_paths]
    if missing:
        raise BadConfigError(f"no [langid.train] path for language(s): {', '.join(missing)}")
    corpus = {lang: _read_tokens_file(cfg.train_paths[lang]) for lang in cfg.languages}
    model = NgramLanguageModel.train(corpus, cfg.n_range, cfg.alpha, priors=cfg.priors)
    out = Path(args.output) if args.output else cfg.model_path
    if out is None:
        raise BadConfigError("no output path: pass --output or set [langid] model")
    model.save(out)
    logger.info("trained %d-language model, vocab %d, saved to %s",
                len(model.languages), len(model.vocab), out)
    print(f"trained languages={','.join(model.languages)} vocab={len(model.vocab)} -> {out}")
    return 0


def _cmd_emit_manifest(args) -> int:
    cfg = load_config(args.config)
    model = load_model(cfg)
    lexicons = load_lexicons(cfg)
    rows = read_input_csv(args.input)

    entries: list[tuple[str, str]] = []
    seen: set[tuple[str, str]] = set()

    def add(text: str, lang: str) -> None:
        key = (text, lang)
        if key not in seen:
            seen.add(key)
            entries.append(key)

    for _, text in rows:
        tokens = tokenize(normalize(text))
        if not tokens:
            continue
        for seg in segment(tokens, model.label_tokens(tokens)):
            add(seg.text, seg.language)
    for lang in cfg.languages:
        lex = lexicons[lang]
        for word in lex.positive:
            add(word, lang)
        for word in lex.negative:
            add(word, lang)

    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        for text, lang in entries:
            fh.write(format_manifest_record(text, lang) + "\n")
    print(f"manifest: {len(entries)} entries -> {args.output}")
    return 0


def _cmd_classify(args) -> int:
    cfg = load_config(args.config)
    model = load_model(cfg)
    provider = build_provider(cfg)
    lexicons = load_embedded_lexicons(cfg, provider)
    rows = read_input_csv(args.input)
    raws = [RawText(id=row_id, content=text) for row_id, text in rows]

    def run_one(raw: RawText) -> str:
        score = classify_text(raw, model, provider, lexicons, cfg.aggregation)
        return json.dumps(score_record(raw, score), ensure_ascii=False)

    # Output order always equals input order; the executor map preserves it
    # regardless of completion order.
    if args.workers > 1:
        with ThreadPoolExecutor(max_workers=args.workers) as pool:
            lines = list(pool.map(run_one, raws))
    else:
        lines = [run_one(raw) for raw in raws]

    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        for line in lines:
            fh.write(line + "\n")
    logger.info("classified %d records -> %s", len(lines), args.output)
    return 0


def _cmd_evaluate(args) -> int:
    gold = read_gold_csv(args.gold)
    predictions = read_predictions_jsonl(args.pred)
    report = evaluate_run(predictions, gold)
    payload = json.dumps(report_to_dict(report), ensure_ascii=False, indent=2)
    if args.output:
        Path(args.output).write_text(payload + "\n", encoding="utf-8")
    else:
        print(payload)
    return 0


def _cmd_report_compare(args) -> int:
    candidate = report_from_dict(json.loads(Path(args.candidate).read_text(encoding="utf-8")))
    baseline = report_from_dict(json.loads(Path(args.baseline).read_text(encoding="utf-8")))
    delta = compare_reports(candidate, baseline)
    print(json.dumps(
        {"accuracy_pp": delta.accuracy_pp, "macro_f1_pp": delta.macro_f1_pp},
        ensure_ascii=False,
    ))
    return 0


# ----------------------------------------------------------------------
# parser / entry point
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixlang",
        description="Code-switch detection and lexicon-based sentiment polarity.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train-langid", help="train the token language model")
    p.add_argument("--config", required=True)
    p.add_argument("--output", help="model file (default: [langid] model from the config)")
    p.set_defaults(func=_cmd_train_langid)

    p = sub.add_parser("emit-manifest", help="write the embedding manifest for a corpus")
    p.add_argument("--config", required=True)
    p.add_argument("--input", required=True, help="corpus CSV (id,text[,label])")
    p.add_argument("--output", required=True, help="manifest JSONL")
    p.set_defaults(func=_cmd_emit_manifest)

    p = sub.add_parser("classify", help="classify a corpus into JSONL records")
    p.add_argument("--config", required=True)
    p.add_argument("--input", required=True, help="corpus CSV (id,text[,label])")
    p.add_argument("--output", required=True, help="classification JSONL")
    p.add_argument("--workers", type=int, default=1, help="bounded worker pool size")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("evaluate", help="score predictions against a gold CSV")
    p.add_argument("--gold", required=True, help="gold CSV (id,text,label)")
    p.add_argument("--pred", required=True, help="classification JSONL")
    p.add_argument("--output", help="report JSON (default: stdout)")
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("report-compare", help="metric deltas between two reports")
    p.add_argument("--candidate", required=True, help="candidate report JSON")
    p.add_argument("--baseline", required=True, help="baseline report JSON")
    p.set_defaults(func=_cmd_report_compare)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be >= 1")
    try:
        return args.func(args)
    except BadConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (MixlangError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
