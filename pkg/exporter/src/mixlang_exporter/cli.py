"""mixlang-export: batch-embed a manifest into a vector cache.

Usage: mixlang-export --manifest M --out C --model {xlmr|use} [--batch N]

Exit codes: 0 success, 1 runtime/data error, 2 usage error (including an
unknown model id).
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from mixlang_exporter.errors import ExporterError, UnknownModelError
from mixlang_exporter.export import ExportJob, run_export


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixlang-export",
        description="Embed every manifest entry with a pretrained encoder "
                    "and write the vector cache.",
    )
    parser.add_argument("--manifest", required=True, help="manifest JSONL (text, lang)")
    parser.add_argument("--out", required=True, help="cache JSONL to write")
    parser.add_argument("--model", required=True, help="encoder id: xlmr or use")
    parser.add_argument("--batch", type=int, default=32, help="encoder batch size")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.batch < 1:
        parser.error("--batch must be >= 1")
    job = ExportJob(
        manifest_path=Path(args.manifest),
        output_path=Path(args.out),
        model_id=args.model,
        batch_size=args.batch,
    )
    try:
        summary = run_export(job)
    except UnknownModelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ExporterError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {summary.records_written} records (dim {summary.dim}) -> {args.out}")
    return 0


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
