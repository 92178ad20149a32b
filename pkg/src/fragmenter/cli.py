"""Command-line front end.

Examples::

    fragmenter run --input section.txt --cost parabola --preferred 600 --scale 0.5 --format json
    fragmenter run --input mars.txt --section II:I --cost both --sweep-scale 0.25,0.5,0.75,1.0,1.25,1.5
    fragmenter run --input mars.txt --all-sections --min-paragraphs 20 --cost both --sweep-scale ...
    fragmenter self-test --seed 1 --cases 500
    fragmenter fetch-corpus --ebook-id ID --output mars.txt
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import gutenberg
from .cohesion import WindowConfig, curve_csv
from .corpus import PreprocessConfig, load_stopwords, preprocess
from .costs import FAMILIES, CostSpec
from .errors import FragmenterError, TooFewParagraphs
from .evaluation import self_test
from .pipeline import DEFAULT_SWEEP, run_json, segment_document, stats_csv, stats_text, sweep
from .plot import render_curve_svg, render_panels_svg

log = logging.getLogger("fragmenter")


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return value


def _scale_list(text):
    try:
        values = [_positive_float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty scale list")
    return values


def _section_ref(text):
    chapter, sep, number = text.partition(":")
    if not sep or not chapter or not number:
        raise argparse.ArgumentTypeError(f"expected CHAPTER:SECTION such as II:I, got {text!r}")
    return chapter.upper(), number.upper()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fragmenter",
        description="Split text into fragments at low-cohesion paragraph boundaries.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="segment a text file")
    run.add_argument("--input", required=True, type=Path)
    run.add_argument("--stopwords", type=Path, help="stopword file (default: bundled SMART list)")
    run.add_argument("--stemmer", choices=("porter", "none"), default="porter")
    run.add_argument("--top-terms", type=_positive_int, default=50)
    run.add_argument("--window", type=_positive_int, default=3)
    run.add_argument("--cost", choices=(*FAMILIES, "both"), default="parabola")
    run.add_argument("--preferred", type=_positive_int, default=600)
    scale = run.add_mutually_exclusive_group()
    scale.add_argument("--scale", type=_positive_float, default=None)
    scale.add_argument("--sweep-scale", type=_scale_list, default=None)
    run.add_argument("--pruning", choices=("safe", "verbatim", "off"), default="safe")
    run.add_argument("--format", choices=("text", "json", "csv", "svg"), default="text")
    run.add_argument("--output", type=Path, help="write here instead of stdout")
    docs = run.add_mutually_exclusive_group()
    docs.add_argument("--section", type=_section_ref, help="only this CHAPTER:SECTION of a book, e.g. II:I")
    docs.add_argument("--all-sections", action="store_true", help="every section with enough paragraphs")
    run.add_argument("--min-paragraphs", type=_positive_int, default=20)
    run.add_argument("--chapter-pattern", default=gutenberg.CHAPTER_PATTERN)
    run.add_argument("--section-pattern", default=gutenberg.SECTION_PATTERN)

    st = sub.add_parser("self-test", help="check the DP against exhaustive search")
    st.add_argument("--seed", type=int, default=0)
    st.add_argument("--cases", type=_positive_int, default=500)

    fetch = sub.add_parser("fetch-corpus", help="download a Project Gutenberg text")
    src = fetch.add_mutually_exclusive_group(required=True)
    src.add_argument("--url")
    src.add_argument("--ebook-id", type=int)
    fetch.add_argument("--output", type=Path, required=True)
    fetch.add_argument("--section", type=_section_ref, help="also write this CHAPTER:SECTION body")
    fetch.add_argument("--section-output", type=Path)
    fetch.add_argument("--chapter-pattern", default=gutenberg.CHAPTER_PATTERN)
    fetch.add_argument("--section-pattern", default=gutenberg.SECTION_PATTERN)

    ls = sub.add_parser("sections", help="list the sections found in a book")
    ls.add_argument("--input", required=True, type=Path)
    ls.add_argument("--chapter-pattern", default=gutenberg.CHAPTER_PATTERN)
    ls.add_argument("--section-pattern", default=gutenberg.SECTION_PATTERN)
    return parser


def _emit(text: str, output: Path | None):
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")


def _load_documents(args, cfg):
    raw = args.input.read_text(encoding="utf-8")
    if not (args.section or args.all_sections):
        return [preprocess(raw, cfg)]
    sections = gutenberg.split_sections(
        gutenberg.strip_boilerplate(raw), args.chapter_pattern, args.section_pattern
    )
    if args.section:
        return [preprocess(gutenberg.find_section(sections, *args.section).body, cfg)]
    docs = [preprocess(s.body, cfg) for s in sections]
    docs = [d for d in docs if d.n >= args.min_paragraphs]
    if not docs:
        raise TooFewParagraphs(f"no section has at least {args.min_paragraphs} paragraphs")
    log.info("using %d sections with >= %d paragraphs", len(docs), args.min_paragraphs)
    return docs


def _run(args) -> int:
    stopwords = load_stopwords(args.stopwords)
    cfg = PreprocessConfig(stopwords, args.stemmer)
    window = WindowConfig(args.top_terms, args.window)
    docs = _load_documents(args, cfg)
    for doc in docs:
        if doc.n < 2:
            raise TooFewParagraphs(f"need at least 2 paragraphs, got {doc.n}")
    families = FAMILIES if args.cost == "both" else (args.cost,)
    if args.sweep_scale is not None:
        hs = args.sweep_scale
    elif args.scale is not None:
        hs = [args.scale]
    else:
        hs = [0.5] if args.cost != "both" else list(DEFAULT_SWEEP)

    if len(docs) == 1 and len(families) == 1 and len(hs) == 1:
        result = segment_document(docs[0], CostSpec(families[0], args.preferred, hs[0]), window, args.pruning)
        if args.format == "json":
            text = run_json([result])
        elif args.format == "csv":
            text = curve_csv(result.curve)
        elif args.format == "svg":
            label = f"{result.spec.family} H{result.spec.h:g}"
            text = render_curve_svg(result.curve, result.segmentation.boundaries, result.lengths, label)
        else:
            s = result.stats
            text = (
                f"paragraphs: {len(result.lengths)}  words: {sum(result.lengths)}\n"
                f"boundaries: {' '.join(map(str, result.segmentation.boundaries)) or '-'}\n"
                f"fragment lengths: {' '.join(map(str, result.fragments))}\n"
                f"total cost: {result.segmentation.total_cost:.6f}\n"
                f"l_avg {s.l_avg:.1f}  l_min {s.l_min}  l_max {s.l_max}  d_avg {s.d_avg:.1f}  m {s.m}\n"
            )
        _emit(text, args.output)
        return 0

    rows = sweep(docs, families, args.preferred, hs, window, args.pruning)
    if args.format == "csv":
        text = stats_csv(rows)
    elif args.format == "json":
        payload = {
            "rows": [
                {
                    "cost_function": row.family,
                    "h": row.h,
                    "l_avg": row.stats.l_avg,
                    "l_min": row.stats.l_min,
                    "l_max": row.stats.l_max,
                    "d_avg": row.stats.d_avg,
                    "m": row.stats.m,
                    "runs": [run.to_dict() for run in row.runs],
                }
                for row in rows
            ]
        }
        text = json.dumps(payload, indent=2) + "\n"
    elif args.format == "svg":
        if len(docs) != 1:
            raise FragmenterError("svg output needs a single document; use --section")
        panels = [
            {"curve": row.runs[0].curve, "boundaries": row.runs[0].segmentation.boundaries,
             "label": f"{row.family} H{row.h:g}"}
            for row in rows
        ]
        text = render_panels_svg(panels, docs[0].lengths)
    else:
        text = stats_text(rows)
    _emit(text, args.output)
    return 0


def _self_test(args) -> int:
    report = self_test(args.seed, args.cases)
    print(report.summary())
    return 0 if report.ok else 1


def _fetch(args) -> int:
    url = args.url or gutenberg.ebook_url(args.ebook_id)
    log.info("fetching %s", url)
    text = gutenberg.strip_boilerplate(gutenberg.fetch_text(url))
    args.output.write_text(text, encoding="utf-8")
    print(f"wrote {args.output} ({len(text.split())} whitespace-separated words)")
    if args.section:
        sections = gutenberg.split_sections(text, args.chapter_pattern, args.section_pattern)
        section = gutenberg.find_section(sections, *args.section)
        out = args.section_output or args.output.with_suffix(f".{section.chapter}-{section.number}.txt")
        out.write_text(section.body, encoding="utf-8")
        print(f"wrote {out} (chapter {section.chapter}, section {section.number}: {section.title})")
    return 0


def _sections(args) -> int:
    raw = gutenberg.strip_boilerplate(args.input.read_text(encoding="utf-8"))
    cfg = PreprocessConfig()
    for s in gutenberg.split_sections(raw, args.chapter_pattern, args.section_pattern):
        doc = preprocess(s.body, cfg)
        print(f"{s.chapter}:{s.number}\t{doc.n} paragraphs\t{sum(doc.lengths)} words\t{s.title}")
    return 0


COMMANDS = {"run": _run, "self-test": _self_test, "fetch-corpus": _fetch, "sections": _sections}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return COMMANDS[args.command](args)
    except (FragmenterError, OSError, LookupError, UnicodeDecodeError) as exc:
        print(f"fragmenter: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
