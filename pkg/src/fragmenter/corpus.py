"""Text ingestion: paragraphs, tokens, stopwords, stems and term counts."""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

from .errors import EmptyInput
from .porter import stem as porter_stem

_BLANK_LINES = re.compile(r"\n[ \t\r\f\v]*\n")
# letters only; an apostrophe is kept when it sits between two letters
_WORD = re.compile(r"[^\W\d_]+(?:['’][^\W\d_]+)*")

STEMMERS = {
    "porter": porter_stem,
    "none": lambda token: token,
}


def parse_stopwords(lines: Iterable[str]) -> frozenset[str]:
    """Read a stopword list: one word per line, ``#`` starts a comment."""
    words = set()
    for line in lines:
        word = line.split("#", 1)[0].strip().lower()
        if word:
            words.add(word)
    return frozenset(words)


def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    """Load a stopword file, or the bundled SMART list when ``path`` is None."""
    if path is None:
        text = resources.files("fragmenter").joinpath("data/smart_stopwords.txt").read_text("utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return parse_stopwords(text.splitlines())


@dataclass(frozen=True)
class PreprocessConfig:
    stopword_list: frozenset[str] = field(default_factory=load_stopwords)
    stemmer: str = "porter"
    paragraph_separator: str = "blank-line"

    def __post_init__(self):
        if self.stemmer not in STEMMERS:
            raise ValueError(f"unknown stemmer {self.stemmer!r}")
        if self.paragraph_separator != "blank-line":
            raise ValueError(f"unknown paragraph separator {self.paragraph_separator!r}")
        for word in self.stopword_list:
            if not word or word != word.lower():
                raise ValueError(f"stopwords must be lowercase and non-empty, got {word!r}")


@dataclass(frozen=True)
class Paragraph:
    index: int
    length: int
    terms: Mapping[str, int]


@dataclass(frozen=True)
class Document:
    paragraphs: tuple[Paragraph, ...]

    @property
    def n(self) -> int:
        return len(self.paragraphs)

    @property
    def lengths(self) -> list[int]:
        return [par.length for par in self.paragraphs]

    def to_json(self) -> str:
        data = [
            {"index": par.index, "length": par.length, "terms": dict(sorted(par.terms.items()))}
            for par in self.paragraphs
        ]
        return json.dumps(data, ensure_ascii=False, separators=(",", ":"))


def split_paragraphs(raw: str) -> list[str]:
    """Split on runs of one or more blank lines, dropping empty blocks."""
    blocks = [block.strip() for block in _BLANK_LINES.split(raw.replace("\r\n", "\n"))]
    blocks = [block for block in blocks if block]
    if not blocks:
        raise EmptyInput("input contains no non-blank text")
    return blocks


def tokenize(text: str) -> list[str]:
    return [match.group().replace("’", "'").lower() for match in _WORD.finditer(text)]


def remove_stopwords(tokens: Iterable[str], stopword_list: frozenset[str] | set[str]) -> list[str]:
    return [token for token in tokens if token not in stopword_list]


def stem(token: str, stemmer: str = "porter") -> str:
    return STEMMERS[stemmer](token)


def preprocess(raw: str, cfg: PreprocessConfig | None = None) -> Document:
    """Turn raw text into a :class:`Document`.

    A paragraph's ``length`` is its word count before stopword removal.
    Stems that collide with a stopword ("means" -> "mean") are dropped too.
    Blocks without a single word (rules, page numbers) are not paragraphs
    and are skipped.
    """
    cfg = cfg or PreprocessConfig()
    stemmer = STEMMERS[cfg.stemmer]
    paragraphs = []
    for block in split_paragraphs(raw):
        tokens = tokenize(block)
        if not tokens:
            continue
        kept = remove_stopwords(tokens, cfg.stopword_list)
        stems = (stemmer(token) for token in kept)
        terms = Counter(term for term in stems if term not in cfg.stopword_list)
        paragraphs.append(Paragraph(len(paragraphs) + 1, len(tokens), dict(terms)))
    if not paragraphs:
        raise EmptyInput("input contains no words")
    return Document(tuple(paragraphs))
