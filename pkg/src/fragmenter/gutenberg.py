"""Download Project Gutenberg books and cut them into numbered sections.

Heading conventions vary between editions, so both patterns are
parameters. The defaults match books laid out as::

    CHAPTER II.

    ATMOSPHERE.

    I. EVIDENCE OF IT.

    First paragraph ...
"""

from __future__ import annotations

import re
import urllib.request
from dataclasses import dataclass

from .corpus import split_paragraphs

CHAPTER_PATTERN = r"^CHAPTER\s+(?P<number>[IVXLC]+)\b.*$"
SECTION_PATTERN = r"^(?P<number>[IVXLC]+)\.\s+(?P<title>[A-Z][A-Z0-9 ,;:'’\-]*)\.?$"

_START = re.compile(r"^\*{3}\s*START OF (THE|THIS) PROJECT GUTENBERG.*$", re.MULTILINE | re.IGNORECASE)
_END = re.compile(r"^\*{3}\s*END OF (THE|THIS) PROJECT GUTENBERG.*$", re.MULTILINE | re.IGNORECASE)


def ebook_url(ebook_id: int) -> str:
    return f"https://www.gutenberg.org/cache/epub/{ebook_id}/pg{ebook_id}.txt"


def fetch_text(url: str, timeout: float = 30.0) -> str:
    with urllib.request.urlopen(url, timeout=timeout) as response:
        return response.read().decode("utf-8-sig")


def strip_boilerplate(text: str) -> str:
    """Drop the licence header and footer around a Gutenberg e-text, if present."""
    start = _START.search(text)
    if start:
        text = text[start.end():]
    end = _END.search(text)
    if end:
        text = text[: end.start()]
    return text.strip() + "\n"


@dataclass(frozen=True)
class Section:
    chapter: str
    number: str
    title: str
    body: str


def split_sections(
    book: str, chapter_pattern: str = CHAPTER_PATTERN, section_pattern: str = SECTION_PATTERN
) -> list[Section]:
    """Split a book into sections.

    Headings are whole paragraphs (blank-line delimited blocks) matching the
    chapter or section pattern. A section's body runs up to the next heading
    of either kind; text between a chapter heading and its first section
    heading (the chapter title) is dropped.
    """
    chapter_re = re.compile(chapter_pattern)
    section_re = re.compile(section_pattern)
    sections = []
    chapter = ""
    current = None
    body: list[str] = []

    def flush():
        if current is not None and body:
            sections.append(Section(chapter, current[0], current[1], "\n\n".join(body) + "\n"))

    for block in split_paragraphs(book):
        line = " ".join(block.split())
        chapter_match = chapter_re.match(line)
        section_match = None if chapter_match else section_re.match(line)
        if chapter_match:
            flush()
            chapter = chapter_match.group("number")
            current, body = None, []
        elif section_match:
            flush()
            title = section_match.groupdict().get("title") or ""
            current, body = (section_match.group("number"), title.strip().rstrip(".")), []
        elif current is not None:
            body.append(block)
    flush()
    return sections


def find_section(sections: list[Section], chapter: str, number: str) -> Section:
    for section in sections:
        if section.chapter == chapter and section.number == number:
            return section
    raise LookupError(f"no section {number} in chapter {chapter}")
