"""The embedded morphism tables and explicit circular FS words.

Everything is checked when loaded: image lengths against the printed
lengths, every morphism through :func:`certify_hn`, every fixture through
:func:`is_circular_fs`.  A failure means the transcription is wrong.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from . import _tables
from .morphism import HNReport, Morphism, apply, certify_hn
from .words import B, T, Alphabet, CircularWord, is_circular_fs


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    id: int
    morphism: Morphism
    declared_lengths: tuple[int, ...]
    report: HNReport


@dataclass(frozen=True)
class FixtureEntry:
    length: int
    word: CircularWord
    source: str  # "explicit", "f_r(abdcd)", or "empty"


def raw_morphism(r: int) -> Morphism:
    return Morphism(_tables.MORPHISMS[r], T)


def _check_entry(r: int) -> CatalogEntry:
    f = raw_morphism(r)
    declared = _tables.DECLARED_LENGTHS[r]
    if f.lengths != declared:
        raise CatalogError(f"f_{r}: image lengths {f.lengths} != declared {declared}")
    report = certify_hn(f)
    if not report.passed:
        raise CatalogError(f"f_{r}: {report.describe()}")
    return CatalogEntry(r, f, declared, report)


def _check_fixture(length: int, text: str, source: str) -> FixtureEntry:
    if len(text) != length:
        raise CatalogError(f"fixture {length}: word has length {len(text)}")
    cw = CircularWord.of(text, B)
    if not is_circular_fs(cw):
        raise CatalogError(f"fixture {length}: {text} is not a circular FS word")
    return FixtureEntry(length, cw, source)


@lru_cache(maxsize=None)
def load_catalog() -> tuple[tuple[CatalogEntry, ...], tuple[FixtureEntry, ...]]:
    entries = tuple(_check_entry(r) for r in sorted(_tables.MORPHISMS))
    fixtures = [_check_fixture(0, "", "empty")]
    for length, text in _tables.EXPLICIT_WORDS.items():
        fixtures.append(_check_fixture(length, text, "explicit"))
    for length, (r, w) in _tables.MORPHIC_WORDS.items():
        fixtures.append(_check_fixture(length, apply(raw_morphism(r), w).text, f"f_{r}({w})"))
    fixtures.sort(key=lambda e: e.length)
    return entries, tuple(fixtures)


def morphisms() -> tuple[CatalogEntry, ...]:
    return load_catalog()[0]


def morphism(r: int) -> Morphism:
    try:
        return morphisms()[r].morphism
    except IndexError:
        raise KeyError(f"no catalog morphism f_{r}") from None


def fixtures() -> dict[int, CircularWord]:
    return {e.length: e.word for e in load_catalog()[1]}


_LINE = re.compile(r"^\s*(\S+)\s*->\s*(\S*)\s*$")


def parse_morphism(text: str, source: Alphabet = T) -> Morphism:
    """Parse ``<letter> -> <binary word>`` lines; ``#`` starts a comment."""
    images: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        m = _LINE.match(line)
        if not m:
            raise ValueError(f"line {lineno}: expected '<letter> -> <word>', got {line!r}")
        letter, img = m.groups()
        if letter not in source:
            raise ValueError(f"line {lineno}: {letter!r} is not in alphabet {source.name}")
        if letter in images:
            raise ValueError(f"line {lineno}: duplicate letter {letter!r}")
        if not img or set(img) - {"0", "1"}:
            raise ValueError(f"line {lineno}: non-binary image {img!r}")
        images[letter] = img
    return Morphism.from_dict(images, source)


def serialize_morphism(f: Morphism) -> str:
    return "".join(f"{x} -> {img}\n" for x, img in zip(f.source, f.images))


def verify_all() -> list[str]:
    """Run every catalog check; returns the failures (empty when all pass)."""
    problems = []
    for r in sorted(_tables.MORPHISMS):
        try:
            _check_entry(r)
        except CatalogError as exc:
            problems.append(str(exc))
    rows = [(0, "", "empty")]
    rows += [(n, t, "explicit") for n, t in _tables.EXPLICIT_WORDS.items()]
    rows += [
        (n, apply(raw_morphism(r), w).text, f"f_{r}({w})")
        for n, (r, w) in _tables.MORPHIC_WORDS.items()
    ]
    for n, t, src in rows:
        try:
            _check_fixture(n, t, src)
        except CatalogError as exc:
            problems.append(str(exc))
    return problems
