"""Morphisms into {0,1}* and a checker for a sufficient FS-morphism criterion.

A morphism ``f`` is certified when

1. ``f(v)`` is an FS word for every square-free ``v`` of length 3, and
2. some word ``p`` with ``|p| >= 3`` is a prefix of every image and occurs in
   ``f(w)`` only at image boundaries.

The second condition is stated over all words ``w``.  Since ``|p|`` never
exceeds the shortest image, any occurrence of ``p`` in ``f(w)`` lies inside
``f(x) f(y)`` for two consecutive letters, so checking every ordered pair
``(x, y)`` decides it.  ``tests/test_morphism.py`` checks that reduction
against random long words instead of taking it on faith.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from os.path import commonprefix
from typing import NamedTuple

from .words import B, T, Alphabet, CircularWord, Word, WordLike, as_word, is_fs_word


@dataclass(frozen=True)
class Morphism:
    """Letter-to-binary-word map; ``images[i]`` is the image of ``source.letters[i]``."""

    images: tuple[str, ...]
    source: Alphabet = T

    def __post_init__(self):
        if len(self.images) != len(self.source):
            raise ValueError(
                f"need {len(self.source)} images for alphabet {self.source.name}, "
                f"got {len(self.images)}"
            )
        for letter, img in zip(self.source, self.images):
            if not img:
                raise ValueError(f"image of {letter!r} is empty")
            if set(img) - {"0", "1"}:
                raise ValueError(f"image of {letter!r} is not binary: {img!r}")

    @classmethod
    def from_dict(cls, images: dict[str, str], source: Alphabet = T) -> Morphism:
        missing = [x for x in source if x not in images]
        if missing:
            raise ValueError(f"no image for {', '.join(missing)}")
        return cls(tuple(images[x] for x in source), source)

    def image(self, letter: str) -> str:
        return self.images[self.source.index(letter)]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(img) for img in self.images)

    def relabel(self, roles: str) -> Morphism:
        """The morphism ``g`` with ``g(source[t]) = self(roles[t])``."""
        if sorted(roles) != sorted(self.source.letters):
            raise ValueError(f"{roles!r} is not a permutation of {self.source.letters!r}")
        return Morphism(tuple(self.image(x) for x in roles), self.source)

    def __call__(self, w: WordLike) -> Word:
        return apply(self, w)


def apply(f: Morphism, w: WordLike) -> Word:
    w = as_word(w, f.source)
    table = dict(zip(f.source.letters, f.images))
    return Word("".join(table[x] for x in w.text), B)


def apply_circular(f: Morphism, cw: CircularWord | WordLike) -> CircularWord:
    if not isinstance(cw, CircularWord):
        cw = CircularWord.of(as_word(cw, f.source))
    return CircularWord.of(apply(f, cw.representative))


def square_free_triples(source: Alphabet) -> list[str]:
    """Square-free words of length 3, lexicographically."""
    return [
        x + y + z
        for x, y, z in product(source.letters, repeat=3)
        if x != y and y != z
    ]


def check_condition1(f: Morphism) -> Word | None:
    """First square-free triple whose image is not FS, or None."""
    if len(f.source) < 3:
        raise ValueError("condition 1 needs a source alphabet of at least 3 letters")
    for v in square_free_triples(f.source):
        if not is_fs_word(apply(f, v)):
            return Word(v, f.source)
    return None


class Condition2Failure(NamedTuple):
    """``pair`` is one letter when ``p`` is not a prefix of its image (2a),
    otherwise the two letters whose concatenated images hold a stray
    occurrence of ``p`` at 1-based ``position`` (2b)."""

    pair: str
    position: int | None

    def describe(self) -> str:
        if self.position is None:
            return f"p is not a prefix of f({self.pair})"
        x, y = self.pair
        return f"p occurs in f({x})f({y}) at position {self.position}"


def _occurrences(text: str, p: str) -> list[int]:
    out = []
    i = text.find(p)
    while i != -1:
        out.append(i)
        i = text.find(p, i + 1)
    return out


def check_condition2(f: Morphism, p: WordLike) -> Condition2Failure | None:
    p = p.text if isinstance(p, Word) else p
    if len(p) < 3:
        raise ValueError(f"synchronizer must have length >= 3, got {len(p)}")
    for letter, img in zip(f.source, f.images):
        if not img.startswith(p):
            return Condition2Failure(letter, None)
    for (x, fx), (y, fy) in product(zip(f.source, f.images), repeat=2):
        for pos in _occurrences(fx + fy, p):
            if pos not in (0, len(fx)):
                return Condition2Failure(x + y, pos + 1)
    return None


@dataclass(frozen=True)
class HNReport:
    passed: bool
    synchronizer: str | None = None
    failing_witness: Word | Condition2Failure | str | None = None

    @property
    def prefix_length(self) -> int | None:
        return None if self.synchronizer is None else len(self.synchronizer)

    def describe(self) -> str:
        if self.passed:
            return f"FS morphism (synchronizer {self.synchronizer}, |p|={self.prefix_length})"
        w = self.failing_witness
        if isinstance(w, Word):
            return f"condition 1 fails: image of square-free {w.text} is not FS"
        if isinstance(w, Condition2Failure):
            return f"condition 2 fails: {w.describe()}"
        return f"not certified: {w}"


def certify_hn(f: Morphism) -> HNReport:
    """Check both conditions, trying synchronizers longest first."""
    bad = check_condition1(f)
    if bad is not None:
        return HNReport(False, failing_witness=bad)
    lcp = commonprefix(list(f.images))
    if len(lcp) < 3:
        return HNReport(False, failing_witness=f"common prefix {lcp!r} is shorter than 3")
    failure = None
    for n in range(len(lcp), 2, -1):
        failure = check_condition2(f, lcp[:n])
        if failure is None:
            return HNReport(True, synchronizer=lcp[:n])
    return HNReport(False, failing_witness=failure)
