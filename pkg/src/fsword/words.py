"""Words, circular words, and square detection.

Words are immutable values carrying their alphabet.  Square scans are plain
double loops over (start, period) with early exit on the first mismatch;
for long inputs (morphic images run to several thousand symbols) the same
loop runs compiled with numba.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Union

import numpy as np
from numba import njit


@dataclass(frozen=True, order=True)
class Alphabet:
    name: str
    letters: str

    def __post_init__(self):
        if len(set(self.letters)) != len(self.letters):
            raise ValueError(f"alphabet {self.name} has repeated letters")

    def __contains__(self, letter: str) -> bool:
        return len(letter) == 1 and letter in self.letters

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def index(self, letter: str) -> int:
        return self.letters.index(letter)


B = Alphabet("B", "01")
S = Alphabet("S", "abc")
T = Alphabet("T", "abcd")

ALPHABETS = {a.name: a for a in (B, S, T)}

# square roots an FS word may contain: 00, 11, 0101
FS_ROOTS = frozenset({"0", "1", "01"})

# shorter words skip the compiled kernel and its array conversion
_JIT_THRESHOLD = 48


@dataclass(frozen=True, order=True)
class Word:
    text: str
    alphabet: Alphabet = B

    def __post_init__(self):
        bad = set(self.text) - set(self.alphabet.letters)
        if bad:
            raise ValueError(
                f"{''.join(sorted(bad))!r} not in alphabet {self.alphabet.name}"
            )

    @property
    def symbols(self) -> tuple[int, ...]:
        return tuple(self.alphabet.index(c) for c in self.text)

    def count(self, letter: str) -> int:
        return self.text.count(letter)

    def __len__(self) -> int:
        return len(self.text)

    def __str__(self) -> str:
        return self.text

    def __getitem__(self, key) -> Word:
        if isinstance(key, int):
            key = slice(key, key + 1 if key != -1 else None)
        return Word(self.text[key], self.alphabet)

    def __add__(self, other: Word) -> Word:
        if other.alphabet != self.alphabet:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word(self.text + other.text, self.alphabet)


def guess_alphabet(text: str) -> Alphabet:
    letters = set(text)
    for alpha in (B, S, T):
        if letters <= set(alpha.letters):
            return alpha
    raise ValueError(f"no known alphabet contains {''.join(sorted(letters))!r}")


WordLike = Union[Word, str]


def as_word(w: WordLike, alphabet: Alphabet | None = None) -> Word:
    if isinstance(w, Word):
        if alphabet is not None and w.alphabet != alphabet:
            return Word(w.text, alphabet)
        return w
    return Word(w, alphabet or guess_alphabet(w))


class SquareOccurrence(NamedTuple):
    """A factor ``root + root`` starting at the 1-based ``index``."""

    index: int
    period: int
    root: str


def least_rotation(text: str) -> int:
    """Booth's algorithm: offset of the lexicographically least rotation."""
    n = len(text)
    if n == 0:
        return 0
    s = text + text
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        c = s[j]
        i = fail[j - k - 1]
        while i != -1 and c != s[k + i + 1]:
            if c < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if c != s[k + i + 1]:
            if c < s[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k % n


def naive_least_rotation(text: str) -> int:
    n = len(text)
    if n == 0:
        return 0
    return min(range(n), key=lambda r: text[r:] + text[:r])


@dataclass(frozen=True, order=True)
class CircularWord:
    """A conjugacy class, stored as its least rotation (a necklace)."""

    representative: Word

    @classmethod
    def of(cls, w: WordLike, alphabet: Alphabet | None = None) -> CircularWord:
        w = as_word(w, alphabet)
        r = least_rotation(w.text)
        return cls(Word(w.text[r:] + w.text[:r], w.alphabet))

    @property
    def alphabet(self) -> Alphabet:
        return self.representative.alphabet

    @property
    def text(self) -> str:
        return self.representative.text

    def __len__(self) -> int:
        return len(self.representative)

    def __str__(self) -> str:
        return self.representative.text


def conjugates(w: WordLike) -> list[Word]:
    w = as_word(w)
    if not w.text:
        return [w]
    t = w.text
    return [Word(t[r:] + t[:r], w.alphabet) for r in range(len(t))]


def _scan(text: str, circular: bool) -> Iterator[tuple[int, int]]:
    """Yield 0-based (start, period) of every square, ordered by start.

    In circular mode the scan runs over ``text + text`` with starts below
    ``len(text)`` and squares no longer than ``len(text)``.
    """
    n = len(text)
    if circular:
        s = text + text
        for i in range(n):
            for p in range(1, n // 2 + 1):
                if s[i:i + p] == s[i + p:i + 2 * p]:
                    yield i, p
    else:
        for i in range(n):
            for p in range(1, (n - i) // 2 + 1):
                if text[i:i + p] == text[i + p:i + 2 * p]:
                    yield i, p


@njit(cache=True)
def _kernel(codes, n, circular, fs_roots):  # pragma: no cover - compiled
    # codes holds text, or text + text when circular
    for i in range(n):
        pmax = n // 2 if circular else (n - i) // 2
        for p in range(1, pmax + 1):
            q = 0
            while q < p and codes[i + q] == codes[i + p + q]:
                q += 1
            if q < p:
                continue
            if fs_roots and (p == 1 or (p == 2 and codes[i] == 48 and codes[i + 1] == 49)):
                continue
            return i, p
    return -1, -1


def _first_forbidden(text: str, circular: bool, fs_roots: bool) -> tuple[int, int] | None:
    """Least 0-based (start, period) of a square, skipping 00, 11, 0101 if ``fs_roots``."""
    s = text + text if circular else text
    if len(text) < _JIT_THRESHOLD:
        for i, p in _scan(text, circular):
            if not (fs_roots and s[i:i + p] in FS_ROOTS):
                return i, p
        return None
    codes = np.frombuffer(s.encode("ascii"), dtype=np.uint8)
    i, p = _kernel(codes, len(text), circular, fs_roots)
    return None if i < 0 else (int(i), int(p))


def find_squares(w: WordLike) -> list[SquareOccurrence]:
    """Every square occurrence in ``w``, sorted by (index, period)."""
    t = as_word(w).text
    return [SquareOccurrence(i + 1, p, t[i:i + p]) for i, p in _scan(t, False)]


def circular_squares(cw: CircularWord) -> list[SquareOccurrence]:
    """Square factors of ``[cw]``: squares in r·r starting in r, length <= |r|."""
    t = cw.text
    s = t + t
    return [SquareOccurrence(i + 1, p, s[i:i + p]) for i, p in _scan(t, True)]


def _occurrence(text: str, circular: bool, hit: tuple[int, int] | None) -> SquareOccurrence | None:
    if hit is None:
        return None
    i, p = hit
    s = text + text if circular else text
    return SquareOccurrence(i + 1, p, s[i:i + p])


def is_square_free(w: WordLike) -> bool:
    return _first_forbidden(as_word(w).text, False, False) is None


def _require_binary(w: Word) -> None:
    if not set(w.text) <= set(B.letters):
        raise ValueError(f"{w.text!r} is not a binary word")


def is_fs_word(w: WordLike) -> bool:
    """True iff the only square factors of ``w`` are 00, 11 and 0101."""
    w = as_word(w)
    _require_binary(w)
    return _first_forbidden(w.text, False, True) is None


def first_non_fs_square(w: WordLike, circular: bool = False) -> SquareOccurrence | None:
    """Least (index, period) square other than 00, 11, 0101."""
    w = as_word(w)
    _require_binary(w)
    return _occurrence(w.text, circular, _first_forbidden(w.text, circular, True))


def first_square(w: WordLike, circular: bool = False) -> SquareOccurrence | None:
    t = as_word(w).text
    return _occurrence(t, circular, _first_forbidden(t, circular, False))


def _as_circular(cw) -> CircularWord:
    if isinstance(cw, CircularWord):
        return cw
    return CircularWord.of(cw)


def circular_factors(cw: CircularWord | WordLike, max_len: int) -> set[Word]:
    cw = _as_circular(cw)
    n = len(cw)
    if max_len > n:
        raise ValueError(f"max_len {max_len} exceeds circular length {n}")
    s = cw.text + cw.text
    return {
        Word(s[i:i + k], cw.alphabet)
        for k in range(1, max_len + 1)
        for i in range(n)
    }


def is_circular_square_free(cw: CircularWord | WordLike) -> bool:
    cw = _as_circular(cw)
    return _first_forbidden(cw.text, True, False) is None


def is_circular_fs(cw: CircularWord | WordLike) -> bool:
    """True iff every conjugate of ``cw`` is an FS word."""
    cw = _as_circular(cw)
    _require_binary(cw.representative)
    return _first_forbidden(cw.text, True, True) is None


def project_to_ternary(w: WordLike, target: str = "a") -> Word:
    """Map d to ``target``, sending a word over T to a word over S."""
    w = as_word(w, T)
    if target not in S:
        raise ValueError(f"target {target!r} is not a ternary letter")
    return Word(w.text.replace("d", target), S)


def complement(w: WordLike) -> Word:
    w = as_word(w)
    _require_binary(w)
    return Word(w.text.translate(str.maketrans("01", "10")), B)


def letter_counts(w: WordLike, alphabet: Alphabet | None = None) -> dict[str, int]:
    w = as_word(w)
    alphabet = alphabet or w.alphabet
    return {x: w.text.count(x) for x in alphabet}


def words_over(alphabet: Alphabet, n: int) -> Iterable[str]:
    """All strings of length ``n`` over ``alphabet``, lexicographically."""
    from itertools import product

    for t in product(alphabet.letters, repeat=n):
        yield "".join(t)
