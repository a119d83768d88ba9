"""Exhaustive search for circular FS words of a given length.

The search walks binary prenecklaces (prefixes of least rotations) depth
first, 0 before 1, keeping the prefix FS by checking only squares that end
at the new symbol.  A leaf of length m is a necklace iff the running
Lyndon period divides m; necklaces then get the wraparound check.  The first
accepted leaf is therefore the lexicographically least circular FS word of
length m, and a finished walk with no leaf proves none exists.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .words import B, CircularWord, is_circular_fs

DEFAULT_MAX_LENGTH = 128


class SearchTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class SearchOutcome:
    m: int
    exists: bool
    witness: CircularWord | None
    nodes_explored: int
    count: int | None = None

    def line(self) -> str:
        parts = [str(self.m), "exists" if self.exists else "none"]
        if self.witness is None:
            parts.append("–")
        else:
            parts.append(self.witness.text or "ε")
        if self.count is not None:
            parts.append(str(self.count))
        return " ".join(parts)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "exists": self.exists,
            "witness": None if self.witness is None else self.witness.text,
            "nodes_explored": self.nodes_explored,
            "count": self.count,
        }


def _suffix_ok(w: list[int]) -> bool:
    """No square other than 00, 11, 0101 ends at the last symbol."""
    u = len(w)
    for p in range(2, u // 2 + 1):
        if w[u - 2 * p:u - p] == w[u - p:u]:
            if p == 2 and w[u - 2] == 0 and w[u - 1] == 1:
                continue
            return False
    return True


def _wrap_ok(w: list[int]) -> bool:
    """No forbidden square crosses the end of the circular word."""
    n = len(w)
    s = w + w
    for p in range(2, n // 2 + 1):
        for i in range(n - 2 * p + 1, n):
            if s[i:i + p] == s[i + p:i + 2 * p]:
                if p == 2 and s[i] == 0 and s[i + 1] == 1:
                    continue
                return False
    return True


def decide(m: int, want_count: bool = False, max_length: int = DEFAULT_MAX_LENGTH) -> SearchOutcome:
    """Does a circular FS word of length ``m`` exist?  Optionally count them."""
    if m < 0:
        raise ValueError(f"length must be non-negative, got {m}")
    if m > max_length:
        raise SearchTooLarge(f"m={m} exceeds the search bound {max_length}")
    if m == 0:
        return SearchOutcome(0, True, CircularWord.of("", B), 0, 1 if want_count else None)

    w: list[int] = []
    nodes = 0
    count = 0
    first: list[int] | None = None

    def walk(period: int) -> bool:
        # returns True to stop the whole search
        nonlocal nodes, count, first
        t = len(w)
        if t == m:
            if m % period == 0 and _wrap_ok(w):
                count += 1
                if first is None:
                    first = list(w)
                return not want_count
            return False
        for x in (0, 1):
            if t:
                prev = w[t - period]
                if x < prev:
                    continue
                nxt = period if x == prev else t + 1
            else:
                nxt = 1
            w.append(x)
            nodes += 1
            if _suffix_ok(w) and walk(nxt):
                return True
            w.pop()
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, m + 100))
    try:
        walk(1)
    finally:
        sys.setrecursionlimit(limit)

    witness = None
    if first is not None:
        witness = CircularWord.of("".join(map(str, first)), B)
        if not is_circular_fs(witness):
            raise AssertionError(f"search accepted a non-FS word {witness.text}")
    return SearchOutcome(m, first is not None, witness, nodes, count if want_count else None)


def decide_range(
    lo: int, hi: int, want_count: bool = False, max_length: int = DEFAULT_MAX_LENGTH
) -> list[SearchOutcome]:
    if lo > hi:
        raise ValueError(f"empty range [{lo}, {hi}]")
    return [decide(m, want_count, max_length) for m in range(lo, hi + 1)]
