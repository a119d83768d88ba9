"""Level circular square-free ternary words, and the a->d / b->d substitution.

Words come from a depth-first search over linear square-free words with
per-letter caps of ceil(n/3), closed up by level and wraparound checks at
full length.  A plain lexicographic search stalls from about n=67 on (letter
counts drift and only the final cap notices), so the generator keeps every
prefix within ``slack`` of level, shuffles branch order per depth, and
restarts under a node budget.  Every returned word is re-verified, so the
search order only affects which word you get, never whether it is valid.
"""

from __future__ import annotations

import random
import threading
from functools import lru_cache

from .words import S, T, CircularWord, Word, is_circular_square_free, letter_counts

# no circular square-free ternary word has one of these lengths
EXCEPTIONS = frozenset({5, 7, 9, 10, 14, 17})

_NODE_BUDGET = 5_000
_MAX_ATTEMPTS = 64
_SLACK = 2


class NoSuchWord(ValueError):
    pass


class SearchExhausted(RuntimeError):
    pass


def is_level(w: Word | CircularWord) -> bool:
    counts = letter_counts(w.text, S).values()
    return max(counts) - min(counts) <= 1


def _wrap_ok(w: list[str]) -> bool:
    """No square of r·r that starts in r, crosses its end, and fits in |r|."""
    n = len(w)
    s = w + w
    for p in range(1, n // 2 + 1):
        for i in range(n - 2 * p + 1, n):
            if s[i:i + p] == s[i + p:i + 2 * p]:
                return False
    return True


def search_circular_ternary(
    n: int,
    level: bool = True,
    order_seed: int | str | None = None,
    node_budget: int | None = None,
    slack: int | None = None,
) -> tuple[str | None, int]:
    """Depth-first search for a circular square-free ternary word of length n.

    Returns ``(word, nodes)``; ``word`` is None when the search space was
    exhausted.  With ``order_seed`` set the branch order at each depth is
    shuffled deterministically.  ``slack`` bounds max count minus min count
    on every prefix; it prunes soundly only when None.  Raises
    :class:`SearchExhausted` if the node budget runs out first.
    """
    if n <= 0:
        return "", 0
    cap = -(-n // 3) if level else n
    rng = random.Random(order_seed) if order_seed is not None else None
    orders = [
        rng.sample("abc", 3) if rng else list("abc") for _ in range(n)
    ]
    # one representative per letter permutation: the word starts with 'a'
    # and introduces 'b' before 'c'
    w: list[str] = []
    counts = {"a": 0, "b": 0, "c": 0}
    choice = [0] * n
    nodes = 0
    t = 0
    while True:
        if t == n:
            balanced = not level or max(counts.values()) - min(counts.values()) <= 1
            if balanced and _wrap_ok(w):
                return "".join(w), nodes
            t -= 1
            counts[w.pop()] -= 1
            continue
        found = False
        order = ["a"] if t == 0 else orders[t]
        while choice[t] < len(order):
            x = order[choice[t]]
            choice[t] += 1
            if counts[x] >= cap:
                continue
            if slack is not None and counts[x] + 1 - min(counts.values()) > slack:
                continue
            if x == "c" and counts["b"] == 0:
                continue
            if x == "b" and counts["b"] == 0 and counts["c"] > 0:
                continue
            w.append(x)
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                raise SearchExhausted(f"node budget {node_budget} spent at n={n}")
            u = t + 1
            if all(w[u - 2 * p:u - p] != w[u - p:u] for p in range(1, u // 2 + 1)):
                found = True
                break
            w.pop()
        if found:
            counts[w[-1]] += 1
            t += 1
            if t < n:
                choice[t] = 0
            continue
        if t == 0:
            return None, nodes
        t -= 1
        counts[w.pop()] -= 1


_lock = threading.Lock()


@lru_cache(maxsize=None)
def _generate(n: int, seed: int) -> CircularWord:
    word = None
    for attempt in range(_MAX_ATTEMPTS):
        try:
            word, _ = search_circular_ternary(
                n, True, f"{n}:{seed}:{attempt}", _NODE_BUDGET, _SLACK
            )
        except SearchExhausted:
            continue
        if word is not None:
            break
    else:
        # complete search; only reached for small n in practice
        word, _ = search_circular_ternary(n, True, f"{n}:{seed}")
    if word is None:
        raise SearchExhausted(f"no level circular square-free word of length {n}")
    cw = CircularWord.of(word, S)
    if not (is_circular_square_free(cw) and is_level(cw)):
        raise AssertionError(f"generator produced an invalid word {word}")
    return cw


def generate_level_ternary(n: int, seed: int = 0) -> CircularWord:
    """A level circular square-free word over {a,b,c} of length ``n``."""
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    if n in EXCEPTIONS:
        raise NoSuchWord(f"no circular square-free ternary word of length {n}")
    with _lock:
        return _generate(n, seed)


def arrange_counts(w: CircularWord, major: str = "a") -> CircularWord:
    """Permute letters so that ``major`` carries the odd count out.

    For ``n = 3i + j`` with ``j`` in {-1, 0, 1}, a level word has one letter
    occurring ``i + j`` times and the other two ``i`` times; afterwards that
    letter is ``major``.
    """
    counts = letter_counts(w.text, S)
    n = len(w)
    i = (n + 1) // 3
    j = n - 3 * i
    odd = next(x for x in "abc" if counts[x] == i + j)
    if odd == major:
        return w
    swap = str.maketrans({odd: major, major: odd})
    return CircularWord.of(w.text.translate(swap), S)


def substitute(w: CircularWord, from_letter: str, k: int) -> CircularWord:
    """Replace the first ``k`` occurrences of ``from_letter`` by ``d``."""
    if from_letter not in ("a", "b"):
        raise ValueError(f"substitution letter must be a or b, got {from_letter!r}")
    have = w.text.count(from_letter)
    if not 0 <= k <= have:
        raise ValueError(f"cannot replace {k} of {have} occurrences of {from_letter!r}")
    u = CircularWord.of(w.text.replace(from_letter, "d", k), T)
    if not is_circular_square_free(u):
        raise AssertionError(f"substitution broke square-freeness of {w.text}")
    return u
