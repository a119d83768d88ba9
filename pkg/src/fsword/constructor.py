"""Lengths reachable from the catalog morphisms, and certified construction.

For an FS morphism with image lengths (alpha, beta, gamma, delta), a level
circular square-free ternary word of length ``n = 3i + j`` whose letter
``a`` occurs ``i + j`` times, with ``k`` of its a's (or b's) turned into
d's, maps to a circular FS word of length::

    (alpha + beta + gamma) i + alpha j + k (delta - alpha)    # a -> d
    (alpha + beta + gamma) i + alpha j + k (delta - beta)     # b -> d

subject to i >= 1, -1 <= j <= 1, 3i + j not a ternary exception, and
0 <= k <= i + j (a -> d) or 0 <= k <= i (b -> d).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable

from . import catalog, search
from .morphism import apply_circular
from .ternary import EXCEPTIONS, arrange_counts, generate_level_ternary, substitute
from .words import B, S, CircularWord, is_circular_fs, is_circular_square_free

FORBIDDEN = frozenset({
    9, 10, 11, 13, 15, 16, 17, 18, 21, 22, 23, 25, 26, 27, 29, 31, 32, 33,
    34, 35, 37, 40, 41, 42, 45, 47, 49, 53, 56, 59, 61, 64, 73,
})

# the expected knockout leftovers below 7400; knockout() also misses 424,
# whose only recipes need a ternary word of length 9 or 10
KNOCKOUT = tuple(
    list(range(1, 54)) + [55, 56, 57, 58, 59, 61, 63, 64, 65, 69, 70, 71, 73, 77,
                          116, 127, 232, 241, 253]
)

# from here on one morphism with lengths 50, 50, 50, 51 covers everything
LARGE_M = 7400
LARGE_M_MORPHISM = 16

IDENTITY = "abcd"
ROLE_ORDERS = tuple("".join(p) for p in permutations(IDENTITY))


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class Recipe:
    """Parameters for one instance of the length formulas.

    ``roles[t]`` names the letter of ``f_r`` whose image plays role
    ``"abcd"[t]``, so ``alpha = |f_r(roles[0])|`` and so on.
    """

    morphism_id: int
    roles: str
    i: int
    j: int
    k: int
    target: str  # "a" or "b": which letter is partly replaced by d

    def role_lengths(self) -> tuple[int, int, int, int]:
        f = catalog.morphism(self.morphism_id)
        return tuple(len(f.image(x)) for x in self.roles)

    @property
    def ternary_length(self) -> int:
        return 3 * self.i + self.j

    def is_admissible(self) -> bool:
        kmax = self.i + self.j if self.target == "a" else self.i
        return (
            self.i >= 1
            and -1 <= self.j <= 1
            and self.ternary_length not in EXCEPTIONS
            and self.target in ("a", "b")
            and 0 <= self.k <= kmax
            and sorted(self.roles) == list(IDENTITY)
        )

    def predicted_length(self) -> int:
        return formula_length(self.role_lengths(), self.i, self.j, self.k, self.target)


def formula_length(lengths: Iterable[int], i: int, j: int, k: int, target: str) -> int:
    alpha, beta, gamma, delta = lengths
    base = (alpha + beta + gamma) * i + alpha * j
    return base + k * (delta - (alpha if target == "a" else beta))


def _i_bound(lengths: tuple[int, ...], max_m: int) -> int:
    # either formula is a non-negative mix of at least 2i images
    return max_m // (2 * min(lengths)) + 1


def reachable_lengths(image_lengths: Iterable[int], max_m: int) -> set[int]:
    """Every ``1 <= m <= max_m`` given by either formula for these role lengths."""
    lengths = tuple(image_lengths)
    alpha, beta, gamma, delta = lengths
    out: set[int] = set()
    for i in range(1, _i_bound(lengths, max_m) + 1):
        for j in (-1, 0, 1):
            if 3 * i + j in EXCEPTIONS:
                continue
            base = (alpha + beta + gamma) * i + alpha * j
            for step, kmax in ((delta - alpha, i + j), (delta - beta, i)):
                if step == 0:
                    out.add(base)
                else:
                    out.update(range(base, base + step * kmax + (1 if step > 0 else -1), step))
    return {m for m in out if 1 <= m <= max_m}


def knockout(max_m: int = LARGE_M, entries=None) -> list[int]:
    """Lengths in [1, max_m) reached by no catalog morphism under any role order."""
    if entries is None:
        entries = catalog.morphisms()
    covered: set[int] = set()
    for e in entries:
        for lengths in set(permutations(e.morphism.lengths)):
            covered |= reachable_lengths(lengths, max_m)
    return [m for m in range(1, max_m) if m not in covered]


def find_recipe(m: int) -> Recipe | None:
    """First recipe hitting ``m``: by morphism id, role order, i, |j|, a before b."""
    for e in catalog.morphisms():
        f = e.morphism
        for roles in ROLE_ORDERS:
            lengths = tuple(len(f.image(x)) for x in roles)
            alpha, beta, gamma, delta = lengths
            for i in range(1, _i_bound(lengths, m) + 1):
                for j in (0, -1, 1):
                    if 3 * i + j in EXCEPTIONS:
                        continue
                    base = (alpha + beta + gamma) * i + alpha * j
                    for target, step, kmax in (("a", delta - alpha, i + j), ("b", delta - beta, i)):
                        if step == 0:
                            k = 0 if base == m else None
                        else:
                            q, r = divmod(m - base, step)
                            k = q if r == 0 and 0 <= q <= kmax else None
                        if k is not None:
                            return Recipe(e.id, roles, i, j, k, target)
    return None


def large_m_recipe(m: int) -> Recipe:
    """Closed-form recipe for m >= 7400 using the 50/50/50/51 morphism.

    Write m = 50 l + k with 0 <= k <= 49 and l = 3i + j; then i >= 49 >= k
    and the b -> d formula gives 150 i + 50 j + k = m.
    """
    if m < LARGE_M:
        raise ValueError(f"closed form needs m >= {LARGE_M}, got {m}")
    ell, k = divmod(m, 50)
    j = (ell + 1) % 3 - 1
    i = (ell - j) // 3
    return Recipe(LARGE_M_MORPHISM, IDENTITY, i, j, k, "b")


def base_word(recipe: Recipe, seed: int = 0) -> CircularWord:
    """The substituted word over {a,b,c,d} the recipe feeds to its morphism."""
    w = arrange_counts(generate_level_ternary(recipe.ternary_length, seed), "a")
    return substitute(w, recipe.target, recipe.k)


def build(recipe: Recipe, base: CircularWord) -> CircularWord:
    f = catalog.morphism(recipe.morphism_id).relabel(recipe.roles)
    return apply_circular(f, base)


@dataclass
class LengthCertificate:
    m: int
    kind: str  # "recipe", "explicit" or "impossible"
    recipe: Recipe | None = None
    base_word: str | None = None
    witness: str | None = None
    stamp: dict | None = None

    def to_dict(self) -> dict:
        r = self.recipe
        return {
            "m": self.m,
            "kind": self.kind,
            "morphism_id": r.morphism_id if r else None,
            "permutation": r.roles if r else None,
            "i": r.i if r else None,
            "j": r.j if r else None,
            "k": r.k if r else None,
            "substitution_target": r.target if r else None,
            "base_word": self.base_word,
            "witness": self.witness,
            "stamp": self.stamp,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> LengthCertificate:
        recipe = None
        if d.get("kind") == "recipe":
            recipe = Recipe(
                d["morphism_id"], d["permutation"], d["i"], d["j"], d["k"],
                d["substitution_target"],
            )
        return cls(d["m"], d["kind"], recipe, d.get("base_word"), d.get("witness"), d.get("stamp"))

    @classmethod
    def from_json(cls, text: str) -> LengthCertificate:
        return cls.from_dict(json.loads(text))


def construct(m: int, seed: int = 0) -> LengthCertificate:
    """A certificate for length ``m``: a verified witness, or impossibility."""
    if m < 0:
        raise ValueError(f"length must be non-negative, got {m}")
    if m in FORBIDDEN:
        outcome = search.decide(m, max_length=m)
        if outcome.exists:
            raise CertificateError(f"search found {outcome.witness} at forbidden length {m}")
        stamp = {"search": "binary prenecklace DFS", "max_length": m,
                 "nodes_explored": outcome.nodes_explored}
        return LengthCertificate(m, "impossible", stamp=stamp)
    fixed = catalog.fixtures()
    if m in fixed:
        return LengthCertificate(m, "explicit", witness=fixed[m].text)
    recipe = large_m_recipe(m) if m >= LARGE_M else find_recipe(m)
    if recipe is None:
        # the formulas miss a few lengths (424) that still have witnesses
        outcome = search.decide(m, max_length=m)
        if not outcome.exists:
            raise CertificateError(f"no circular FS word of length {m}")
        stamp = {"search": "binary prenecklace DFS", "nodes_explored": outcome.nodes_explored}
        return LengthCertificate(m, "explicit", witness=outcome.witness.text, stamp=stamp)
    base = base_word(recipe, seed)
    word = build(recipe, base)
    if len(word) != m or recipe.predicted_length() != m:
        raise CertificateError(f"recipe {recipe} built length {len(word)}, wanted {m}")
    if not is_circular_fs(word):
        raise CertificateError(f"recipe {recipe} built a word that is not circular FS")
    return LengthCertificate(m, "recipe", recipe, base.text, word.text)


def replay(cert: LengthCertificate) -> CircularWord:
    """Rebuild and re-verify the witness; raises CertificateError on any mismatch."""
    if cert.kind == "impossible":
        raise CertificateError(f"length {cert.m} is certified impossible; nothing to replay")
    if cert.kind == "explicit":
        if cert.witness is None:
            raise CertificateError("explicit certificate without a witness")
        word = CircularWord.of(cert.witness, B)
    elif cert.kind == "recipe":
        r = cert.recipe
        if r is None or not r.is_admissible():
            raise CertificateError(f"inadmissible recipe {r}")
        if cert.base_word is None:
            raise CertificateError("recipe certificate without a base word")
        base = CircularWord.of(cert.base_word)
        _check_base(r, base)
        word = build(r, base)
        if cert.witness is not None and CircularWord.of(cert.witness, B) != word:
            raise CertificateError("replayed word differs from the recorded witness")
        if r.predicted_length() != cert.m:
            raise CertificateError(f"recipe predicts {r.predicted_length()}, not {cert.m}")
    else:
        raise CertificateError(f"unknown certificate kind {cert.kind!r}")
    if len(word) != cert.m:
        raise CertificateError(f"witness has length {len(word)}, not {cert.m}")
    if not is_circular_fs(word):
        raise CertificateError("witness is not a circular FS word")
    return word


def _check_base(r: Recipe, base: CircularWord) -> None:
    counts = {x: base.text.count(x) for x in "abcd"}
    want = {"a": r.i + r.j, "b": r.i, "c": r.i, "d": r.k}
    want[r.target] -= r.k
    if counts != want:
        raise CertificateError(f"base word letter counts {counts} != {want}")
    if not is_circular_square_free(base):
        raise CertificateError("base word is not circular square-free")
    # d projects back onto a level ternary word
    if not is_circular_square_free(CircularWord.of(base.text.replace("d", r.target), S)):
        raise CertificateError("base word does not project to a square-free ternary word")
