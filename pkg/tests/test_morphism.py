import random

import pytest

from fsword import catalog
from fsword.morphism import (
    Condition2Failure, Morphism, apply, apply_circular, certify_hn,
    check_condition1, check_condition2, square_free_triples,
)
from fsword.ternary import generate_level_ternary
from fsword.words import Alphabet, CircularWord, T, Word, is_circular_fs, is_fs_word

import oracles

F16_A = "01100111000101110010110001011100011001011000111001"
SAMPLED = (0, 7, 16, 27, 32)


def random_square_free(rng, alphabet, n):
    """Random square-free word by retrying letters; gives up on dead ends."""
    w = ""
    while len(w) < n:
        options = [x for x in alphabet if oracles.square_free(w + x)]
        if not options:
            return w
        w += rng.choice(options)
    return w


def square_free_words(alphabet, n):
    words = [""]
    for _ in range(n):
        words = [w + x for w in words for x in alphabet if oracles.square_free(w + x)]
    return words


def test_apply_examples():
    f16 = catalog.morphism(16)
    assert apply(f16, "a").text == F16_A
    assert apply(f16, Word("", T)).text == ""
    assert len(apply(catalog.morphism(10), "abdcd")) == 253


def test_apply_is_a_homomorphism():
    f = catalog.morphism(3)
    rng = random.Random(1)
    for _ in range(50):
        u = "".join(rng.choice("abcd") for _ in range(rng.randint(0, 8)))
        v = "".join(rng.choice("abcd") for _ in range(rng.randint(0, 8)))
        assert apply(f, u + v).text == apply(f, u).text + apply(f, v).text
        assert len(apply(f, u)) == sum(len(f.image(x)) * u.count(x) for x in "abcd")


def test_apply_rejects_foreign_letters():
    with pytest.raises(ValueError):
        apply(catalog.morphism(0), "abe")


def test_apply_circular_examples():
    assert len(apply_circular(catalog.morphism(27), "abdcd")) == 232
    assert len(apply_circular(catalog.morphism(29), "abdcd")) == 241
    f = catalog.morphism(5)
    assert apply_circular(f, "a") == CircularWord.of(f.image("a"))


def test_apply_circular_well_defined():
    f = catalog.morphism(12)
    assert apply_circular(f, "abdcd") == apply_circular(f, "cdabd")


def test_square_free_triples():
    triples = square_free_triples(T)
    assert len(triples) == 36
    assert all(oracles.square_free(t) for t in triples)


def test_condition1_failure_example():
    f = Morphism(("01", "01", "0", "1"))
    # f(aba) = 010101 contains 1010
    assert check_condition1(f) == Word("aba", T)
    assert not is_fs_word(apply(f, "aba"))


def test_condition1_needs_three_letters():
    with pytest.raises(ValueError):
        check_condition1(Morphism(("0", "1"), Alphabet("ab", "ab")))


def test_condition2_examples():
    f16 = catalog.morphism(16)
    from os.path import commonprefix
    p = commonprefix(list(f16.images))
    assert check_condition2(f16, p) is None

    f = Morphism(("0110", "0110110"), Alphabet("ab", "ab"))
    # 011 sits at position 4 of f(b), i.e. position 8 of f(a)f(b)
    assert "0110110".find("011", 1) == 3
    assert check_condition2(f, "011") == Condition2Failure("ab", 8)

    g = Morphism(("0110", "1110", "0111", "0110"))
    assert check_condition2(g, "011") == Condition2Failure("b", None)

    with pytest.raises(ValueError):
        check_condition2(f16, "01")


def test_certify_f16():
    report = certify_hn(catalog.morphism(16))
    assert report.passed
    assert catalog.morphism(16).lengths == (50, 50, 50, 51)
    assert report.prefix_length >= 3
    assert all(img.startswith(report.synchronizer) for img in catalog.morphism(16).images)


def test_certify_short_common_prefix_fails():
    f = Morphism(("0110", "1001", "0111", "1000"))
    report = certify_hn(f)
    assert not report.passed
    assert report.failing_witness is not None


@pytest.mark.parametrize("r", range(33))
def test_catalog_morphisms_certify(r):
    f = catalog.raw_morphism(r)
    assert check_condition1(f) is None
    assert certify_hn(f).passed


def test_pairwise_check_matches_long_words():
    rng = random.Random(11)
    for e in catalog.morphisms():
        f, p = e.morphism, e.report.synchronizer
        for _ in range(10):
            w = random_square_free(rng, "abcd", rng.randint(1, 8))
            image = apply(f, w).text
            boundaries = set()
            pos = 0
            for x in w:
                boundaries.add(pos)
                pos += len(f.image(x))
            found = {i for i in range(len(image)) if image.startswith(p, i)}
            assert found == boundaries


def test_certified_morphisms_map_square_free_to_fs():
    short = [w for n in range(1, 6) for w in square_free_words("abcd", n)]
    rng = random.Random(5)
    sample = [random_square_free(rng, "abcd", rng.randint(6, 10)) for _ in range(200)]
    for r in SAMPLED:
        f = catalog.morphism(r)
        for w in short + sample:
            assert is_fs_word(apply(f, w)), (r, w)


def test_non_square_free_source_can_fail():
    # a square in the source gives a long square in the image
    assert not is_fs_word(apply(catalog.morphism(16), "abab"))


def test_circular_transfer():
    rng = random.Random(9)
    words = []
    while len(words) < 40:
        n = rng.randint(2, 10)
        w = random_square_free(rng, "abcd", n)
        if len(w) == n and oracles.circular_square_free(w):
            words.append(w)
    for r in SAMPLED:
        f = catalog.morphism(r)
        for w in words:
            assert is_circular_fs(apply_circular(f, w)), (r, w)


def test_circular_transfer_from_ternary_generator():
    f = catalog.morphism(16)
    for n in (2, 3, 4, 6, 8, 11, 20, 31):
        assert is_circular_fs(apply_circular(f, generate_level_ternary(n)))


def test_relabel():
    f = catalog.morphism(0)
    g = f.relabel("dcba")
    assert g.images == tuple(reversed(f.images))
    assert certify_hn(g).passed
    with pytest.raises(ValueError):
        f.relabel("aabc")


def test_morphism_validation():
    with pytest.raises(ValueError):
        Morphism(("0", "1", "01"))
    with pytest.raises(ValueError):
        Morphism(("0", "", "01", "1"))
    with pytest.raises(ValueError):
        Morphism(("0", "2", "01", "1"))
