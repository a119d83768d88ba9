import pytest

from fsword.ternary import (
    EXCEPTIONS, NoSuchWord, SearchExhausted, arrange_counts, generate_level_ternary,
    is_level, search_circular_ternary, substitute,
)
from fsword.words import S, CircularWord, is_circular_square_free, letter_counts

import oracles


def profile(w, letters="abc"):
    return tuple(w.text.count(x) for x in letters)


def test_small_examples():
    assert generate_level_ternary(3).text == "abc"
    assert generate_level_ternary(1).text == "a"
    assert sorted(generate_level_ternary(2).text) == ["a", "b"]
    with pytest.raises(NoSuchWord):
        generate_level_ternary(5)
    with pytest.raises(ValueError):
        generate_level_ternary(0)


def test_n18_is_balanced():
    w = generate_level_ternary(18)
    assert profile(w) == (6, 6, 6)
    assert is_circular_square_free(w)


@pytest.mark.parametrize("n", range(1, 18))
def test_exceptions_by_exhaustive_search(n):
    word, nodes = search_circular_ternary(n, level=False)
    assert (word is None) == (n in EXCEPTIONS)
    if word is not None:
        assert oracles.circular_square_free(word)
    else:
        assert nodes > 0


def test_exception_nine_by_brute_force():
    from itertools import product
    assert not any(oracles.circular_square_free("".join(t)) for t in product("abc", repeat=9))


@pytest.mark.parametrize("n", [n for n in range(1, 121) if n not in EXCEPTIONS])
def test_generated_words_are_level_and_square_free(n):
    w = generate_level_ternary(n)
    assert len(w) == n
    assert is_level(w)
    assert is_circular_square_free(w)
    assert set(w.text) <= set("abc")


def test_generation_is_deterministic():
    assert generate_level_ternary(100, seed=3) == generate_level_ternary(100, seed=3)
    search_a = search_circular_ternary(40, True, "40:3:0", 5000, 2)
    search_b = search_circular_ternary(40, True, "40:3:0", 5000, 2)
    assert search_a == search_b


def test_node_budget():
    with pytest.raises(SearchExhausted):
        search_circular_ternary(14, level=False, node_budget=10)


def test_arrange_counts():
    for n in (4, 8, 20, 22, 31):
        w = arrange_counts(generate_level_ternary(n), "a")
        i = (n + 1) // 3
        j = n - 3 * i
        assert letter_counts(w.text, S) == {"a": i + j, "b": i, "c": i}
        assert is_circular_square_free(w)


def test_substitute_examples():
    w = CircularWord.of("abc", S)
    assert substitute(w, "a", 0).text == "abc"
    assert substitute(w, "a", 1) == CircularWord.of("dbc")
    assert substitute(w, "a", 1).text == "bcd"

    u = substitute(generate_level_ternary(18), "b", 3)
    assert profile(u, "abcd") == (6, 3, 6, 3)
    assert is_circular_square_free(u)


def test_substitute_rejects_bad_arguments():
    w = generate_level_ternary(6)
    with pytest.raises(ValueError):
        substitute(w, "c", 1)
    with pytest.raises(ValueError):
        substitute(w, "a", 3)
    with pytest.raises(ValueError):
        substitute(w, "a", -1)


@pytest.mark.parametrize("n", [4, 11, 25, 40])
def test_every_substitution_stays_square_free(n):
    w = arrange_counts(generate_level_ternary(n), "a")
    for x in "ab":
        for k in range(w.text.count(x) + 1):
            u = substitute(w, x, k)
            assert oracles.circular_square_free(u.text)
            assert u.text.count("d") == k
