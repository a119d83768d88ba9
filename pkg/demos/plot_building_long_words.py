"""
Building long circular FS words from ternary ones
=================================================

Start from a circular square-free word over {a, b, c}, swap some a's (or
b's) for a fourth letter d, then push the result through one of the
catalog morphisms.  The image is a circular FS word whose length is fixed
by the letter counts, so choosing the counts chooses the length.
"""

from fsword import catalog
from fsword.constructor import Recipe, build, construct, replay
from fsword.morphism import certify_hn
from fsword.ternary import arrange_counts, generate_level_ternary, substitute
from fsword.words import is_circular_fs

f16 = catalog.morphism(16)
print("image lengths of f16:", f16.lengths)
print(certify_hn(f16).describe())

# length 20 = 3*7 - 1, so one letter occurs 6 times; arrange_counts makes it a
w = arrange_counts(generate_level_ternary(20))
print(w.text, {x: w.text.count(x) for x in "abc"})

# replace three b's by d; every prefix of b's keeps it square-free
u = substitute(w, "b", 3)
print(u.text)

# lengths 50, 50, 50, 51: the image has 50 * 20 + 3 = 1003 symbols
recipe = Recipe(16, "abcd", i=7, j=-1, k=3, target="b")
mine = build(recipe, u)
print(recipe.predicted_length(), len(mine), is_circular_fs(mine))

# the constructor searches the whole catalog and may pick another morphism
cert = construct(1003)
word = replay(cert)
print(len(word), is_circular_fs(word))
print(cert.to_json()[:160], "...")

# the same machinery scales: m = 7400 uses the closed form for large m
big = construct(7400)
print(big.recipe, len(replay(big)))

