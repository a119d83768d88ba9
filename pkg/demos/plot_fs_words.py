"""
Words with only three squares
=============================

A binary word is FS when the only squares it contains are 00, 11 and
0101.  Here we look at a few linear and circular examples and count
circular ones of small length.
"""

from fsword import CircularWord, find_squares, is_circular_fs, is_fs_word
from fsword.words import first_non_fs_square
from fsword.search import decide

# squares are reported 1-based with their period and root
for w in ["00010111", "0011001", "01010"]:
    print(w, is_fs_word(w), [(s.index, s.period, s.root) for s in find_squares(w)])

# a circular word is FS when every rotation is; 000101 fails because
# reading round the end from position 4 gives 1010
cw = CircularWord.of("000101")
print(cw.text, is_circular_fs(cw), first_non_fs_square(cw.text, circular=True))
print(CircularWord.of("1011000").text, is_circular_fs("1011000"))

# how many necklaces of each length are circular FS?
for m in range(0, 21):
    out = decide(m, want_count=True)
    print(out.line())
