# coding: utf-8

# # Duplication words
#
# A tandem duplication (TD) copies a contiguous stretch of the genome and
# pastes the copy right next to the original.  Reading off the *somatic*
# connections (the novel junctions) along the rearranged genome gives a
# word of integers, and every TD rewrites that word by a simple rule:
#
#     W  ->  W(1:a-1) + W(a:b) + n + W(a:b) + W(b+1:end)
#
# The duplicated subword W(a:b) may be empty (b == a-1), in which case the
# new connection lands between two existing ones.  Everything in this demo
# is exact integer combinatorics.

from tdspace import (
    WordEvolution,
    choice_count,
    choices_for,
    distinct_words,
    enumerate_word_evolutions,
    td_step,
    word_count_row,
    word_count_total,
    word_to_text,
)

# ## Stepping by hand
#
# The process starts at the one-letter word "1".  Three choices exist on a
# one-letter word, and each gives a different two-TD word:

word = (1,)
for choice in choices_for(word):
    print(f"  (a,b)={tuple(choice)}  ->  {word_to_text(td_step(word, choice, 2))}")

# The number of choices on a word of length L is (L+1)(L+2)/2 — pick the
# two cut positions among L+1 slots, order-free, plus the L+1 "empty copy"
# options:

for length in (1, 3, 7):
    print(f"  length {length}: {choice_count(length)} choices")

# ## A full derivation
#
# A WordEvolution replays its choice sequence and keeps every intermediate
# word.  Invalid steps are rejected at construction time.

ev = WordEvolution(steps=((1, 1), (1, 0), (2, 3)))
print(ev)  # 1 -> 121 -> 3121 -> 3124121

# ## How many words are there?
#
# Distinct words after n TDs can be counted two independent ways: explicit
# enumeration of derivations (deduplicating terminal words), or an exact
# recursion on (length, n).  They agree, level by level and length by
# length:

for n in range(1, 5):
    enumerated = len(distinct_words(n))
    total = word_count_total(n)
    assert enumerated == total
    print(f"  n={n}: {total} distinct words")

# The per-length profile of level 3 — six words of length 3 up to the
# single length-7 word:

print(word_count_row(3))

# Every derivation reaches its own word: the number of derivations at a
# level equals the number of distinct words, so words are faithful
# fingerprints of their histories.

level = list(enumerate_word_evolutions(3))
assert len(level) == len({e.terminal_word for e in level}) == 22
print(f"level 3: {len(level)} derivations, all terminal words distinct")

# The recursion scales far beyond enumeration; level 6 has 1.5 million
# words and costs nothing to count:

print(f"level 6 total: {word_count_total(6)}")
