# coding: utf-8

# # Deleting the first TD, and the fibers it induces
#
# Undoing the *first* duplication of an (n+1)-TD evolution leaves an
# n-TD evolution.  That deletion map organizes level n+1 into fibers —
# one fiber over each shorter evolution — and every fiber has the same
# size.  Chasing that recurrence gives a closed form for the number of
# evolutions at any depth, no enumeration required.

from tdspace import (
    WordEvolution,
    build_2d_tree,
    closed_form,
    count_extensions_formula,
    delete_first_td,
    enumerate_word_evolutions,
    format_evolution,
    induced_evolutions,
    induced_major_graph,
    major_graph,
    one_nodeset_of,
    total_evolutions_via_words,
    word_to_text,
)

# ## The deletion map
#
# Start from a five-TD evolution and strip its first duplication.  The
# surviving TDs renumber down by one, and steps that referenced copies
# made by TD 1 get rewritten onto the segments TD 1 duplicated:

ev_prime = WordEvolution(steps=((2, 1), (1, 2), (1, 1), (4, 5)))
ev = delete_first_td(ev_prime)
print(f"  {format_evolution(ev_prime)}")
print(f"  deletes to {format_evolution(ev)}")

# ## Fibers partition the next level
#
# induced_evolutions(ev) lists every one-TD-longer derivation whose
# deletion is ev.  Together those fibers tile the whole next level:

base = WordEvolution(steps=())
fiber = induced_evolutions(base)
for member in fiber:
    print(f"  over the first duplication: {format_evolution(member)}")

level2 = list(enumerate_word_evolutions(2))
covered = [e2 for e1 in enumerate_word_evolutions(1) for e2 in induced_evolutions(e1)]
assert sorted(covered, key=repr) == sorted(level2, key=repr)
print(f"  level 2 ({len(level2)} derivations) is tiled by the fibers over level 1")

# ## One-nodesets: where TD 1 threads through the longer tree
#
# Each fiber member e' marks a set of breakpoints that its first TD is
# responsible for; both breakpoints of node 1 are always in.  The worked
# pair:

nodeset = one_nodeset_of(ev, ev_prime)
print(f"  one-nodeset of the worked pair: {sorted(str(v) for v in nodeset)}")

# ## Two routes to the longer evolution's structure
#
# The major graph of ev_prime can be computed directly from its own
# tree, or rebuilt from the *shorter* tree by grafting the one-nodeset
# back in (shift the labels, swap the touched edges).  They must agree:

direct = major_graph(build_2d_tree(ev_prime))
rewritten = induced_major_graph(build_2d_tree(ev), nodeset)
assert direct == rewritten
print("  rewritten major graph == direct major graph")

# ## The recurrence, and the closed form
#
# Every fiber over level n sums to count(e) * (4^(n+1) - (2(n+1)+1))
# extension-weighted members, so the level totals satisfy a clean
# product recurrence.  Multiplying it out:

for n in range(5):
    print(f"  n={n}: {closed_form(n)} evolutions")

# ...and the closed form matches brute-force enumeration as far as the
# enumerator can reach:

for n in range(1, 4):
    assert total_evolutions_via_words(n) == closed_form(n)
print("  closed form confirmed against enumeration for n <= 3")

# Extension counts tie the story together: the fiber over the one-TD
# evolution has three members whose extension counts (3, 5, 3) sum to
# 11 = closed_form(2) / closed_form(1).

total = 0
for member in fiber:
    c = count_extensions_formula(major_graph(build_2d_tree(member))).value
    total += c
    print(f"  {word_to_text(member.terminal_word):>4}: {c} extensions")
print(f"  fiber sum: {total}")
