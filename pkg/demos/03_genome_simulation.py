# coding: utf-8

# # Simulating tandem duplications on an explicit genome
#
# The word automaton abstracts a genome into segment multiplicities.  The
# simulator keeps the genome itself: a sequence of reference segments,
# where each TD picks two breakpoints (possibly between *copies* made by
# earlier TDs) and duplicates everything in between.  Because distinct
# breakpoint choices can produce the same sequence, the simulator is an
# independent route to the same level counts — and it also measures
# things the abstraction forgets, like copy-number profiles.

from tdspace import (
    apply_td,
    enumerate_choices,
    enumerate_process,
    initial_state,
    tabulate,
    word_of,
)

# ## One process step at a time
#
# The initial genome is a single reference segment; a TD needs a start
# and an end breakpoint, and at the start there is only one spot for
# each... so exactly one choice:

state = initial_state()
print(f"  initial choices: {len(enumerate_choices(state))}")

first = enumerate_choices(state)[0]
state = apply_td(state, first)
print(f"  after TD 1: {len(enumerate_choices(state))} choices")

# Eleven choices after one TD.  Note that this matches the number of
# two-TD *evolutions*, not the number of two-TD words (3): several
# breakpoint placements collapse onto the same word.

# ## Words fall out of the simulation
#
# Replaying the breakpoint history of any simulated state recovers a
# word-automaton derivation, which is how the two routes are reconciled:

for choice in enumerate_choices(state)[:4]:
    nxt = apply_td(state, choice)
    print(f"  choice {choice} -> word {word_of(nxt)}")

# ## The cross-check table
#
# tabulate(n) runs the whole process to depth n and counts four things
# at that level: distinct terminal words, distinct copy-number profiles,
# distinct breakpoint-graph structures, and distinct evolutions.  Words
# must agree with the automaton's count, and evolutions must agree with
# the extension-counting formula.

for n in (1, 2, 3):
    row = tabulate(n)
    print(
        f"  n={row.n}: words={row.words} cnvs={row.cnvs} "
        f"td_graphs={row.td_graphs} evolutions={row.evolutions} "
        f"paths={row.paths}"
    )

# paths == evolutions at every level: the process never reaches the same
# evolution along two different routes, so counting evolutions really is
# counting process histories.

# ## Deterministic parallelism
#
# The level walk partitions by first-level choice, so worker processes
# shard cleanly and the table is identical regardless of worker count:

assert tabulate(3, workers=3) == tabulate(3)
print("  workers=3 reproduces the single-process table")

# ## A peek at raw records
#
# enumerate_process yields every distinct (genome, history) pair with the
# per-TD genome snapshots:

rec = next(iter(enumerate_process(2)))
print(f"  a two-TD record carries {len(rec.genomes)} genome snapshots")
