"""Word automaton: stepping, enumeration, counting, serialization."""

import random

import pytest

from tdspace import (
    BudgetExceededError,
    DupChoice,
    IndexOutOfRangeError,
    ParseError,
    ValidationError,
    WordEvolution,
    choice_count,
    choices_for,
    distinct_words,
    enumerate_word_evolutions,
    format_evolution,
    parse_evolution,
    td_step,
    word_count_recursion,
    word_count_row,
    word_count_total,
    word_from_text,
    word_to_text,
)

WORD_TOTALS = {1: 1, 2: 3, 3: 22, 4: 377, 5: 15315, 6: 1539281}


def test_td_step_worked_examples():
    assert td_step((1,), (1, 1), 2) == (1, 2, 1)
    assert td_step((1,), (1, 0), 2) == (2, 1)
    assert td_step((1,), (2, 1), 2) == (1, 2)
    # duplicating an inner subword keeps both flanks
    assert td_step((1, 2, 1), (2, 3), 4) == (1, 2, 1, 4, 2, 1)


def test_td_step_length_identity():
    rng = random.Random(4)
    word = (1,)
    for sym in range(2, 12):
        options = list(choices_for(word))
        a, b = options[rng.randrange(len(options))]
        new = td_step(word, (a, b), sym)
        assert len(new) == len(word) + (b - a + 1) + 1
        assert new.count(sym) == 1
        word = new


@pytest.mark.parametrize("choice", [(0, 0), (1, 2), (3, 1), (2, 0), (-1, -1)])
def test_td_step_rejects_out_of_range(choice):
    with pytest.raises(IndexOutOfRangeError):
        td_step((1,), choice, 2)


def test_choice_count_matches_enumeration():
    for word in [(1,), (1, 2, 1), (3, 1, 2, 1), (1, 2, 1, 4, 2, 1)]:
        options = list(choices_for(word))
        assert len(options) == choice_count(len(word))
        assert len(set(options)) == len(options)
    assert choice_count(1) == 3
    assert choice_count(3) == 10


def test_evolution_replays_words():
    ev = WordEvolution(steps=((1, 1), (1, 0), (2, 3)))
    assert ev.n == 4
    assert [word_to_text(w) for w in ev.words] == ["1", "121", "3121", "3124121"]
    assert ev.terminal_word == (3, 1, 2, 4, 1, 2, 1)
    assert str(ev) == "1 -> 121 -> 3121 -> 3124121"


def test_evolution_rejects_invalid_step():
    with pytest.raises(ValidationError):
        WordEvolution(steps=((5, 5),))
    with pytest.raises(ValidationError):
        WordEvolution(steps=((1, 1), (9, 9)))


def test_level_sizes_and_word_bijection():
    """Each derivation reaches its own word, so levels count both."""
    for n in range(1, 5):
        evolutions = list(enumerate_word_evolutions(n))
        words = {ev.terminal_word for ev in evolutions}
        assert len(evolutions) == WORD_TOTALS[n]
        assert len(words) == WORD_TOTALS[n]


def test_enumeration_with_prefix_partitions_level():
    level = {tuple(ev.steps) for ev in enumerate_word_evolutions(3)}
    seen = set()
    for first in choices_for((1,)):
        part = {tuple(ev.steps) for ev in enumerate_word_evolutions(3, prefix=(first,))}
        assert all(steps[0] == first for steps in part)
        assert not part & seen
        seen |= part
    assert seen == level


def test_enumeration_budget():
    with pytest.raises(BudgetExceededError):
        list(enumerate_word_evolutions(7))
    with pytest.raises(BudgetExceededError):
        distinct_words(6, max_n=5)
    with pytest.raises(ValidationError):
        list(enumerate_word_evolutions(0))


def test_word_count_recursion_against_enumeration():
    for n in range(1, 5):
        counts = {}
        for w in distinct_words(n):
            counts[len(w)] = counts.get(len(w), 0) + 1
        assert word_count_row(n) == counts


def test_word_count_row_frozen_n3():
    assert word_count_row(3) == {3: 6, 4: 8, 5: 5, 6: 2, 7: 1}
    assert word_count_recursion(5, 3) == 5


def test_word_count_totals():
    for n, total in WORD_TOTALS.items():
        assert word_count_total(n) == total


def test_length_five_words_at_level_three():
    words = sorted(word_to_text(w) for w in distinct_words(3) if len(w) == 5)
    assert words == ["12131", "12312", "12321", "13121", "21321"]


def test_word_text_roundtrip():
    assert word_to_text((1, 2, 1)) == "121"
    assert word_from_text("121") == (1, 2, 1)
    long_word = tuple(range(1, 12))
    assert word_from_text(word_to_text(long_word)) == long_word
    with pytest.raises(ParseError):
        word_from_text("")
    with pytest.raises(ParseError):
        word_from_text("1,x,3")


def test_evolution_json_roundtrip():
    ev = WordEvolution(steps=((1, 1), (1, 0), (2, 3)))
    assert parse_evolution(format_evolution(ev)) == ev
    assert format_evolution(ev) == '{"steps":[[1,1],[1,0],[2,3]]}'


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[1, 2]",
        '{"steps": "nope"}',
        '{"steps": [[1]]}',
        '{"steps": [[1, true]]}',
        '{"stepz": []}',
    ],
)
def test_parse_evolution_rejects_malformed(text):
    with pytest.raises((ParseError, ValidationError)):
        parse_evolution(text)


def test_random_replays_are_deterministic():
    rng = random.Random(99)
    for _ in range(25):
        steps = []
        word = (1,)
        for sym in range(2, 2 + rng.randrange(1, 5)):
            options = list(choices_for(word))
            steps.append(options[rng.randrange(len(options))])
            word = td_step(word, steps[-1], sym)
        ev = WordEvolution(steps=tuple(steps))
        assert ev.terminal_word == word
        assert ev == WordEvolution(steps=tuple(steps))
