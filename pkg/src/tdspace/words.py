"""Duplication-word automaton: stepping, enumeration and exact counting.

A word records the somatic connections of a rearranged genome in genome
order.  One tandem duplication (TD) turns the word ``W`` into

    W(1:a-1) + W(a:b) + n + W(a:b) + W(b+1:end)

where ``(a, b)`` selects the (possibly empty, when ``b == a - 1``) subword
of duplicated connections, and ``n`` is the new connection's number.
Indexing is 1-based and inclusive throughout, matching the usual
subword notation.  The process starts from the one-letter word ``1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .errors import (
    BudgetExceededError,
    DerivationCollisionError,
    IndexOutOfRangeError,
    ParseError,
    ValidationError,
)

#: A word is a tuple of connection numbers, e.g. ``(3, 1, 2, 1)``.
Word = tuple[int, ...]

FIRST_WORD: Word = (1,)

DEFAULT_MAX_N = 6


class DupChoice(NamedTuple):
    """Duplication bounds ``(a, b)``, 1-based inclusive; ``b == a - 1`` is empty."""

    a: int
    b: int


def td_step(word: Sequence[int], choice: DupChoice | tuple[int, int], symbol: int) -> Word:
    """Apply one tandem duplication to ``word``.

    ``choice`` gives the duplicated subword bounds; ``symbol`` is the new
    connection number inserted between the two copies.  Raises
    :class:`IndexOutOfRangeError` when the bounds leave the word
    (valid: ``1 <= a <= len + 1`` and ``a - 1 <= b <= len``).
    """
    a, b = choice
    w = tuple(word)
    m = len(w)
    if not (1 <= a <= m + 1):
        raise IndexOutOfRangeError(f"start index a={a} outside 1..{m + 1} for word of length {m}")
    if not (a - 1 <= b <= m):
        raise IndexOutOfRangeError(f"end index b={b} outside {a - 1}..{m} for a={a}")
    dup = w[a - 1 : b]
    return w[: a - 1] + dup + (symbol,) + dup + w[b:]


def choices_for(word: Sequence[int]) -> Iterator[DupChoice]:
    """All valid duplication choices on ``word``, in lexicographic (a, b) order."""
    m = len(word)
    for a in range(1, m + 2):
        for b in range(a - 1, m + 1):
            yield DupChoice(a, b)


def choice_count(length: int) -> int:
    """Number of duplication choices on a word of the given length."""
    return (length + 1) * (length + 2) // 2


@dataclass(frozen=True)
class WordEvolution:
    """A full derivation: the choice sequence and every intermediate word.

    ``steps[k]`` produces word ``k + 2`` (the first word is always ``1``,
    created by the initial TD which admits no choice).
    """

    steps: tuple[DupChoice, ...]
    words: tuple[Word, ...] = ()

    def __post_init__(self):
        steps = tuple(DupChoice(*s) for s in self.steps)
        object.__setattr__(self, "steps", steps)
        if not self.words:
            words = [FIRST_WORD]
            try:
                for i, step in enumerate(steps):
                    words.append(td_step(words[-1], step, i + 2))
            except IndexOutOfRangeError as exc:
                raise ValidationError(f"invalid step {i + 1} {tuple(step)}: {exc}") from exc
            object.__setattr__(self, "words", tuple(words))

    @property
    def n(self) -> int:
        """Number of tandem duplications."""
        return len(self.steps) + 1

    @property
    def terminal_word(self) -> Word:
        return self.words[-1]

    def __str__(self) -> str:
        return " -> ".join(word_to_text(w) for w in self.words)


def _evolution_unchecked(steps: tuple[DupChoice, ...], words: tuple[Word, ...]) -> WordEvolution:
    ev = object.__new__(WordEvolution)
    object.__setattr__(ev, "steps", steps)
    object.__setattr__(ev, "words", words)
    return ev


def enumerate_word_evolutions(
    n: int,
    prefix: Sequence[tuple[int, int]] = (),
    max_n: int = DEFAULT_MAX_N,
) -> Iterator[WordEvolution]:
    """Yield every derivation with ``n`` TDs, in lexicographic step order.

    ``prefix`` restricts the stream to derivations extending the given
    choice sequence, which is how sweeps are partitioned across workers.
    Enumeration beyond ``max_n`` raises :class:`BudgetExceededError`
    (the level sizes grow faster than exponentially).
    """
    if n < 1:
        raise ValidationError(f"need n >= 1, got {n}")
    if n > max_n:
        raise BudgetExceededError(f"enumeration of {n} TDs exceeds the budget of {max_n}")
    base = WordEvolution(steps=tuple(DupChoice(*p) for p in prefix))
    if base.n > n:
        raise ValidationError(f"prefix of {base.n - 1} steps is too long for n={n}")

    def walk(steps: tuple[DupChoice, ...], words: tuple[Word, ...]) -> Iterator[WordEvolution]:
        if len(words) == n:
            yield _evolution_unchecked(steps, words)
            return
        sym = len(words) + 1
        for c in choices_for(words[-1]):
            yield from walk(steps + (c,), words + (td_step(words[-1], c, sym),))

    yield from walk(base.steps, base.words)


def distinct_words(n: int, max_n: int = DEFAULT_MAX_N) -> set[Word]:
    """The set of words reachable by exactly ``n`` TDs.

    Walks level by level over word *sets* and cross-checks, at every level,
    that the number of derivations matches the number of distinct words
    (each word is supposed to arise from exactly one derivation).  A
    mismatch raises :class:`DerivationCollisionError` rather than deduping
    silently.
    """
    if n < 1:
        raise ValidationError(f"need n >= 1, got {n}")
    if n > max_n:
        raise BudgetExceededError(f"word sweep for {n} TDs exceeds the budget of {max_n}")
    level: set[Word] = {FIRST_WORD}
    for depth in range(2, n + 1):
        expected = sum(choice_count(len(w)) for w in level)
        nxt: set[Word] = set()
        for w in level:
            for c in choices_for(w):
                nxt.add(td_step(w, c, depth))
        if len(nxt) != expected:
            raise DerivationCollisionError(
                f"{expected} derivations produced only {len(nxt)} distinct words at {depth} TDs"
            )
        level = nxt
    return level


@lru_cache(maxsize=None)
def word_count_recursion(m: int, n: int) -> int:
    """Number of distinct words of length ``m`` after ``n`` TDs, by recursion.

    A word of length ``m`` arises from a length-``k`` predecessor in
    ``2k - m + 2`` ways (the duplicated subword has length ``m - k - 1``),
    so ``w(m, n) = sum_k (2k - m + 2) * w(k, n-1)`` over
    ``k = floor((m-1)/2) .. m-1``, anchored at ``w(0, 0) = 1``.
    """
    if m < 0 or n < 0:
        return 0
    if n == 0:
        return 1 if m == 0 else 0
    total = 0
    for k in range((m - 1) // 2 if m > 0 else 0, m):
        coeff = 2 * k - m + 2
        if coeff > 0:
            total += coeff * word_count_recursion(k, n - 1)
    return total


def word_count_row(n: int) -> dict[int, int]:
    """Nonzero word counts by length for ``n`` TDs (keys ``n .. 2**n - 1``)."""
    if n < 1:
        raise ValidationError(f"need n >= 1, got {n}")
    row = {}
    for m in range(n, 2**n):
        c = word_count_recursion(m, n)
        if c:
            row[m] = c
    return row


def word_count_total(n: int) -> int:
    """Total number of distinct words (equivalently derivations) after ``n`` TDs."""
    return sum(word_count_row(n).values())


def word_to_text(word: Sequence[int]) -> str:
    """Render a word: digit string while all symbols are single-digit."""
    if word and max(word) > 9:
        return ",".join(str(x) for x in word)
    return "".join(str(x) for x in word)


def word_from_text(text: str) -> Word:
    """Inverse of :func:`word_to_text`."""
    text = text.strip()
    if not text:
        raise ParseError("empty word")
    try:
        if "," in text:
            return tuple(int(part) for part in text.split(","))
        return tuple(int(ch) for ch in text)
    except ValueError as exc:
        raise ParseError(f"bad word text {text!r}") from exc


def parse_evolution(text: str) -> WordEvolution:
    """Parse the canonical JSON form ``{"steps": [[a, b], ...]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", position=exc.pos) from exc
    if not isinstance(doc, dict) or "steps" not in doc:
        raise ValidationError("expected an object with a 'steps' field")
    steps = doc["steps"]
    if not isinstance(steps, list):
        raise ValidationError("'steps' must be a list of [a, b] pairs")
    parsed = []
    for i, entry in enumerate(steps):
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry)
        ):
            raise ValidationError(f"step {i} is not an [a, b] integer pair: {entry!r}")
        parsed.append(DupChoice(*entry))
    return WordEvolution(steps=tuple(parsed))


def format_evolution(ev: WordEvolution) -> str:
    """Canonical JSON form; ``parse_evolution`` round-trips it."""
    return json.dumps({"steps": [[c.a, c.b] for c in ev.steps]}, separators=(",", ":"))
