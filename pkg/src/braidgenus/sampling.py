"""Seeded random braids.

Every sampler takes an explicit seed and builds its own ``random.Random``,
so a (seed, stream, index) triple always names the same word regardless of
evaluation order.
"""

from __future__ import annotations

import random

from .braid import BraidError, BraidWord, band_generator


def stream(seed: int, name: str, index: int = 0) -> random.Random:
    return random.Random(f"{seed}/{name}/{index}")


def _check(n: int, length: int) -> None:
    if n < 2:
        raise BraidError(f"a braid needs at least 2 strands, got {n}")
    if length < 0:
        raise ValueError(f"length must be non-negative, got {length}")


def random_letters(rng: random.Random, n: int, length: int) -> tuple[int, ...]:
    return tuple(rng.randint(1, n - 1) * rng.choice((1, -1)) for _ in range(length))


def random_braid(n: int, max_len: int, seed: int) -> BraidWord:
    """Word of uniform length in [0, max_len], letters uniform in index and sign."""
    _check(n, max_len)
    rng = stream(seed, "braid")
    return BraidWord(n, random_letters(rng, n, rng.randint(0, max_len)))


def random_band_product(n: int, m: int, seed: int) -> BraidWord:
    """Product of ``m`` positive band generators a_{i,j}, each pair uniform."""
    _check(n, m)
    rng = stream(seed, "bands")
    pairs = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    letters: tuple[int, ...] = ()
    for _ in range(m):
        letters += band_generator(n, *rng.choice(pairs)).letters
    return BraidWord(n, letters)


def relation_move(rng: random.Random, letters: list[int], n: int) -> list[int]:
    """Apply one random defining relation of B_n somewhere in the word.

    The moves are: insert a cancelling pair, delete one, swap commuting
    letters, or rewrite s_i s_j s_i <-> s_j s_i s_j (|i-j| = 1, both
    signs). Moves that do not apply at the chosen spot fall back to an
    insertion, so the element is always preserved.
    """
    w = list(letters)
    kind = rng.randrange(4)
    if w and kind == 1:
        spots = [p for p in range(len(w) - 1) if w[p] == -w[p + 1]]
        if spots:
            p = rng.choice(spots)
            return w[:p] + w[p + 2 :]
    if len(w) >= 2 and kind == 2:
        spots = [p for p in range(len(w) - 1) if abs(abs(w[p]) - abs(w[p + 1])) >= 2]
        if spots:
            p = rng.choice(spots)
            w[p], w[p + 1] = w[p + 1], w[p]
            return w
    if len(w) >= 3 and kind == 3:
        spots = [
            p
            for p in range(len(w) - 2)
            if w[p] == w[p + 2]
            and abs(abs(w[p]) - abs(w[p + 1])) == 1
            and (w[p] > 0) == (w[p + 1] > 0)
        ]
        if spots:
            p = rng.choice(spots)
            a, b = w[p], w[p + 1]
            w[p : p + 3] = [b, a, b]
            return w
    g = rng.randint(1, n - 1) * rng.choice((1, -1))
    p = rng.randint(0, len(w))
    return w[:p] + [g, -g] + w[p:]


def random_equivalent(w: BraidWord, moves: int, rng: random.Random) -> BraidWord:
    letters = list(w.letters)
    for _ in range(moves):
        letters = relation_move(rng, letters, w.strands)
    return BraidWord(w.strands, tuple(letters))
