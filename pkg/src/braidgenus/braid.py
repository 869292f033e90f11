"""
Braid words on n strands.

A word is stored as a tuple of nonzero signed integers: the letter ``i``
stands for the Artin generator sigma_i and ``-i`` for its inverse. Strand
labels and generator indices are 1-based throughout, so a word on ``n``
strands only uses indices 1, ..., n-1.

Nothing here normalises a word behind the caller's back. Free reduction,
handle reduction (see :mod:`braidgenus.ordering`) and friends are explicit
calls that return new words.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple


class BraidError(ValueError):
    """Invalid braid data or an operation mixing strand counts."""


class BraidParseError(BraidError):
    """Text that does not match the ``B<n>: <g1> <g2> ...`` grammar."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at column {position + 1}\n  {text}\n  {' ' * position}^")


class Letter(NamedTuple):
    index: int
    sign: int

    @classmethod
    def from_int(cls, g: int) -> Letter:
        return cls(abs(g), 1 if g > 0 else -1)

    def to_int(self) -> int:
        return self.index * self.sign


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 2:
            raise BraidError(f"a braid needs at least 2 strands, got {self.strands!r}")
        letters = tuple(self.letters)
        for g in letters:
            if g == 0 or abs(g) >= self.strands:
                raise BraidError(f"letter {g} is not a generator of B_{self.strands}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_letters(cls, strands: int, letters: Iterable[Letter]) -> BraidWord:
        return cls(strands, tuple(Letter(*x).to_int() for x in letters))

    def iter_letters(self) -> Iterator[Letter]:
        return (Letter.from_int(g) for g in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else inverse(self)
        return BraidWord(self.strands, base.letters * abs(k))

    def __str__(self) -> str:
        return format_braid(self)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., n}; ``images[p - 1]`` is the image of p."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __call__(self, p: int) -> int:
        return self.images[p - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first and ``other`` second."""
        return Permutation(tuple(other(x) for x in self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cycle = []
            p = start
            while p not in seen:
                seen.add(p)
                cycle.append(p)
                p = self(p)
            out.append(tuple(cycle))
        return out

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))


def _check_same_strands(a: BraidWord, b: BraidWord) -> None:
    if a.strands != b.strands:
        raise BraidError(f"strand counts differ: B_{a.strands} vs B_{b.strands}")


def free_reduce_letters(letters: Iterable[int]) -> list[int]:
    stack: list[int] = []
    for g in letters:
        if stack and stack[-1] == -g:
            stack.pop()
        else:
            stack.append(g)
    return stack


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent ``g, -g`` pairs until none remain (one stack pass)."""
    return BraidWord(w.strands, tuple(free_reduce_letters(w.letters)))


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-g for g in reversed(w.letters)))


def concat(*words: BraidWord) -> BraidWord:
    if not words:
        raise BraidError("concat needs at least one word")
    for w in words[1:]:
        _check_same_strands(words[0], w)
    return BraidWord(words[0].strands, sum((w.letters for w in words), ()))


def conjugate(w: BraidWord, g: BraidWord) -> BraidWord:
    """Return g w g^-1."""
    return concat(g, w, inverse(g))


def embed(w: BraidWord, strands: int) -> BraidWord:
    """The same letters read in a braid group with at least as many strands."""
    if strands < w.strands:
        raise BraidError(f"cannot embed B_{w.strands} into B_{strands}")
    return BraidWord(strands, w.letters)


def garside_delta(n: int) -> BraidWord:
    """The half twist (s1...s_{n-1})(s1...s_{n-2})...(s1 s2)(s1)."""
    if n < 2:
        raise BraidError(f"a braid needs at least 2 strands, got {n}")
    letters = tuple(i for top in range(n - 1, 0, -1) for i in range(1, top + 1))
    return BraidWord(n, letters)


def delta_power(n: int, k: int) -> BraidWord:
    return garside_delta(n) ** k


def band_generator(n: int, i: int, j: int) -> BraidWord:
    """a_{i,j} = (s_i ... s_{j-2}) s_{j-1} (s_{j-2}^-1 ... s_i^-1)."""
    if not 1 <= i < j <= n:
        raise BraidError(f"band generator a_({i},{j}) needs 1 <= i < j <= {n}")
    head = tuple(range(i, j - 1))
    return BraidWord(n, head + (j - 1,) + tuple(-g for g in reversed(head)))


def permutation(w: BraidWord) -> Permutation:
    """Image in S_n; position p at the top of the braid ends at ``perm(p)``."""
    at = list(range(w.strands + 1))  # at[pos] = starting strand now at pos
    for g in w.letters:
        i = abs(g)
        at[i], at[i + 1] = at[i + 1], at[i]
    images = [0] * w.strands
    for pos in range(1, w.strands + 1):
        images[at[pos] - 1] = pos
    return Permutation(tuple(images))


def closure_components(w: BraidWord) -> int:
    return len(permutation(w).cycles())


def is_knot(w: BraidWord) -> bool:
    return closure_components(w) == 1


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if g > 0 else -1 for g in w.letters)


def sigma1_counts(w: BraidWord) -> tuple[int, int]:
    """Number of sigma_1 and of sigma_1^-1 letters in this representative."""
    return w.letters.count(1), w.letters.count(-1)


_HEADER = re.compile(r"\s*B(\d+)\s*:")
_TOKEN = re.compile(r"\S+")


def parse_braid(text: str) -> BraidWord:
    """Parse ``B<n>: <g1> <g2> ...``, e.g. ``"B2: 1 1 1"`` for the trefoil."""
    m = _HEADER.match(text)
    if m is None:
        raise BraidParseError("expected 'B<n>:'", text, 0)
    n = int(m.group(1))
    if n < 2:
        raise BraidParseError(f"strand count must be at least 2, got {n}", text, m.start(1))
    letters = []
    for tok in _TOKEN.finditer(text, m.end()):
        try:
            g = int(tok.group())
        except ValueError:
            raise BraidParseError(f"not an integer: {tok.group()!r}", text, tok.start()) from None
        if g == 0:
            raise BraidParseError("generator 0 does not exist", text, tok.start())
        if abs(g) >= n:
            raise BraidParseError(f"generator {g} out of range for B{n}", text, tok.start())
        letters.append(g)
    return BraidWord(n, tuple(letters))


def format_braid(w: BraidWord) -> str:
    body = " ".join(str(g) for g in w.letters)
    return f"B{w.strands}: {body}" if body else f"B{w.strands}:"
