"""
The Dehornoy ordering via handle reduction.

A sigma_i-handle is a subword ``s_i^e u s_i^-e`` where every letter of ``u``
has index greater than i. Reducing it deletes the two ends and conjugates
the interior: each ``s_{i+1}^d`` becomes ``s_{i+1}^-e s_i^d s_{i+1}^e`` and
higher letters are left alone. A handle may only be reduced when its
interior holds no sigma_{i+1}-handle, so the engine descends into the
leftmost nested handle until it reaches a permitted one.

A word without handles is empty or sigma-definite: its lowest generator
occurs with one sign only. That sign decides ``a <_D b`` for ``a^-1 b``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .braid import (
    BraidError,
    BraidWord,
    _check_same_strands,
    delta_power,
    free_reduce_letters,
)

DEFAULT_STEP_LIMIT = 10**7


class ReductionLimitError(RuntimeError):
    """Handle reduction ran past its step budget; a bug, not a long input."""


class FloorSearchError(RuntimeError):
    pass


class OrderResult(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"

    def reversed(self) -> OrderResult:
        return _REVERSED[self]


_REVERSED = {
    OrderResult.LESS: OrderResult.GREATER,
    OrderResult.EQUAL: OrderResult.EQUAL,
    OrderResult.GREATER: OrderResult.LESS,
}


class SigmaKind(enum.Enum):
    EMPTY = "empty"
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class SigmaClass:
    kind: SigmaKind
    main_index: int | None = None


@dataclass(frozen=True)
class FloorResult:
    floor: int
    lower: OrderResult  # compare(Delta^(-2m-2), w)
    upper: OrderResult  # compare(w, Delta^(2m+2))


def _leftmost_handle(w: list[int], lo: int, hi: int, level: int) -> tuple[int, int] | None:
    """First sigma_level-handle inside w[lo:hi], as (start, end) inclusive."""
    last = -1
    last_sign = 0
    for pos in range(lo, hi):
        g = w[pos]
        a = g if g > 0 else -g
        if a < level:
            last = -1
        elif a == level:
            s = 1 if g > 0 else -1
            if last >= 0 and s != last_sign:
                return last, pos
            last, last_sign = pos, s
    return None


def _permitted_inside(w: list[int], start: int, end: int, level: int) -> tuple[int, int, int]:
    while True:
        inner = _leftmost_handle(w, start + 1, end, level + 1)
        if inner is None:
            return start, end, level
        start, end = inner
        level += 1


def _reduce_handle(w: list[int], start: int, end: int, level: int) -> list[int]:
    e = 1 if w[start] > 0 else -1
    up = level + 1
    middle = []
    for g in w[start + 1 : end]:
        if g == up or g == -up:
            middle.append(-e * up)
            middle.append(level if g > 0 else -level)
            middle.append(e * up)
        else:
            middle.append(g)
    return free_reduce_letters(w[:start] + middle + w[end + 1 :])


def _run(letters, full: bool, step_limit: int) -> list[int]:
    w = free_reduce_letters(letters)
    steps = 0
    while w:
        low = min(g if g > 0 else -g for g in w)
        handle = _leftmost_handle(w, 0, len(w), low)
        level = low
        if handle is None:
            if not full:
                return w
            top = max(g if g > 0 else -g for g in w)
            for level in range(low + 1, top + 1):
                handle = _leftmost_handle(w, 0, len(w), level)
                if handle is not None:
                    break
            else:
                return w
        start, end, level = _permitted_inside(w, handle[0], handle[1], level)
        w = _reduce_handle(w, start, end, level)
        steps += 1
        if steps > step_limit:
            raise ReductionLimitError(f"handle reduction exceeded {step_limit} steps")
    return w


def handle_reduce(w: BraidWord, step_limit: int = DEFAULT_STEP_LIMIT) -> BraidWord:
    """An equivalent word with no handles at any level."""
    return BraidWord(w.strands, tuple(_run(w.letters, True, step_limit)))


def sigma_reduce(w: BraidWord, step_limit: int = DEFAULT_STEP_LIMIT) -> BraidWord:
    """Reduce only until the lowest generator has a single sign.

    Handles above the lowest level never touch lowest-level letters, so
    this gives the same sign as :func:`handle_reduce` with less work.
    """
    return BraidWord(w.strands, tuple(_run(w.letters, False, step_limit)))


def sigma_classify(w: BraidWord) -> SigmaClass:
    if not w.letters:
        return SigmaClass(SigmaKind.EMPTY)
    low = min(abs(g) for g in w.letters)
    signs = {g > 0 for g in w.letters if abs(g) == low}
    if len(signs) == 2:
        raise BraidError(f"sigma_{low} occurs with both signs; reduce the word first")
    return SigmaClass(SigmaKind.POSITIVE if signs == {True} else SigmaKind.NEGATIVE, low)


def sign_of(w: BraidWord, step_limit: int = DEFAULT_STEP_LIMIT) -> SigmaKind:
    return sigma_classify(sigma_reduce(w, step_limit)).kind


def _order_from_letters(letters, strands: int, step_limit: int) -> OrderResult:
    kind = sigma_classify(BraidWord(strands, tuple(_run(letters, False, step_limit)))).kind
    if kind is SigmaKind.EMPTY:
        return OrderResult.EQUAL
    return OrderResult.LESS if kind is SigmaKind.POSITIVE else OrderResult.GREATER


def compare(a: BraidWord, b: BraidWord, step_limit: int = DEFAULT_STEP_LIMIT) -> OrderResult:
    """LESS when a <_D b, i.e. when a^-1 b reduces to a sigma-positive word."""
    _check_same_strands(a, b)
    letters = [-g for g in reversed(a.letters)]
    letters.extend(b.letters)
    return _order_from_letters(letters, a.strands, step_limit)


def is_trivial(w: BraidWord, step_limit: int = DEFAULT_STEP_LIMIT) -> bool:
    return not _run(w.letters, False, step_limit)


def braid_equal(a: BraidWord, b: BraidWord, step_limit: int = DEFAULT_STEP_LIMIT) -> bool:
    return compare(a, b, step_limit) is OrderResult.EQUAL


def dehornoy_floor(w: BraidWord, step_limit: int = DEFAULT_STEP_LIMIT) -> FloorResult:
    """Least m >= 0 with Delta^(-2m-2) <_D w <_D Delta^(2m+2)."""
    n = w.strands
    cap = len(w) + 1
    inv = [-g for g in reversed(w.letters)]
    for m in range(cap + 1):
        big = delta_power(n, 2 * m + 2).letters
        # Delta^(-2m-2) <_D w  iff  Delta^(2m+2) w is sigma-positive
        lower = _order_from_letters(list(big) + list(w.letters), n, step_limit)
        if lower is not OrderResult.LESS:
            continue
        upper = _order_from_letters(inv + list(big), n, step_limit)
        if upper is OrderResult.LESS:
            return FloorResult(m, lower, upper)
    raise FloorSearchError(f"floor search passed its cap of {cap} for a word of length {len(w)}")
