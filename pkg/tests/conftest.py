import random

import pytest
from hypothesis import strategies as st

from braidgenus.braid import BraidWord


def rand_word(rng: random.Random, n: int, max_len: int, min_len: int = 0) -> BraidWord:
    length = rng.randint(min_len, max_len)
    return BraidWord(n, tuple(rng.randint(1, n - 1) * rng.choice((1, -1)) for _ in range(length)))


@st.composite
def words(draw, min_n=2, max_n=6, max_len=20, n=None):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    letters = draw(
        st.lists(
            st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))),
            max_size=max_len,
        )
    )
    return BraidWord(n, tuple(letters))


@st.composite
def word_pairs(draw, min_n=2, max_n=5, max_len=15):
    n = draw(st.integers(min_n, max_n))
    return draw(words(n=n, max_len=max_len)), draw(words(n=n, max_len=max_len))


@pytest.fixture
def rng():
    return random.Random(20261018)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
