import random

import pytest
from hypothesis import given

from braidgenus.braid import (
    BraidError,
    BraidParseError,
    BraidWord,
    Letter,
    Permutation,
    band_generator,
    closure_components,
    concat,
    conjugate,
    delta_power,
    embed,
    exponent_sum,
    format_braid,
    free_reduce,
    garside_delta,
    inverse,
    parse_braid,
    permutation,
    sigma1_counts,
)
from braidgenus.ordering import braid_equal, is_trivial

from .conftest import rand_word, word_pairs, words


def W(n, *letters):
    return BraidWord(n, letters)


def test_word_validation():
    with pytest.raises(BraidError):
        W(1)
    with pytest.raises(BraidError):
        W(3, 3)
    with pytest.raises(BraidError):
        W(3, 0)
    assert len(W(3)) == 0


def test_letters_roundtrip():
    w = W(4, 1, -3, 2)
    assert list(w.iter_letters()) == [Letter(1, 1), Letter(3, -1), Letter(2, 1)]
    assert BraidWord.from_letters(4, w.iter_letters()) == w


@pytest.mark.parametrize(
    "before, after",
    [
        (W(3, 1, -1), W(3)),
        (W(3, 1, 2, -2, 1), W(3, 1, 1)),
        (W(2, 1, 1, 1), W(2, 1, 1, 1)),
        (W(4, 1, 2, 3, -3, -2, -1, 2), W(4, 2)),
    ],
)
def test_free_reduce_examples(before, after):
    assert free_reduce(before) == after


def test_free_reduce_idempotent_and_shrinking():
    rng = random.Random(1)
    for _ in range(10_000):
        w = rand_word(rng, rng.randint(2, 6), 40)
        once = free_reduce(w)
        assert free_reduce(once) == once
        assert len(once) <= len(w)
        assert all(a != -b for a, b in zip(once.letters, once.letters[1:]))


@pytest.mark.parametrize(
    "w, inv",
    [(W(3), W(3)), (W(3, 1, -2), W(3, 2, -1)), (W(3, 1, 1), W(3, -1, -1))],
)
def test_inverse_examples(w, inv):
    assert inverse(w) == inv


@given(words())
def test_inverse_cancels(w):
    assert free_reduce(concat(w, inverse(w))) == W(w.strands)
    assert is_trivial(concat(inverse(w), w))


def test_concat():
    w = W(3, 1, -2)
    assert concat(W(3), w) == w
    assert concat(W(3, 1), W(3, 2)) == W(3, 1, 2)
    with pytest.raises(BraidError):
        concat(W(3, 1), W(4, 1))
    assert W(3, 1) * W(3, 2) == W(3, 1, 2)


def test_conjugate_examples():
    w = W(3, 1, 2, -1)
    assert conjugate(w, W(3)) == w
    assert conjugate(W(3, 2), W(3, 1)) == W(3, 1, 2, -1)
    with pytest.raises(BraidError):
        conjugate(W(3, 1), W(4, 1))


@given(words(min_n=2, max_n=5, max_len=10), words(min_n=2, max_n=5, max_len=10))
def test_full_twist_is_central(w, g):
    if w.strands != g.strands:
        g = BraidWord(w.strands, tuple(x for x in g.letters if abs(x) < w.strands))
    d2 = delta_power(w.strands, 2)
    assert braid_equal(conjugate(d2, g), d2)


@pytest.mark.parametrize(
    "n, letters",
    [
        (2, (1,)),
        (3, (1, 2, 1)),
        (4, (1, 2, 3, 1, 2, 1)),
    ],
)
def test_garside_delta(n, letters):
    assert garside_delta(n).letters == letters


@pytest.mark.parametrize("n", range(2, 10))
def test_garside_delta_length(n):
    assert len(garside_delta(n)) == n * (n - 1) // 2
    with pytest.raises(BraidError):
        garside_delta(1)


def test_delta_power_examples():
    for n in range(2, 6):
        assert delta_power(n, 0) == W(n)
    assert delta_power(2, 3) == W(2, 1, 1, 1)
    assert delta_power(3, -1) == W(3, -1, -2, -1)
    assert len(delta_power(5, -3)) == 3 * 10


@pytest.mark.parametrize("n", range(2, 6))
def test_delta_power_additive(n):
    for a in range(-2, 3):
        for b in range(-2, 3):
            assert braid_equal(delta_power(n, a + b), concat(delta_power(n, a), delta_power(n, b)))


def test_band_generator_examples():
    assert band_generator(3, 1, 3) == W(3, 1, 2, -1)
    assert band_generator(4, 2, 4) == W(4, 2, 3, -2)
    for n in range(2, 9):
        for i in range(1, n):
            assert band_generator(n, i, i + 1) == W(n, i)
    with pytest.raises(BraidError):
        band_generator(4, 3, 3)
    with pytest.raises(BraidError):
        band_generator(4, 2, 5)


def test_band_generator_length():
    for n in range(2, 8):
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                assert len(band_generator(n, i, j)) == 2 * (j - i) - 1


def test_band_generator_first_strand_form():
    # a_{1,j+1} = s1 ... s_{j-1} s_j s_{j-1}^-1 ... s1^-1
    assert band_generator(5, 1, 4) == W(5, 1, 2, 3, -2, -1)


def test_permutation_examples():
    assert permutation(W(3)).is_identity()
    assert permutation(W(2, 1)).images == (2, 1)
    # s1 then s2: strand 1 -> 2 -> 3, strand 2 -> 1, strand 3 -> 2
    p = permutation(W(3, 1, 2))
    assert p.images == (3, 1, 2)
    assert len(p.cycles()) == 1
    assert permutation(W(3, -1)) == permutation(W(3, 1))


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))


def test_permutation_is_a_homomorphism():
    rng = random.Random(2)
    for _ in range(2000):
        n = rng.randint(2, 6)
        a, b = rand_word(rng, n, 15), rand_word(rng, n, 15)
        assert permutation(concat(a, b)) == permutation(a).then(permutation(b))


def test_closure_components_examples():
    assert closure_components(W(3)) == 3
    assert closure_components(W(2, 1, 1, 1)) == 1
    assert closure_components(W(2, 1, 1)) == 2


def test_exponent_sum_examples():
    assert exponent_sum(W(3)) == 0
    assert exponent_sum(W(2, 1, 1, 1)) == 3
    assert exponent_sum(W(3, 1, -2, 1, -2)) == 0


@given(word_pairs())
def test_exponent_sum_conjugation_invariant(pair):
    w, g = pair
    assert exponent_sum(conjugate(w, g)) == exponent_sum(w)


def test_sigma1_counts_examples():
    assert sigma1_counts(W(2, 1, 1, 1)) == (3, 0)
    assert sigma1_counts(W(3, 1, -2, 1, -2)) == (2, 0)
    assert sigma1_counts(W(3, 2, 2)) == (0, 0)
    assert sigma1_counts(W(3, -1, 2, -1, 1)) == (1, 2)


def test_embed():
    w = W(3, 1, -2)
    assert embed(w, 4) == W(4, 1, -2)
    with pytest.raises(BraidError):
        embed(w, 2)


class TestGrammar:
    def test_trefoil(self):
        assert parse_braid("B2: 1 1 1") == W(2, 1, 1, 1)

    def test_empty(self):
        assert parse_braid("B3:") == W(3)

    def test_whitespace(self):
        assert parse_braid("  B4 :  1\t-3  2 ") == W(4, 1, -3, 2)

    @pytest.mark.parametrize("text", ["B3: 3", "B3: -3", "B3: 0", "B1:", "B3: x", "3: 1", ""])
    def test_rejects(self, text):
        with pytest.raises(BraidParseError):
            parse_braid(text)

    def test_error_points_at_token(self):
        with pytest.raises(BraidParseError) as info:
            parse_braid("B3: 1 2 7")
        assert info.value.position == 8

    @given(words())
    def test_roundtrip(self, w):
        assert parse_braid(format_braid(w)) == w
        assert str(w) == format_braid(w)
