import pytest
from hypothesis import given, strategies as st

from holokit.words import (IDENTITY, Word, commutator, generator, inverse, multiply,
                           power, word)

from conftest import random_word


def test_free_reduction_merges_and_cancels():
    w = word([(1, 2), (1, -2), (2, 1)])
    assert w.letters == ((2, 1),)
    assert word([(1, 1), (1, -1)]).is_identity()
    # merging may cascade
    w = word([(1, 1), (2, 1), (2, -1), (1, -1)])
    assert w.is_identity()


def test_word_rejects_unreduced_input():
    with pytest.raises(ValueError):
        Word(((1, 1), (1, 2)))
    with pytest.raises(ValueError):
        Word(((1, 0),))


def test_multiply_cancels_at_seam():
    x = generator(1)
    assert multiply(x, inverse(x)).is_identity()
    xy = multiply(generator(1), generator(2))
    assert multiply(xy, inverse(xy)).is_identity()


def test_commutator_of_equal_words_is_identity():
    u = word([(1, 1), (2, -1)])
    assert commutator(u, u).is_identity()


def test_power_of_commutator_has_no_seam_cancellation():
    c = commutator(generator(1), generator(2))
    assert power(c, 2).letters == ((1, 1), (2, 1), (1, -1), (2, -1),
                                   (1, 1), (2, 1), (1, -1), (2, -1))
    assert power(c, 2).length() == 8


def test_power_negative_and_zero():
    x = generator(1)
    assert power(x, 0).is_identity()
    assert power(x, -3).letters == ((1, -3),)
    assert power(commutator(x, generator(2)), -1) == commutator(generator(2), x)


words_strategy = st.lists(
    st.tuples(st.integers(min_value=1, max_value=3),
              st.sampled_from([-2, -1, 1, 2])),
    max_size=8).map(word)


@given(words_strategy)
def test_inverse_is_involutive(u):
    assert inverse(inverse(u)) == u
    assert multiply(u, inverse(u)).is_identity()


@given(words_strategy, words_strategy, words_strategy)
def test_multiplication_is_associative(u, v, w):
    assert multiply(multiply(u, v), w) == multiply(u, multiply(v, w))


def test_exponent_sum():
    w = word([(1, 2), (2, -1), (1, 3)])
    assert w.exponent_sum(1) == 5
    assert w.exponent_sum(2) == -1
    assert w.exponent_sum(3) == 0


def test_random_words_reduce_deterministically(rng):
    for _ in range(200):
        u = random_word(rng, 3)
        for (g1, _), (g2, _) in zip(u.letters, u.letters[1:]):
            assert g1 != g2
        assert all(e != 0 for _, e in u.letters)
