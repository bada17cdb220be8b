import random

import pytest

from holokit.words import Word, word


def random_word(rng: random.Random, num_gens: int, max_letters: int = 6) -> Word:
    letters = []
    for _ in range(rng.randint(0, max_letters)):
        letters.append((rng.randint(1, num_gens), rng.choice([-2, -1, 1, 2])))
    return word(letters)


@pytest.fixture
def rng():
    return random.Random(20240817)
