"""Shared generators for the test suite."""

import random

from hypothesis import strategies as st

from sqpbands import BandWord, is_unlink_surface

ALPHA_TEXT = "b(1,6) b(3,8) b(2,5) b(1,4) b(3,7) b(2,6) b(5,8) b(4,7)"


@st.composite
def band_words(draw, max_strands=6, max_len=10):
    n = draw(st.integers(1, max_strands))
    if n == 1:
        return BandWord(1, ())
    length = draw(st.integers(0, max_len))
    letters = []
    for _ in range(length):
        i = draw(st.integers(1, n - 1))
        j = draw(st.integers(i + 1, n))
        letters.append((i, j))
    return BandWord(n, tuple(letters))


@st.composite
def artin_words(draw, max_strands=5, max_len=10):
    n = draw(st.integers(1, max_strands))
    if n == 1:
        from sqpbands import ArtinWord

        return ArtinWord(1, ())
    length = draw(st.integers(0, max_len))
    letters = [
        (draw(st.integers(1, n - 1)), draw(st.sampled_from((1, -1))))
        for _ in range(length)
    ]
    from sqpbands import ArtinWord

    return ArtinWord(n, tuple(letters))


def random_sqp_word(rng: random.Random, max_strands=6, max_len=12, non_unlink=False):
    while True:
        n = rng.randint(2, max_strands)
        length = rng.randint(1, max_len)
        letters = tuple(tuple(sorted(rng.sample(range(1, n + 1), 2))) for _ in range(length))
        word = BandWord(n, letters)
        if non_unlink and is_unlink_surface(word):
            continue
        return word
