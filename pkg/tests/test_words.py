import pytest
from hypothesis import given, strategies as st

from sqpbands import (
    BandWord,
    WordSyntaxError,
    parse_artin_word,
    parse_band_word,
    underlying_permutation,
)

from wordgen import ALPHA_TEXT, band_words


def test_parse_generator_is_sigma1():
    word = parse_band_word("b(1,2)", 2)
    assert word.letters == ((1, 2),)
    assert word.expand_to_artin().letters == ((1, 1),)


def test_parse_empty_word():
    assert len(parse_band_word("", 3)) == 0
    assert len(parse_band_word("   ", 3)) == 0


def test_parse_alpha():
    alpha = parse_band_word(ALPHA_TEXT, 8)
    assert len(alpha) == 8
    assert alpha.letters[0] == (1, 6)
    assert alpha.to_text() == ALPHA_TEXT


@pytest.mark.parametrize(
    "text,strands",
    [("b(3,2)", 3), ("b(2,2)", 3), ("b(1,4)", 3), ("nope", 2), ("b(0,1)", 2)],
)
def test_parse_rejects(text, strands):
    with pytest.raises(WordSyntaxError):
        parse_band_word(text, strands)


def test_strands_must_be_positive():
    with pytest.raises(WordSyntaxError):
        BandWord(0, ())


def test_expand_band_13():
    word = BandWord(3, ((1, 3),))
    assert word.expand_to_artin().letters == ((1, 1), (2, 1), (1, -1))


def test_expand_adjacent_band_is_single_generator():
    word = BandWord(3, ((2, 3),))
    assert word.expand_to_artin().letters == ((2, 1),)


def test_alpha_expansion_length_52():
    alpha = parse_band_word(ALPHA_TEXT, 8)
    assert len(alpha.expand_to_artin()) == 52


def test_permutation_examples():
    assert underlying_permutation(BandWord(4, ())).cycle_count() == 4
    hopf = BandWord(2, ((1, 2), (1, 2)))
    assert underlying_permutation(hopf).cycle_count() == 2
    alpha = parse_band_word(ALPHA_TEXT, 8)
    assert underlying_permutation(alpha).cycles == ((1, 2, 8, 4), (3, 5, 6, 7))


def test_shift_examples():
    word = BandWord(2, ((1, 2),))
    assert word.shift(0, 2).letters == ((1, 2),)
    assert word.shift(3, 5).letters == ((4, 5),)
    alpha = parse_band_word(ALPHA_TEXT, 8)
    shifted = alpha.shift(2, 10)
    assert shifted.letters[:2] == ((3, 8), (5, 10))
    with pytest.raises(WordSyntaxError):
        word.shift(1, 2)


def test_artin_parse_roundtrip():
    word = parse_artin_word("s1 S2 s1 S2", 3)
    assert word.letters == ((1, 1), (2, -1), (1, 1), (2, -1))
    assert word.to_text() == "s1 S2 s1 S2"
    with pytest.raises(WordSyntaxError):
        parse_artin_word("s3", 3)


@given(band_words())
def test_roundtrip_through_text(word):
    assert parse_band_word(word.to_text(), word.strands) == word


@given(band_words())
def test_expansion_length_and_exponent_sum(word):
    artin = word.expand_to_artin()
    assert len(artin) == sum(2 * (j - i) - 1 for i, j in word.letters)
    assert artin.exponent_sum() == len(word.letters)


@given(band_words())
def test_expansion_preserves_permutation(word):
    assert underlying_permutation(word.expand_to_artin()) == underlying_permutation(word)


@given(band_words(max_strands=5, max_len=6), st.integers(0, 3))
def test_shift_conjugates_permutation(word, offset):
    shifted = word.shift(offset, word.strands + offset)
    perm = underlying_permutation(word)
    sperm = underlying_permutation(shifted)
    for x in range(1, word.strands + 1):
        assert sperm(x + offset) == perm(x) + offset
    for x in range(1, offset + 1):
        assert sperm(x) == x
