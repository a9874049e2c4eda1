import pytest
from hypothesis import given, strategies as st

from dynnikov import (
    BandGenerator,
    BandKind,
    BraidWord,
    BraidWordError,
    decompose_into_bands,
    format_word,
    full_twist,
    inverse_word,
    parse_word,
)


def test_parse_word():
    assert parse_word("1 2 -3", 4).letters == (1, 2, -3)
    assert parse_word("1,2, -3", 4).letters == (1, 2, -3)
    assert parse_word("", 4).letters == ()


@pytest.mark.parametrize("text, n, match", [
    ("4", 4, "exceeds"),
    ("0", 5, "zero"),
    ("1 x", 4, "integer"),
    ("1", 2, "n >= 3"),
])
def test_parse_word_errors(text, n, match):
    with pytest.raises(BraidWordError, match=match):
        parse_word(text, n)


@pytest.mark.parametrize("letters, expected", [
    ((1, 2, -3), (3, -2, -1)),
    ((), ()),
    ((1, 1, 1, 2, 3), (-3, -2, -1, -1, -1)),
])
def test_inverse_word(letters, expected):
    assert inverse_word(BraidWord(4, letters)).letters == expected


words = st.integers(3, 10).flatmap(
    lambda n: st.lists(
        st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=30
    ).map(lambda ls: BraidWord(n, tuple(ls)))
)


@given(words)
def test_inverse_involutive(w):
    assert inverse_word(inverse_word(w)) == w


@given(words)
def test_format_parse_round_trip(w):
    assert parse_word(format_word(w), w.n) == w


@pytest.mark.parametrize("letters, bands", [
    ((1, 2, 3), [(BandKind.GAMMA, 1, 3)]),
    ((3, 2, 1), [(BandKind.DELTA, 1, 3)]),
    ((1, -2, -3), [(BandKind.GAMMA, 1, 1), (BandKind.EPSILON, 2, 3)]),
    ((-3, -2), [(BandKind.ZETA, 2, 3)]),
    ((-2,), [(BandKind.EPSILON, 2, 2)]),
    ((1, 1, 1, 2, 3), [(BandKind.GAMMA, 1, 1), (BandKind.GAMMA, 1, 1), (BandKind.GAMMA, 1, 3)]),
    ((2, 1, -1, -2), [(BandKind.DELTA, 1, 2), (BandKind.EPSILON, 1, 2)]),
])
def test_decompose(letters, bands):
    got = decompose_into_bands(BraidWord(4, letters))
    assert [(g.kind, g.k, g.l) for g in got] == bands


@given(words)
def test_bands_spell_the_word(w):
    spelled = tuple(e for g in decompose_into_bands(w) for e in g.letters())
    assert spelled == w.letters


def test_band_letters():
    assert BandGenerator(BandKind.ZETA, 2, 4, 6).letters() == (-4, -3, -2)
    assert BandGenerator(BandKind.EPSILON, 2, 4, 6).letters() == (-2, -3, -4)
    with pytest.raises(BraidWordError):
        BandGenerator(BandKind.GAMMA, 3, 2, 6)
    with pytest.raises(BraidWordError):
        BandGenerator(BandKind.GAMMA, 1, 6, 6)


def test_full_twist_and_powers():
    assert full_twist(3).letters == (1, 2, 1, 2, 1, 2)
    w = BraidWord(3, (1, -2))
    assert (w ** 2).letters == (1, -2, 1, -2)
    assert (w ** -1).letters == (2, -1)
    assert (w * BraidWord(3, (2,))).letters == (1, -2, 2)
