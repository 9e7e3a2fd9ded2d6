import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import words_over
from quatlattice.errors import AlphabetMismatch, ParseError
from quatlattice.square_complex import build_squares
from quatlattice.words import (Word, evaluate_word, free_reduce, normalize_ab, normalize_ba,
                               words_equal)

G35 = build_squares(3, 5)
G517 = build_squares(5, 17)


def test_parse_and_print():
    w = Word.parse(G35, "a1 b2^-1 a1^3")
    assert len(w) == 5
    assert str(w) == "a1 b2^-1 a1 a1 a1"
    assert str(Word.parse(G35, "1")) == "1"
    with pytest.raises(ParseError):
        Word.parse(G35, "c1")
    with pytest.raises(ParseError):
        Word.parse(G35, "a3")


def test_free_reduce():
    assert free_reduce([0, 1, 4, 2, 3, 5]) == ()
    assert free_reduce([0, 4, 5, 2]) == (0, 2)


@pytest.mark.parametrize("pres", [G35, G517], ids=["3-5", "5-17"])
@given(data=st.data())
def test_normal_forms_preserve_element(pres, data):
    w = data.draw(words_over(pres))
    g = evaluate_word(w)
    for nf in (normalize_ab(w), normalize_ba(w)):
        assert evaluate_word(nf.word(pres)) == g
        assert free_reduce(nf.letters) == nf.letters
        assert len(nf) == sum(g.exponents(pres.p, pres.l))
    ab = normalize_ab(w)
    assert all(pres.is_h(a) for a in ab.sigma_a) and all(pres.is_v(b) for b in ab.sigma_b)


@given(words_over(G35), st.integers(0, 5), st.integers(0, 12))
def test_normal_form_unique(w, k, pos):
    # inserting a relator (conjugated into position) does not change the normal form
    sq = G35.squares[k % len(G35.squares)]
    pos = min(pos, len(w))
    v = Word(w.letters[:pos] + sq + w.letters[pos:], G35)
    assert normalize_ab(v) == normalize_ab(w)
    assert normalize_ba(v) == normalize_ba(w)
    assert words_equal(v, w, cross_check=True)


@given(words_over(G35), words_over(G35))
def test_equality_agrees_with_normal_forms(u, v):
    assert words_equal(u, v, cross_check=True) == (normalize_ab(u) == normalize_ab(v))


@given(words_over(G35))
def test_idempotent(w):
    nf = normalize_ab(w)
    assert normalize_ab(nf.word(G35)) == nf


@given(st.lists(st.sampled_from(range(4)), min_size=1, max_size=15))
def test_horizontal_subgroup_is_free(letters):
    reduced = free_reduce(letters)
    if reduced:
        assert not evaluate_word(Word(reduced, G35)).is_identity()


@given(st.lists(st.sampled_from(range(4, 10)), min_size=1, max_size=15))
def test_vertical_subgroup_is_free(letters):
    reduced = free_reduce(letters)
    if reduced:
        assert not evaluate_word(Word(reduced, G35)).is_identity()


def test_alphabet_mismatch():
    with pytest.raises(AlphabetMismatch):
        words_equal(Word((0,), G35), Word((0,), G517))
    with pytest.raises(AlphabetMismatch):
        Word((10,), G35)


def test_inverse_word():
    w = Word.parse(G35, "a1 b2 a2^-1")
    assert evaluate_word(w + w.inverse()).is_identity()
