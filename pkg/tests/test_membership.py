import pytest
from hypothesis import given

from conftest import words_over
from quatlattice.errors import NotAdmissible
from quatlattice.membership import factor_element, factor_to_word, is_admissible
from quatlattice.quat import imul, reduce_canonical
from quatlattice.square_complex import build_squares
from quatlattice.words import evaluate_word, free_reduce

G57 = build_squares(5, 7)
G35 = build_squares(3, 5)


def test_reference_factorization():
    word = factor_to_word((1, 4, 2, 2), G57)
    assert str(word) == "a2 a3"


def test_admissible():
    assert is_admissible((1, 4, 2, 2), 5, 7) == (True, (2, 0))
    assert is_admissible((1, 2, 0, 0), 5, 7) == (True, (1, 0))
    assert is_admissible((1, 1, 0, 0), 5, 7) == (False, None)
    assert is_admissible((2, 1, 0, 0), 5, 7) == (False, None)


@pytest.mark.parametrize("x", [(1, 1, 0, 0), (2, 1, 0, 0), (0, 0, 0, 0), (3, 0, 0, 0)])
def test_rejects(x):
    with pytest.raises(NotAdmissible):
        factor_to_word(x, G57)


def test_admissible_scalar_is_empty_word():
    assert len(factor_to_word((35, 0, 0, 0), G57)) == 0


def test_content_is_ignored():
    w = factor_to_word(tuple(5 * c for c in imul((1, 2, 0, 0), (1, 0, 2, 0))), G57)
    assert evaluate_word(w) == reduce_canonical(imul((1, 2, 0, 0), (1, 0, 2, 0)))




@given(words_over(G57, max_size=8))
def test_round_trip_5_7(w):
    g = evaluate_word(w)
    out = factor_element(g, G57)
    assert evaluate_word(out) == g
    assert len(out) == sum(g.exponents(5, 7))
    assert free_reduce(out.letters) == out.letters


@given(words_over(G35, max_size=8))
def test_round_trip_3_5(w):
    g = evaluate_word(w)
    assert evaluate_word(factor_element(g, G35)) == g
