import pytest

from quatlattice.errors import LinkViolation, ParseError
from quatlattice.quat import imul, is_central
from quatlattice.square_complex import (build_squares, check_link, corners, export_presentation,
                                        fixed_points, h_first_forms, normalize_square,
                                        parse_presentation, rho_v)
from quatlattice.words import Word, evaluate_word

REFERENCE_RELATORS = ["a1 b1 a2 b2", "a1 b2 a2 b1^-1", "a1 b3 a2^-1 b1",
                  "a1 b3^-1 a1 b2^-1", "a1 b1^-1 a2^-1 b3", "a2 b3 a2 b2^-1"]


@pytest.mark.parametrize("p, l, m, n", [(3, 5, 2, 3), (5, 17, 3, 9), (5, 7, 3, 4), (13, 17, 7, 9),
                                        (3, 7, 2, 4), (7, 3, 4, 2)])
def test_shape_and_link(p, l, m, n):
    pres = build_squares(p, l)
    assert (pres.m, pres.n) == (m, n)
    assert len(pres.squares) == m * n
    link = check_link(pres)
    assert link.is_complete_bipartite()
    assert link.shape == (2 * m, 2 * n)


def test_squares_are_central(g517):
    for sq in g517.squares:
        q = (1, 0, 0, 0)
        for a in sq:
            q = imul(q, g517.lift(a))
        assert is_central(q)


def test_reference_relators(g35):
    ours = set(g35.squares)
    for text in REFERENCE_RELATORS:
        w = Word.parse(g35, text)
        assert evaluate_word(w).is_identity()
        assert normalize_square(w.letters) in ours


def test_normalization_is_orbit_invariant(g35):
    for sq in g35.squares:
        for form in h_first_forms(sq):
            assert normalize_square(form) == sq


def test_removing_a_square_breaks_link(g35):
    broken = g35.without_square(0)
    with pytest.raises(LinkViolation) as info:
        check_link(broken)
    assert len(info.value.missing) == 4
    assert not check_link(broken, strict=False).is_complete_bipartite()


def test_duplicate_square_breaks_link(g35):
    from dataclasses import replace
    doubled = replace(g35, squares=g35.squares + g35.squares[:1])
    with pytest.raises(LinkViolation) as info:
        check_link(doubled)
    assert info.value.repeated


def test_corner_count(g57):
    assert sum(corners(g57).values()) == 4 * len(g57.squares)


@pytest.mark.parametrize("fmt", ["text", "json"])
def test_export_round_trip(g517, fmt):
    assert parse_presentation(export_presentation(g517, fmt)) == g517


def test_text_format(g35):
    lines = export_presentation(g35).splitlines()
    assert lines[0] == "gamma 3 5"
    assert lines[1] == "hgen a1 = 1 0 1 1"
    assert sum(line.startswith("square ") for line in lines) == 6


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_presentation("hgen a1 = 1 0 1 1\n")
    with pytest.raises(ParseError):
        parse_presentation("gamma 3 5\nbogus line\n")


def test_letter_names(g35):
    assert g35.letter_name(0) == "a1"
    assert g35.letter_name(3) == "a2^-1"
    assert g35.letter_name(4) == "b1"
    for a in range(g35.num_letters):
        assert g35.letter_from_name(g35.letter_name(a)) == a
    with pytest.raises(ParseError):
        g35.letter_from_name("b4")


def test_rho_v_is_permutation_and_action(g517):
    h = list(g517.h_letters)
    for b in g517.v_letters:
        perm = rho_v(g517, [b])
        assert sorted(perm) == h
        # b and b^-1 act inversely
        back = rho_v(g517, [b, b ^ 1])
        assert back == tuple(h)
    b1, b2 = 2 * g517.m, 2 * g517.m + 2
    composed = rho_v(g517, [b1, b2])
    r1, r2 = rho_v(g517, [b1]), rho_v(g517, [b2])
    assert composed == tuple(r2[r1[a]] for a in h)


def test_rho_v_reference(g517):
    b1 = g517.letter_of_rep[(3, 2, 2, 0)]
    assert g517.letter_name(b1) == "b1"
    assert not fixed_points(rho_v(g517, [b1]))


def test_rho_v_rejects_h_letters(g517):
    with pytest.raises(ValueError):
        rho_v(g517, [0])
