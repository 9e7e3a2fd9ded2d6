"""Acceptance criteria, one test each, at the stated tolerances and time limits.

Each test records a PASS/FAIL line, printed in the terminal summary (and to
stdout with ``-s``).  Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction as F

import pytest

from quatlattice.classify import (PairClass, centralizer_is_cyclic, classify_pair, legendre_symbol,
                                  n_invariant, norm_form_search, power_commute_scan)
from quatlattice.cosets import todd_coxeter
from quatlattice.gensets import enumerate_Xq, is_prime
from quatlattice.membership import factor_element
from quatlattice.padic import det_mod, is_scalar_mod, matmul_mod, psi_matrix_mod_pk, solve_cd
from quatlattice.quat import imul, inorm, is_central, reduce_canonical
from quatlattice.relations import (LONG_RELATION_5_17, SHORT_RELATION_3_5, parse_exponent_word,
                                   verify_relation, word_length)
from quatlattice.so3 import RotationMatrix, is_special_orthogonal, relation_transfer_check, theta
from quatlattice.square_complex import (build_squares, check_link, fixed_points, normalize_square,
                                        rho_v)
from quatlattice.words import Word, evaluate_word, free_reduce, normalize_ab, normalize_ba

RESULTS = {}


@contextmanager
def criterion(number, title, limit):
    start = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.2f} s, limit {limit} s"
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        line = f"AC{number:<2} {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f} s)"
        RESULTS[number] = line
        print(line)


def test_ac01_jacobi_counts():
    with criterion(1, "|X_q| = 2(q+1) for odd primes q < 100", 1.0):
        for q in range(3, 100):
            if is_prime(q):
                assert len(enumerate_Xq(q).elements) == 2 * (q + 1), q


def test_ac02_presentation_shape():
    with criterion(2, "generator and square counts, link condition", 4.0):
        for (p, l), (m, n, s) in {(3, 5): (2, 3, 6), (5, 17): (3, 9, 27)}.items():
            start = time.perf_counter()
            pres = build_squares(p, l)
            assert (pres.m, pres.n, len(pres.squares)) == (m, n, s)
            assert check_link(pres).is_complete_bipartite()
            assert time.perf_counter() - start < 1.0
        for p, l in ((5, 7), (13, 17)):
            start = time.perf_counter()
            assert check_link(build_squares(p, l)).is_complete_bipartite()
            assert time.perf_counter() - start < 1.0


RELATORS_3_5 = ["a1 b1 a2 b2", "a1 b2 a2 b1^-1", "a1 b3 a2^-1 b1",
                "a1 b3^-1 a1 b2^-1", "a1 b1^-1 a2^-1 b3", "a2 b3 a2 b2^-1"]
LIFTS_3_5 = {"a1": (1, 0, 1, 1), "a2": (1, 0, 1, -1),
             "b1": (1, 2, 0, 0), "b2": (1, 0, 2, 0), "b3": (1, 0, 0, 2)}


def _lift_product(text):
    q = (1, 0, 0, 0)
    for token in text.split():
        name, _, exp = token.partition("^")
        x = LIFTS_3_5[name]
        if exp == "-1":
            x = (x[0], -x[1], -x[2], -x[3])
        q = imul(q, x)
    return q


def test_ac03_relators_3_5():
    with criterion(3, "six reference relators central and matched to squares", 1.0):
        pres = build_squares(3, 5)
        for name, lift in LIFTS_3_5.items():
            assert pres.lift(pres.letter_from_name(name)) == lift
        ours = set(pres.squares)
        matched = set()
        for text in RELATORS_3_5:
            assert is_central(_lift_product(text)), text
            sq = normalize_square(Word.parse(pres, text).letters)
            assert sq in ours, text
            matched.add(sq)
        assert matched == ours


def test_ac04_coset_indices():
    with criterion(4, "indices 32, 4, 896 by coset enumeration", 30.0):
        g517, g35 = build_squares(5, 17), build_squares(3, 5)
        assert todd_coxeter(g517, [(1, 2, 0, 0), (1, 0, 0, 4)], max_cosets=10 ** 6).index == 32
        assert todd_coxeter(g35, ["a1", "b1"], max_cosets=10 ** 6).index == 4
        assert todd_coxeter(g35, ["a1^2", "b1^2"], max_cosets=10 ** 6).index == 896


def test_ac05_relations():
    with criterion(5, "long and short relations, central and in SO3", 1.0):
        word = parse_exponent_word(LONG_RELATION_5_17)
        assert word_length(word) == 106
        assert verify_relation((5, 17), word, (1, 2, 0, 0), (1, 0, 0, 4))
        assert relation_transfer_check(word, (1, 2, 0, 0), (1, 0, 0, 4))
        assert verify_relation((3, 5), SHORT_RELATION_3_5, (1, 0, 1, 1), (1, 2, 0, 0))
        assert relation_transfer_check(SHORT_RELATION_3_5, (1, 0, 1, 1), (1, 2, 0, 0))


def test_ac06_anti_torus():
    with criterion(6, "anti-torus and Z x Z classifications", 1.0):
        a, b = reduce_canonical((1, 2, 0, 0)), reduce_canonical((1, 0, 0, 4))
        assert classify_pair(a, b, 5, 17) == PairClass.ANTI_TORUS
        assert power_commute_scan(a, b, 5) is None
        assert classify_pair(a, (1, 4, 0, 0), 5, 17) == PairClass.Z_CROSS_Z
        prod = imul((1, 0, 2, 0), (1, 0, 0, 2))
        assert classify_pair(prod, (1, 2, 1, 1), 5, 7) == PairClass.Z_CROSS_Z
        pres = build_squares(5, 7)
        # the six letters with b include both lifts of each horizontal generator
        bb = pres.letter_of_rep[reduce_canonical((1, 2, 1, 1)).rep]
        hs = [pres.lift(a) for a in pres.h_letters]
        assert len(hs) == 6
        for h in hs:
            assert classify_pair(h, pres.lift(bb), 5, 7) == PairClass.ANTI_TORUS


def test_ac07_centralizer():
    with criterion(7, "cyclic centralizer certificates for 3+2i+2j", 1.0):
        pres = build_squares(5, 17)
        b = reduce_canonical((3, 2, 2, 0))
        assert not fixed_points(rho_v(pres, [pres.letter_of_rep[b.rep]]))
        assert n_invariant(b) == 2
        assert legendre_symbol(-2, 5) == -1 and legendre_symbol(-2, 17) == 1
        report = centralizer_is_cyclic(pres, b)
        assert report.rho_fixpoint_free and report.legendre_criterion


def test_ac08_bounded_norm_search():
    with criterion(8, "no t^2+8u^2 = 5^r 17^s in the box (bounded evidence)", 60.0):
        assert norm_form_search(2, 5, 17, 10 ** 4, 10 ** 4, 12) == []


THETA_REFERENCE = {
    (1, 2, 0, 0): [[1, 0, 0], [0, F(-3, 5), F(-4, 5)], [0, F(4, 5), F(-3, 5)]],
    (1, 0, 1, 1): [[F(-1, 3), F(-2, 3), F(2, 3)], [F(2, 3), F(1, 3), F(2, 3)],
                   [F(-2, 3), F(2, 3), F(1, 3)]],
    (1, 0, 0, 4): [[F(-15, 17), F(-8, 17), 0], [F(8, 17), F(-15, 17), 0], [0, 0, 1]],
}


def test_ac09_theta_matrices():
    with criterion(9, "three reference rotation matrices exact", 1.0):
        for x, rows in THETA_REFERENCE.items():
            m = theta(x)
            for i in range(3):
                for j in range(3):
                    assert m[i, j] == F(rows[i][j])
            assert is_special_orthogonal(m)


def _random_word(rng, pres, lo, hi):
    return Word(tuple(rng.randrange(pres.num_letters) for _ in range(rng.randint(lo, hi))), pres)


def test_ac10_property_suites():
    with criterion(10, "property suites on 10^3 samples each", 60.0):
        rng = random.Random(20240611)
        g35, g57 = build_squares(3, 5), build_squares(5, 7)

        # normal forms: soundness, uniqueness, length
        for _ in range(1000):
            w = _random_word(rng, g35, 0, 14)
            g = evaluate_word(w)
            nf = normalize_ab(w)
            assert evaluate_word(nf.word(g35)) == g
            assert evaluate_word(normalize_ba(w).word(g35)) == g
            assert len(nf) == sum(g.exponents(3, 5))
            sq = rng.choice(g35.squares)
            k = rng.randint(0, len(w))
            a = rng.randrange(g35.num_letters)
            v = Word(w.letters[:k] + sq + (a, a ^ 1) + w.letters[k:], g35)
            assert normalize_ab(v) == nf

        # free horizontal and vertical subgroups
        for _ in range(1000):
            side = rng.choice([list(g35.h_letters), list(g35.v_letters)])
            letters = free_reduce(rng.choice(side) for _ in range(rng.randint(1, 16)))
            if letters:
                assert not evaluate_word(Word(letters, g35)).is_identity()

        # rotation homomorphism, kernel and scaling
        for _ in range(1000):
            x = tuple(rng.randint(-25, 25) for _ in range(4))
            y = tuple(rng.randint(-25, 25) for _ in range(4))
            if not inorm(x) or not inorm(y):
                continue
            assert theta(imul(x, y)) == theta(x) @ theta(y)
            lam = F(rng.randint(1, 20), rng.randint(1, 20)) * rng.choice((1, -1))
            assert theta(tuple(lam * c for c in x)) == theta(x)
            assert theta(x).is_identity() == is_central(x)
        assert theta((7, 0, 0, 0)) == RotationMatrix.identity()

        # factorization round trip
        for _ in range(1000):
            g = evaluate_word(_random_word(rng, g57, 0, 8))
            assert evaluate_word(factor_element(g, g57)) == g

        # p-adic determinant and homomorphism congruences
        for p in (3, 5, 7, 13, 17):
            for k in range(1, 7):
                params = solve_cd(p, k)
                m = params.modulus
                assert params.residual() == 0
                for _ in range(35):
                    x = tuple(rng.randint(-99, 99) for _ in range(4))
                    y = tuple(rng.randint(-99, 99) for _ in range(4))
                    mx, my = psi_matrix_mod_pk(x, params), psi_matrix_mod_pk(y, params)
                    assert det_mod(mx, m) == inorm(x) % m
                    assert psi_matrix_mod_pk(imul(x, y), params) == matmul_mod(mx, my, m)
                assert is_scalar_mod(psi_matrix_mod_pk((rng.randint(1, 99), 0, 0, 0), params), m)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v", "-s"]))
