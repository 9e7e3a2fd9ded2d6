from itertools import product
from math import isqrt

import pytest

from quatlattice.errors import NotAGenerator, NotOddPrime
from quatlattice.gensets import (enumerate_Xq, generator_set, is_prime, lookup_letter,
                                 parity_class)
from quatlattice.quat import imul, primitive, reduce_canonical

ODD_PRIMES = [q for q in range(3, 100) if all(q % d for d in range(2, q))]


def all_norm_q(q):
    b = isqrt(q)
    r = range(-b, b + 1)
    return [x for x in product(r, r, r, r) if sum(c * c for c in x) == q]


@pytest.mark.parametrize("q", ODD_PRIMES[:8])
def test_four_square_count_oracle(q):
    # Jacobi: an odd prime is a sum of four squares in 8(q+1) ways
    sols = all_norm_q(q)
    assert len(sols) == 8 * (q + 1)
    gs = enumerate_Xq(q)
    assert set(gs.elements) == {x for x in sols if parity_class(x, q) is not None}


@pytest.mark.parametrize("q", ODD_PRIMES)
def test_size(q):
    assert len(enumerate_Xq(q).elements) == 2 * (q + 1)


@pytest.mark.parametrize("q", ODD_PRIMES[:10])
def test_letters_pair_classes(q):
    gs = generator_set(q)
    assert len(gs.letters) == (q + 1) // 2 == gs.rank
    classes = {primitive(x) for x in gs.elements}
    assert len(classes) == q + 1
    images = {gs.lift(i, e) for i in range(gs.rank) for e in (1, -1)}
    assert {primitive(x) for x in images} == classes
    for i in range(gs.rank):
        prod = imul(gs.lift(i), gs.lift(i, -1))
        assert prod == (q, 0, 0, 0)


def test_parity_conditions():
    for x in enumerate_Xq(5).elements:
        assert x[0] % 2 == 1 and all(c % 2 == 0 for c in x[1:])
    for x in enumerate_Xq(3).elements:
        assert x[1] % 2 == 0 and all(c % 2 == 1 for c in (x[0], x[2], x[3]))


def test_reference_labels():
    assert generator_set(3).letters == ((1, 0, 1, 1), (1, 0, 1, -1))
    assert generator_set(5).letters == ((1, 2, 0, 0), (1, 0, 2, 0), (1, 0, 0, 2))
    assert generator_set(17, "b").letters[0] == (3, 2, 2, 0)
    assert generator_set(17, "b").letter_name(0) == "b1"


def test_lookup():
    gs = generator_set(5)
    assert lookup_letter(gs, (1, 0, 2, 0)) == (1, 1)
    assert lookup_letter(gs, (-1, 0, 2, 0)) == (1, -1)
    assert lookup_letter(gs, reduce_canonical((3, 0, 6, 0))) == (1, 1)
    with pytest.raises(NotAGenerator):
        lookup_letter(gs, (1, 0, 0, 4))


@pytest.mark.parametrize("q", [1, 2, 4, 9, 15, -3])
def test_rejects_non_primes(q):
    with pytest.raises(NotOddPrime):
        enumerate_Xq(q)


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
